from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from newvector.combinatorics import (alternating_sum, binom, divisor_count, format_rational,
                                     odd_binomial_tail, odd_binomial_tail_closed, p_valuation,
                                     parse_rational)
from newvector.errors import DegenerateIdeal

from oracles import alternating_sum_by_derivative, divisor_count_brute


@pytest.mark.parametrize("m,k,want", [(4, 2, 6), (-1, 1, 0), (3, 0, 1), (2, 5, 0), (5, -1, 0), (-3, -3, 0)])
def test_binom_values(m, k, want):
    assert binom(m, k) == want


@given(st.integers(-20, 40), st.integers(-5, 40))
def test_binom_matches_comb_or_vanishes(m, k):
    want = comb(m, k) if 0 <= k <= m else 0
    assert binom(m, k) == want


@pytest.mark.parametrize("n,k,want", [(2, 0, 1), (3, 4, 0), (1, 1, 0)])
def test_alternating_sum_values(n, k, want):
    assert alternating_sum(n, k) == want


def test_alternating_sum_grid():
    for n in range(1, 13):
        for k in range(-10, 61):
            assert alternating_sum(n, k) == (1 if k == 0 else 0), (n, k)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
@pytest.mark.parametrize("k", [1, 2, 7, 20])
def test_alternating_sum_against_derivative_route(n, k):
    assert alternating_sum(n, k) == alternating_sum_by_derivative(n, k)


def test_alternating_sum_rejects_n0():
    with pytest.raises(ValueError):
        alternating_sum(0, 3)


@pytest.mark.parametrize("m,want", [(-2, 2), (12, 6), (1, 1), (360, 24)])
def test_divisor_count_values(m, want):
    assert divisor_count(m) == want


@given(st.integers(-3000, 3000).filter(bool))
def test_divisor_count_brute(m):
    assert divisor_count(m) == divisor_count_brute(m)


def test_divisor_count_zero():
    with pytest.raises(DegenerateIdeal):
        divisor_count(0)


def test_tail_values():
    assert odd_binomial_tail(3, 2, shift=1) == Fraction(49, 64)
    assert odd_binomial_tail(2, 3, shift=1) == Fraction(2, 3)
    v = odd_binomial_tail(2, 2, shift=0)
    assert v == odd_binomial_tail_closed(2, 2, shift=0) == Fraction(1, 2)


def test_tail_two_routes_agree():
    for shift in (0, 1):
        for n in range(2, 9):
            for q in range(2, 17):
                assert odd_binomial_tail(n, q, shift) == odd_binomial_tail_closed(n, q, shift)


def test_tail_shift0_at_most_half():
    # the upper bound 1/2 is attained at n = q = 2 and strict everywhere else
    for n in range(2, 9):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
            v = odd_binomial_tail(n, q, 0)
            assert v <= Fraction(1, 2)
            assert (v == Fraction(1, 2)) == ((n, q) == (2, 2))


def test_tail_shift1_decreasing():
    for n in range(2, 9):
        for q in range(2, 17):
            v = odd_binomial_tail(n, q, 1)
            if q < 16:
                assert odd_binomial_tail(n, q + 1, 1) <= v
            if n < 8:
                assert odd_binomial_tail(n + 1, q, 1) <= v


def test_tail_rejects_bad_args():
    for args in [(1, 2, 0), (2, 1, 0), (2, 2, 2)]:
        with pytest.raises(ValueError):
            odd_binomial_tail(*args)


def test_rational_format_roundtrip():
    for x in [Fraction(0), Fraction(7), Fraction(-5, 7), Fraction(15, 16)]:
        s = format_rational(x)
        assert "/" in s
        assert parse_rational(s) == x
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_p_valuation():
    assert p_valuation(Fraction(12, 5), 2) == 2
    assert p_valuation(Fraction(3, 8), 2) == -3
    assert p_valuation(0, 3) == float("inf")
