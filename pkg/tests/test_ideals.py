import pytest
from hypothesis import given, strategies as st

from newvector.combinatorics import divisor_count
from newvector.errors import NotSIntegral
from newvector.ideals import Ideal, PrimePlace, divides, norm, parse_ideal, parse_place, prime_count, principal_ideal

P2, P3, P4, P5 = PrimePlace(2), PrimePlace(3), PrimePlace(4), PrimePlace(5)


def test_norms():
    assert norm(Ideal()) == 1
    assert norm(Ideal({P2: 2})) == 4
    assert norm(Ideal({P3: 1, P4: 2})) == 48


def test_prime_count():
    assert prime_count(Ideal()) == 0
    assert prime_count(Ideal({P2: 5})) == 1
    assert prime_count(Ideal({P2: 1, P3: 1, P5: 1})) == 3


def test_divisors():
    assert Ideal().divisors() == [Ideal()]
    assert Ideal({P2: 2}).divisors() == [Ideal(), Ideal({P2: 1}), Ideal({P2: 2})]
    assert len(Ideal({P2: 1, P3: 1}).divisors()) == 4


def test_divides_and_principal():
    assert divides(Ideal({P2: 1}), Ideal({P2: 2, P3: 1}))
    assert not divides(Ideal({P5: 1}), Ideal({P2: 2}))
    assert principal_ideal(-2, [P2, P3]) == Ideal({P2: 1})
    assert principal_ideal(12, [P2, P3]) == Ideal({P2: 2, P3: 1})


def test_principal_rejects_fractions():
    from fractions import Fraction
    with pytest.raises(NotSIntegral):
        principal_ideal(Fraction(1, 2), [P2])


def test_place_validation():
    assert (P4.p, P4.f) == (2, 2)
    for bad in (0, 1, 6, 12):
        with pytest.raises(ValueError):
            PrimePlace(bad)


def test_labels_distinguish_places_of_equal_norm():
    a, b = PrimePlace(5, "a"), PrimePlace(5, "b")
    assert a != b
    assert Ideal({a: 1, b: 1}).norm() == 25


@pytest.mark.parametrize("text", ["1", "2^2", "2^1 * 3^2", "2:2^3", "5@a^1 * 5@b^2"])
def test_parse_str_roundtrip(text):
    I = parse_ideal(text)
    assert parse_ideal(str(I)) == I


def test_parse_details():
    assert parse_ideal("") == Ideal()
    assert parse_place("2:2^3") == (P4, 3)
    assert parse_place("4^3") == (P4, 3)
    assert parse_ideal("2^0") == Ideal()
    for bad in ("x", "6", "2^-1", "4:2"):
        with pytest.raises(ValueError):
            parse_ideal(bad)


places = st.sampled_from([P2, P3, P4, P5, PrimePlace(7), PrimePlace(9)])
ideals = st.dictionaries(places, st.integers(1, 4), max_size=3).map(Ideal)


@given(ideals, ideals)
def test_norm_multiplicative(a, b):
    if a.coprime_to(b):
        assert (a * b).norm() == a.norm() * b.norm()


@given(ideals, ideals)
def test_divides_iff_in_divisors(a, b):
    assert divides(a, b) == (a in b.divisors())


@given(ideals)
def test_divisor_lattice_size(a):
    size = 1
    for pl in a.places:
        size *= a.exponent(pl) + 1
    assert len(a.divisors()) == size == len(set(a.divisors()))


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 3))
def test_principal_divisor_count(a, b, c):
    m = 2**a * 3**b * 5**c
    I = principal_ideal(m, [P2, P3, PrimePlace(5)])
    assert len(I.divisors()) == divisor_count(m)
