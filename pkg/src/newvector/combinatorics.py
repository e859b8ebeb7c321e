"""Exact combinatorial kernel.

Everything here works over ``int`` and :class:`fractions.Fraction`; no
floating point is used anywhere, since the identities being checked are
equalities to exactly 0 or 1.
"""

from fractions import Fraction
from math import comb

from sympy import factorint

from .errors import DegenerateIdeal

ExactRational = Fraction


def binom(m: int, k: int) -> int:
    """Binomial coefficient that vanishes for ``m < 0``, ``k < 0`` or ``k > m``.

    This is *not* the generalized binomial: ``binom(-1, 1) == 0``, not ``-1``.
    The alternating-sum identity below is false under the generalized rule.
    """
    if m < 0 or k < 0 or k > m:
        return 0
    return comb(m, k)


def alternating_sum(n: int, k: int) -> int:
    """Literal value of ``sum_{i=0}^{n} (-1)^i C(n,i) C(k-i+n-1, n-1)``.

    Equals 1 when ``k == 0`` and 0 otherwise.
    """
    if n < 1:
        raise ValueError(f"alternating_sum needs n >= 1, got {n}")
    return sum((-1) ** i * binom(n, i) * binom(k - i + n - 1, n - 1) for i in range(n + 1))


def divisor_count(m: int) -> int:
    """Number of positive divisors of ``|m|``."""
    if m == 0:
        raise DegenerateIdeal("the zero ideal has no finite divisor count")
    count = 1
    for e in factorint(abs(m)).values():
        count *= e + 1
    return count


def _check_tail_args(n, q, shift):
    if n < 2 or q < 2:
        raise ValueError(f"odd_binomial_tail needs n, q >= 2 (got n={n}, q={q})")
    if shift not in (0, 1):
        raise ValueError(f"shift must be 0 or 1, got {shift}")


def odd_binomial_tail(n: int, q: int, shift: int = 0) -> Fraction:
    """Direct sum ``sum_{i odd} C(n,i) q^{-i(n-shift)}``."""
    _check_tail_args(n, q, shift)
    x = Fraction(1, q ** (n - shift))
    return sum((binom(n, i) * x**i for i in range(1, n + 1, 2)), Fraction(0))


def odd_binomial_tail_closed(n: int, q: int, shift: int = 0) -> Fraction:
    """Closed form ``((1 + x)^n - (1 - x)^n) / 2`` with ``x = q^{-(n-shift)}``."""
    _check_tail_args(n, q, shift)
    x = Fraction(1, q ** (n - shift))
    return ((1 + x) ** n - (1 - x) ** n) / 2


def format_rational(x) -> str:
    """Render an exact rational as ``"num/den"`` (denominator always shown)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a Fraction.  Floats are rejected."""
    text = str(text).strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"expected an exact rational 'a/b', got {text!r}")
    return Fraction(text)


def p_valuation(x, p: int) -> float:
    """p-adic valuation of a nonzero rational; ``inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return float("inf")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
