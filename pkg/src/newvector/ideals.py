"""Ideals of a ring of S-integers as finite factorizations over abstract places.

A place only carries its residue norm ``q = p^f`` and an opaque label, so the
same code covers places of residue degree one and places of norm 4, 9, ...
Every ideal is implicitly coprime to S.  For ``F = Q`` the helper
:func:`principal_ideal` extracts the relevant part of a rational number.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from sympy import isprime, perfect_power

from .combinatorics import p_valuation
from .errors import DegenerateIdeal, InvalidPlace, NotSIntegral


def _prime_power(q: int) -> tuple[int, int]:
    if isprime(q):
        return q, 1
    pp = perfect_power(q)
    if pp and isprime(pp[0]):
        return int(pp[0]), int(pp[1])
    raise InvalidPlace(f"residue norm must be a prime power, got {q}")


@dataclass(frozen=True, order=True)
class PrimePlace:
    residue_norm: int
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.residue_norm, int) or self.residue_norm < 2:
            raise InvalidPlace(f"residue norm must be an integer >= 2, got {self.residue_norm!r}")
        _prime_power(self.residue_norm)

    @property
    def q(self) -> int:
        return self.residue_norm

    @property
    def p(self) -> int:
        return _prime_power(self.residue_norm)[0]

    @property
    def f(self) -> int:
        return _prime_power(self.residue_norm)[1]

    def __str__(self):
        base = str(self.p) if self.f == 1 else f"{self.p}:{self.f}"
        return base + (f"@{self.label}" if self.label else "")


def place(q: int, label: str = "") -> PrimePlace:
    return PrimePlace(q, label)


class Ideal:
    """An integral ideal ``prod p^{r_p}``; the empty factorization is the unit ideal.

    Instances are immutable and hashable.  Factors are kept sorted by place so
    equal ideals have equal reprs and string forms.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[PrimePlace, int] | Iterable[tuple[PrimePlace, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        merged: dict[PrimePlace, int] = {}
        for pl, e in items:
            if not isinstance(pl, PrimePlace):
                pl = PrimePlace(int(pl))
            if e < 0:
                raise ValueError(f"negative exponent {e} at {pl}: ideals are integral")
            if e:
                merged[pl] = merged.get(pl, 0) + e
        self._factors = tuple(sorted(merged.items()))

    @classmethod
    def unit(cls) -> Ideal:
        return cls()

    @property
    def factors(self) -> dict[PrimePlace, int]:
        return dict(self._factors)

    @property
    def places(self) -> tuple[PrimePlace, ...]:
        return tuple(pl for pl, _ in self._factors)

    def exponent(self, pl: PrimePlace) -> int:
        for other, e in self._factors:
            if other == pl:
                return e
        return 0

    def norm(self) -> int:
        out = 1
        for pl, e in self._factors:
            out *= pl.q**e
        return out

    def prime_count(self) -> int:
        return len(self._factors)

    def is_unit(self) -> bool:
        return not self._factors

    def divides(self, other: Ideal) -> bool:
        return all(e <= other.exponent(pl) for pl, e in self._factors)

    def divisors(self) -> list[Ideal]:
        places = self.places
        ranges = [range(e + 1) for _, e in self._factors]
        return [Ideal(zip(places, exps)) for exps in itertools.product(*ranges)]

    def coprime_to(self, other: Ideal) -> bool:
        return not set(self.places) & set(other.places)

    def __mul__(self, other: Ideal) -> Ideal:
        return Ideal(list(self._factors) + list(other._factors))

    def __eq__(self, other):
        return isinstance(other, Ideal) and self._factors == other._factors

    def __hash__(self):
        return hash(self._factors)

    def sort_key(self):
        return (self.norm(), self._factors)

    def __repr__(self):
        return f"Ideal({{{', '.join(f'{pl}: {e}' for pl, e in self._factors)}}})"

    def __str__(self):
        if not self._factors:
            return "1"
        return " * ".join(f"{pl}^{e}" for pl, e in self._factors)


divisors = Ideal.divisors
divides = Ideal.divides


def norm(ideal: Ideal) -> int:
    return ideal.norm()


def prime_count(ideal: Ideal) -> int:
    return ideal.prime_count()


_FACTOR = re.compile(r"^\s*(\d+)(?::(\d+))?(?:@(\w+))?(?:\^(\d+))?\s*$")


def parse_place(text: str) -> tuple[PrimePlace, int]:
    """Parse one factor ``p[:f][@label][^r]``; a bare prime power is its own norm."""
    m = _FACTOR.match(text)
    if not m:
        raise ValueError(f"malformed ideal factor {text!r}")
    base, f, label, r = m.groups()
    base = int(base)
    q = base ** int(f) if f else base
    if f and not isprime(base):
        raise InvalidPlace(f"in {text!r}: 'p:f' needs a prime p, got {base}")
    return PrimePlace(q, label or ""), int(r) if r is not None else 1


def parse_ideal(text: str) -> Ideal:
    """Parse an ideal literal such as ``"2^2 * 3"``, ``"2:2^3"`` or ``"1"``.

    Grammar: factors separated by ``*``; each factor is ``p[:f][@label][^r]``
    where ``p:f`` names the place of norm ``p^f`` and a bare prime power ``q``
    names the place of norm ``q``.  ``"1"`` and the empty string are the unit.
    """
    text = text.strip()
    if text in ("", "1"):
        return Ideal()
    return Ideal(parse_place(part) for part in text.split("*"))


def principal_ideal(m, places: Iterable[PrimePlace]) -> Ideal:
    """The part of the factorization of the rational ``m`` supported on ``places`` (F = Q)."""
    m = Fraction(m)
    if m == 0:
        raise DegenerateIdeal("principal ideal of 0")
    factors = {}
    for pl in places:
        if pl.f != 1:
            raise InvalidPlace(f"principal_ideal needs rational primes, got place of norm {pl.q}")
        v = p_valuation(m, pl.p)
        if v < 0:
            raise NotSIntegral(f"{m} has valuation {v} at {pl.p}")
        if v > 0:
            factors[pl] = v
    return Ideal(factors)
