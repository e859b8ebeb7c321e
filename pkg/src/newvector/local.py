"""Local new-vector Hecke elements at a single place.

Elements are formal combinations of idempotents ``e_K`` attached to the
congruence subgroups ``K_n(p^m)`` (last row congruent to ``(0, ..., 0, 1)``)
and, for the fixed-central-character variant, to ``Z . K'(p^m)`` (last row
congruent to ``(0, ..., 0, unit)``).  Haar measure gives the maximal compact
``K`` volume 1, so every value is an exact rational built from two indices::

    [K : K_n(p^m)] = q^{n(m-1)} (q^n - 1)
    [K : K'(p^m)]  = (q^n - 1) / (q - 1) * q^{(m-1)(n-1)}

A group element is described only by its *level*: the largest ``m`` with the
element inside the relevant subgroup (``inf`` when it lies in all of them).
Because the subgroups are nested, that integer determines the value of every
element in this basis.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import binom
from .errors import ConductorExceedsLevel, UnsupportedBasis
from .ideals import PrimePlace

INF = math.inf


class Kind(enum.Enum):
    FULL = "FullK"
    K1 = "K1"
    KPRIME = "KPrime"
    ZKPRIME = "ZKPrime"
    ZFULL = "FullK.Z"

    @property
    def averaged(self) -> bool:
        return self in (Kind.ZKPRIME, Kind.ZFULL)


_FULL_KINDS = (Kind.FULL, Kind.ZFULL)


@dataclass(frozen=True)
class SubgroupDescriptor:
    kind: Kind
    rank: int
    place: PrimePlace
    level: int = 0

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.kind in _FULL_KINDS:
            if self.level != 0:
                raise ValueError(f"{self.kind.value} carries level 0, got {self.level}")
        elif self.level < 1:
            raise ValueError(f"{self.kind.value} needs level >= 1, got {self.level}")

    def __str__(self):
        if self.kind in _FULL_KINDS:
            return self.kind.value
        return f"{self.kind.value}({self.level})"


def k1(place: PrimePlace, rank: int, level: int) -> SubgroupDescriptor:
    """``K_n(p^level)``, with level 0 meaning the maximal compact subgroup."""
    if level == 0:
        return SubgroupDescriptor(Kind.FULL, rank, place)
    return SubgroupDescriptor(Kind.K1, rank, place, level)


def zkprime(place: PrimePlace, rank: int, level: int) -> SubgroupDescriptor:
    """``Z . K'(p^level)``, with level 0 meaning ``Z . K``."""
    if level == 0:
        return SubgroupDescriptor(Kind.ZFULL, rank, place)
    return SubgroupDescriptor(Kind.ZKPRIME, rank, place, level)


def k1_index(n: int, q: int, m: int) -> int:
    """``[K : K_n(p^m)]``."""
    return 1 if m == 0 else q ** (n * (m - 1)) * (q**n - 1)


def kprime_index(n: int, q: int, m: int) -> int:
    """``[K : K'(p^m)]``."""
    return 1 if m == 0 else (q**n - 1) // (q - 1) * q ** ((m - 1) * (n - 1))


def index(d: SubgroupDescriptor) -> int:
    if d.kind in (Kind.FULL, Kind.K1):
        return k1_index(d.rank, d.place.q, d.level)
    return kprime_index(d.rank, d.place.q, d.level)


def volume(d: SubgroupDescriptor) -> Fraction:
    """Haar volume with ``vol(K) = 1``.

    ``Z . K'`` is recorded with the volume of ``K'``; only its index enters the
    magnitude bookkeeping.
    """
    return Fraction(1, index(d))


@dataclass(frozen=True)
class LocalHeckeElement:
    place: PrimePlace
    rank: int
    terms: tuple[tuple[Fraction, SubgroupDescriptor], ...]

    def __post_init__(self):
        merged: dict[SubgroupDescriptor, Fraction] = {}
        for c, d in self.terms:
            if d.place != self.place or d.rank != self.rank:
                raise ValueError(f"descriptor {d} does not match place {self.place} / rank {self.rank}")
            merged[d] = merged.get(d, Fraction(0)) + Fraction(c)
        canonical = sorted(((c, d) for d, c in merged.items() if c), key=lambda t: (-t[1].level, t[1].kind.value))
        object.__setattr__(self, "terms", tuple(canonical))

    @property
    def averaged(self) -> bool:
        return any(d.kind.averaged for _, d in self.terms)

    def __str__(self):
        return " + ".join(f"({c})*e[{d}]" for c, d in self.terms) or "0"


# Representation models

@dataclass(frozen=True)
class Generic:
    """Generic representation of conductor exponent ``c``."""

    conductor: int

    def __post_init__(self):
        if self.conductor < 0:
            raise ValueError(f"conductor must be >= 0, got {self.conductor}")


@dataclass(frozen=True)
class Trivial:
    """The trivial representation: one fixed vector at every level."""


RepModel = Generic | Trivial


def reeder_dimension(rep: RepModel, n: int, m: int) -> int:
    """``dim pi^{K_n(p^m)}``: ``C(m - c + n - 1, n - 1)`` for generic pi, 1 for trivial."""
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    if isinstance(rep, Trivial):
        return 1
    return binom(m - rep.conductor + n - 1, n - 1)


def _alternating_terms(n, r):
    return [((-1) ** i * binom(n, i), r - i) for i in range(n + 1) if r - i >= 0]


def build_newvector(place: PrimePlace, n: int, r: int) -> LocalHeckeElement:
    """``sum_i (-1)^i C(n,i) e_{K_n(p^{r-i})}``, dropping terms with ``r - i < 0``."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    terms = tuple((Fraction(c), k1(place, n, m)) for c, m in _alternating_terms(n, r))
    return LocalHeckeElement(place, n, terms)


def build_averaged_newvector(place: PrimePlace, n: int, r: int, chi_conductor: int = 0) -> LocalHeckeElement:
    """Magnitude model of the image of the new-vector element under the averaging map.

    Each ``e_{K_n(p^m)}`` is replaced by its average, which is supported on
    ``Z . K'(p^m)`` with absolute value ``[K : K'(p^m)]``.  The character's
    oscillation is not represented.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if chi_conductor < 0:
        raise ValueError(f"character conductor must be >= 0, got {chi_conductor}")
    if chi_conductor > r:
        raise ConductorExceedsLevel(f"character conductor {chi_conductor} exceeds level {r}")
    terms = tuple((Fraction(c), zkprime(place, n, m)) for c, m in _alternating_terms(n, r))
    return LocalHeckeElement(place, n, terms)


def eval_at_level(e: LocalHeckeElement, level) -> Fraction:
    """Value at an element of the given level: sum of ``c / vol`` over terms with level <= it.

    For averaged elements ``level`` is the depth in the ``Z . K'`` chain and the
    result is the magnitude-model value.
    """
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    return sum((c * index(d) for c, d in e.terms if d.level <= level), Fraction(0))


def eval_at_one(e: LocalHeckeElement) -> Fraction:
    return eval_at_level(e, INF)


def _require_k1_basis(e):
    if e.averaged:
        raise UnsupportedBasis("operation is only defined for K_n / K idempotent combinations")


def eval_at_central(e: LocalHeckeElement, v) -> Fraction:
    """Value at a central unit ``z`` with ``v = v_p(z - 1)`` (``inf`` for ``z = 1``)."""
    _require_k1_basis(e)
    return eval_at_level(e, v)


def trace(e: LocalHeckeElement, rep: RepModel) -> Fraction:
    """``tr pi(e) = sum c * dim pi^K``."""
    _require_k1_basis(e)
    return sum((c * reeder_dimension(rep, e.rank, d.level) for c, d in e.terms), Fraction(0))


def averaged_trace(e: LocalHeckeElement, rep: RepModel) -> Fraction:
    """Trace of an averaged element on a representation with the matching central character.

    Averaging preserves such traces, so this is the trace of the unaveraged
    element with the same coefficients.
    """
    unaveraged = LocalHeckeElement(e.place, e.rank, tuple((c, k1(e.place, e.rank, d.level)) for c, d in e.terms))
    return trace(unaveraged, rep)


# Bounds

class BoundCheck(NamedTuple):
    holds: bool
    ratio: Fraction
    lhs: Fraction
    rhs: Fraction


def _q2n2_fixed_value(r: int) -> Fraction:
    q = 2
    if r >= 3:
        return Fraction((q + 1) * q ** (r - 1), 4)
    return {0: Fraction(1), 1: Fraction(q + 1, 3), 2: Fraction((q + 1) * q, 6)}[r]


def check_bound_unfixed(place: PrimePlace, n: int, r: int) -> BoundCheck:
    """``e^new(1) >= [K : K_n(p^r)] / 3``; at ``r = 0`` the right side is ``1/3``."""
    if n < 2:
        raise ValueError("the bound is stated for n >= 2")
    lhs = eval_at_one(build_newvector(place, n, r))
    rhs = Fraction(k1_index(n, place.q, r), 3)
    return BoundCheck(lhs >= rhs, lhs / rhs, lhs, rhs)


def check_bound_fixed(place: PrimePlace, n: int, r: int) -> BoundCheck:
    """``e^new_chi(1) >= [K : K'(p^r)] / 6``.

    At ``q = n = 2`` the value must also equal the closed forms
    ``1, (q+1)/3, (q+1)q/6, (q+1)q^{r-1}/4`` for ``r = 0, 1, 2, >= 3``.
    """
    if n < 2:
        raise ValueError("the bound is stated for n >= 2")
    lhs = eval_at_one(build_averaged_newvector(place, n, r))
    rhs = Fraction(kprime_index(n, place.q, r), 6)
    holds = lhs >= rhs
    if n == 2 and place.q == 2:
        holds = holds and lhs == _q2n2_fixed_value(r)
    return BoundCheck(holds, lhs / rhs, lhs, rhs)


def dominating_bound_local(place: PrimePlace, n: int, r: int, fixed: bool = False):
    """Dominating combination for ``|h| = |e / e(1)|``.

    Unfixed: ``3 * sum_i q^{-ni} 1_{K_n(p^{r-i})}``.
    Fixed:   ``6 * sum_i q^{-(n-1)i} 1_{Z K'(p^{r-i})}``.
    Returned as ``[(coefficient, descriptor)]`` with at most ``n + 1`` terms.
    """
    if n < 2:
        raise ValueError("the bound is stated for n >= 2")
    q = place.q
    if fixed:
        return [(6 * Fraction(1, q ** ((n - 1) * i)), zkprime(place, n, r - i)) for i in range(n + 1) if r - i >= 0]
    return [(3 * Fraction(1, q ** (n * i)), k1(place, n, r - i)) for i in range(n + 1) if r - i >= 0]


def termwise_bound_local(place: PrimePlace, n: int, r: int, fixed: bool = False):
    """Dominating combination that keeps the binomial weights.

    Bounding each term of ``h`` separately with ``e(1) >= index / 3`` (or
    ``/ 6``) gives ``C * C(n,i) * [K : K(p^{r-i})] / [K : K(p^r)]``.  Unlike
    :func:`dominating_bound_local` this one holds at every level.
    """
    if n < 2:
        raise ValueError("the bound is stated for n >= 2")
    q = place.q
    ix, make, const = (kprime_index, zkprime, 6) if fixed else (k1_index, k1, 3)
    top = ix(n, q, r)
    return [(const * binom(n, i) * Fraction(ix(n, q, r - i), top), make(place, n, r - i))
            for i in range(n + 1) if r - i >= 0]


def eval_bound_at_level(bound, level) -> Fraction:
    """Evaluate a ``[(coefficient, descriptor)]`` indicator combination at a level."""
    return sum((c for c, d in bound if d.level <= level), Fraction(0))
