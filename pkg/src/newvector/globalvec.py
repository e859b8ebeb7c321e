"""Global new-vector test functions over an ideal.

The global element is the product of the local new-vector elements at the
places dividing the ideal, times the characteristic function of the maximal
compact subgroup elsewhere.  Group elements are never represented directly:
a :class:`MembershipProfile` records, per place, the deepest congruence
subgroup containing the element, which is all that an element of this basis
can see.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from sympy import factorint

from . import local
from .combinatorics import binom, divisor_count
from .errors import CentralIdentity, ConductorDoesNotDivide, InvalidPlace, MissingLevel, NewVectorError, NotSUnit
from .ideals import Ideal, PrimePlace

log = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class GlobalNewVector:
    ideal: Ideal
    rank: int
    locals: tuple[tuple[PrimePlace, local.LocalHeckeElement], ...]
    chi_conductor: Ideal | None = None

    @property
    def fixed(self) -> bool:
        return self.chi_conductor is not None

    def local_at(self, pl: PrimePlace) -> local.LocalHeckeElement | None:
        for other, e in self.locals:
            if other == pl:
                return e
        return None


@dataclass(frozen=True)
class MembershipProfile:
    """Per-place level of a group element in the maximal compact subgroup.

    Unlisted places default to level ``inf``.  In fixed-character mode the
    level is read in the ``Z . K'`` chain.
    """

    levels: Mapping[PrimePlace, float] = field(default_factory=dict)

    def level(self, pl: PrimePlace):
        return self.levels.get(pl, INF)

    def has(self, pl: PrimePlace) -> bool:
        return pl in self.levels


@dataclass(frozen=True)
class SpectrumEntry:
    conductor: Ideal
    generic: bool = True
    s_label: str = ""
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")

    def local_model(self, pl: PrimePlace) -> local.RepModel:
        if self.generic:
            return local.Generic(self.conductor.exponent(pl))
        return local.Trivial()


def assemble(ideal: Ideal, n: int, chi_conductor: Ideal | None = None) -> GlobalNewVector:
    if chi_conductor is not None and not chi_conductor.divides(ideal):
        raise ConductorDoesNotDivide(f"character conductor {chi_conductor} does not divide {ideal}")
    parts = []
    for pl in ideal.places:
        r = ideal.exponent(pl)
        if chi_conductor is None:
            parts.append((pl, local.build_newvector(pl, n, r)))
        else:
            parts.append((pl, local.build_averaged_newvector(pl, n, r, chi_conductor.exponent(pl))))
    return GlobalNewVector(ideal, n, tuple(parts), chi_conductor)


def global_eval_at_one(G: GlobalNewVector) -> Fraction:
    """``e^new(1)``, the normalizing constant of the refined counting measure."""
    out = Fraction(1)
    for _, e in G.locals:
        out *= local.eval_at_one(e)
    return out


def global_trace(G: GlobalNewVector, entry: SpectrumEntry) -> Fraction:
    """``tr pi^S(e^new)`` as a product of local traces.

    Places outside the ideal contribute 1 when the entry is unramified there
    and 0 otherwise.  Fixed-character elements use the unaveraged trace.
    """
    out = Fraction(1)
    for pl, e in G.locals:
        rep = entry.local_model(pl)
        out *= local.averaged_trace(e, rep) if G.fixed else local.trace(e, rep)
        if not out:
            return out
    for pl in entry.conductor.places:
        if G.local_at(pl) is None:
            return Fraction(0)
    return out


def expansion(G: GlobalNewVector) -> list[tuple[Fraction, Ideal]]:
    """``e^new`` as ``[(coefficient, d)]`` meaning ``sum coefficient * e_{K(d)}`` over divisors d."""
    terms = [(Fraction(1), Ideal())]
    for pl, e in G.locals:
        terms = [(c * w, d * Ideal({pl: desc.level})) for c, d in terms for w, desc in e.terms]
    return terms


def _local_levels(G, profile):
    for pl, e in G.locals:
        if not profile.has(pl):
            raise MissingLevel(f"profile has no level at {pl}, which divides {G.ideal}")
        yield pl, e, profile.level(pl)


def eval_at_profile(G: GlobalNewVector, profile: MembershipProfile) -> Fraction:
    out = Fraction(1)
    for _, e, lvl in _local_levels(G, profile):
        out *= local.eval_at_level(e, lvl)
    return out


def eval_h_at_profile(G: GlobalNewVector, profile: MembershipProfile) -> Fraction:
    """``h = e^new / e^new(1)`` at an element with the given profile."""
    e1 = global_eval_at_one(G)
    if not e1:
        # only happens for n = 1 at a place of norm 2 with exponent 1
        raise NewVectorError(f"e^new(1) vanishes for {G.ideal} at rank {G.rank}; h is undefined")
    return eval_at_profile(G, profile) / e1


def _local_bound(G, pl, e, termwise=False):
    fn = local.termwise_bound_local if termwise else local.dominating_bound_local
    return fn(pl, G.rank, G.ideal.exponent(pl), fixed=G.fixed)


def dominating_expansion(G: GlobalNewVector) -> list[tuple[Fraction, Ideal]]:
    """Product of the local dominating bounds, expanded over divisors of the ideal.

    Unfixed, each term is ``3^P (N(d)/N(n))^n 1_{K_n(d)}``; in fixed mode the
    base is 6 and the exponent ``n - 1``.  There are at most ``(n+1)^P`` terms.
    """
    terms = [(Fraction(1), Ideal())]
    for pl, e in G.locals:
        new = []
        for c, d in terms:
            for w, desc in _local_bound(G, pl, e):
                new.append((c * w, d * Ideal({pl: desc.level})))
        terms = new
    P = G.ideal.prime_count()
    assert len(terms) <= (G.rank + 1) ** P, "term count exceeds (n+1)^P"
    assert all(d.divides(G.ideal) for _, d in terms)
    return terms


def _in_subgroup(profile, d):
    return all(profile.level(pl) >= e for pl, e in d.factors.items())


def bound_at_profile(G: GlobalNewVector, profile: MembershipProfile) -> Fraction:
    """The dominating function of :func:`dominating_expansion` at a profile."""
    list(_local_levels(G, profile))
    return sum((c for c, d in dominating_expansion(G) if _in_subgroup(profile, d)), Fraction(0))


def termwise_bound_at_profile(G: GlobalNewVector, profile: MembershipProfile) -> Fraction:
    """Product of the binomially weighted local bounds at a profile."""
    out = Fraction(1)
    for pl, e, lvl in _local_levels(G, profile):
        out *= local.eval_bound_at_level(_local_bound(G, pl, e, termwise=True), lvl)
    return out


class CentralDecay(NamedTuple):
    lhs: Fraction
    rhs_literal: Fraction
    rhs_with_factor: Fraction
    holds_literal: bool
    holds_with_factor: bool


def central_decay_check(G: GlobalNewVector, z, s_primes: Iterable[int]) -> CentralDecay:
    """Compare ``|h(z)|`` with ``d(z-1) N(z-1) / N(n)`` for a central S-unit ``z`` (F = Q).

    ``s_primes`` are the finite rational primes in S; the archimedean place is
    implicit.  ``d`` and ``N`` are taken on the part of ``z - 1`` coprime to S,
    i.e. on the ideal ``(z - 1)`` of the S-integers.  The comparison with the
    extra factor ``3^P`` is the one that follows from the dominating
    expansion; a failure of the factor-free form is logged.
    """
    if G.fixed:
        raise ValueError("central decay is checked for the unfixed element only")
    z = Fraction(z)
    s_primes = set(s_primes)
    if z == 1:
        raise CentralIdentity("z = 1 is the identity term")
    if z == 0:
        raise NotSUnit("z = 0 is not a unit")
    for p in list(factorint(abs(z.numerator))) + list(factorint(z.denominator)):
        if p not in s_primes:
            raise NotSUnit(f"{z} is not a unit at {p}, which is outside S")
    for pl in G.ideal.places:
        if pl.f != 1:
            raise InvalidPlace(f"central decay needs rational primes, got place of norm {pl.q}")
        if pl.p in s_primes:
            raise ValueError(f"ideal {G.ideal} is not coprime to S")

    w = z - 1
    outside = {p: e for p, e in factorint(abs(w.numerator)).items() if p not in s_primes}
    n_w = math.prod(p**e for p, e in outside.items())
    profile = MembershipProfile({pl: outside.get(pl.p, 0) for pl in G.ideal.places})

    lhs = abs(eval_h_at_profile(G, profile))
    rhs = Fraction(divisor_count(n_w) * n_w, G.ideal.norm())
    rhs3 = 3 ** G.ideal.prime_count() * rhs
    res = CentralDecay(lhs, rhs, rhs3, lhs <= rhs, lhs <= rhs3)
    if not res.holds_literal:
        log.warning("factor-free central decay fails: ideal=%s z=%s lhs=%s rhs=%s", G.ideal, z, lhs, rhs)
    return res


def old_form_weight(conductor: Ideal, ideal: Ideal, n: int) -> int:
    """``prod_p C(r_p - c_p + n - 1, n - 1)``: dimension of fixed vectors at ``K_n(ideal)``."""
    out = 1
    for pl in set(ideal.places) | set(conductor.places):
        out *= binom(ideal.exponent(pl) - conductor.exponent(pl) + n - 1, n - 1)
    return out
