"""Synthetic spectra and the classical / refined counting weights.

A synthetic spectrum is a list of :class:`~newvector.globalvec.SpectrumEntry`
objects.  The classical count weights each entry by its number of
``K_n(n)``-fixed vectors; the refined count weights it by the trace of the
new-vector element, which for generic entries is 1 exactly when the conductor
equals ``n``.  Volume constants are set to 1 and the test function at S is the
constant 1.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import binom, format_rational, parse_rational
from .globalvec import SpectrumEntry, assemble, global_eval_at_one, global_trace, old_form_weight
from .ideals import Ideal, PrimePlace, parse_ideal, parse_place

MODES = ("unfixed", "fixed")


@dataclass(frozen=True)
class CensusConfig:
    rank: int
    places: tuple[PrimePlace, ...]
    r_max: int
    entries: int
    generic_fraction: Fraction = Fraction(1)
    seed: int = 0
    mode: str = "unfixed"
    chi_conductor: Ideal | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.entries < 1:
            raise ValueError(f"entries must be >= 1, got {self.entries}")
        if self.r_max < 0:
            raise ValueError(f"r_max must be >= 0, got {self.r_max}")
        if not 0 <= self.generic_fraction <= 1:
            raise ValueError(f"generic_fraction must lie in [0, 1], got {self.generic_fraction}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "fixed":
            if self.chi_conductor is None:
                raise ValueError("fixed mode needs chi_conductor")
            if not self.chi_conductor.divides(self.cap):
                raise ValueError(f"chi_conductor {self.chi_conductor} does not divide the cap ideal {self.cap}")

    @property
    def cap(self) -> Ideal:
        return Ideal({pl: self.r_max for pl in self.places})

    @property
    def chi(self) -> Ideal | None:
        return self.chi_conductor if self.mode == "fixed" else None

    def tested_ideals(self) -> list[Ideal]:
        """Divisors of the cap ideal, restricted to multiples of the character conductor."""
        ideals = self.cap.divisors()
        if self.chi is not None:
            ideals = [d for d in ideals if self.chi.divides(d)]
        return sorted(ideals, key=Ideal.sort_key)

    @classmethod
    def from_dict(cls, data: dict) -> CensusConfig:
        places = []
        for item in data["places"]:
            q = int(item["q"])
            if "f" in item:
                q = q ** int(item["f"])
            places.append(PrimePlace(q, str(item.get("label", ""))))
        chi = data.get("chi_conductor")
        return cls(
            rank=int(data["rank"]),
            places=tuple(places),
            r_max=int(data["r_max"]),
            entries=int(data["entries"]),
            generic_fraction=parse_rational(data.get("generic_fraction", "1/1")),
            seed=int(data.get("seed", 0)),
            mode=data.get("mode", "unfixed"),
            chi_conductor=parse_ideal(chi) if chi is not None else None,
        )

    def to_dict(self) -> dict:
        out = {
            "rank": self.rank,
            "places": [{"q": pl.q, "label": pl.label} for pl in self.places],
            "r_max": self.r_max,
            "entries": self.entries,
            "generic_fraction": format_rational(self.generic_fraction),
            "seed": self.seed,
            "mode": self.mode,
        }
        if self.chi_conductor is not None:
            out["chi_conductor"] = str(self.chi_conductor)
        return out


def generate_spectrum(cfg: CensusConfig) -> list[SpectrumEntry]:
    """Seeded synthetic spectrum.

    Generic entries get a conductor drawn uniformly from the divisor lattice of
    the cap (multiples of the character conductor in fixed mode).  Non-generic
    entries follow the trivial dimension law and are unramified.
    """
    rng = random.Random(cfg.seed)
    lattice = cfg.tested_ideals()
    num, den = cfg.generic_fraction.numerator, cfg.generic_fraction.denominator
    out = []
    for i in range(cfg.entries):
        generic = rng.randrange(den) < num
        conductor = rng.choice(lattice) if generic else Ideal()
        out.append(SpectrumEntry(conductor, generic, f"s{rng.randrange(1000):03d}", 1))
    return out


@dataclass(frozen=True)
class RefinedCount:
    generic: Fraction
    nongeneric: Fraction
    isolated: tuple[int, ...]

    @property
    def total(self) -> Fraction:
        return self.generic + self.nongeneric


def refined_count(spectrum: Sequence[SpectrumEntry], ideal: Ideal, n: int,
                  chi_conductor: Ideal | None = None) -> RefinedCount:
    """Sum of ``m_pi * tr pi(e^new)``, split into generic and non-generic parts."""
    G = assemble(ideal, n, chi_conductor)
    gen = Fraction(0)
    non = Fraction(0)
    isolated = []
    for k, entry in enumerate(spectrum):
        t = entry.multiplicity * global_trace(G, entry)
        if entry.generic:
            gen += t
            if t:
                isolated.append(k)
        else:
            non += t
    return RefinedCount(gen, non, tuple(isolated))


def classical_count(spectrum: Sequence[SpectrumEntry], ideal: Ideal, n: int) -> Fraction:
    """Sum of ``m_pi * dim pi^{K_n(ideal)}``."""
    total = Fraction(0)
    for entry in spectrum:
        w = old_form_weight(entry.conductor, ideal, n) if entry.generic else 1
        total += entry.multiplicity * w
    return total


def conductor_tally(spectrum: Sequence[SpectrumEntry], ideal: Ideal) -> int:
    return sum(e.multiplicity for e in spectrum if e.generic and e.conductor == ideal)


def trivial_leakage(ideal: Ideal, n: int) -> int:
    """Trace of the new-vector element on the trivial representation."""
    out = 1
    for pl in ideal.places:
        r = ideal.exponent(pl)
        out *= (-1) ** r * binom(n - 1, r)
    return out


def inversion_check(spectrum: Sequence[SpectrumEntry], ideal: Ideal, n: int) -> bool:
    """Classical count equals refined counts at all divisors weighted by old-form multiplicities."""
    if any(not e.generic for e in spectrum):
        raise ValueError("inversion_check needs an all-generic spectrum")
    rhs = Fraction(0)
    for m in ideal.divisors():
        rhs += refined_count(spectrum, m, n).generic * old_form_weight(m, ideal, n)
    return classical_count(spectrum, ideal, n) == rhs


def census_row(spectrum: Sequence[SpectrumEntry], ideal: Ideal, n: int, chi: Ideal | None) -> dict:
    refined = refined_count(spectrum, ideal, n, chi)
    tally = conductor_tally(spectrum, ideal)
    generic = [e for e in spectrum if e.generic]
    trivial_mult = sum(e.multiplicity for e in spectrum if not e.generic)
    row = {
        "ideal": str(ideal),
        "norm": ideal.norm(),
        "refined_count": format_rational(refined.generic),
        "nongeneric_leakage": format_rational(refined.nongeneric),
        "classical_count": format_rational(classical_count(spectrum, ideal, n)),
        "enew_at_one": format_rational(global_eval_at_one(assemble(ideal, n, chi))),
        "tally": tally,
        "isolated": list(refined.isolated),
        "refined_equals_tally": refined.generic == tally,
        "inversion_ok": inversion_check(generic, ideal, n),
        "leakage_ok": refined.nongeneric == trivial_mult * trivial_leakage(ideal, n),
    }
    row["pass"] = row["refined_equals_tally"] and row["inversion_ok"] and row["leakage_ok"]
    return row


# Spectrum files

def entry_to_dict(entry: SpectrumEntry) -> dict:
    factors = [f"{pl}^{e}" for pl, e in entry.conductor.factors.items()]
    return {"conductor": factors, "generic": entry.generic,
            "multiplicity": entry.multiplicity, "s_label": entry.s_label}


def entry_from_dict(data: dict) -> SpectrumEntry:
    cond = data.get("conductor", [])
    if isinstance(cond, str):
        conductor = parse_ideal(cond)
    elif isinstance(cond, dict):
        conductor = Ideal(parse_place(f"{k}^{v}") for k, v in cond.items())
    else:
        conductor = Ideal(parse_place(f) for f in cond)
    return SpectrumEntry(conductor, bool(data.get("generic", True)), str(data.get("s_label", "")),
                         int(data.get("multiplicity", 1)))


def dump_spectrum(spectrum: Sequence[SpectrumEntry]) -> str:
    return json.dumps([entry_to_dict(e) for e in spectrum], indent=2, sort_keys=True) + "\n"


def load_spectrum(text: str) -> list[SpectrumEntry]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("spectrum file must hold a JSON array of entries")
    return [entry_from_dict(d) for d in data]
