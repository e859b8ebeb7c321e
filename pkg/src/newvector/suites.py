"""Verification grids shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult`: a list of report rows (plain dicts
with exact rationals rendered as ``"num/den"``) and an overall pass flag.
Work items are independent and results are merged in a canonical order, so
the output does not depend on ``jobs``.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import conjugation as conj
from . import local
from .census import CensusConfig, census_row, generate_spectrum
from .combinatorics import alternating_sum, format_rational
from .globalvec import (MembershipProfile, assemble, bound_at_profile, central_decay_check,
                        dominating_expansion, eval_h_at_profile, termwise_bound_at_profile)
from .ideals import Ideal, PrimePlace

GRID_NORMS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25)


@dataclass
class SuiteResult:
    name: str
    rows: list[dict]
    passed: bool
    summary: dict = field(default_factory=dict)


def pmap(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunks = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=chunks))


def _finish(name, rows, summary=None):
    return SuiteResult(name, rows, all(r["pass"] for r in rows), summary or {})


# identity

def _identity_row(nk):
    n, k = nk
    value = alternating_sum(n, k)
    return {"check": "alternating_sum", "n": n, "k": k, "value": value, "pass": value == (1 if k == 0 else 0)}


def identity_suite(n_max=12, k_min=-10, k_max=60, jobs=1) -> SuiteResult:
    grid = list(itertools.product(range(1, n_max + 1), range(k_min, k_max + 1)))
    return _finish("identity", pmap(_identity_row, grid, jobs))


# projector

def _projector_rows(args):
    q, n, r_max, c_max = args
    pl = PrimePlace(q)
    rows = []
    for r in range(r_max + 1):
        e = local.build_newvector(pl, n, r)
        for c in range(c_max + 1):
            t = local.trace(e, local.Generic(c))
            rows.append({"check": "projector", "q": q, "n": n, "r": r, "c": c,
                         "trace": format_rational(t), "pass": t == (1 if c == r else 0)})
    return rows


def projector_suite(norms=GRID_NORMS, n_max=6, r_max=12, c_max=12, jobs=1) -> SuiteResult:
    work = [(q, n, r_max, c_max) for q in norms for n in range(1, n_max + 1)]
    return _finish("projector", [row for rows in pmap(_projector_rows, work, jobs) for row in rows])


# local bounds

def _bound_rows(args):
    q, n, r_max, fixed = args
    pl = PrimePlace(q)
    rows = []
    for r in range(r_max + 1):
        checks = [("unfixed", local.check_bound_unfixed(pl, n, r))]
        if fixed:
            checks.append(("fixed", local.check_bound_fixed(pl, n, r)))
        for mode, b in checks:
            rows.append({"check": f"bound_{mode}", "q": q, "n": n, "r": r, "lhs": format_rational(b.lhs),
                         "rhs": format_rational(b.rhs), "ratio": format_rational(b.ratio), "pass": b.holds})
    return rows


def bound_suite(norms=GRID_NORMS, n_max=6, r_max=12, fixed=True, jobs=1) -> SuiteResult:
    work = [(q, n, r_max, fixed) for q in norms for n in range(2, n_max + 1)]
    rows = [row for rows in pmap(_bound_rows, work, jobs) for row in rows]
    summary = {}
    for mode in ("unfixed", "fixed") if fixed else ("unfixed",):
        sub = [r for r in rows if r["check"] == f"bound_{mode}"]
        best = min(sub, key=lambda r: Fraction(r["ratio"]))
        summary[f"min_ratio_{mode}"] = {"ratio": best["ratio"], "q": best["q"], "n": best["n"], "r": best["r"]}
    eq = next(r for r in rows if r["check"] == "bound_unfixed" and (r["n"], r["q"], r["r"]) == (2, 2, 1))
    rows.append({"check": "equality_at_221", "ratio": eq["ratio"], "pass": eq["ratio"] == "1/1"})
    if fixed:
        values = [format_rational(local.eval_at_one(local.build_averaged_newvector(PrimePlace(2), 2, r)))
                  for r in range(4)]
        rows.append({"check": "fixed_q2n2_values", "values": values,
                     "pass": values == ["1/1", "1/1", "1/1", "3/1"]})
    return _finish("bounds", rows, summary)


# domination

def random_ideal(rng: random.Random, norms=GRID_NORMS, max_places=3, max_exp=5) -> Ideal:
    k = rng.randint(0, max_places)
    qs = rng.sample(list(norms), k)
    return Ideal({PrimePlace(q): rng.randint(1, max_exp) for q in qs})


def random_profile(rng: random.Random, ideal: Ideal) -> MembershipProfile:
    levels = {}
    for pl in ideal.places:
        top = ideal.exponent(pl) + 2
        v = rng.randint(0, top + 1)
        levels[pl] = math.inf if v > top else v
    return MembershipProfile(levels)


def _domination_chunk(args):
    seed, start, count, ranks, fixed, max_places, max_exp = args
    rows = []
    for k in range(start, start + count):
        rng = random.Random(f"{seed}:{k}")
        n = rng.choice(ranks)
        ideal = random_ideal(rng, max_places=max_places, max_exp=max_exp)
        G = assemble(ideal, n, Ideal() if fixed else None)
        prof = random_profile(rng, ideal)
        h = abs(eval_h_at_profile(G, prof))
        b = bound_at_profile(G, prof)
        tw = termwise_bound_at_profile(G, prof)
        terms = len(dominating_expansion(G))
        limit = (n + 1) ** ideal.prime_count()
        rows.append({"check": "domination_fixed" if fixed else "domination", "sample": k, "n": n,
                     "ideal": str(ideal),
                     "levels": {str(pl): ("inf" if v == math.inf else v) for pl, v in prof.levels.items()},
                     "abs_h": format_rational(h), "bound": format_rational(b), "termwise_bound": format_rational(tw),
                     "terms": terms, "term_limit": limit,
                     "bound_ok": h <= b, "termwise_ok": h <= tw, "terms_ok": terms <= limit})
        rows[-1]["pass"] = rows[-1]["bound_ok"] and rows[-1]["terms_ok"]
    return rows


def domination_suite(samples=10_000, seed=0, ranks=(2, 3), fixed=False, max_places=3, max_exp=5,
                     jobs=1) -> SuiteResult:
    """Random profiles against the dominating bound.

    Rows are kept only for samples that violate something; counts go in the
    summary.  ``termwise_ok`` tracks the binomially weighted bound separately.
    """
    step = 500
    work = [(seed, s, min(step, samples - s), tuple(ranks), fixed, max_places, max_exp)
            for s in range(0, samples, step)]
    rows = [r for chunk in pmap(_domination_chunk, work, jobs) for r in chunk]
    summary = {
        "samples": len(rows),
        "bound_violations": sum(not r["bound_ok"] for r in rows),
        "termwise_violations": sum(not r["termwise_ok"] for r in rows),
        "term_count_violations": sum(not r["terms_ok"] for r in rows),
    }
    bad = [r for r in rows if not (r["pass"] and r["termwise_ok"])]
    name = "domination_fixed" if fixed else "domination"
    return SuiteResult(name, bad, not bad, summary)


# central decay

def central_decay_cases(ranks=(2, 3), primes=(2, 3, 5, 7), max_places=2, max_exp=4, max_abs_exp=3):
    """``(n, ideal, z, S)`` with ``z = +-2^a 3^b`` and S the primes where z is not a unit."""
    supports = [c for k in range(max_places + 1) for c in itertools.combinations(primes, k)]
    for n in ranks:
        for supp in supports:
            for exps in itertools.product(range(1, max_exp + 1), repeat=len(supp)):
                ideal = Ideal({PrimePlace(p): e for p, e in zip(supp, exps)})
                for a, b, s in itertools.product(range(-max_abs_exp, max_abs_exp + 1),
                                                 range(-max_abs_exp, max_abs_exp + 1), (1, -1)):
                    z = s * Fraction(2) ** a * Fraction(3) ** b
                    if z == 1:
                        continue
                    S = tuple(p for p, e in ((2, a), (3, b)) if e)
                    if set(S) & set(supp):
                        continue
                    yield n, ideal, z, S


def _decay_row(case):
    n, ideal, z, S = case
    res = central_decay_check(assemble(ideal, n), z, S)
    return {"check": "central_decay", "n": n, "ideal": str(ideal), "z": format_rational(z), "S": list(S),
            "lhs": format_rational(res.lhs), "rhs_literal": format_rational(res.rhs_literal),
            "rhs_with_factor": format_rational(res.rhs_with_factor),
            "holds_literal": res.holds_literal, "pass": res.holds_with_factor}


def central_decay_suite(jobs=1, **kw) -> SuiteResult:
    rows = pmap(_decay_row, list(central_decay_cases(**kw)), jobs)
    summary = {"cases": len(rows), "literal_display_failures": sum(not r["holds_literal"] for r in rows)}
    return _finish("central_decay", rows, summary)


# conjugation

def default_gammas(seed=0, extra=3) -> list:
    return [((0, -1), (1, 0))] + conj.seeded_semisimple_gammas(extra, seed)


def _conj_row(args):
    gamma, samples, seed = args
    rep = conj.conjugation_divisibility_test(gamma, samples, seed)
    return {"check": "conjugation", "gamma": [list(r) for r in gamma], "obstruction": rep.obstruction,
            "samples": samples, "seed": seed, "primes": rep.dividing_primes + rep.other_primes,
            "max_lambda": {str(p): v for p, v in sorted(rep.max_lambda.items())},
            "failures": len(rep.failures), "pass": rep.passed}


def conjugation_suite(gammas: Iterable, samples=100, seed=0, jobs=1) -> SuiteResult:
    work = [(conj.as_matrix(g), samples, seed + k) for k, g in enumerate(gammas)]
    return _finish("conjugation", pmap(_conj_row, work, jobs))


# census

def _census_row(args):
    spectrum, ideal, n, chi = args
    return census_row(spectrum, ideal, n, chi)


def census_suite(cfg: CensusConfig, spectrum=None, jobs=1) -> SuiteResult:
    if spectrum is None:
        spectrum = generate_spectrum(cfg)
    work = [(spectrum, ideal, cfg.rank, cfg.chi) for ideal in cfg.tested_ideals()]
    rows = pmap(_census_row, work, jobs)
    return _finish("census", rows, {"config": cfg.to_dict(), "entries": len(spectrum)})
