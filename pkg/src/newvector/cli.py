"""Command line entry point.

::

    newvector [--report json|csv] [--jobs N] [--seed S] [--out FILE] COMMAND ...

    verify identity     [--n-max 12] [--k-min -10] [--k-max 60]
    verify projector    [--n-max 6] [--r-max 12] [--norms 2,3,4,...]
    verify bounds       [--fixed] [--n-max 6] [--r-max 12] [--samples 10000]
    verify conjugation  [--gamma 0,-1,1,0 ...] [--samples 100]
    eval enew           --n 2 --ideal 2^2 [--chi-conductor 2] [--bound]
    simulate            --config census.json [--spectrum FILE] [--spectrum-out FILE]

Exit status: 0 when every check passes, 1 on an assertion failure, 2 on a
usage error.  Ideal literals are ``p[:f][@label][^r]`` factors joined by
``*`` (``2:2^3`` is the cube of the place of norm 4; ``1`` is the unit ideal).
Global flags may appear before or after the command.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import suites
from .census import CensusConfig, dump_spectrum, load_spectrum
from .combinatorics import format_rational
from .conjugation import as_matrix
from .globalvec import assemble, dominating_expansion, expansion, global_eval_at_one
from .ideals import parse_ideal
from .reports import render

log = logging.getLogger("newvector")


class UsageError(Exception):
    pass


def _ideal(text):
    try:
        return parse_ideal(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _matrix(text):
    try:
        return as_matrix(json.loads(text) if text.strip().startswith("[") else [int(v) for v in text.split(",")])
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(f"bad matrix literal {text!r}: {exc}") from None


def _norms(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _global_flags(sup=False) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS if sup else None
    p.add_argument("--report", choices=("json", "csv"), default=d if sup else "json")
    p.add_argument("--jobs", type=_positive, default=d if sup else 1)
    p.add_argument("--seed", type=int, default=d)
    p.add_argument("--out", type=Path, default=d, help="write the report here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true", default=d if sup else False)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(sup=True)
    parser = argparse.ArgumentParser(prog="newvector", parents=[_global_flags()],
                                     description="Exact checks for new-vector Hecke projectors.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common]).add_subparsers(dest="suite", required=True)
    p = verify.add_parser("identity", parents=[common])
    p.add_argument("--n-max", type=_positive, default=12)
    p.add_argument("--k-min", type=int, default=-10)
    p.add_argument("--k-max", type=int, default=60)

    p = verify.add_parser("projector", parents=[common])
    p.add_argument("--n-max", type=_positive, default=6)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--norms", type=_norms, default=suites.GRID_NORMS)

    p = verify.add_parser("bounds", parents=[common])
    p.add_argument("--fixed", action="store_true", help="include the fixed-central-character variants")
    p.add_argument("--n-max", type=_positive, default=6)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--norms", type=_norms, default=suites.GRID_NORMS)
    p.add_argument("--samples", type=_positive, default=10_000, help="random membership profiles")

    p = verify.add_parser("conjugation", parents=[common])
    p.add_argument("--gamma", type=_matrix, action="append",
                   help="row-major integer list, e.g. 0,-1,1,0 (repeatable)")
    p.add_argument("--samples", type=_positive, default=100)

    ev = sub.add_parser("eval", parents=[common]).add_subparsers(dest="what", required=True)
    p = ev.add_parser("enew", parents=[common])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ideal", type=_ideal, required=True)
    p.add_argument("--chi-conductor", type=_ideal)
    p.add_argument("--bound", action="store_true", help="also print the dominating expansion")

    p = sub.add_parser("simulate", parents=[common])
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--spectrum", type=Path, help="use this spectrum file instead of generating one")
    p.add_argument("--spectrum-out", type=Path, help="write the generated spectrum here")
    return parser


def _run_verify(args) -> list[suites.SuiteResult]:
    seed = args.seed or 0
    jobs = args.jobs
    if args.suite == "identity":
        return [suites.identity_suite(args.n_max, args.k_min, args.k_max, jobs=jobs)]
    if args.suite == "projector":
        return [suites.projector_suite(args.norms, args.n_max, args.r_max, args.r_max, jobs=jobs)]
    if args.suite == "bounds":
        out = [suites.bound_suite(args.norms, args.n_max, args.r_max, fixed=args.fixed, jobs=jobs),
               suites.domination_suite(args.samples, seed, jobs=jobs)]
        if args.fixed:
            out.append(suites.domination_suite(args.samples, seed, fixed=True, jobs=jobs))
        out.append(suites.central_decay_suite(jobs=jobs))
        return out
    gammas = args.gamma or suites.default_gammas(seed)
    return [suites.conjugation_suite(gammas, args.samples, seed, jobs=jobs)]


def _run_eval(args) -> int:
    try:
        G = assemble(args.ideal, args.n, args.chi_conductor)
    except ValueError as exc:
        raise UsageError(f"--chi-conductor: {exc}") from None
    print(global_eval_at_one(G))
    for c, d in expansion(G):
        print(f"{c}\te[K({d})]")
    if args.bound:
        if args.n < 2:
            raise UsageError("--n: the dominating bound needs n >= 2")
        print("dominating:")
        for c, d in dominating_expansion(G):
            print(f"{c}\t1[K({d})]")
    return 0


def _run_simulate(args) -> list[suites.SuiteResult]:
    try:
        data = json.loads(args.config.read_text())
        if args.seed is not None:
            data["seed"] = args.seed
        cfg = CensusConfig.from_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"--config: {exc}") from None
    spectrum = None
    if args.spectrum is not None:
        try:
            spectrum = load_spectrum(args.spectrum.read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"--spectrum: {exc}") from None
    if args.spectrum_out is not None:
        from .census import generate_spectrum
        args.spectrum_out.write_text(dump_spectrum(spectrum if spectrum is not None else generate_spectrum(cfg)))
    return [suites.census_suite(cfg, spectrum, jobs=args.jobs)]


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        if args.command == "eval":
            return _run_eval(args)
        results = _run_verify(args) if args.command == "verify" else _run_simulate(args)
    except UsageError as exc:
        print(f"newvector: error: {exc}", file=sys.stderr)
        return 2
    meta = {"command": args.command, "seed": args.seed}
    text = render(results, args.report, meta)
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    for r in results:
        extra = "".join(f" {k}={v}" for k, v in r.summary.items() if not isinstance(v, dict))
        print(f"{r.name}: {'PASS' if r.passed else 'FAIL'}{extra}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
