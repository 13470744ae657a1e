"""Command-line front end: Hurwitz tables, cumulant series, identity
verification suites, and the Monte-Carlo sanity check.

Output is JSON (schema "hwz/1") with counts as decimal strings and rational
functions as exact coefficient lists; CSV is available for flat Hurwitz
tables.  Exit codes: 0 success, 1 verification failure / route mismatch,
2 usage error, 3 resource-guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import Poly, RatFunc
from .cumulants import (
    CumulantSeries,
    MAX_BELL,
    scaled_cumulant,
    time_delay_coefficients,
)
from .hurwitz import (
    DEFAULT_MAX_N_DFS,
    HurwitzQuery,
    ResourceGuardError,
    count_double_hurwitz,
    max_n_groupalgebra,
)
from .symcore import partition_list

SCHEMA = "hwz/1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


# ---------------------------------------------------------------------------
# serialization helpers (exact round-trip; no floats for exact data)
# ---------------------------------------------------------------------------


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(sorted((int(p) for p in text.split(",")), reverse=True))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}; expected e.g. 2,1,1")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("partition parts must be positive integers")
    return parts


def serialize_partition(mu: tuple[int, ...]) -> list[int]:
    return list(mu)


def serialize_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def serialize_ratfunc(f: RatFunc) -> dict:
    return {
        "variable": f.var,
        "numerator": [serialize_fraction(c) for c in f.num.coeffs],
        "denominator": [serialize_fraction(c) for c in f.den.coeffs],
    }


def parse_ratfunc(obj: dict) -> RatFunc:
    num = Poly([Fraction(c) for c in obj["numerator"]])
    den = Poly([Fraction(c) for c in obj["denominator"]])
    return RatFunc(num, den, var=obj["variable"])


def serialize_series(s: CumulantSeries) -> dict:
    return {
        "gmax": s.gmax,
        "exact": s.exact,
        "validity": s.validity,
        "coefficients": [serialize_ratfunc(f) for f in s.coeffs],
    }


def _record(query: dict, result, t0: float) -> dict:
    return {
        "schema": SCHEMA,
        "query": query,
        "result": result,
        "provenance": {
            "version": __version__,
            "runtime_seconds": round(time.time() - t0, 3),
            "limits": {
                "max_n_dfs": DEFAULT_MAX_N_DFS,
                "max_n_groupalgebra": max_n_groupalgebra(),
                "max_bell": MAX_BELL,
            },
        },
    }


def _emit(record: dict) -> None:
    json.dump(record, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_hurwitz(args) -> int:
    t0 = time.time()
    mu = args.mu
    if args.n is not None and args.n != sum(mu):
        print(f"error: --n {args.n} inconsistent with |mu| = {sum(mu)}", file=sys.stderr)
        return EXIT_USAGE
    if args.nu is not None and sum(args.nu) != sum(mu):
        print("error: |mu| != |nu|", file=sys.stderr)
        return EXIT_USAGE
    q = HurwitzQuery(mu=mu, nu=args.nu, genus=args.genus, kind=args.kind)
    table = count_double_hurwitz(q)
    rows = [(nu, count) for nu, count in table.items()]
    if args.format == "csv":
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(["nu", "count"])
        for nu, count in rows:
            w.writerow([",".join(map(str, nu)), str(count)])
        sys.stdout.write(out.getvalue())
        return EXIT_OK
    result = [
        {"nu": serialize_partition(nu), "count": str(count)} for nu, count in rows
    ]
    _emit(
        _record(
            {
                "command": "hurwitz",
                "mu": serialize_partition(mu),
                "nu": serialize_partition(args.nu) if args.nu else None,
                "genus": args.genus,
                "kind": args.kind,
            },
            result,
            t0,
        )
    )
    return EXIT_OK


def cmd_cumulant(args) -> int:
    t0 = time.time()
    inverse = args.matrix == "inverse"
    try:
        series = scaled_cumulant(args.mu, inverse, gmax=args.gmax, route=args.route)
    except AssertionError as exc:
        print(f"route mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    result = serialize_series(series)
    if args.c != "symbolic":
        cval = Fraction(args.c)
        result["at_c"] = {
            "c": serialize_fraction(cval),
            "coefficients": [serialize_fraction(v) for v in series.at_c(cval)],
        }
    _emit(
        _record(
            {
                "command": "cumulant",
                "matrix": args.matrix,
                "mu": serialize_partition(args.mu),
                "gmax": args.gmax,
                "c": args.c,
                "route": args.route,
            },
            result,
            t0,
        )
    )
    return EXIT_OK


def _verify_jobs(args) -> list[tuple[str, dict]]:
    suites = {
        "duality": ("duality", {"nmax": args.nmax}),
        "reciprocity": ("reciprocity", {"nmax": min(args.nmax, 4)}),
        "funcrel": ("funcrel", {"nmax": min(args.nmax, 4), "gmax": args.gmax}),
        "recursion": ("recursion", {"nmax": args.nmax, "dmax": args.dmax}),
        "preimage": ("preimage", {"nmax": args.nmax}),
        "covduality": ("covduality", {"nmax": min(args.nmax, 4)}),
        "weingarten": ("weingarten", {"nmax": min(args.nmax, 5), "order": 4}),
        "oracle": ("oracle", {"nmax": min(args.nmax, 4), "gmax": min(args.gmax, 3)}),
        "parity": ("parity", {"nmax": min(args.nmax, 4), "gmax": min(args.gmax, 3)}),
        "integrality": ("integrality", {"nmax": args.nmax, "gmax": args.gmax}),
    }
    if args.suite == "all":
        return sorted(suites.values())
    return [suites[args.suite]]


def _run_verify_job(job: tuple[str, dict]) -> dict:
    from . import identities

    name, kw = job
    if name == "duality":
        return identities.check_duality(kw["nmax"]).to_json()
    if name == "reciprocity":
        return identities.check_reciprocity(kw["nmax"]).to_json()
    if name == "funcrel":
        return identities.check_functional_relation(kw["nmax"], kw["gmax"]).to_json()
    if name == "recursion":
        return identities.check_recursion(kw["nmax"], kw["dmax"]).to_json()
    if name == "preimage":
        return identities.check_preimage(kw["nmax"]).to_json()
    if name == "covduality":
        return identities.check_covariance_duality(kw["nmax"]).to_json()
    if name == "weingarten":
        from .weingarten import convolve, delta_id, omega, omega_via_jm, wg, wg_matches_series

        witnesses = []
        for n in range(1, kw["nmax"] + 1):
            if convolve(wg(n), omega(n)) != delta_id(n):
                witnesses.append((n, "wg * omega != delta"))
            if omega_via_jm(n) != omega(n):
                witnesses.append((n, "jm factorization mismatch"))
            if not wg_matches_series(n, kw["order"]):
                witnesses.append((n, "series expansion mismatch"))
        return {
            "identity": "weingarten",
            "params": kw,
            "passed": not witnesses,
            "witnesses": [repr(w) for w in witnesses],
            "notes": "",
        }
    if name == "oracle":
        from .cumulants import scaled_cumulant_hurwitz, scaled_cumulant_oracle

        witnesses = []
        for n in range(1, kw["nmax"] + 1):
            for mu in partition_list(n):
                for inverse in (False, True):
                    a = scaled_cumulant_hurwitz(mu, inverse, kw["gmax"])
                    b = scaled_cumulant_oracle(mu, inverse, kw["gmax"])
                    if a.coeffs != b.coeffs:
                        witnesses.append((mu, inverse))
        return {
            "identity": "oracle-equivalence",
            "params": kw,
            "passed": not witnesses,
            "witnesses": [repr(w) for w in witnesses],
            "notes": "",
        }
    if name == "parity":
        from .cumulants import scaled_cumulant_oracle

        witnesses = []
        for n in range(1, kw["nmax"] + 1):
            for mu in partition_list(n):
                for inverse in (False, True):
                    try:
                        scaled_cumulant_oracle(mu, inverse, kw["gmax"])
                    except AssertionError as exc:
                        witnesses.append((mu, inverse, str(exc)))
        return {
            "identity": "parity",
            "params": kw,
            "passed": not witnesses,
            "witnesses": [repr(w) for w in witnesses],
            "notes": "odd 1/N coefficients of every oracle expansion vanish",
        }
    if name == "integrality":
        witnesses = []
        for n in range(1, kw["nmax"] + 1):
            for mu in partition_list(n):
                try:
                    time_delay_coefficients(mu, kw["gmax"])
                except AssertionError as exc:
                    witnesses.append((mu, str(exc)))
        return {
            "identity": "integrality",
            "params": kw,
            "passed": not witnesses,
            "witnesses": [repr(w) for w in witnesses],
            "notes": "time-delay coefficients are nonnegative integers",
        }
    raise ValueError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    t0 = time.time()
    jobs = _verify_jobs(args)
    if args.jobs > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_verify_job, jobs))
    else:
        reports = [_run_verify_job(j) for j in jobs]
    reports.sort(key=lambda r: (r["identity"], json.dumps(r["params"], sort_keys=True)))
    ok = all(r["passed"] for r in reports)
    _emit(
        _record(
            {"command": "verify", "suite": args.suite, "nmax": args.nmax,
             "gmax": args.gmax, "dmax": args.dmax, "jobs": args.jobs},
            {"passed": ok, "reports": reports},
            t0,
        )
    )
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_mc(args) -> int:
    t0 = time.time()
    from .mc import SamplerConfig, estimate_cumulants

    c = Fraction(args.c)
    M = c * args.N
    if M.denominator != 1:
        print(
            f"error: c = {args.c} gives non-integer M = cN; the sampler needs "
            "integer M -- use the exact routes (`cumulant`) for rational c",
            file=sys.stderr,
        )
        return EXIT_USAGE
    cfg = SamplerConfig(
        N=args.N,
        M=int(M),
        samples=args.samples,
        seed=args.seed,
        targets=tuple(args.targets.split(",")),
    )
    report = estimate_cumulants(cfg)
    _emit(_record({"command": "mc"}, report, t0))
    worst = max((e["sigmas"] for e in report["estimates"]), default=0.0)
    return EXIT_OK if worst < 4.0 else EXIT_VERIFY_FAIL


def cmd_wg(args) -> int:
    t0 = time.time()
    from .weingarten import wg

    element = wg(args.n)
    result = {
        ",".join(map(str, lam)): serialize_ratfunc(val)
        for lam, val in element.values.items()
    }
    _emit(_record({"command": "wg", "n": args.n}, result, t0))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hwz",
        description="Monotone Hurwitz numbers and Wishart cumulants, exactly.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hurwitz", help="double Hurwitz number tables")
    h.add_argument("--mu", type=parse_partition, required=True)
    h.add_argument("--nu", type=parse_partition, default=None)
    h.add_argument("--n", type=int, default=None, help="total size (checked against |mu|)")
    h.add_argument("--genus", type=int, default=0)
    h.add_argument("--kind", choices=["monotone", "strict"], default="monotone")
    h.add_argument("--format", choices=["json", "csv"], default="json")
    h.set_defaults(func=cmd_hurwitz)

    cum = sub.add_parser("cumulant", help="scaled cumulant 1/N^2 expansions")
    cum.add_argument("--matrix", choices=["wishart", "inverse"], required=True)
    cum.add_argument("--mu", type=parse_partition, required=True)
    cum.add_argument("--gmax", type=int, default=3)
    cum.add_argument("--c", default="symbolic", help="rational value or 'symbolic'")
    cum.add_argument("--route", choices=["hurwitz", "oracle", "both"], default="hurwitz")
    cum.set_defaults(func=cmd_cumulant)

    v = sub.add_parser("verify", help="identity verification suites")
    v.add_argument(
        "--suite",
        choices=[
            "all", "duality", "reciprocity", "funcrel", "recursion", "preimage",
            "covduality", "weingarten", "oracle", "parity", "integrality",
        ],
        default="all",
    )
    v.add_argument("--nmax", type=int, default=4)
    v.add_argument("--gmax", type=int, default=2)
    v.add_argument("--dmax", type=int, default=3)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("mc", help="Monte-Carlo sanity check")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--c", required=True, help="rational with integer M = cN")
    m.add_argument("--samples", type=int, default=10000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--targets", default="trW,trWinv,trWinv2")
    m.set_defaults(func=cmd_mc)

    w = sub.add_parser("wg", help="exact Weingarten function by class")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--format", choices=["json"], default="json")
    w.set_defaults(func=cmd_wg)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
