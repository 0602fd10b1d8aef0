"""Command-line front end: compute polynomials and Whitney numbers, run the
named verification suites, and benchmark the family recursion against the
generic lattice computation.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import corpus as corpus_mod
from .equivariant import (PermGroup, dimension, equivariant_c_character,
                          equivariant_c_uniform, h_to_schur,
                          is_schur_positive)
from .families import (BRAID, TYPE_B, build_tables, gaussian_binomial,
                       kl_family, lattice_spec, narayana, parse_family,
                       q_shift_check, qvec_family, series_identity_check,
                       uniform_family, whitney_multi_family, z_family)
from .klz import (KlMethod, kl_by_method, kl_coeff_closed, kl_defining,
                  z_polynomial)
from .matroid import (FlatCapExceeded, characteristic_polynomial,
                      enumerate_flats, matroid_spec_from_json, whitney_multi)
from .polyarith import IntPolynomial, format_polynomial, is_palindromic
from .roots import conjecture_sweep, is_log_concave

DEFAULT_FLAT_CAP = 2_000_000

SUITES = ("palindrome", "crossmethod", "narayana", "gaussian", "qshift",
          "roots", "interlace", "logconcave", "schur", "series")


class UsageError(Exception):
    pass


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ZPOLY_THREADS", "1")))
    except ValueError:
        return 1


def _poly_json(p: IntPolynomial):
    return list(p.coeffs)


def _load_matroid(args):
    sources = [s for s in (args.matroid, args.matroid_json, args.family) if s]
    if len(sources) != 1:
        raise UsageError("exactly one of --matroid, --matroid-json, --family required")
    if args.family:
        if args.d is None:
            raise UsageError("--family requires --d")
        family = parse_family(args.family)
        return family, None
    if args.matroid:
        try:
            with open(args.matroid, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.matroid}: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.matroid}: line {exc.lineno} column {exc.colno}: {exc.msg}")
    else:
        try:
            obj = json.loads(args.matroid_json)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--matroid-json: line {exc.lineno} column {exc.colno}: {exc.msg}")
    try:
        spec = matroid_spec_from_json(obj)
    except ValueError as exc:
        raise UsageError(str(exc))
    return None, spec


def _emit(args, payload, plain_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


# ---------------------------------------------------------------------------
# compute


def cmd_compute(args) -> int:
    family, spec = _load_matroid(args)
    target = args.target

    if target == "tables":
        if family is None:
            raise UsageError("tables are family data; use --family")
        tables = build_tables(family, args.d)
        rows = [(str(family), d, k, tables.W[d][k], tables.w[d][k])
                for d in range(args.d + 1) for k in range(d + 1)]
        if args.format == "json":
            print(json.dumps([{"family": f, "d": d, "k": k, "W": W, "w": w}
                              for f, d, k, W, w in rows], indent=2))
        else:
            print("family,d,k,W,w")
            for row in rows:
                print(",".join(str(x) for x in row))
        return 0

    use_family_path = (family is not None and target in ("kl", "z", "whitney")
                       and not args.all_methods
                       and not (target == "kl" and args.method is not None))
    if use_family_path:
        tables = build_tables(family, args.d)
        if target == "kl":
            poly = kl_family(tables, args.d)
        elif target == "z":
            poly = z_family(tables, args.d)
        else:
            profile = _parse_profile(args.profile)
            value = whitney_multi_family(tables, args.d, profile)
            _emit(args, {"family": str(family), "d": args.d,
                         "profile": profile, "whitney": value}, [str(value)])
            return 0
        _emit(args, {"family": str(family), "d": args.d, target: _poly_json(poly)},
              [format_polynomial(poly.coeffs)])
        return 0

    if spec is None:
        spec = lattice_spec(family, args.d)
    lat = enumerate_flats(spec, flat_cap=args.flat_cap)

    if target == "chi":
        poly = characteristic_polynomial(lat)
        _emit(args, {"chi": _poly_json(poly)}, [format_polynomial(poly.coeffs)])
        return 0
    if target == "whitney":
        profile = _parse_profile(args.profile)
        value = whitney_multi(lat, profile)
        _emit(args, {"profile": profile, "whitney": value}, [str(value)])
        return 0
    if target == "z":
        poly = z_polynomial(lat)
        _emit(args, {"z": _poly_json(poly)}, [format_polynomial(poly.coeffs)])
        return 0

    # kl, possibly across methods
    if args.all_methods:
        results = {m.value: kl_by_method(lat, m) for m in KlMethod}
        if family is not None:
            results["family"] = kl_family(build_tables(family, args.d), args.d)
        agree = len({tuple(p.coeffs) for p in results.values()}) == 1
        payload = {"methods": {k: _poly_json(p) for k, p in results.items()},
                   "agree": agree}
        lines = [f"{k}: {format_polynomial(p.coeffs)}" for k, p in results.items()]
        lines.append("AGREE" if agree else "DISAGREE")
        _emit(args, payload, lines)
        return 0 if agree else 1
    method = KlMethod(args.method or "defining")
    poly = kl_by_method(lat, method)
    _emit(args, {"kl": _poly_json(poly), "method": method.value},
          [format_polynomial(poly.coeffs)])
    return 0


def _parse_profile(text):
    if not text:
        raise UsageError("--profile required (comma-separated coranks, e.g. 2,1)")
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"bad profile {text!r}")


# ---------------------------------------------------------------------------
# verify


def _suite_palindrome(args):
    checks = []
    corpus = (corpus_mod.small_corpus() if args.corpus == "small"
              else corpus_mod.acceptance_corpus())
    for label, spec in corpus:
        lat = enumerate_flats(spec)
        z = z_polynomial(lat)
        checks.append({"name": f"palindrome:{label}",
                       "pass": is_palindromic(z, lat.rk_total)})
    dmax = args.dmax if args.dmax is not None else 40
    for family in (BRAID, TYPE_B, uniform_family(1), qvec_family(2)):
        tables = build_tables(family, dmax)
        ok = all(is_palindromic(z_family(tables, d), d) for d in range(dmax + 1))
        checks.append({"name": f"palindrome:{family}:d<={dmax}", "pass": ok})
    return checks


def _suite_crossmethod(args):
    checks = []
    corpus = (corpus_mod.small_corpus() if args.corpus == "small"
              else corpus_mod.acceptance_corpus())
    for label, spec in corpus:
        lat = enumerate_flats(spec)
        polys = {m: kl_by_method(lat, m) for m in KlMethod}
        ok = len({tuple(p.coeffs) for p in polys.values()}) == 1
        checks.append({"name": f"crossmethod:{label}", "pass": ok})
    return checks


def _suite_narayana(args):
    dmax = args.dmax if args.dmax is not None else 12
    tables = build_tables(uniform_family(1), dmax)
    checks = []
    for d in range(dmax + 1):
        z = z_family(tables, d)
        ok = all(z.coefficient(i) == narayana(d + 1, i + 1) for i in range(d + 1))
        checks.append({"name": f"narayana:d={d}", "pass": ok})
    return checks


def _suite_gaussian(args):
    dmax = args.dmax if args.dmax is not None else 10
    checks = []
    for q in (2, 3, 4, 5):
        tables = build_tables(qvec_family(q), dmax)
        ok = all(z_family(tables, d).coefficient(i) == gaussian_binomial(d, i, q)
                 for d in range(dmax + 1) for i in range(d + 1))
        checks.append({"name": f"gaussian:q={q}:d<={dmax}", "pass": ok})
    return checks


def _suite_qshift(args):
    dmax = args.dmax if args.dmax is not None else 10
    return [{"name": f"qshift:q={q}:d<={dmax}", "pass": q_shift_check(q, dmax)}
            for q in (2, 3, 4, 5)]


def _sweep_checks(args, which):
    dmax = args.dmax if args.dmax is not None else 20
    family = parse_family(args.family) if args.family else BRAID
    rows = conjecture_sweep(family, dmax, threads=_threads(),
                            include_certificates=args.certificates)
    checks = []
    for row in rows:
        if which == "roots":
            ok = row["negative_real_rooted"]
        else:
            ok = row["interlace"] in ("strict", "weak")
        check = {"name": f"{which}:{family}:d={row['d']}", "pass": ok,
                 "millis": round(row["millis"], 3)}
        if "certificate" in row:
            check["certificate"] = row["certificate"]
        checks.append(check)
    return checks


def _suite_logconcave(args):
    dmax = args.dmax if args.dmax is not None else 20
    families = ([parse_family(args.family)] if args.family else
                [BRAID, TYPE_B, uniform_family(1), uniform_family(2), qvec_family(2)])
    checks = []
    for family in families:
        tables = build_tables(family, dmax)
        ok = all(is_log_concave(z_family(tables, d)) for d in range(dmax + 1))
        checks.append({"name": f"logconcave:{family}:d<={dmax}", "pass": ok})
    return checks


def _suite_schur(args):
    checks = []
    expected = h_to_schur(equivariant_c_uniform(1, 3, 1))
    checks.append({"name": "schur:c(U_{1,3},1)=s[2,2]",
                   "pass": expected.terms == {(2, 2): 1}})
    ok_dim = True
    ok_pos = True
    for m in (1, 2, 3):
        for d in range(2, 7):
            tables = build_tables(uniform_family(m), d)
            for i in range(1, (d + 1) // 2):
                f = equivariant_c_uniform(m, d, i)
                if dimension(f, m + d) != kl_family(tables, d).coefficient(i):
                    ok_dim = False
                if m + d <= 12 and not is_schur_positive(f):
                    ok_pos = False
    checks.append({"name": "schur:dimension-shadow", "pass": ok_dim})
    checks.append({"name": "schur:positivity", "pass": ok_pos})
    lat = enumerate_flats(lattice_spec(uniform_family(1), 3))
    table = equivariant_c_character(lat, PermGroup.symmetric(4), 1)
    checks.append({"name": "schur:character-identity",
                   "pass": table.at_identity() == kl_coeff_closed(lat, 1)})
    return checks


def _suite_series(args):
    order_braid = args.order if args.order is not None else 12
    order_typeb = args.order if args.order is not None else 10
    return [
        {"name": f"series:braid:order={order_braid}",
         "pass": series_identity_check(BRAID, order_braid)},
        {"name": f"series:typeb:order={order_typeb}",
         "pass": series_identity_check(TYPE_B, order_typeb)},
    ]


def cmd_verify(args) -> int:
    suite = args.suite
    if suite not in SUITES:
        print(f"unknown suite {suite!r}; available: {', '.join(SUITES)}",
              file=sys.stderr)
        return 2
    runner = {
        "palindrome": _suite_palindrome,
        "crossmethod": _suite_crossmethod,
        "narayana": _suite_narayana,
        "gaussian": _suite_gaussian,
        "qshift": _suite_qshift,
        "roots": lambda a: _sweep_checks(a, "roots"),
        "interlace": lambda a: _sweep_checks(a, "interlace"),
        "logconcave": _suite_logconcave,
        "schur": _suite_schur,
        "series": _suite_series,
    }[suite]
    checks = runner(args)
    ok = all(c["pass"] for c in checks)
    report = {"suite": suite, "pass": ok, "checks": checks}
    print(json.dumps(report, indent=2))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bench


def _checksum(poly: IntPolynomial) -> str:
    blob = ",".join(str(c) for c in poly.coeffs).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def cmd_bench(args) -> int:
    family = parse_family(args.family)
    d = args.d
    reps = args.reps
    tables = build_tables(family, d)

    rows = []
    times = []
    for _ in range(max(1, reps)):
        fresh = build_tables(family, d)
        t0 = time.perf_counter()
        fast = kl_family(fresh, d)
        times.append((time.perf_counter() - t0) * 1000.0)
    rows.append({"method": "family-recursion", "d": d,
                 "millis": min(times), "all_millis": [round(t, 3) for t in times],
                 "checksum": _checksum(fast)})

    report = {"family": str(family), "d": d, "rows": rows}
    baseline_flats = sum(tables.W[d][k] for k in range(d + 1))
    if args.fast_only:
        report["baseline"] = "skipped (--fast-only)"
    elif baseline_flats > args.flat_cap:
        report["baseline"] = (f"skipped (lattice would have {baseline_flats} flats, "
                              f"cap {args.flat_cap})")
    else:
        t0 = time.perf_counter()
        lat = enumerate_flats(lattice_spec(family, d), flat_cap=args.flat_cap)
        enum_ms = (time.perf_counter() - t0) * 1000.0
        t0 = time.perf_counter()
        slow = kl_defining(lat)
        slow_ms = (time.perf_counter() - t0) * 1000.0
        agree = slow == fast
        rows.append({"method": "lattice-defining", "d": d, "millis": slow_ms,
                     "enumeration_millis": enum_ms, "flats": lat.n,
                     "checksum": _checksum(slow)})
        report["agree"] = agree
        report["speedup"] = slow_ms / max(min(times), 1e-9)
        if not agree:
            print(json.dumps(report, indent=2))
            return 1
    print(json.dumps(report, indent=2))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zpoly",
        description="Exact Kazhdan-Lusztig and Z-polynomials of matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute a polynomial or Whitney number")
    pc.add_argument("target", choices=("kl", "z", "chi", "whitney", "tables"))
    pc.add_argument("--matroid", help="path to a matroid JSON file")
    pc.add_argument("--matroid-json", help="inline matroid JSON")
    pc.add_argument("--family", help="braid | typeb | uniform:m | qvec:q")
    pc.add_argument("--d", type=int, help="rank within the family")
    pc.add_argument("--profile", help="comma-separated corank profile, e.g. 2,1")
    pc.add_argument("--method", choices=[m.value for m in KlMethod],
                    help="lattice method for kl (default: defining); forces "
                         "lattice enumeration even with --family")
    pc.add_argument("--all-methods", action="store_true",
                    help="run all methods and report agreement")
    pc.add_argument("--format", choices=("plain", "json"), default="plain")
    pc.add_argument("--flat-cap", type=int, default=DEFAULT_FLAT_CAP)
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("suite")
    pv.add_argument("--dmax", type=int)
    pv.add_argument("--order", type=int)
    pv.add_argument("--family")
    pv.add_argument("--corpus", choices=("small", "full"), default="small")
    pv.add_argument("--certificates", action="store_true",
                    help="include isolating-interval certificates in reports")
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="benchmark family recursion vs lattice")
    pb.add_argument("family")
    pb.add_argument("--d", type=int, required=True)
    pb.add_argument("--reps", type=int, default=1)
    pb.add_argument("--fast-only", action="store_true")
    pb.add_argument("--flat-cap", type=int, default=DEFAULT_FLAT_CAP)
    pb.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FlatCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
