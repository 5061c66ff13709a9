"""Command-line front end.

Subcommands: gen (terms via one or all routes), bfile (OEIS b-file export),
verify-oeis (bundled fixture recomputation), identities (identity registry),
cipher (demonstration XOR stream cipher; NOT secure), period (keystream
period scan).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import multiprocessing
import sys
from pathlib import Path

from .convolved import ROUTES, _shared_oracle, all_route_terms, route_terms
from .identities import _run_default_check, default_registry, RegistryReport
from .keystream import StreamParams, find_period, observed_period, vernam
from .oeis import (
    FixtureResult,
    bundled_fixture_path,
    load_fixture_file,
    read_bfile,
    verify_fixture,
    write_bfile,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3

#: Guardrail on term counts; the sequences grow exponentially, so a runaway
#: n-max would happily eat the machine. Overridable with --limit.
DEFAULT_LIMIT = 10_000


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _check_limit(args, n_max: int) -> None:
    if n_max > args.limit:
        raise UsageError(f"n-max {n_max} exceeds guardrail --limit {args.limit}")
    if n_max < 1:
        raise UsageError(f"n-max must be >= 1, got {n_max}")


class UsageError(Exception):
    pass


def _gen_terms(args) -> tuple[list[int] | None, dict | None]:
    """Terms for gen/bfile, or a disagreement record when routes split."""
    if args.route == "all":
        per_route = all_route_terms(args.k, args.s, args.n_max, _shared_oracle(args.k))
        reference = per_route["oracle"]
        for index in range(args.n_max):
            values = {route: terms[index] for route, terms in per_route.items()}
            if len(set(values.values())) != 1:
                return None, {"index": index + 1, "values": values}
        return reference, None
    return route_terms(args.route, args.k, args.s, args.n_max, _shared_oracle(args.k)), None


def cmd_gen(args) -> int:
    _check_limit(args, args.n_max)
    terms, disagreement = _gen_terms(args)
    if disagreement is not None:
        payload = {"command": "gen", "error": "route-disagreement", **disagreement}
        lines = [f"route disagreement at n={disagreement['index']}:"]
        lines += [f"  {route}: {value}" for route, value in disagreement["values"].items()]
        _emit(args, payload, lines)
        return EXIT_VERIFY
    payload = {
        "command": "gen", "k": args.k, "s": args.s, "n_max": args.n_max,
        "route": args.route, "terms": terms,
    }
    _emit(args, payload, [" ".join(str(t) for t in terms)])
    return EXIT_OK


def cmd_bfile(args) -> int:
    _check_limit(args, args.n_max)
    terms, disagreement = _gen_terms(args)
    if disagreement is not None:
        print(f"route disagreement at n={disagreement['index']}; not writing", file=sys.stderr)
        return EXIT_VERIFY
    write_bfile(args.out, terms)
    payload = {"command": "bfile", "k": args.k, "s": args.s, "terms": len(terms),
               "out": str(args.out)}
    _emit(args, payload, [f"wrote {len(terms)} terms to {args.out}"])
    return EXIT_OK


def cmd_verify_oeis(args) -> int:
    fixtures = load_fixture_file(args.fixtures)
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(verify_fixture, fixtures)
    else:
        results = [verify_fixture(fixture) for fixture in fixtures]
    results.sort(key=lambda r: r.a_number)
    lines = []
    for result in results:
        if result.passed:
            lines.append(f"PASS {result.a_number} ({result.terms} terms)")
        else:
            lines.append(
                f"FAIL {result.a_number} at n={result.mismatch_index}: "
                f"fixture={result.expected} recomputed={result.recomputed}"
            )
    passed = all(r.passed for r in results)
    payload = {
        "command": "verify-oeis", "passed": passed,
        "results": [
            {"a_number": r.a_number, "terms": r.terms, "passed": r.passed,
             "mismatch_index": r.mismatch_index}
            for r in results
        ],
    }
    _emit(args, payload, lines)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_identities(args) -> int:
    registry = default_registry()
    labels = registry.labels()
    if args.filter:
        labels = [label for label in labels if fnmatch.fnmatch(label, args.filter)]
    overrides = {}
    if args.n_max is not None:
        overrides["n"] = args.n_max
    if args.k_max is not None:
        overrides["k"] = args.k_max
    if args.s_max is not None:
        overrides["s"] = args.s_max
    if args.jobs > 1:
        work = [(label, tuple(overrides.items())) for label in labels]
        with multiprocessing.Pool(args.jobs) as pool:
            report = RegistryReport(results=pool.map(_run_default_check, work))
    else:
        report = registry.run(labels=labels, overrides=overrides)
    _emit(args, {"command": "identities", **report.to_json_dict()}, report.to_lines())
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_cipher(args) -> int:
    params = StreamParams(k=args.k, s=args.s, modulus=256, offset=args.offset)
    data = Path(args.input).read_bytes()
    Path(args.out).write_bytes(vernam(data, params))
    payload = {"command": "cipher", "mode": args.mode, "bytes": len(data),
               "out": str(args.out)}
    _emit(args, payload, [f"{args.mode}: {len(data)} bytes -> {args.out}"])
    return EXIT_OK


def cmd_period(args) -> int:
    if args.s == 0:
        result = find_period(args.k, args.modulus)
    else:
        result = observed_period(StreamParams(k=args.k, s=args.s, modulus=args.modulus))
    payload = {"command": "period", "k": args.k, "s": args.s, "modulus": args.modulus,
               "period": result.period, "preperiod": result.preperiod}
    _emit(args, payload, [f"period={result.period} preperiod={result.preperiod}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsect",
        description=(
            "Exact computations with convolved k-sections of the Fibonacci "
            "sequence: term generation by seven cross-validating routes, an "
            "identity registry, OEIS fixture checks and b-file export, and a "
            "demonstration stream cipher."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_max=False, route=False):
        p.add_argument("--k", type=int, default=1, help="section stride (>= 1)")
        p.add_argument("--s", type=int, default=0, help="convolution order (>= 0)")
        if n_max:
            p.add_argument("--n-max", type=int, required=True, help="number of terms")
            p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                           help=f"guardrail on n-max (default {DEFAULT_LIMIT})")
        if route:
            p.add_argument("--route", choices=ROUTES + ("all",), default="all",
                           help="computation route; 'all' cross-checks every route")
        p.add_argument("--json", action="store_true", help="structured output")

    p_gen = sub.add_parser("gen", help="print terms 1..n-max")
    add_common(p_gen, n_max=True, route=True)
    p_gen.set_defaults(func=cmd_gen)

    p_bfile = sub.add_parser("bfile", help="write an OEIS b-file (cross-checks routes first)")
    add_common(p_bfile, n_max=True, route=True)
    p_bfile.add_argument("--out", required=True, type=Path, help="output path")
    p_bfile.set_defaults(func=cmd_bfile)

    p_verify = sub.add_parser("verify-oeis", help="recompute bundled sequence fixtures")
    p_verify.add_argument("--fixtures", type=Path, default=bundled_fixture_path(),
                          help="fixture file (default: bundled)")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_verify.add_argument("--json", action="store_true", help="structured output")
    p_verify.set_defaults(func=cmd_verify_oeis)

    p_ident = sub.add_parser("identities", help="run the identity registry")
    p_ident.add_argument("--filter", help="glob over check labels, e.g. 'phi*-sum'")
    p_ident.add_argument("--n-max", type=int, help="cap the n range")
    p_ident.add_argument("--k-max", type=int, help="cap the k range")
    p_ident.add_argument("--s-max", type=int, help="cap the s range")
    p_ident.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_ident.add_argument("--json", action="store_true", help="structured output")
    p_ident.set_defaults(func=cmd_identities)

    p_cipher = sub.add_parser(
        "cipher",
        help="XOR a file with the byte keystream (demonstration only)",
        description=(
            "XOR a file with the mod-256 keystream of the chosen sequence. "
            "Encryption and decryption are the same operation. WARNING: this "
            "is a demonstration of keystream generation, NOT a secure cipher; "
            "linear keystreams are trivially predictable."
        ),
    )
    p_cipher.add_argument("mode", choices=("enc", "dec"))
    p_cipher.add_argument("input", help="input file")
    p_cipher.add_argument("--out", required=True, type=Path, help="output file")
    p_cipher.add_argument("--k", type=int, default=1)
    p_cipher.add_argument("--s", type=int, default=0)
    p_cipher.add_argument("--offset", type=int, default=1, help="starting term index")
    p_cipher.add_argument("--json", action="store_true", help="structured output")
    p_cipher.set_defaults(func=cmd_cipher)

    p_period = sub.add_parser("period", help="period of the residue stream mod m")
    p_period.add_argument("--k", type=int, default=1)
    p_period.add_argument("--s", type=int, default=0,
                          help="order > 0 uses best-effort observed-state detection")
    p_period.add_argument("--modulus", type=int, required=True)
    p_period.add_argument("--json", action="store_true", help="structured output")
    p_period.set_defaults(func=cmd_period)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
