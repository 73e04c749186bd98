"""Command-line front end. Every command prints one JSON report.

Exit codes: 0 holds/proven/ok, 1 fails/refuted, 2 unknown, 64 usage, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .certifier import (
    DEFAULT_NTF_BOUND,
    DEFAULT_SPP_BOUND,
    Status,
    certify_ntf,
    cc_filter,
    check_ntf_bounded,
    check_packing,
    check_persistence,
    check_spp,
)
from .clutter import clutter_of, edge_ideal
from .core import (
    colon,
    contraction,
    deletion,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
)
from .decomposition import alexander_dual, associated_primes, minimal_primes, symbolic_power
from .enumerate import PROPERTIES, batch_check, canonical_form, default_jobs, enumerate_clutters
from .repro import CASES, run_cases
from .textio import ParseError, parse_clutter, parse_ideal

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

OPS = ("sum", "product", "power", "intersect", "colon", "delete", "contract", "sympower", "ass", "minprimes", "dual")
_STATUS_EXIT = {Status.HOLDS: EXIT_OK, Status.FAILS: EXIT_FAILS, Status.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--vars", type=int, help="number of variables (default: largest index used)")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mik", description="Exact monomial-ideal arithmetic and property checks.")
    parser.add_argument("--version", action="version", version=f"mik {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    op = sub.add_parser("op", help="ideal operations")
    op.add_argument("name", choices=OPS)
    op.add_argument("--ideal", required=True)
    op.add_argument("--ideal2", help="second ideal for sum/product/intersect/colon")
    op.add_argument("--k", type=int, help="exponent for power/sympower")
    op.add_argument("--index", type=int, help="variable index for delete/contract")
    _common(op)

    check = sub.add_parser("check", help="bounded property checks")
    check.add_argument("property", choices=("spp", "persistence", "ntf", "packing"))
    _input_args(check)
    check.add_argument("--max-power", type=int, help="power bound (default 3 for spp/persistence, 4 for ntf)")
    _common(check)

    cert = sub.add_parser("certify", help="prove or refute normal torsion-freeness")
    cert.add_argument("property", choices=("ntf",))
    _input_args(cert)
    cert.add_argument("--max-power", type=int, default=DEFAULT_NTF_BOUND, help="bound for the fallback search")
    cert.add_argument("--depth", type=int, help="recursion depth (default: number of variables)")
    cert.add_argument("--l-max", type=int, help="largest power tried by the witness search")
    _common(cert)

    filt = sub.add_parser("filter", help="minimal-counterexample filter")
    filt.add_argument("kind", choices=("cc",))
    _input_args(filt)
    filt.add_argument("--max-power", type=int, default=DEFAULT_NTF_BOUND)
    filt.add_argument("--depth", type=int)
    filt.add_argument("--l-max", type=int)
    _common(filt)

    en = sub.add_parser("enumerate", help="list clutters or sweep a property over all of them")
    en.add_argument("--n", type=int, required=True, help="number of vertices (1..6)")
    en.add_argument("--property", choices=PROPERTIES, help="sweep this property; omit to list clutters")
    en.add_argument("--max-power", type=int)
    en.add_argument("--jobs", type=int, help="worker processes (MIK_JOBS overrides)")
    en.add_argument("--timeout", type=float, help="per-instance time limit in seconds")
    en.add_argument("--iso", action="store_true", help="list one clutter per isomorphism class")
    en.add_argument("--out")

    rp = sub.add_parser("repro", help="run the golden reproduction suite")
    rp.add_argument("--case", action="append", choices=sorted(CASES), help="run only this case (repeatable)")
    rp.add_argument("--long", action="store_true", help="include the long sweeps")
    rp.add_argument("--out")
    return parser


def _input_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideal")
    g.add_argument("--clutter", help='edges such as "{1,2},{2,3}"')


def _read_ideal(args, text=None):
    return parse_ideal(args.ideal if text is None else text, vars=args.vars)


def _read_input(args):
    """Return ``(ideal, clutter_or_None)``."""
    if args.clutter is not None:
        C = parse_clutter(args.clutter, args.vars)
        return edge_ideal(C), C
    return _read_ideal(args), None


def _need(value, flag: str, what: str):
    if value is None:
        raise UsageError(f"{what} needs {flag}")
    return value


def _cmd_op(args) -> tuple:
    I = _read_ideal(args)
    name = args.name
    params: dict = {}
    if name in ("sum", "product", "intersect", "colon"):
        text2 = _need(args.ideal2, "--ideal2", name)
        if args.vars is None:
            # one shared ambient: the larger of the two inferred ones
            J = parse_ideal(text2)
            n = max(I.ambient, J.ambient)
            I, J = parse_ideal(args.ideal, vars=n), parse_ideal(text2, vars=n)
        else:
            J = parse_ideal(text2, vars=args.vars)
        params["ideal2"] = str(J)
        fn = {"sum": ideal_sum, "product": ideal_product, "intersect": ideal_intersect, "colon": colon}[name]
        result = fn(I, J)
    elif name in ("power", "sympower"):
        k = _need(args.k, "--k", name)
        params["k"] = k
        result = ideal_power(I, k) if name == "power" else symbolic_power(I, k)
    elif name in ("delete", "contract"):
        i = _need(args.index, "--index", name)
        params["index"] = i
        result = deletion(I, i) if name == "delete" else contraction(I, i)
    elif name == "dual":
        result = alexander_dual(I)
    else:
        primes = associated_primes(I) if name == "ass" else minimal_primes(I)
        return EXIT_OK, {"input": str(I), "vars": I.ambient, "parameters": params,
                         "result": [list(p.vars) for p in primes]}
    return EXIT_OK, {"input": str(I), "vars": I.ambient, "parameters": params,
                     "result": str(result), "generators": len(result.gens)}


def _cmd_check(args) -> tuple:
    I, C = _read_input(args)
    prop = args.property
    if prop == "packing":
        v = check_packing(C if C is not None else clutter_of(I))
        bound = None
    else:
        bound = args.max_power or (DEFAULT_NTF_BOUND if prop == "ntf" else DEFAULT_SPP_BOUND)
        fn = {"spp": check_spp, "persistence": check_persistence, "ntf": check_ntf_bounded}[prop]
        v = fn(I, bound)
    report = {"input": str(I), "vars": I.ambient, "parameters": {"max_power": bound}, "verdict": v.to_dict()}
    return _STATUS_EXIT[v.status], report


def _cmd_certify(args) -> tuple:
    I, _ = _read_input(args)
    verdict, cert = certify_ntf(I, depth=args.depth, power_bound=args.max_power, l_max=args.l_max)
    report = {
        "input": str(I),
        "vars": I.ambient,
        "parameters": {"max_power": args.max_power, "depth": args.depth, "l_max": args.l_max},
        "verdict": verdict.to_dict(),
        "certificate": cert.to_dict(),
    }
    return _STATUS_EXIT[verdict.status], report


def _cmd_filter(args) -> tuple:
    I, C = _read_input(args)
    C = C if C is not None else clutter_of(I)
    r = cc_filter(C, l_max=args.l_max, power_bound=args.max_power, depth=args.depth)
    report = {
        "input": str(C),
        "vars": C.vertices,
        "parameters": {"max_power": args.max_power, "depth": args.depth, "l_max": args.l_max},
        "result": r.to_dict(),
    }
    if not r.candidate:
        code = EXIT_OK
    elif r.reason == "unresolved":
        code = EXIT_UNKNOWN
    else:
        code = EXIT_FAILS
    return code, report


def _cmd_enumerate(args) -> tuple:
    if args.property is None:
        clutters = list(enumerate_clutters(args.n))
        if args.iso:
            seen: dict = {}
            for C in clutters:
                seen.setdefault(canonical_form(C), None)
            clutters = list(seen)
        return EXIT_OK, {"parameters": {"n": args.n, "iso": args.iso}, "count": len(clutters),
                         "clutters": [str(C) for C in clutters]}
    jobs = default_jobs() if args.jobs is None or os.environ.get("MIK_JOBS") else args.jobs
    r = batch_check(args.n, args.property, args.max_power, jobs=jobs, timeout=args.timeout)
    report = {"parameters": {"n": args.n, "property": args.property, "max_power": r.bound,
                             "jobs": jobs, "timeout": args.timeout}, "result": r.to_dict()}
    if r.fails:
        code = EXIT_FAILS
    elif r.tallies["unknown"]:
        code = EXIT_UNKNOWN
    else:
        code = EXIT_OK
    return code, report


def _cmd_repro(args) -> tuple:
    results = run_cases(args.case, long=args.long)
    ok = all(r.passed for r in results)
    report = {"parameters": {"cases": [r.name for r in results], "long": args.long},
              "passed": ok, "results": [r.to_dict() for r in results]}
    return (EXIT_OK if ok else EXIT_FAILS), report


_COMMANDS = {
    "op": _cmd_op,
    "check": _cmd_check,
    "certify": _cmd_certify,
    "filter": _cmd_filter,
    "enumerate": _cmd_enumerate,
    "repro": _cmd_repro,
}


def _emit(report: dict, out) -> None:
    text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_command(argv=None) -> tuple:
    """Parse ``argv`` and run it; returns ``(exit_code, report_dict)``."""
    return _run(build_parser().parse_args(argv))


def _run(args) -> tuple:
    start = time.perf_counter()
    base = {"schema_version": SCHEMA_VERSION, "command": _command_name(args)}
    try:
        code, body = _COMMANDS[args.command](args)
    except ParseError as exc:
        code, body = EXIT_PARSE, {"error": "parse", "message": str(exc), "position": exc.position}
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        code, body = EXIT_USAGE, {"error": "usage", "message": str(exc)}
    report = {**base, **body, "duration_ms": round((time.perf_counter() - start) * 1000, 3)}
    return code, report


def _command_name(args) -> str:
    parts = [args.command]
    for attr in ("name", "property", "kind"):
        v = getattr(args, attr, None)
        if isinstance(v, str) and args.command != "enumerate":
            parts.append(v)
    return " ".join(parts)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report = _run(args)
    _emit(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
