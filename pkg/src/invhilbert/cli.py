"""Command-line front end.

Partitions are written comma-separated ("3,1"); lists of partitions are
separated by semicolons ("2,1;1").  The global options ``--format``,
``--threads`` and ``--brute-cap`` can also be set through the environment
variables INVHILBERT_FORMAT, INVHILBERT_THREADS and INVHILBERT_BRUTE_CAP;
a flag on the command line wins over the environment.

Exit codes: 0 success, 1 verification mismatch or internal inconsistency,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Optional, Sequence

from . import counting, hilbert
from .characters import character
from .coefficients import iterated_lr, kronecker, kronecker_vector, lr_tableaux
from .errors import ConsistencyError
from .golden import golden_data
from .partitions import enumerate_partitions, format_partition, parse_partition
from .series import FactoredRational, TruncatedSeries
from .zel import ZelElement, parse_monomial, star_product

__all__ = ["main", "run", "golden_data", "build_parser"]

ENV_PREFIX = "INVHILBERT_"
FORMATS = ("json", "csv", "text")


_BIGINT = {"type": "string", "pattern": "^-?[0-9]+$"}

# Shape of every ``--format json`` document.
ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["command", "parameters", "method", "result", "exact"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "method": {"type": "string"},
        "exact": {"const": True},
        "result": {
            "type": "object",
            "required": ["type"],
            "oneOf": [
                {"properties": {"type": {"const": "integer"}, "value": _BIGINT}, "required": ["value"]},
                {"properties": {"type": {"const": "partitions"},
                                "value": {"type": "array", "items": {"type": "string"}}},
                 "required": ["value"]},
                {"properties": {"type": {"const": "decomposition"},
                                "value": {"type": "array", "items": {
                                    "type": "object", "required": ["nu", "coefficient"],
                                    "properties": {"nu": {"type": "string"}, "coefficient": _BIGINT}}}},
                 "required": ["value"]},
                {"properties": {"type": {"const": "zel"}, "degree": {"type": "integer"},
                                "terms": {"type": "array", "items": {
                                    "type": "object", "required": ["monomial", "coefficient"],
                                    "properties": {"monomial": {"type": "array", "items": {"type": "integer"}},
                                                   "coefficient": _BIGINT}}},
                                "text": {"type": "string"}},
                 "required": ["degree", "terms", "text"]},
                {"properties": {"type": {"const": "series"}, "order": {"type": "integer"},
                                "coefficients": {"type": "array", "items": _BIGINT},
                                "rational": {"type": "object",
                                             "required": ["numerator", "denominator"],
                                             "properties": {"numerator": {"type": "array", "items": _BIGINT}}}},
                 "required": ["order", "coefficients"]},
                {"properties": {"type": {"const": "report"}, "passed": {"type": "boolean"},
                                "checks": {"type": "array"}},
                 "required": ["suite", "order", "passed", "first_mismatch", "checks"]},
            ],
        },
    },
}


class UsageError(Exception):
    pass


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _partition_list(text: str):
    return [_partition(t) for t in text.split(";")]


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    """Options accepted both before and after the subcommand.

    Only the top-level copy carries defaults, so a subcommand copy never
    overwrites a value given earlier on the line.
    """
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=FORMATS, help="output format (default json)", **kw)
    p.add_argument("--threads", type=_positive_int,
                   help="worker threads for verification (default: available cores)", **kw)
    p.add_argument("--brute-cap", type=_nonneg_int,
                   help=f"largest n for brute-force f (default {counting.DEFAULT_BRUTE_CAP})", **kw)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invhilbert",
        description="Hilbert functions of matrix invariant rings via symmetric-group combinatorics.",
        epilog="Partitions: comma-separated parts, e.g. 3,1.  Partition lists: semicolon-separated, "
               "e.g. '2;1,1'.  Environment: INVHILBERT_FORMAT, INVHILBERT_THREADS, INVHILBERT_BRUTE_CAP.",
        parents=[_global_options(True)],
    )
    shared = [_global_options(False)]
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("partitions", parents=shared, help="list partitions of n")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--max-rows", type=_positive_int)

    p = sub.add_parser("character", parents=shared, help="character value chi^lambda(rho)")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--rho", type=_partition, required=True)

    p = sub.add_parser("kronecker", parents=shared,
                       help="Kronecker coefficient g(lambda, mu, nu); without --nu, the full decomposition")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition)

    p = sub.add_parser("lr", parents=shared, help="(iterated) Littlewood-Richardson coefficient")
    p.add_argument("--shapes", type=_partition_list, required=True, help="factors, e.g. '2,1;1'")
    p.add_argument("--target", type=_partition, required=True)
    p.add_argument("--method", choices=("characters", "tableaux"), default="characters",
                   help="tableaux needs exactly two shapes")

    p = sub.add_parser("zel", parents=shared, help="Zelevinsky algebra operations")
    zsub = p.add_subparsers(dest="zel_command", required=True, metavar="OP")
    z = zsub.add_parser("star", parents=shared, help="star product of two monomials")
    z.add_argument("--left", required=True, help="monomial indices, e.g. 2,1 for x2*x1")
    z.add_argument("--right", required=True)

    p = sub.add_parser("count", parents=shared, help="margin-constrained matrix counts")
    csub = p.add_subparsers(dest="count_command", required=True, metavar="WHICH")
    c = csub.add_parser("f", parents=shared, help="4x4 matrices: f(i, j, n)")
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--j", type=int, required=True)
    c.add_argument("--n", type=_nonneg_int, required=True)
    c.add_argument("--method", choices=("fast", "brute", "recursion"), default="fast")
    c = csub.add_parser("g", parents=shared, help="4xk matrices: g(i, n)")
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--n", type=_nonneg_int, required=True)
    c.add_argument("--k", type=_positive_int, required=True)
    c.add_argument("--method", choices=("fast", "brute"), default="fast")

    p = sub.add_parser("hilbert", parents=shared, help="Hilbert function terms")
    hsub = p.add_subparsers(dest="hilbert_command", required=True, metavar="RING")
    h = hsub.add_parser("tensor", parents=shared, help="K[End(V (x) W)]^(GL(V) x GL(W))")
    h.add_argument("--dim-v", type=_positive_int, required=True)
    h.add_argument("--dim-w", type=_positive_int, required=True)
    h.add_argument("--terms", type=_nonneg_int, required=True, help="highest degree to compute")
    h.add_argument("--method", choices=("kronecker", "counting", "rational"), default="kronecker")
    h = hsub.add_parser("tuples", parents=shared, help="K[End(W)^k]^GL(W)")
    h.add_argument("--d", type=_positive_int, required=True)
    h.add_argument("--k", type=_positive_int, required=True)
    h.add_argument("--terms", type=_nonneg_int, required=True, help="highest degree to compute")
    h.add_argument("--method", choices=("lr", "counting", "closed-form"), default="lr")

    p = sub.add_parser("verify", parents=shared, help="cross-method verification suites")
    p.add_argument("--suite", choices=hilbert.SUITES + ("all",), required=True)
    p.add_argument("--terms", type=_nonneg_int, required=True, help="order up to which to verify")

    p = sub.add_parser("golden", parents=shared, help="print the embedded reference values")
    return parser


# -- payloads -------------------------------------------------------------------

def _integer(v: int) -> dict:
    return {"type": "integer", "value": str(v)}


def _series(s: TruncatedSeries, rational: Optional[FactoredRational] = None) -> dict:
    out = {"type": "series", **s.to_json()}
    if rational is not None:
        out["rational"] = {**rational.to_json(), "text": str(rational)}
    return out


def _zel(u: ZelElement) -> dict:
    return {
        "type": "zel",
        "degree": u.degree,
        "terms": [{"monomial": list(m), "coefficient": str(c)} for m, c in sorted(u.terms.items(), reverse=True)],
        "text": str(u),
    }


def _execute(args) -> tuple[str, dict, str, dict, bool]:
    """Run the parsed command; returns (command, parameters, method, payload, ok)."""
    cmd = args.command
    if cmd == "partitions":
        parts = enumerate_partitions(args.n, args.max_rows)
        payload = {"type": "partitions", "value": [format_partition(p) for p in parts]}
        return cmd, {"n": args.n, "max_rows": args.max_rows}, "enumeration", payload, True
    if cmd == "character":
        v = character(args.lam, args.rho)
        return cmd, {"lambda": format_partition(args.lam), "rho": format_partition(args.rho)}, \
            "murnaghan-nakayama", _integer(v), True
    if cmd == "kronecker":
        params = {"lambda": format_partition(args.lam), "mu": format_partition(args.mu)}
        if args.nu is not None:
            params["nu"] = format_partition(args.nu)
            return cmd, params, "characters", _integer(kronecker(args.lam, args.mu, args.nu)), True
        n = sum(args.lam)
        if sum(args.mu) != n:
            raise ValueError(f"weights differ: {args.lam}, {args.mu}")
        vec = kronecker_vector(args.lam, args.mu)
        payload = {"type": "decomposition",
                   "value": [{"nu": format_partition(nu), "coefficient": str(g)}
                             for nu, g in zip(enumerate_partitions(n), vec) if g]}
        return cmd, params, "characters", payload, True
    if cmd == "lr":
        params = {"shapes": [format_partition(s) for s in args.shapes], "target": format_partition(args.target)}
        if args.method == "tableaux":
            if len(args.shapes) != 2:
                raise ValueError("the tableaux method takes exactly two shapes")
            v = lr_tableaux(args.shapes[0], args.shapes[1], args.target)
        else:
            v = iterated_lr(args.shapes, args.target)
        return cmd, params, args.method, _integer(v), True
    if cmd == "zel":
        left, right = parse_monomial(args.left), parse_monomial(args.right)
        params = {"left": str(left), "right": str(right)}
        return "zel star", params, "contingency-tables", _zel(star_product(left, right)), True
    if cmd == "count":
        if args.count_command == "f":
            v = counting.f_count(args.i, args.j, args.n, args.method, args.brute_cap)
            params = {"i": args.i, "j": args.j, "n": args.n}
        else:
            v = counting.g_count(args.i, args.n, args.k, args.method)
            params = {"i": args.i, "n": args.n, "k": args.k}
        return f"count {args.count_command}", params, args.method, _integer(v), True
    if cmd == "hilbert":
        if args.hilbert_command == "tensor":
            s = hilbert.tensor_terms(args.terms, args.dim_v, args.dim_w, args.method, args.threads)
            rational = hilbert.tensor_series_22() if args.method == "rational" else None
            params = {"dim_v": args.dim_v, "dim_w": args.dim_w, "terms": args.terms}
        else:
            s = hilbert.tuple_terms(args.terms, args.d, args.k, args.method, args.threads)
            rational = hilbert.tuple_series_closed_form(args.k) if args.method == "closed-form" else None
            params = {"d": args.d, "k": args.k, "terms": args.terms}
        return f"hilbert {args.hilbert_command}", params, args.method, _series(s, rational), True
    if cmd == "verify":
        report = hilbert.verify_suite(args.suite, args.terms, args.threads)
        payload = {"type": "report", **report.to_json()}
        return cmd, {"suite": args.suite, "terms": args.terms}, "cross-check", payload, report.passed
    if cmd == "golden":
        s = TruncatedSeries.from_coeffs(golden_data())
        return cmd, {}, "embedded", _series(s), True
    raise UsageError(f"unknown command {cmd}")


# -- rendering -------------------------------------------------------------------

def _render_text(payload: dict) -> str:
    kind = payload["type"]
    if kind == "integer":
        return payload["value"]
    if kind == "partitions":
        return "\n".join(payload["value"])
    if kind == "decomposition":
        return "\n".join(f"{d['nu']}: {d['coefficient']}" for d in payload["value"])
    if kind == "zel":
        return payload["text"]
    if kind == "series":
        lines = [", ".join(payload["coefficients"])]
        if "rational" in payload:
            lines.append(payload["rational"]["text"])
        return "\n".join(lines)
    lines = []
    for c in payload["checks"]:
        status = "skip" if c["skipped"] else ("pass" if c["passed"] else "FAIL")
        line = f"{status}  {c['name']}  ({c['detail']})"
        if c["mismatch"]:
            m = c["mismatch"]
            line += f"  first mismatch: method={m['method']} n={m['n']} expected={m['expected']} got={m['got']}"
        lines.append(line)
    lines.append("PASSED" if payload["passed"] else "FAILED")
    return "\n".join(lines)


def _render_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    kind = payload["type"]
    if kind == "integer":
        w.writerow(["value"])
        w.writerow([payload["value"]])
    elif kind == "partitions":
        w.writerow(["index", "partition"])
        w.writerows(enumerate(payload["value"]))
    elif kind == "decomposition":
        w.writerow(["nu", "coefficient"])
        w.writerows((d["nu"], d["coefficient"]) for d in payload["value"])
    elif kind == "zel":
        w.writerow(["monomial", "coefficient"])
        w.writerows((",".join(map(str, t["monomial"])), t["coefficient"]) for t in payload["terms"])
    elif kind == "series":
        w.writerow(["degree", "coefficient"])
        w.writerows(enumerate(payload["coefficients"]))
    else:
        w.writerow(["check", "passed", "skipped", "detail", "method", "n", "expected", "got"])
        for c in payload["checks"]:
            m = c["mismatch"] or {}
            w.writerow([c["name"], c["passed"], c["skipped"], c["detail"],
                        m.get("method", ""), m.get("n", ""), m.get("expected", ""), m.get("got", "")])
    return buf.getvalue().rstrip("\n")


def _apply_env_defaults(args) -> None:
    if args.format is None:
        args.format = _env("FORMAT", "json")
        if args.format not in FORMATS:
            raise UsageError(f"{ENV_PREFIX}FORMAT must be one of {', '.join(FORMATS)}")
    try:
        if args.threads is None and _env("THREADS", None) is not None:
            args.threads = _positive_int(_env("THREADS", ""))
        if args.brute_cap is None:
            args.brute_cap = _nonneg_int(_env("BRUTE_CAP", str(counting.DEFAULT_BRUTE_CAP)))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"bad environment override: {exc}") from None


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, execute, print the result; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _apply_env_defaults(args)
        command, params, method, payload, ok = _execute(args)
    except (UsageError, ValueError) as exc:
        # BudgetExceeded is a ValueError too: the request itself is out of bounds
        parser.print_usage(err)
        print(f"invhilbert: error: {exc}", file=err)
        return 2
    except ConsistencyError as exc:
        print(f"invhilbert: internal inconsistency: {exc}", file=err)
        return 1
    if args.format == "json":
        envelope = {"command": command, "parameters": params, "method": method,
                    "result": payload, "exact": True}
        print(json.dumps(envelope, indent=2), file=out)
    elif args.format == "csv":
        print(_render_csv(payload), file=out)
    else:
        print(_render_text(payload), file=out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
