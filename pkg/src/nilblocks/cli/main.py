"""Command-line front end.

    nilblocks zeta --curve FILE
    nilblocks volume --curve FILE --n N
    nilblocks integral --curve FILE --n N --d D --e E --degD K
    nilblocks psi --curve FILE --n N --d D --e E --degD K [--range A B]
    nilblocks check-identities --n N --seed S

Reports are JSON on standard output.  Exit status is 0 on success, 2 on a
usage or input-file error and 1 when a mathematical check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ..curvezeta import CurveZeta, InconsistentCurve, vol_gl, ztilde_dD
from ..evaluator import (
    DegenerateDirection,
    GenericDirection,
    IntegralQuery,
    NonRationalLimit,
    NotCoprime,
    integral_value,
    psi_at_one,
    q_power,
    siegel_value,
    volume_factor,
)
from ..exactmath import PoleAtOne, RadicalRational, squarefree_split
from .suites import run_suites


class UsageError(Exception):
    pass


class CurveFileError(Exception):
    pass


class CheckFailed(Exception):
    """A mathematical invariant did not hold."""

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant
        self.detail = detail


# ------------------------------------------------------------- serialization


def fmt(x) -> object:
    """Exact values as strings "p/q"; values with a sqrt(q) part as a two-field object."""
    if isinstance(x, RadicalRational):
        if not x.is_rational():
            raise ValueError(f"use sqrtq_object for {x!r}")
        return str(x.to_rational())
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return x


def sqrtq_object(x: RadicalRational, q: int) -> object:
    """a + b*sqrt(q) as "a", or as {"rational": a, "sqrtq_coeff": b} when b != 0."""
    if x.is_rational():
        return str(x.to_rational())
    s, f = squarefree_split(q)
    if set(x.terms) - {1, s}:
        raise ValueError(f"{x!r} is not of the form a + b sqrt({q})")
    return {"rational": str(x.terms.get(1, Fraction(0))), "sqrtq_coeff": str(x.terms[s] / f)}


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def render_text(report: dict) -> str:
    rows: list[tuple[str, str]] = []

    def walk(prefix: str, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            rows.append((prefix, json.dumps(value) if isinstance(value, (list, bool)) or value is None else str(value)))

    walk("", report)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


# ---------------------------------------------------------------- curve files


def load_curve(path: str | Path) -> CurveZeta:
    """Read {"q", "genus"} plus either "counts" or "numerator" (rational strings, low degree first)."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise CurveFileError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{path}: invalid JSON ({exc})")
    if not isinstance(data, dict):
        raise CurveFileError(f"{path}: expected a JSON object")
    for key in ("q", "genus"):
        if not isinstance(data.get(key), int) or isinstance(data.get(key), bool):
            raise CurveFileError(f"{path}: field {key!r} must be an integer")
    unknown = set(data) - {"q", "genus", "counts", "numerator"}
    if unknown:
        raise CurveFileError(f"{path}: unknown fields {sorted(unknown)}")
    if "counts" in data and "numerator" in data:
        raise CurveFileError(f"{path}: give either 'counts' or 'numerator', not both")
    q, genus = data["q"], data["genus"]
    if genus < 0:
        raise CurveFileError(f"{path}: genus must be nonnegative")
    if "numerator" in data:
        try:
            coeffs = [parse_rational(str(c)) for c in data["numerator"]]
        except (ValueError, ZeroDivisionError):
            raise CurveFileError(f"{path}: numerator entries must be rationals 'p/q'")
        return CurveZeta.from_numerator(q, genus, coeffs)
    counts = data.get("counts", [])
    if not isinstance(counts, list) or not all(isinstance(c, int) for c in counts):
        raise CurveFileError(f"{path}: 'counts' must be a list of integers")
    if genus > 0 and not counts:
        raise CurveFileError(f"{path}: a curve of genus {genus} needs 'counts' or 'numerator'")
    return CurveZeta.from_point_counts(q, genus, counts)


# ------------------------------------------------------------------ commands


def _query(args) -> IntegralQuery:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.d < 1 or args.n % args.d:
        raise UsageError(f"--d {args.d} must be a positive divisor of --n {args.n}")
    return IntegralQuery(load_curve(args.curve), args.degD, args.n, args.d, args.e)


def _direction(args, r: int) -> GenericDirection:
    return GenericDirection.default(r, args.direction_salt)


def cmd_zeta(args) -> dict:
    curve = load_curve(args.curve)
    factors = {
        "class_number": curve.class_number,
        "point_counts": curve.point_counts(3),
        "vol_gl_1": vol_gl(curve, 1),
    }
    if args.d is not None:
        factors[f"ztilde_at_one_d{args.d}"] = ztilde_dD(curve, args.d, args.degD or 0)(Fraction(1))
    return {
        "inputs": {"curve": str(args.curve), "q": curve.q, "genus": curve.genus},
        "value": list(curve.numerator.coeffs),
        "factors": factors,
        "checks": {"functional_equation": True},
    }


def cmd_volume(args) -> dict:
    curve = load_curve(args.curve)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return {
        "inputs": {"curve": str(args.curve), "n": args.n},
        "value": siegel_value(curve, args.n),
        "factors": {"vol_gl_1": vol_gl(curve, 1)},
        "checks": {},
    }


def cmd_integral(args) -> dict:
    query = _query(args)
    direction = _direction(args, query.r)
    result = integral_value(query, direction)
    twice = query.n * (query.n - query.d) * query.degD
    checks = {"psi_rational": True, "q_power_integral": twice % 2 == 0}
    if query.d == query.n:
        siegel = siegel_value(query.curve, query.n)
        if siegel != result.value:
            raise CheckFailed("siegel-consistency", f"{result.value} != {siegel}")
        checks["siegel_consistency"] = True
    return {
        "inputs": _inputs(args, query),
        "value": result.value,
        "factors": {
            "psi_at_one": result.psi_at_one,
            "volume_factor": result.volume_factor,
            "q_power": sqrtq_object(q_power(query.curve.q, twice), query.curve.q),
            "direction": list(direction.b),
        },
        "checks": checks,
    }


def cmd_psi(args) -> dict:
    query = _query(args)
    direction = _direction(args, query.r)
    if args.range:
        start, stop = args.range
        values = {}
        for e in range(start, stop):
            q = IntegralQuery(query.curve, query.degD, query.n, query.d, e)
            values[str(e)] = psi_at_one(q, direction, args.method)
        value = values
    else:
        value = psi_at_one(query, direction, args.method)
    return {
        "inputs": _inputs(args, query) | ({"range": list(args.range)} if args.range else {}),
        "value": value,
        "factors": {"direction": list(direction.b), "volume_factor": volume_factor(query.curve, query.n, query.d)},
        "checks": {"pole_free": True, "rational": True},
    }


def cmd_check_identities(args) -> dict:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    suites = run_suites(args.n, args.seed)
    passed = all(s["passed"] for s in suites)
    report = {
        "inputs": {"n": args.n, "seed": args.seed},
        "value": passed,
        "factors": {},
        "checks": {f"{s['module']}.{s['identity']}": s["passed"] for s in suites},
        "passed": passed,
        "suites": suites,
    }
    if not passed:
        bad = suites[-1]
        report["error"] = {
            "kind": "CheckFailed",
            "invariant": f"{bad['module']}.{bad['identity']}",
            "message": bad["counterexample"],
        }
    return report


def _inputs(args, query: IntegralQuery) -> dict:
    return {
        "curve": str(args.curve),
        "n": query.n,
        "d": query.d,
        "e": query.e,
        "degD": query.degD,
        "direction_salt": args.direction_salt,
    }


COMMANDS = {
    "zeta": cmd_zeta,
    "volume": cmd_volume,
    "integral": cmd_integral,
    "psi": cmd_psi,
    "check-identities": cmd_check_identities,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilblocks", description="Exact nilpotent integrals for regular-by-blocks orbits.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, curve=True):
        if curve:
            p.add_argument("--curve", required=True, help="curve JSON file")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--timing", action="store_true", help="report elapsed_ms (off by default for reproducible output)")

    def query_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--degD", type=int, required=True)
        p.add_argument("--direction-salt", type=int, default=0)

    p = sub.add_parser("zeta", help="numerator, point counts and class number")
    common(p)
    p.add_argument("--d", type=int)
    p.add_argument("--degD", type=int)

    p = sub.add_parser("volume", help="Siegel volume for GL(n)")
    common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("integral", help="value of the nilpotent integral")
    common(p)
    query_flags(p)

    p = sub.add_parser("psi", help="the regular value Psi(1)")
    common(p)
    query_flags(p)
    p.add_argument("--method", choices=("series", "rational"), default="series")
    p.add_argument("--range", type=int, nargs=2, metavar=("START", "STOP"), help="sweep e over START..STOP-1")

    p = sub.add_parser("check-identities", help="randomized identity suites")
    common(p, curve=False)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute one command; return (exit status, serialized report)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return 2, json.dumps({"error": {"kind": "UsageError", "message": str(exc)}})
    start = time.perf_counter()
    status = 0
    try:
        report = COMMANDS[args.command](args)
        if report.get("passed") is False:
            status = 1
    except (UsageError, CurveFileError) as exc:
        status, report = 2, {"error": {"kind": type(exc).__name__, "message": str(exc)}}
    except CheckFailed as exc:
        status, report = 1, {"error": {"kind": "CheckFailed", "invariant": exc.invariant, "message": exc.detail}}
    except PoleAtOne as exc:
        status, report = 1, {"error": {"kind": "PoleAtOne", "invariant": "Psi has no pole at t = 1", "message": str(exc)}}
    except NonRationalLimit as exc:
        status, report = 1, {"error": {"kind": "NonRationalLimit", "invariant": "Psi(1) is rational", "message": str(exc)}}
    except NotCoprime as exc:
        status, report = 1, {"error": {"kind": "NotCoprime", "invariant": "gcd(e, n/d) = 1", "message": str(exc)}}
    except InconsistentCurve as exc:
        status, report = 1, {"error": {"kind": "InconsistentCurve", "invariant": "curve zeta functional equation", "message": str(exc)}}
    except DegenerateDirection as exc:
        status, report = 1, {"error": {"kind": "DegenerateDirection", "invariant": "generic direction", "message": str(exc)}}
    report = {"command": args.command, **report}
    report.setdefault("elapsed_ms", None)
    if args.timing:
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    report = fmt(report)
    if args.format == "text":
        return status, render_text(report)
    return status, json.dumps(report, indent=2)


def main(argv: Sequence[str] | None = None) -> int:
    status, text = run(argv)
    print(text)
    if status:
        print(f"nilblocks: failed with status {status}; see the error field of the report", file=sys.stderr)
    return status
