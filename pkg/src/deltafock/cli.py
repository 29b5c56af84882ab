"""Command-line front end: verification suites and CSV/JSON exports.

Exit codes: 0 success, 1 identity failure, 2 usage error.  Rationals are
emitted as numerator/denominator pairs; floats appear only in the states
and limit commands and are printed with 17 significant digits so output
is byte-stable across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import fock, lattice, suites
from .exact import SqrtRational
from .hermite import (
    DeformationParam,
    hermite_classical,
    hermite_delta_closed,
    hermite_delta_rec,
    hermite_limit_table,
)

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def _json_rational(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _sqrt_parts(value: SqrtRational) -> tuple[Fraction, int]:
    """(signed rational part, radicand); radicand 1 for plain rationals."""
    if not value:
        return Fraction(0), 1
    return value.sign * value.rational, value.radicand


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _payload(command: str, s_max: int, data, scale: str | None = None) -> str:
    obj = {
        "command": command,
        "params": {"s_max": s_max, "delta_sq": f"1/{s_max}"},
        "data": data,
    }
    if scale is not None:
        obj["scale"] = scale
    return json.dumps(obj, indent=2) + "\n"


def cmd_hermite(args) -> int:
    params = DeformationParam(args.smax)
    if args.index < 0 or args.index > args.smax:
        raise UsageError(f"index {args.index} outside 0..{args.smax}")
    rec = hermite_delta_rec(params, args.index)
    closed = hermite_delta_closed(params, args.index)
    classical = hermite_classical(args.index)
    if args.format == "json":
        data = [
            {
                "power": p,
                "rec": _json_rational(rec.coeff(p)),
                "closed": _json_rational(closed.coeff(p)),
                "classical": _json_rational(classical.coeff(p)),
            }
            for p in range(args.index + 1)
        ]
        _emit(_payload("hermite", args.smax, data), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["power", "rec_num", "rec_den", "closed_num",
                         "closed_den", "classical"])
        for p in range(args.index + 1):
            r, c, cl = rec.coeff(p), closed.coeff(p), classical.coeff(p)
            assert cl.denominator == 1
            writer.writerow([p, r.numerator, r.denominator,
                             c.numerator, c.denominator, cl.numerator])
        _emit(buf.getvalue(), args.out)
    return 0


def cmd_gram(args) -> int:
    params = DeformationParam(args.smax)
    exact = rec = None
    if args.method in ("exact", "both"):
        exact = fock.gram_exact(params)
    if args.method in ("recurrence", "both"):
        rec = fock.gram_recurrence(params, fock.vacuum_norm_closed(params))
    primary = exact if exact is not None else rec
    scale = "sqrt(s_max/pi)"
    mismatches = 0
    rows = []
    for s in range(args.smax + 1):
        for sp in range(args.smax + 1):
            coeff, radicand = _sqrt_parts(primary.entry(s, sp).coefficient)
            row = {"s": s, "sp": sp, "coeff": coeff, "radicand": radicand}
            if args.method == "both":
                match = exact.entry(s, sp).coefficient == rec.entry(s, sp).coefficient
                mismatches += not match
                row["match"] = match
            rows.append(row)
    if args.format == "json":
        data = []
        for row in rows:
            item = {
                "s": row["s"],
                "sp": row["sp"],
                "coeff": _json_rational(row["coeff"]),
                "radicand": row["radicand"],
            }
            if "match" in row:
                item["match"] = row["match"]
            data.append(item)
        _emit(_payload("gram", args.smax, data, scale=scale), args.out)
    else:
        buf = io.StringIO()
        buf.write(f"# scale={scale}\n")
        writer = csv.writer(buf)
        header = ["s", "sp", "coeff_num", "coeff_den", "radicand"]
        if args.method == "both":
            header.append("match")
        writer.writerow(header)
        for row in rows:
            out = [row["s"], row["sp"], row["coeff"].numerator,
                   row["coeff"].denominator, row["radicand"]]
            if "match" in row:
                out.append("true" if row["match"] else "false")
            writer.writerow(out)
        _emit(buf.getvalue(), args.out)
    return 1 if mismatches else 0


def cmd_verify(args) -> int:
    reports = suites.run_suite(args.suite, args.smax)
    if args.format == "json":
        data = [
            {
                "suite": r.suite,
                "duration_ms": round(r.duration_ms, 3),
                "checks": [
                    {"label": c.label, "status": c.status, "detail": c.detail}
                    for c in r.checks
                ],
            }
            for r in reports
        ]
        _emit(_payload("verify", args.smax, data), args.out)
    else:
        lines = []
        for r in reports:
            lines.extend(r.lines())
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if any(r.failed for r in reports) else 0


def cmd_states(args) -> int:
    if args.samples < 16:
        raise UsageError("need at least 16 sample points")
    params = DeformationParam(args.smax)
    states = fock.build_states(params)
    half_period = float(np.pi) / params.delta_float
    phis = np.linspace(-half_period, half_period, args.samples)
    columns = [fock.state_samples_real(st, phis) for st in states]
    if args.format == "json":
        data = [
            {
                "phi": _fmt_float(phi),
                "values": [_fmt_float(col[i]) for col in columns],
            }
            for i, phi in enumerate(phis)
        ]
        _emit(_payload("states", args.smax, data), args.out)
    else:
        buf = io.StringIO()
        buf.write("# real samples; the per-state phase factor is divided out\n")
        writer = csv.writer(buf)
        writer.writerow(["phi"] + [f"f_{s}" for s in range(args.smax + 1)])
        for i, phi in enumerate(phis):
            writer.writerow([_fmt_float(phi)] + [_fmt_float(col[i]) for col in columns])
        _emit(buf.getvalue(), args.out)
    return 0


def _limit_rows(args) -> tuple[list[str], list[list[str]]]:
    s_max_list = args.smax_list
    if args.quantity == "hermite":
        table = hermite_limit_table(args.index, s_max_list)
        return (["s_max", "max_rel_coeff_error"],
                [[str(m), _fmt_float(e)] for m, e in table])
    if args.quantity == "kernel":
        rows = lattice.continuum_limit_study([(0.0, 0.0), (0.5, 0.0)], s_max_list)
        return (["s_max", "x", "x_prime", "kernel"],
                [[str(r["s_max"]), _fmt_float(r["x"]), _fmt_float(r["x_prime"]),
                  _fmt_float(r["kernel"])] for r in rows])
    if args.quantity == "vacuum_norm":
        return (["s_max", "pi_times_vacuum_norm"],
                [[str(m), _fmt_float(suites.vacuum_norm_times_pi(m))]
                 for m in s_max_list])
    if args.quantity == "gaussian":
        return (["s_max", "max_weight_deviation"],
                [[str(m), _fmt_float(suites.gaussian_weight_deviation(m))]
                 for m in s_max_list])
    raise UsageError(f"unknown quantity {args.quantity!r}")


def cmd_limit(args) -> int:
    if not args.smax_list:
        raise UsageError("need at least one s_max value")
    if any(m < 1 for m in args.smax_list):
        raise UsageError("s_max values must be positive")
    header, rows = _limit_rows(args)
    if args.format == "json":
        data = [dict(zip(header, row)) for row in rows]
        _emit(_payload("limit", min(args.smax_list), data), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        _emit(buf.getvalue(), args.out)
    return 0


def _add_common(parser: argparse.ArgumentParser, smax: bool = True) -> None:
    if smax:
        parser.add_argument("--smax", type=int, required=True,
                            help="deformation parameter: delta^2 = 1/smax")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltafock",
        description="Exact verification and export tool for the deformed "
                    "oscillator algebra, its truncated state ladder, and the "
                    "associated deformed Hermite polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hermite", help="emit one polynomial by both exact routes")
    _add_common(p)
    p.add_argument("--index", type=int, required=True, help="polynomial index s")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("gram", help="emit the exact Gram matrix")
    _add_common(p)
    p.add_argument("--method", choices=("exact", "recurrence", "both"),
                   default="exact")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("--suite", choices=("algebra", "fock", "limits", "all"),
                   default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("states", help="sample the state ladder over one period")
    _add_common(p)
    p.add_argument("--samples", type=int, default=128,
                   help="number of uniformly spaced sample points (>= 16)")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("limit", help="tabulate a contraction-limit trend")
    _add_common(p, smax=False)
    p.add_argument("--quantity", required=True,
                   choices=("hermite", "kernel", "vacuum_norm", "gaussian"))
    p.add_argument("--smax-list", type=int, nargs="+", required=True,
                   metavar="S_MAX")
    p.add_argument("--index", type=int, default=4,
                   help="polynomial index for the hermite quantity")
    p.set_defaults(func=cmd_limit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
