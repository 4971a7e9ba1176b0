"""Command-line front-end.

Every subcommand produces deterministic output: exact arithmetic only, no
timestamps, fixed ordering.  Exit codes: 0 success, 1 usage error (bad
flags, grammar, preconditions), 2 computation diagnostic.  With --json the
payload, success or failure, is a single JSON document on stdout; errors
additionally print one machine-parsable line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import braided, cech, geometry, intersect
from .braided import LineBundle, bundle_cohomology, kunneth
from .enumeration import enumerate_h0_monomials, enumerate_hn_monomials
from .errors import ComputationDiagnostic, DomainError, ParseError
from .exponents import PAdicFrac
from .fracpoly import parse as parse_poly

_SUBCOMMANDS = ("h0", "hn", "euler", "bezout-line", "bezout-chi", "kunneth",
                "veronese", "mult", "blowup", "cech-check")


@dataclass
class Config:
    p: int
    grades: int
    json_output: bool
    reduced: bool


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; the contract here is exit 1
    def error(self, message):
        raise _UsageError(message)


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational number: {text!r}")


def _degree(fr: Fraction, p: int) -> PAdicFrac:
    return PAdicFrac.from_fraction(fr, p)


def _build_parser() -> _Parser:
    top = _Parser(prog="perfproj", description=__doc__)
    sub = top.add_subparsers(dest="command", metavar="|".join(_SUBCOMMANDS))

    def common(sp):
        sp.add_argument("--p", type=int, required=True, help="ambient prime")
        sp.add_argument("--grades", type=int, default=4,
                        help="grade horizon (default 4)")
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--reduced", action="store_true",
                        help="count only exact-denominator monomials")

    for name in ("h0", "hn", "euler"):
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--deg", type=_fraction_arg, required=True,
                        help="degree, e.g. 2 or -5/3 (use --deg=-5/3)")
        common(sp)

    sp = sub.add_parser("bezout-line")
    sp.add_argument("--s", type=_fraction_arg, required=True)
    sp.add_argument("--t", type=_fraction_arg, required=True)
    common(sp)

    sp = sub.add_parser("bezout-chi")
    sp.add_argument("--d", type=_fraction_arg, required=True)
    sp.add_argument("--degf", type=int, required=True)
    sp.add_argument("--degg", type=int, required=True)
    common(sp)

    sp = sub.add_parser("kunneth")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--a", type=_fraction_arg, required=True)
    sp.add_argument("--b", type=_fraction_arg, required=True)
    common(sp)

    sp = sub.add_parser("veronese")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    common(sp)

    sp = sub.add_parser("mult")
    sp.add_argument("--f", required=True, help="curve F in x, y")
    sp.add_argument("--g", required=True, help="curve G in x, y")
    common(sp)

    sp = sub.add_parser("blowup")
    sp.add_argument("--f", required=True, help="curve through the origin in x, y")
    common(sp)

    sp = sub.add_parser("cech-check")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--degrees", required=True,
                    help="comma-separated degrees, e.g. --degrees=-3,-1,2")
    sp.add_argument("--i", type=int, required=True,
                    help="max denominator exponent of the weights")
    common(sp)

    return top


# -- table helpers -----------------------------------------------------------------

_MONOMIAL_CAP = 8


def _scaled_tuple(vec, label: int) -> str:
    return "(" + ",".join(str(e.scaled(label)) for e in vec) + ")"


def _monomial_cell(piece) -> str:
    shown = [_scaled_tuple(v, piece.grade) for v in piece.vectors[:_MONOMIAL_CAP]]
    if piece.count > _MONOMIAL_CAP:
        shown.append("...")
    return " ".join(shown)


def _dim_table(dim: braided.BraidedDim, lines: list[str],
               enumerate_rows=None) -> None:
    header = "power of p | monomials | dim" if enumerate_rows else "power of p | dim"
    lines.append(header)
    for j, value in enumerate(dim.grades_list()):
        label = dim.offset + j
        if enumerate_rows:
            piece = enumerate_rows(label)
            cell = _monomial_cell(piece) if piece is not None else ""
            lines.append(f"{label} | {cell} | {value}")
        else:
            lines.append(f"{label} | {value}")


# -- subcommand implementations ------------------------------------------------------

def _run_h0_family(args, cfg: Config, which: str) -> tuple[dict, list[str]]:
    deg = _degree(args.deg, cfg.p)
    bundle = LineBundle(args.n, deg)
    fn = {"h0": braided.h0, "hn": braided.hn_top, "euler": braided.euler}[which]
    dim = fn(bundle, cfg.grades, reduced=cfg.reduced)
    lines: list[str] = []
    enumerate_rows = None
    if which == "h0" and deg.num >= 0:
        enumerate_rows = lambda label: enumerate_h0_monomials(
            args.n, deg.num, label - deg.pexp, cfg.p, reduced=cfg.reduced)
    elif which == "hn" and deg.num < 0:
        enumerate_rows = lambda label: enumerate_hn_monomials(
            args.n, -deg.num, label - deg.pexp, cfg.p, reduced=cfg.reduced)
    _dim_table(dim, lines, enumerate_rows)
    return dim.to_json_dict(), lines


def _run_bezout_line(args, cfg: Config):
    dim = geometry.bezout_line(_degree(args.s, cfg.p), _degree(args.t, cfg.p),
                               cfg.grades, cfg.p)
    lines: list[str] = []
    _dim_table(dim, lines)
    return dim.to_json_dict(), lines


def _run_bezout_chi(args, cfg: Config):
    dim = geometry.bezout_chi(_degree(args.d, cfg.p), args.degf, args.degg,
                              cfg.grades, cfg.p)
    lines: list[str] = []
    _dim_table(dim, lines)
    return dim.to_json_dict(), lines


def _run_kunneth(args, cfg: Config):
    bundle_a = LineBundle(args.n, _degree(args.a, cfg.p))
    bundle_b = LineBundle(args.m, _degree(args.b, cfg.p))
    out = kunneth(bundle_cohomology(bundle_a, cfg.grades),
                  bundle_cohomology(bundle_b, cfg.grades), cfg.grades)
    payload = {
        "p": cfg.p,
        "factors": {"n": args.n, "a": str(bundle_a.degree),
                    "m": args.m, "b": str(bundle_b.degree)},
        "cohomology": [dim.to_json_dict() for dim in out],
    }
    lines = []
    for idx, dim in enumerate(out):
        lines.append(f"h^{idx}: " + " ".join(str(v) for v in dim.window(0, cfg.grades)))
    return payload, lines


def _run_veronese(args, cfg: Config):
    maps = [geometry.veronese(args.n, args.d, i, cfg.p) for i in range(cfg.grades)]
    payload = {
        "n": args.n,
        "d": args.d,
        "p": cfg.p,
        "tower": [{"grade": v.grade, "target_dim": v.target_dim,
                   "monomials": v.coordinate_strings()} for v in maps],
    }
    lines = []
    for v in maps:
        lines.append(f"grade {v.grade}: P^{v.target_dim} {v.bracket()}")
    return payload, lines


def _run_mult(args, cfg: Config):
    f = parse_poly(args.f, 2, cfg.p)
    g = parse_poly(args.g, 2, cfg.p)
    tup = intersect.braided_multiplicity(f, g, cfg.grades)
    payload = tup.to_json_dict()
    lines = ["grade | diagonal | mixed row (F-power first)"]
    diag = tup.diagonal
    for i in range(cfg.grades + 1):
        row = " ".join(str(v) for v in tup.flattened_row(i))
        lines.append(f"{i} | {diag.at(i)} | {row}")
    return payload, lines


def _run_blowup(args, cfg: Config):
    f = parse_poly(args.f, 2, cfg.p)
    charts = geometry.blowup_origin(f)
    payload = {"p": cfg.p, "curve": f.render(),
               "charts": [c.to_json_dict() for c in charts]}
    lines = []
    for c in charts:
        lines.append(f"chart {c.chart}=1 ({c.relation}):")
        lines.append(f"  extracted: {c.extracted}")
        lines.append(f"  transformed: {c.transformed.render(c.names)}")
        if c.exceptional.empty:
            lines.append(f"  exceptional: empty (witness {c.exceptional.constraint})")
        else:
            suffix = f" point {c.exceptional.point}" if c.exceptional.point else ""
            lines.append(f"  exceptional: {c.exceptional.constraint}{suffix}")
    return payload, lines


def _run_cech_check(args, cfg: Config):
    degrees = [_degree(_fraction_arg(part), cfg.p)
               for part in args.degrees.split(",") if part]
    report = cech.verify_theorems(args.n, degrees, args.i, cfg.p)
    payload = report.to_json_dict()
    lines = ["degree | weights | h0 | middle | hn | ok"]
    for s in report.per_degree:
        lines.append(f"{s.degree} | {s.weights_checked} | {s.h0_total} | "
                     f"{s.middle_total} | {s.hn_total} | {'yes' if s.ok else 'NO'}")
    lines.append(f"counterexamples: {len(report.counterexamples)}")
    return payload, lines


_DISPATCH = {
    "h0": lambda a, c: _run_h0_family(a, c, "h0"),
    "hn": lambda a, c: _run_h0_family(a, c, "hn"),
    "euler": lambda a, c: _run_h0_family(a, c, "euler"),
    "bezout-line": _run_bezout_line,
    "bezout-chi": _run_bezout_chi,
    "kunneth": _run_kunneth,
    "veronese": _run_veronese,
    "mult": _run_mult,
    "blowup": _run_blowup,
    "cech-check": _run_cech_check,
}


def _emit_error(kind: str, message: str, json_mode: bool, out, err) -> None:
    print(f"error: {kind}: {message}", file=err)
    if json_mode:
        print(json.dumps({"error": {"category": kind, "message": message}}),
              file=out)


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    json_mode = "--json" in argv
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required")
        cfg = Config(p=args.p, grades=args.grades,
                     json_output=args.json, reduced=args.reduced)
        if cfg.grades < 1:
            raise _UsageError("--grades must be at least 1")
        payload, lines = _DISPATCH[args.command](args, cfg)
    except (_UsageError, ParseError, DomainError) as exc:
        _emit_error("usage", str(exc), json_mode, out, err)
        return 1
    except ComputationDiagnostic as exc:
        _emit_error("computation", str(exc), json_mode, out, err)
        return 2
    if cfg.json_output:
        print(json.dumps(payload), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
