"""``perfectcolor`` command line: factors, analyze, verify, search.

Exit codes
    0  success / forced-two-periodic / constraint holds / configurations found
    1  verify: constraint does not hold
    2  search: none found up to the torus bound
    3  analyze: forced periodic in one direction
    4  analyze: inconclusive
    5  bad input (syntax, files, arguments, torus too small)
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..geometry import convex_hull, edge_pair_directions, is_convex, outer_edge_directions
from ..linefactor import critical_t, fiber_set, line_factor_directions
from ..perfect.grids import GridKind, block, neighborhood
from ..perfect.search import AnyPerfect, Covering, MatrixConstraint, search
from ..perfect.torus import (
    TorusTooSmall,
    abelian_complexity,
    collisions,
    extract_matrix,
    fit_torus,
    minimal_periods,
    pattern_complexity,
    verify_covering,
)
from ..perfect.verdict import VerdictKind, verdict_coloring, verdict_covering, verdict_covering_convex
from ..poly2 import characteristic_poly
from .formats import FormatError, config_rows_top_first, dump_config, load_config, load_matrix, load_shape
from .parser import PolySyntaxError, parse_poly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NONE_FOUND = 2
EXIT_DIRECTION = 3
EXIT_INCONCLUSIVE = 4
EXIT_INPUT = 5

_VERDICT_EXIT = {
    VerdictKind.FORCED_TWO_PERIODIC: EXIT_OK,
    VerdictKind.FORCED_DIRECTION: EXIT_DIRECTION,
    VerdictKind.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# formatting helpers


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(v) -> str:
    return f"({v[0]},{v[1]})"


def _verdict_json(v) -> dict:
    return {
        "kind": v.label,
        "direction": list(v.direction) if v.direction is not None else None,
        "reason": v.reason,
    }


def _critical_json(rep) -> dict:
    dirs = []
    for v, a in rep.per_direction.items():
        dirs.append({
            "direction": list(v),
            "kind": a.kind,
            "critical": [_q(x) for x in sorted(a.critical)],
            "residual": list(a.residual.coeffs),
            "resultant": list(a.resultant.coeffs) if a.resultant is not None else None,
        })
    return {"kind": rep.kind, "values": [_q(x) for x in sorted(rep.values)], "directions": dirs}


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _parse_torus(text: str) -> tuple:
    try:
        w, h = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"torus must look like WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise UsageError("torus dimensions must be positive")
    return w, h


def _shape_from_args(args):
    if args.shape is not None:
        return load_shape(args.shape)
    if args.grid is None:
        raise UsageError("give --shape FILE or --grid KIND --radius R")
    if args.radius is None:
        raise UsageError("--grid needs --radius")
    return neighborhood(GridKind.parse(args.grid), args.radius)


# commands


def cmd_factors(args) -> int:
    f = parse_poly(args.poly)
    if f.is_zero():
        raise UsageError("the zero polynomial has no line polynomial factors to report")
    cands = sorted(edge_pair_directions(f.support()))
    fibers = []
    for v in cands:
        fs = fiber_set(f, v)
        fibers.append((v, sorted(fs.fibers, key=lambda p: (p.degree(), p.coeffs))))
    reports = line_factor_directions(f)
    payload = {
        "command": "factors",
        "polynomial": str(f),
        "candidates": [list(v) for v in cands],
        "fibers": [
            {"direction": list(v), "normal_forms": [list(p.coeffs) for p in nfs]} for v, nfs in fibers
        ],
        "factors": [{"direction": list(r.direction), "gcd": list(r.gcd_normal_form.coeffs)} for r in reports],
    }
    lines = [f"polynomial: {f}"]
    lines.append("candidate directions: " + (" ".join(_vec(v) for v in cands) or "none"))
    for v, nfs in fibers:
        lines.append(f"  fibers along {_vec(v)}: " + ", ".join(str(p) for p in nfs))
    if reports:
        for r in reports:
            lines.append(f"line polynomial factor in direction {_vec(r.direction)}: gcd {r.gcd_normal_form}")
    else:
        lines.append("no line polynomial factors")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_analyze(args) -> int:
    D = _shape_from_args(args)
    f_D = characteristic_poly(D)
    convex = is_convex(D)
    hull = convex_hull(f_D.support())
    edges = sorted(outer_edge_directions(f_D.support()))
    pairs = sorted(edge_pair_directions(f_D.support()))
    payload = {
        "command": "analyze",
        "shape": [list(u) for u in sorted(D)],
        "size": len(D),
        "characteristic_polynomial": str(f_D),
        "convex": convex,
        "hull": [list(u) for u in hull],
        "outer_edges": [list(v) for v in edges],
        "edge_pairs": [list(v) for v in pairs],
        "parametric": None,
        "covering": None,
        "coloring": None,
        "verdict": None,
    }
    lines = [
        f"shape: {len(D)} offsets, convex: {'yes' if convex else 'no'}",
        f"f_D = {f_D}",
        "hull: " + " ".join(_vec(u) for u in hull),
        "outer edges: " + (" ".join(_vec(v) for v in edges) or "none"),
        "candidate directions: " + (" ".join(_vec(v) for v in pairs) or "none"),
    ]
    code = EXIT_OK
    verdict = None

    if args.parametric:
        rep = critical_t(D)
        payload["parametric"] = _critical_json(rep)
        lines.append("critical t: {" + ", ".join(_q(x) for x in sorted(rep.values)) + "}")
        lines.append(f"  {rep.describe()}")
        for v, a in rep.per_direction.items():
            detail = a.kind
            if a.kind == "set":
                detail = "t in {" + ", ".join(_q(x) for x in sorted(a.critical)) + "}"
                if a.residual_degree:
                    detail += f", residual {a.residual}"
            elif a.kind == "all_t":
                detail = "every t" + (
                    " except " + ", ".join(_q(x) for x in sorted(a.critical)) if a.critical else ""
                )
            lines.append(f"  direction {_vec(v)}: {detail}")

    if args.delta is not None:
        v1 = verdict_covering(D, args.delta, 0)
        v2 = verdict_covering_convex(D, args.delta) if convex else None
        payload["covering"] = {
            "delta": args.delta,
            "verdict": _verdict_json(v1),
            "convex_verdict": _verdict_json(v2) if v2 is not None else None,
        }
        lines.append(f"coverings with b-a = {args.delta}: {v1.label} ({v1.reason})")
        if v2 is not None:
            lines.append(f"convex criterion: {v2.label} ({v2.reason})")
        verdict = v1

    if args.matrix is not None:
        B = load_matrix(args.matrix)
        try:
            v = verdict_coloring(D, B)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        t0 = v.evidence.get("t0")
        det = v.evidence.get("det")
        payload["coloring"] = {
            "matrix": B,
            "verdict": _verdict_json(v),
            "critical": _critical_json(v.evidence["critical_t"]),
            "t0": _q(t0) if t0 is not None else None,
            "det": _q(det) if det is not None else None,
        }
        if t0 is not None:
            lines.append(f"det(B - {_q(t0)}I) = {_q(det)}")
        lines.append(f"perfect colorings with matrix B: {v.label} ({v.reason})")
        verdict = v

    if verdict is not None:
        payload["verdict"] = verdict.label
        lines.append(f"verdict: {verdict.label}")
        code = _VERDICT_EXIT[verdict.kind]
    _emit(args, payload, lines)
    return code


def _window(args, D):
    if args.window is None:
        return D
    w, h = _parse_torus(args.window)
    return block(w, h)


def cmd_verify(args) -> int:
    D = _shape_from_args(args)
    c0 = load_config(args.config, args.colors)
    window = _window(args, D)
    notes = []
    c = c0
    bad = collisions(D, c.width, c.height) or collisions(window, c.width, c.height)
    if bad:
        kx, ky = fit_torus(set(D) | set(window), c.width, c.height)
        c = c0.tile(kx, ky)
        pairs = ", ".join(f"{a}~{b}" for a, b in bad)
        notes.append(
            f"torus {c0.width}x{c0.height} identifies offsets {pairs}; "
            f"statistics computed on the {c.width}x{c.height} lift"
        )
    B = extract_matrix(c, D)
    perfect = B is not None
    holds = perfect
    covering = None
    if args.covering is not None:
        b, a = args.covering
        if c.n != 2:
            raise UsageError("--covering needs a binary configuration")
        ok = verify_covering(c, D, b, a)
        covering = {"b": b, "a": a, "holds": ok}
        holds = ok
    matrix_check = None
    if args.matrix is not None:
        want = load_matrix(args.matrix)
        ok = perfect and len(want) == c.n and all(
            j in B.absent or all(B.entries[i][j] == want[i][j] for i in range(c.n)) for j in range(c.n)
        )
        matrix_check = {"matrix": want, "holds": ok}
        holds = ok
    ab = abelian_complexity(c, window)
    pc = pattern_complexity(c, window)
    periods = sorted(minimal_periods(c0), key=lambda v: (v[0] ** 2 + v[1] ** 2, v))
    payload = {
        "command": "verify",
        "torus": [c0.width, c0.height],
        "colors": c0.n,
        "lifted_to": [c.width, c.height] if c is not c0 else None,
        "notes": notes,
        "perfect": perfect,
        "matrix": B.as_lists() if perfect else None,
        "absent_colors": sorted(B.absent) if perfect else [],
        "covering": covering,
        "matrix_check": matrix_check,
        "window": [list(u) for u in sorted(window)],
        "abelian_complexity": ab,
        "pattern_complexity": pc,
        "periods": [list(v) for v in periods],
        "pass": holds,
    }
    lines = [f"torus: {c0.width}x{c0.height}, colors: {c0.n}, shape: {len(D)} offsets"]
    lines += [f"note: {n}" for n in notes]
    if perfect:
        lines.append("perfect coloring: yes")
        lines.append("matrix B:")
        for row in B.entries:
            lines.append("  " + " ".join("-" if x is None else str(x) for x in row))
        if B.absent:
            lines.append("absent colors: " + " ".join(str(j) for j in sorted(B.absent)))
    else:
        lines.append("perfect coloring: no")
    window_name = "shape" if args.window is None else f"{args.window} block"
    lines.append(f"abelian complexity ({window_name}): {ab}")
    lines.append(f"pattern complexity ({window_name}): {pc}")
    shown = " ".join(_vec(v) for v in periods[:12])
    more = f" ... ({len(periods)} total)" if len(periods) > 12 else ""
    lines.append("periods: " + (shown + more if periods else "none"))
    if covering is not None:
        lines.append(f"covering (b={covering['b']}, a={covering['a']}): {'PASS' if covering['holds'] else 'FAIL'}")
    if matrix_check is not None:
        lines.append(f"matrix check: {'PASS' if matrix_check['holds'] else 'FAIL'}")
    _emit(args, payload, lines)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_search(args) -> int:
    D = _shape_from_args(args)
    w, h = _parse_torus(args.torus)
    n = args.colors
    if args.covering is not None:
        constraint = Covering(*args.covering)
        desc = {"type": "covering", "b": args.covering[0], "a": args.covering[1]}
    elif args.matrix is not None:
        B = load_matrix(args.matrix)
        constraint = MatrixConstraint(B)
        desc = {"type": "matrix", "matrix": B}
    else:
        constraint = AnyPerfect()
        desc = {"type": "any-perfect"}
    bad = collisions(D, w, h)
    notes = []
    if bad:
        pairs = ", ".join(f"{a}~{b}" for a, b in bad)
        notes.append(f"torus {w}x{h} identifies offsets {pairs}; counting over the periodic extension")
    try:
        found = search(D, n, w, h, constraint, limit=args.limit, threads=args.threads, allow_wrap=True)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = "found" if found else "none up to bound"
    payload = {
        "command": "search",
        "torus": [w, h],
        "colors": n,
        "constraint": desc,
        "limit": args.limit,
        "notes": notes,
        "count": len(found),
        "status": status,
        "configurations": [config_rows_top_first(c) for c in found],
    }
    lines = [f"note: {m}" for m in notes]
    for k, c in enumerate(found):
        lines.append(f"# configuration {k + 1}")
        lines.append(dump_config(c))
        lines.append("")
    if found:
        lines.append(f"total: {len(found)}" + (f" (limit {args.limit})" if args.limit is not None else ""))
    else:
        lines.append(f"none up to bound {w}x{h}")
    _emit(args, payload, lines)
    return EXIT_OK if found else EXIT_NONE_FOUND


# argument parsing


def _add_shape_args(p) -> None:
    g = p.add_argument_group("shape")
    g.add_argument("--shape", metavar="FILE", help="JSON list of [i, j] offsets")
    g.add_argument("--grid", choices=[k.value for k in GridKind], help="use a grid neighborhood")
    g.add_argument("--radius", type=int, metavar="R", help="neighborhood radius for --grid")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, metavar="N", help="search worker processes")

    parser = _ArgumentParser(prog="perfectcolor", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("factors", parents=[common], help="line polynomial factors of a polynomial")
    p.add_argument("--poly", required=True, help="expression in x, y, e.g. '(x+y)*(1+x*y)'")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("analyze", parents=[common], help="forced periodicity verdicts for a shape")
    _add_shape_args(p)
    opt = p.add_mutually_exclusive_group()
    opt.add_argument("--delta", type=int, metavar="D", help="analyze (D,b,a)-coverings with b-a = D")
    opt.add_argument("--matrix", metavar="FILE", help="analyze perfect colorings with this matrix")
    p.add_argument("--parametric", action="store_true", help="critical values of t for f_D - t")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="check a torus configuration")
    p.add_argument("config", help="configuration file")
    _add_shape_args(p)
    p.add_argument("--colors", type=int, metavar="N", help="alphabet size (default: inferred)")
    cons = p.add_mutually_exclusive_group()
    cons.add_argument("--covering", type=int, nargs=2, metavar=("B", "A"))
    cons.add_argument("--matrix", metavar="FILE")
    p.add_argument("--window", metavar="WxH", help="block shape for the complexity counts (default: the shape)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="enumerate torus configurations")
    _add_shape_args(p)
    p.add_argument("--colors", type=int, default=2, metavar="N")
    p.add_argument("--torus", required=True, metavar="WxH")
    cons = p.add_mutually_exclusive_group()
    cons.add_argument("--covering", type=int, nargs=2, metavar=("B", "A"))
    cons.add_argument("--matrix", metavar="FILE")
    cons.add_argument("--any-perfect", action="store_true")
    p.add_argument("--limit", type=int, metavar="K")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.threads = getattr(args, "threads", 1)
    try:
        return args.func(args)
    except (UsageError, PolySyntaxError, FormatError, TorusTooSmall, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
