"""Command-line interface: ``wstrass <command> [options]``.

Exit status is 0 on success, 1 when an input violates a mathematical
precondition, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from wstrass import bounds, qdiff
from wstrass.curve import new_curve, principal_divisor
from wstrass.exact import DomainError, PrecisionError
from wstrass.parsing import ParseError, parse_form, parse_univariate
from wstrass.quartic import PlaneQuartic, inflection_profile, tangent_line_test
from wstrass.wronskian import point_weight


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _curve(args):
    return new_curve(args.n, parse_univariate(args.f, "x"))


# ---------------------------------------------------------------------------
# command handlers: each returns (result dict, text lines)


def cmd_genus(args):
    c = _curve(args)
    return {"n": c.n, "d": c.d, "gcd": c.G, "genus": c.g}, [f"genus {c.g}  (n={c.n}, d={c.d}, gcd={c.G})"]


def cmd_basis(args):
    c = _curve(args)
    pairs = qdiff.enumerate_basis(c, args.q)
    dq = qdiff.dimension_dq(c.g, args.q)
    text = [f"d_q = {dq}  (g={c.g}, q={args.q})", "pairs (a, b) sorted by a*n + b:"]
    text += [f"  ({p.a}, {p.b})  order {p.a * c.n + p.b}" for p in pairs]
    return {"genus": c.g, "q": args.q, "d_q": dq, "pairs": [[p.a, p.b] for p in pairs]}, text


def cmd_branch(args):
    c = _curve(args)
    gaps = qdiff.branch_gap_sequence(c, args.q)
    return (
        {"genus": c.g, "q": args.q, "gaps": list(gaps.gaps), "weight": gaps.weight},
        [f"gaps {gaps}", f"weight {gaps.weight}"],
    )


def cmd_infinity(args):
    c = _curve(args)
    gaps = qdiff.infinite_gap_data(c)
    return (
        {"genus": c.g, "semigroup_generators": [c.n, c.d], "gaps": list(gaps.gaps), "weight": gaps.weight},
        [f"semigroup <{c.n}, {c.d}>", f"gaps {gaps}", f"weight {gaps.weight}"],
    )


def _generator(spec: str):
    if spec.startswith("x-c:"):
        return "x-c", _rational(spec[4:])
    if spec.startswith("x-alpha:"):
        raw = spec[8:]
        try:
            return "x-alpha", int(raw)
        except ValueError:
            raise UsageError(f"x-alpha needs a 1-based branch index (got {raw!r})") from None
    if spec in ("y", "dx", "dy-form"):
        return spec, None
    raise UsageError(f"unknown generator {spec!r}: expected y, dx, dy-form, x-c:VALUE or x-alpha:INDEX")


def cmd_divisor(args):
    c = _curve(args)
    gen, value = _generator(args.gen)
    D = principal_divisor(c, gen, value)
    terms = [{"place": p.label(), "coefficient": k} for p, k in D]
    text = [f"({args.gen}) = {D}", f"degree {D.degree}"]
    return {"generator": args.gen, "terms": terms, "degree": D.degree}, text


def cmd_point_weight(args):
    c = _curve(args)
    point = (_rational(args.x), _rational(args.y))
    w = point_weight(c, args.q, point)
    return {"q": args.q, "point": list(point), "weight": w}, [f"weight {w}"]


def cmd_gapseqs(args):
    seqs = qdiff.enumerate_gap_sequences(args.g)
    text = [f"{len(seqs)} candidate gap sequences for g = {args.g}"]
    text += [f"  {s}  weight {s.weight}" for s in seqs]
    return {"g": args.g, "count": len(seqs), "sequences": [list(s.gaps) for s in seqs]}, text


def cmd_total_weight(args):
    w = qdiff.total_weight(args.g, args.q)
    return {"g": args.g, "q": args.q, "total_weight": w}, [f"total weight {w}"]


def _quartic(args) -> PlaneQuartic:
    return PlaneQuartic(parse_form(args.F))


def cmd_quartic_inflections(args):
    Q = _quartic(args)
    p = inflection_profile(Q, seed=args.seed)
    mult = {str(k): v for k, v in sorted(p.weight_multiset.items())}
    text = [
        f"distinct flexes {p.distinct_count}",
        f"weight 1: {p.weight_multiset[1]}",
        f"weight 2: {p.weight_multiset[2]}",
        f"total {p.total}",
    ]
    return {
        "distinct_count": p.distinct_count,
        "weight_multiset": mult,
        "total": p.total,
        "shear_used": [list(r) for r in p.shear_used],
    }, text


def _point3(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--point needs three comma-separated coordinates (got {text!r})")
    return tuple(_rational(p) for p in parts)


def cmd_quartic_tangent(args):
    Q = _quartic(args)
    P = _point3(args.point)
    w = tangent_line_test(Q, P)
    kind = {0: "ordinary point", 1: "flex", 2: "hyperflex"}.get(w, "higher contact")
    return {"point": list(P), "weight": w}, [f"weight {w} ({kind})"]


def cmd_bounds_rh(args):
    try:
        mults = bounds.parse_multiplicities(args.ram)
    except ValueError:
        raise UsageError(f"bad --ram list {args.ram!r}") from None
    prof = bounds.RamificationProfile(args.deg, args.gy, mults)
    g = bounds.riemann_hurwitz_genus(prof)
    return {"deg": args.deg, "gY": args.gy, "ramification_total": prof.ramification_total, "genus": g}, [f"genus {g}"]


def cmd_bounds_hurwitz(args):
    b = bounds.hurwitz_bound(args.g)
    return {"g": args.g, "bound": b}, [f"|Aut| <= {b}"]


def cmd_bounds_min_r(args):
    sig = bounds.min_positive_R(args.max_order, args.max_s, args.max_gy, args.min_gy, args.min_s)
    return (
        {"gY": sig.gY, "orders": list(sig.orders), "R": sig.R},
        [f"signature {sig}", f"R = {sig.R}"],
    )


def cmd_bounds_fix(args):
    b = bounds.fixed_point_bound(args.g, args.order, args.nonhyperelliptic)
    return {"g": args.g, "order": args.order, "nonhyperelliptic": args.nonhyperelliptic, "bound": b}, [
        f"|Fix| <= {b}"
    ]


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = _Parser(prog="wstrass", description="Weierstrass-point data for superelliptic curves and plane quartics.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def curve_cmd(name, func, help_text, q=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True, help="cover degree n")
        p.add_argument("--f", required=True, help="polynomial f(x)")
        if q:
            p.add_argument("--q", type=int, default=1, help="differential order q (default 1)")
        p.set_defaults(func=func)
        return p

    curve_cmd("genus", cmd_genus, "genus of y^n = f(x)")
    curve_cmd("basis", cmd_basis, "basis of holomorphic q-differentials", q=True)
    curve_cmd("branch", cmd_branch, "gap sequence and weight at affine branch points", q=True)
    curve_cmd("infinity", cmd_infinity, "gaps and weight at the place over x = oo")
    p = curve_cmd("divisor", cmd_divisor, "principal divisor of a generator")
    p.add_argument("--gen", required=True, help="y | dx | dy-form | x-c:VALUE | x-alpha:INDEX")
    p = curve_cmd("point-weight", cmd_point_weight, "q-weight at an affine non-branch point", q=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("gapseqs", parents=[common], help="candidate gap sequences of genus g")
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_gapseqs)

    p = sub.add_parser("total-weight", parents=[common], help="total q-Weierstrass weight")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=cmd_total_weight)

    quartic = sub.add_parser("quartic", help="smooth plane quartics")
    qsub = quartic.add_subparsers(dest="quartic_command", required=True, parser_class=_Parser)
    p = qsub.add_parser("inflections", parents=[common], help="flex count and weights")
    p.add_argument("--F", required=True, help="homogeneous quartic in x, y, z")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_quartic_inflections)
    p = qsub.add_parser("tangent-test", parents=[common], help="tangent contact order minus 2")
    p.add_argument("--F", required=True)
    p.add_argument("--point", required=True, help='projective point "a,b,c"')
    p.set_defaults(func=cmd_quartic_tangent)

    bnd = sub.add_parser("bounds", help="Riemann-Hurwitz and automorphism bounds")
    bsub = bnd.add_subparsers(dest="bounds_command", required=True, parser_class=_Parser)
    p = bsub.add_parser("rh", parents=[common], help="genus from a ramification profile")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--gy", type=int, required=True)
    p.add_argument("--ram", default="", help='multiplicities "m1,m2,..." or "2x84,3x56"')
    p.set_defaults(func=cmd_bounds_rh)
    p = bsub.add_parser("hurwitz", parents=[common], help="84(g-1)")
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_bounds_hurwitz)
    p = bsub.add_parser("min-r", parents=[common], help="signature of minimal positive R")
    p.add_argument("--max-order", type=int, default=bounds.DEFAULT_MAX_ORDER)
    p.add_argument("--max-s", type=int, default=bounds.DEFAULT_MAX_S)
    p.add_argument("--max-gy", type=int, default=bounds.DEFAULT_MAX_GY)
    p.add_argument("--min-gy", type=int, default=0)
    p.add_argument("--min-s", type=int, default=0)
    p.set_defaults(func=cmd_bounds_min_r)
    p = bsub.add_parser("fix", parents=[common], help="fixed-point bound")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--nonhyperelliptic", action="store_true")
    p.set_defaults(func=cmd_bounds_fix)
    return parser


_SKIP = {"func", "format", "command", "quartic_command", "bounds_command"}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if "json" in argv and "--format" in argv else "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        result, text = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, ParseError) as exc:
        return _fail(fmt, "usage", str(exc), 2)
    except (DomainError, PrecisionError) as exc:
        return _fail(fmt, "domain", str(exc), 1)
    if fmt == "json":
        inputs = {k: v for k, v in vars(args).items() if k not in _SKIP}
        command = " ".join(x for x in (args.command, getattr(args, "quartic_command", None),
                                       getattr(args, "bounds_command", None)) if x)
        print(json.dumps({"command": command, "inputs": _jsonable(inputs), "result": _jsonable(result)}, indent=2))
    else:
        print("\n".join(text))
    return 0


def _fail(fmt: str, kind: str, message: str, code: int) -> int:
    if fmt == "json":
        print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    else:
        print(f"wstrass: {kind} error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
