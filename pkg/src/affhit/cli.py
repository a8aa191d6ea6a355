"""Command-line front end.

Every subcommand prints one JSON report (``sample-plot`` prints CSV).  Exit
codes: 0 solved or true, 1 solved and false, 2 bad input, 3 outside what
the solvers handle.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .adaptability import AdaptInfeasible, AdaptUnbounded, adapt_decide, adapt_optimize
from .errors import EmptyMember, InputError, NotPolytope, UnsupportedError
from .family import EMPTY, dual_family, dual_interval, member_eval
from .greedy import (
    Certified,
    ExactAlg,
    ExactRat,
    HittingSolution,
    NoHittingSetUpTo,
    hit_size,
    make_engine,
    sigma,
    verify,
)
from .intersect import hit_one_point
from .io import family_to_json, load_adapt, load_family, load_points
from .lift import lift_instance
from .oracle import GridSpec, bisect_sigma_oracle, grid_cover
from .plot import outlines_to_csv, sample_plot
from .ratlp import Feasible
from .rational import approx, as_rat, fmt_rat
from .realroots import RealAlgebraic, as_exact, compare, isolate_roots, to_decimal

EXACT_ROW_LIMIT = 32
# isolating intervals in reports are narrowed to at most this width
PRINT_WIDTH = Fraction(1, 16)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


# -- number formatting ------------------------------------------------------------


def _num(value):
    """Exact JSON form: a string for rationals, an object for algebraic numbers."""
    value = as_exact(value)
    if isinstance(value, RealAlgebraic):
        value = _canonical(value)
        return {
            "poly": list(value.poly.coeffs),
            "interval": [fmt_rat(value.lo), fmt_rat(value.hi)],
            "approx": to_decimal(value),
        }
    return fmt_rat(value)


def _canonical(value: RealAlgebraic) -> RealAlgebraic:
    """Same number, with the interval its polynomial's own isolation gives, narrowed."""
    same = next(r for r in isolate_roots(list(value.poly.coeffs)) if compare(r, value) == 0)
    return same.refine_to(PRINT_WIDTH)


def _vec(v):
    return [fmt_rat(x) for x in v]


def _sigma_json(res) -> dict:
    if isinstance(res, Certified):
        return {
            "lo": fmt_rat(res.lo),
            "hi": fmt_rat(res.hi),
            "eps": fmt_rat(res.eps),
            "lo_approx": approx(res.lo),
            "hi_approx": approx(res.hi),
        }
    return _num(res.value)


def _interval_json(iv):
    if iv is EMPTY:
        return None
    return [fmt_rat(iv.lo), fmt_rat(iv.hi)]


def _rat_list(text: str) -> tuple:
    try:
        return tuple(as_rat(t) for t in text.split(","))
    except InputError:
        raise
    except Exception as exc:  # pragma: no cover - argparse hands us strings
        raise InputError(f"cannot parse {text!r} as rationals") from exc


def _engine(args, m: int):
    name = args.engine or ("exact" if m <= EXACT_ROW_LIMIT else "bisect")
    eps = as_rat(args.eps) if args.eps is not None else None
    return make_engine(name, eps)


# -- subcommands -------------------------------------------------------------------


def cmd_eval(args):
    family = load_family(args.input)
    omega = _rat_list(args.omega)
    sys_ = member_eval(family, omega)
    return 0, {"omega": _vec(omega), "A": [_vec(r) for r in sys_.a], "b": _vec(sys_.b)}


def cmd_dual(args):
    return 0, family_to_json(dual_family(load_family(args.input)))


def cmd_dual_interval(args):
    family = load_family(args.input)
    iv = dual_interval(family, _rat_list(args.x))
    out = {"interval": _interval_json(iv), "empty": iv is EMPTY}
    if iv is not EMPTY:
        out["interval_approx"] = [approx(iv.lo), approx(iv.hi)]
    return 0, out


def cmd_hit1(args):
    out = hit_one_point(load_family(args.input))
    if isinstance(out, Feasible):
        return 0, {"feasible": True, "witness": _vec(out.witness)}
    return 1, {"feasible": False, "farkas": _vec(out.farkas)}


def cmd_sigma(args):
    family = load_family(args.input)
    res = sigma(family, as_rat(args.lam), _engine(args, family.m))
    out = {"lambda": fmt_rat(as_rat(args.lam)), "sigma": _sigma_json(res)}
    if isinstance(res, ExactRat):
        out["sigma_approx"] = approx(res.value)
        out["kind"] = "rational"
    elif isinstance(res, ExactAlg):
        out["kind"] = "algebraic"
    else:
        out["kind"] = "certified"
    return 0, out


def _solution_json(sol: HittingSolution) -> dict:
    return {
        "k": sol.k,
        "points": [_vec(x) for x in sol.points],
        "breakpoints": [_sigma_json(b) for b in sol.breakpoints],
        "intervals": [_interval_json(iv) for iv in sol.intervals],
        "coverage": sol.coverage.describe(),
        "minimal": sol.minimal,
    }


def _no_solution_json(res) -> dict:
    if isinstance(res, NoHittingSetUpTo):
        return {"k": None, "status": "no hitting set up to kmax", "kmax": res.kmax}
    return {"k": None, "status": "no finite hitting set", "reason": res.reason, "at": _num(res.stall)}


def cmd_hitsize(args):
    family = load_family(args.input)
    res = hit_size(family, args.kmax, _engine(args, family.m))
    if isinstance(res, HittingSolution):
        return 0, _solution_json(res)
    return 1, _no_solution_json(res)


def cmd_decide(args):
    family = load_family(args.input)
    res = hit_size(family, args.k, _engine(args, family.m))
    if isinstance(res, HittingSolution):
        return 0, {"decision": True, "k": args.k, "solution": _solution_json(res)}
    return 1, {"decision": False, "k": args.k, **_no_solution_json(res)}


def cmd_verify(args):
    family = load_family(args.input)
    points = load_points(args.points)
    report = verify(family, points)
    out = {
        "covered": report.covered,
        "report": report.describe(),
        "intervals": [_interval_json(dual_interval(family, x)) for x in points],
    }
    return (0 if report.covered else 1), out


def cmd_adapt_decide(args):
    inst = load_adapt(args.input)
    dec = adapt_decide(inst, args.k, as_rat(args.t), _engine(args, inst.m))
    out = {"decision": dec.holds, "k": args.k, "t": fmt_rat(dec.t)}
    if dec.holds:
        out["witnesses"] = [_vec(x) for x in dec.solution.points]
    if dec.diagnostic:
        out["diagnostic"] = dec.diagnostic
    return (0 if dec.holds else 1), out


def cmd_adapt_optimize(args):
    inst = load_adapt(args.input)
    eps = as_rat(args.eps) if args.eps is not None else Fraction(1, 10 ** 6)
    engine = make_engine(args.engine or ("exact" if inst.m <= EXACT_ROW_LIMIT else "bisect"))
    try:
        res = adapt_optimize(inst, args.k, eps, engine)
    except AdaptInfeasible as exc:
        return 1, {"status": "infeasible", "k": args.k, "cap": fmt_rat(exc.cap), "message": str(exc)}
    except AdaptUnbounded as exc:
        return 1, {"status": "unbounded", "k": args.k, "message": str(exc)}
    out = {"status": "ok", "k": res.k, "value": {"lo": fmt_rat(res.lo), "hi": fmt_rat(res.hi)}}
    out["value_approx"] = {"lo": approx(res.lo), "hi": approx(res.hi)}
    out["witnesses"] = [_vec(x) for x in res.witnesses]
    out["coverage"] = res.coverage.describe()
    return 0, out


def cmd_lift(args):
    inst = load_adapt(args.input)
    out = lift_instance(inst, as_rat(args.t))
    return 0, {
        "dim": out.dim,
        "ell": out.ell,
        "p": out.p,
        "q_hat": family_to_json(out.q_hat),
        "p_hat_vertices": [
            {"base": _vec(v.base), "slopes": [_vec(s) for s in v.slopes]} for v in out.p_hat_vertices
        ],
        "surface": [
            {"product": r.product, "first_stage": r.first_stage, "omega": r.omega} for r in out.surface
        ],
    }


def cmd_oracle(args):
    family = load_family(args.input)
    pts = grid_cover(family, GridSpec(args.resolution))
    out = {"resolution": args.resolution, "grid_hit_size": len(pts), "points": [_vec(x) for x in pts]}
    if args.lam is not None:
        eps = as_rat(args.eps) if args.eps is not None else Fraction(1, 10 ** 9)
        br = bisect_sigma_oracle(family, as_rat(args.lam), eps)
        out["sigma_bracket"] = {"lo": fmt_rat(br.lo), "hi": fmt_rat(br.hi)}
    return 0, out


def cmd_sample_plot(args):
    family = load_family(args.input)
    return 0, outlines_to_csv(sample_plot(family, args.resolution))


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="affhit", description="Exact hitting sets for affine families of polytopes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, *flags, help_=None):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--output", metavar="PATH")
        for flag in flags:
            flag(p)
        p.set_defaults(func=func)
        return p

    engine = lambda p: (  # noqa: E731
        p.add_argument("--engine", choices=["exact", "bisect"]),
        p.add_argument("--eps", metavar="RAT"),
    )
    k = lambda p: p.add_argument("--k", type=int, required=True)  # noqa: E731
    res = lambda p: p.add_argument("--resolution", type=int, required=True)  # noqa: E731

    add("eval", cmd_eval, lambda p: p.add_argument("--omega", required=True, metavar="RAT[,RAT...]"),
        help_="member system at a parameter value")
    add("dual", cmd_dual, help_="the dual family")
    add("dual-interval", cmd_dual_interval, lambda p: p.add_argument("--x", required=True, metavar="RAT[,RAT...]"),
        help_="parameters whose member contains a point")
    add("hit1", cmd_hit1, help_="one point common to every member")
    add("sigma", cmd_sigma, engine, lambda p: p.add_argument("--lambda", dest="lam", required=True, metavar="RAT"),
        help_="farthest parameter reachable from lambda with one point")
    add("hitsize", cmd_hitsize, engine, lambda p: p.add_argument("--kmax", type=int, default=16),
        help_="minimum hitting set by the greedy chain")
    add("decide", cmd_decide, engine, k, help_="is there a hitting set of size k")
    add("verify", cmd_verify, lambda p: p.add_argument("--points", required=True, metavar="PATH"),
        help_="exact coverage check of a point set")
    add("lift", cmd_lift, lambda p: p.add_argument("--t", required=True, metavar="RAT"),
        help_="lifted construction for instances with first-stage variables")
    add("oracle", cmd_oracle, res,
        lambda p: (p.add_argument("--lambda", dest="lam", metavar="RAT"), p.add_argument("--eps", metavar="RAT")),
        help_="grid reference solutions")
    add("sample-plot", cmd_sample_plot, res, help_="CSV vertex cycles of sampled planar members")

    adapt = sub.add_parser("adapt", help="k-adaptability without first-stage variables")
    asub = adapt.add_subparsers(dest="adapt_command", parser_class=_Parser, required=True)
    for name, func, extra in (
        ("decide", cmd_adapt_decide, lambda p: p.add_argument("--t", required=True, metavar="RAT")),
        ("optimize", cmd_adapt_optimize, None),
    ):
        p = asub.add_parser(name)
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--output", metavar="PATH")
        p.add_argument("--k", type=int, required=True)
        engine(p)
        if extra:
            extra(p)
        p.set_defaults(func=func)
    return parser


def _emit(payload, path: Optional[str]):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotPolytope as exc:
        _emit({"error": "NotPolytope", "omega": _num(exc.omega), "message": str(exc)}, args.output)
        return 3
    except EmptyMember as exc:
        _emit({"error": "EmptyMember", "omega": _num(exc.omega), "message": str(exc)}, args.output)
        return 1
    except UnsupportedError as exc:
        _emit({"error": "Unsupported", "message": str(exc)}, args.output)
        return 3
    _emit(payload, args.output)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
