"""Vertex cycles of planar members for external plotting."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import UnsupportedError
from .family import AffineFamily, Interval, member_eval
from .oracle import GridSpec
from .ratlp import Infeasible, Optimal, Unbounded, lp_optimize
from .rational import approx, fmt_rat

# integer directions |a|, |b| <= 3 in counterclockwise order
_DIRECTIONS: Tuple[Tuple[int, int], ...] = tuple(
    sorted(
        {
            (a // math.gcd(a, b), b // math.gcd(a, b))
            for a in range(-3, 4)
            for b in range(-3, 4)
            if (a, b) != (0, 0)
        },
        key=lambda v: math.atan2(v[1], v[0]),
    )
)


@dataclass(frozen=True)
class MemberOutline:
    omega: Fraction
    status: str  # "ok" | "empty" | "unbounded"
    vertices: Tuple[Tuple[Fraction, Fraction], ...] = ()


def member_outline(family: AffineFamily, omega) -> MemberOutline:
    sys = member_eval(family, (omega,))
    cycle: List[tuple] = []
    for c in _DIRECTIONS:
        out = lp_optimize(c, sys)
        if isinstance(out, Infeasible):
            return MemberOutline(omega, "empty")
        if isinstance(out, Unbounded):
            return MemberOutline(omega, "unbounded")
        assert isinstance(out, Optimal)
        v = tuple(out.witness)
        if not cycle or cycle[-1] != v:
            cycle.append(v)
    while len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle.pop()
    # the sweep can revisit a vertex; keep first occurrences only
    seen, uniq = set(), []
    for v in cycle:
        if v not in seen:
            seen.add(v)
            uniq.append(v)
    return MemberOutline(omega, "ok", tuple(uniq))


def sample_plot(family: AffineFamily, resolution: int) -> List[MemberOutline]:
    if family.d != 2 or family.p != 1 or not isinstance(family.domain, Interval):
        raise UnsupportedError("sample-plot needs a planar one-parameter interval family")
    ws = GridSpec(resolution).samples(family.domain.alpha, family.domain.beta)
    return [member_outline(family, w) for w in ws]


def outlines_to_csv(outlines: List[MemberOutline]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["omega", "omega_approx", "status", "vertex", "x1", "x2", "x1_approx", "x2_approx"])
    for o in outlines:
        om = [fmt_rat(o.omega), approx(o.omega)]
        if not o.vertices:
            w.writerow(om + [o.status, "", "", "", "", ""])
            continue
        for i, (x1, x2) in enumerate(o.vertices):
            w.writerow(om + [o.status, i, fmt_rat(x1), fmt_rat(x2), approx(x1), approx(x2)])
    return buf.getvalue()


__all__ = ["MemberOutline", "member_outline", "sample_plot", "outlines_to_csv"]
