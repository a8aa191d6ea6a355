"""Brute-force references used to cross-check the solvers.

Everything here samples the parameter interval on an exact rational grid
and uses only member evaluation, membership tests and plain LP feasibility,
never the breakpoint machinery of the greedy solver.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import EmptyMember, InputError, NotPolytope, UnsupportedError
from .family import AffineFamily, Interval, member_eval, membership
from .ratlp import Feasible, check_bounded, lp_feasible
from .rational import as_rat


@dataclass(frozen=True)
class GridSpec:
    resolution: int

    def __post_init__(self):
        if int(self.resolution) != self.resolution or self.resolution < 2:
            raise InputError("grid resolution must be an integer >= 2")

    def samples(self, alpha: Fraction, beta: Fraction) -> List[Fraction]:
        r = self.resolution
        return [alpha + j * (beta - alpha) / (r - 1) for j in range(r)]


def _grid(family: AffineFamily, grid) -> List[Fraction]:
    if family.p != 1 or not isinstance(family.domain, Interval):
        raise UnsupportedError("grid oracles need a one-parameter interval family")
    if not isinstance(grid, GridSpec):
        grid = GridSpec(grid)
    return grid.samples(family.domain.alpha, family.domain.beta)


def _line_member(family: AffineFamily, w: Fraction) -> Tuple[Fraction | None, Fraction | None]:
    """The member at ``w`` of a family in R^1 as ``(lo, hi)``; ``None`` is infinite."""
    sys = member_eval(family, (w,))
    lo = hi = None
    for (a,), b in zip(sys.a, sys.b):
        if a > 0:
            hi = b / a if hi is None else min(hi, b / a)
        elif a < 0:
            lo = b / a if lo is None else max(lo, b / a)
        elif b < 0:
            raise EmptyMember(w)
    if lo is not None and hi is not None and lo > hi:
        raise EmptyMember(w)
    return lo, hi


def _stab_intervals(members: Sequence[Tuple[Fraction, Fraction]]) -> List[Fraction]:
    """Fewest points meeting every closed interval: sort by right end, stab greedily."""
    points: List[Fraction] = []
    for lo, hi in sorted(members, key=lambda iv: iv[1]):
        if points and lo <= points[-1] <= hi:
            continue
        points.append(hi)
    return points


def _pair_feasible(family, u, v) -> bool:
    sys = member_eval(family, (u,)).stack(member_eval(family, (v,)))
    return isinstance(lp_feasible(sys), Feasible)


def grid_cover(family: AffineFamily, grid) -> List[tuple]:
    """A minimum set of points meeting every sampled member.

    For ``d = 1`` members are intervals and the classical stabbing greedy
    applies directly.  Otherwise a sampled run ``w_i..w_j`` has a common
    point iff the two end members meet, and the left-to-right greedy over
    runs is optimal.
    """
    ws = _grid(family, grid)
    if family.d == 1:
        members = []
        # first offending sample in parameter order decides the error
        for w in ws:
            lo, hi = _line_member(family, w)
            if lo is None or hi is None:
                raise NotPolytope(w)
            members.append((lo, hi))
        return [(x,) for x in _stab_intervals(members)]
    points = []
    i = 0
    while i < len(ws):
        first = member_eval(family, (ws[i],))
        out = lp_feasible(first)
        if not isinstance(out, Feasible):
            raise EmptyMember(ws[i])
        j = i
        while j + 1 < len(ws) and _pair_feasible(family, ws[i], ws[j + 1]):
            j += 1
        sys = first.stack(member_eval(family, (ws[j],)))
        points.append(tuple(lp_feasible(sys).witness))
        i = j + 1
    return points


def grid_hit_size(family: AffineFamily, grid) -> int:
    return len(grid_cover(family, grid))


@dataclass(frozen=True)
class OracleBracket:
    lo: Fraction
    hi: Fraction

    def __contains__(self, value) -> bool:
        from .realroots import compare

        return compare(self.lo, value) <= 0 <= compare(self.hi, value)


def bisect_sigma_oracle(family: AffineFamily, lam, eps) -> OracleBracket:
    """Bracket the last ``nu`` with ``P(lam) & P(nu)`` nonempty by bisection."""
    if family.p != 1 or not isinstance(family.domain, Interval):
        raise UnsupportedError("sigma needs a one-parameter interval family")
    lam, eps = as_rat(lam), as_rat(eps)
    alpha, beta = family.domain.alpha, family.domain.beta
    if not alpha <= lam <= beta:
        raise InputError(f"lambda must lie in [{alpha}, {beta}]")
    if eps <= 0:
        raise InputError("eps must be positive")
    base = member_eval(family, (lam,))
    if not isinstance(lp_feasible(base), Feasible):
        raise EmptyMember(lam)
    if not check_bounded(base):
        raise NotPolytope(lam)
    if _pair_feasible(family, lam, beta):
        return OracleBracket(beta, beta)
    lo, hi = lam, beta
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if _pair_feasible(family, lam, mid):
            lo = mid
        else:
            hi = mid
    return OracleBracket(lo, hi)


def sample_verify(family: AffineFamily, points: Sequence[Sequence], grid) -> bool:
    """Every sampled member contains at least one of ``points``."""
    points = [tuple(as_rat(v) for v in x) for x in points]
    for w in _grid(family, grid):
        sys = member_eval(family, (w,))
        if not any(membership(x, sys) for x in points):
            return False
    return True


__all__ = [
    "GridSpec",
    "OracleBracket",
    "grid_cover",
    "grid_hit_size",
    "bisect_sigma_oracle",
    "sample_verify",
]
