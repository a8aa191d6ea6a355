"""Greedy minimum hitting sets for one-parameter families of polytopes.

For ``lam`` in the domain ``[alpha, beta]`` let ``sigma(lam)`` be the largest
``nu`` in ``[lam, beta]`` such that ``P(lam)`` and ``P(nu)`` intersect.  The
feasibility of ``P(lam) & P(nu)`` is monotone in ``nu`` and the chain
``alpha, sigma(alpha), sigma(sigma(alpha)), ...`` reaches ``beta`` in exactly
the minimum number of hitting points.

Two engines compute ``sigma``:

* ``Exact`` finds the transition among the real roots of minors of the
  parametric system and returns a rational or real algebraic number.
* ``Bisect`` returns a certified rational bracket of prescribed width.
  Chains built from bracket lower ends are valid but may use more points
  than the minimum.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import _poly as P
from .errors import EmptyMember, InputError, NotPolytope, UnsupportedError
from .family import (
    EMPTY,
    AffineFamily,
    HalfspaceSystem,
    Interval,
    RatInterval,
    dual_interval,
    member_eval,
)
from .ratlp import Feasible, Infeasible, Optimal, check_bounded, lp_feasible, lp_optimize
from .rational import as_rat
from .realroots import (
    AlgebraicField,
    IntPoly,
    RealAlgebraic,
    as_exact,
    compare,
    isolate_roots,
    lower_bound,
    rational_between,
    upper_bound,
)

Number = Union[Fraction, RealAlgebraic]

DEFAULT_EPS = Fraction(1, 2 ** 40)
# chains switch to rational sandwiching beyond this degree
MAX_EXACT_DEGREE = 4
# how close rational witnesses approach an irrational breakpoint
WITNESS_WIDTH = Fraction(1, 2 ** 48)


# -- engines and results --------------------------------------------------------


@dataclass(frozen=True)
class Exact:
    name = "exact"


@dataclass(frozen=True)
class Bisect:
    eps: Fraction = DEFAULT_EPS
    name = "bisect"

    def __post_init__(self):
        eps = as_rat(self.eps)
        if eps <= 0:
            raise InputError("bisection tolerance must be positive")
        object.__setattr__(self, "eps", eps)


Engine = Union[Exact, Bisect]


def make_engine(engine="exact", eps=None) -> Engine:
    if isinstance(engine, (Exact, Bisect)):
        return engine
    if engine == "exact":
        return Exact()
    if engine == "bisect":
        return Bisect(DEFAULT_EPS if eps is None else eps)
    raise InputError(f"unknown engine {engine!r}")


@dataclass(frozen=True)
class ExactRat:
    value: Fraction
    # rational probe just above the value with an infeasible pair, None at beta
    upper_probe: Optional[Fraction] = None


@dataclass(frozen=True)
class ExactAlg:
    value: RealAlgebraic
    upper_probe: Optional[Fraction] = None


@dataclass(frozen=True)
class Certified:
    lo: Fraction
    hi: Fraction
    eps: Fraction


SigmaResult = Union[ExactRat, ExactAlg, Certified]


def sigma_floor(res: SigmaResult) -> Number:
    """The largest value known to satisfy the feasibility condition."""
    if isinstance(res, Certified):
        return res.lo
    return res.value


@dataclass(frozen=True)
class CoverageReport:
    """Either ``covered`` or the first uncovered gap of ``[alpha, beta]``."""

    covered: bool
    gap: Optional[Tuple[Fraction, Fraction]] = None
    gap_closed: Tuple[bool, bool] = (False, False)

    def describe(self) -> str:
        if self.covered:
            return "covered"
        lo, hi = self.gap
        left = "[" if self.gap_closed[0] else "("
        right = "]" if self.gap_closed[1] else ")"
        return f"gap {left}{lo}, {hi}{right}"


@dataclass(frozen=True)
class HittingSolution:
    k: int
    points: Tuple[tuple, ...]
    intervals: Tuple[RatInterval, ...]
    breakpoints: Tuple[SigmaResult, ...]
    coverage: CoverageReport
    # True when k is known to be the minimum (exact engine)
    minimal: bool = True


@dataclass(frozen=True)
class NoHittingSetUpTo:
    kmax: int
    breakpoints: Tuple[SigmaResult, ...] = ()


@dataclass(frozen=True)
class NoFiniteHittingSet:
    stall: Number
    reason: str = "stall"


HitResult = Union[HittingSolution, NoHittingSetUpTo, NoFiniteHittingSet]


# -- evaluation helpers ---------------------------------------------------------------


def _require_interval_family(family: AffineFamily):
    if family.p != 1:
        raise UnsupportedError("the greedy solver handles one-parameter families only")
    if not isinstance(family.domain, Interval):
        raise UnsupportedError("the greedy solver needs an interval domain")


def _coerce_number(value) -> Number:
    if isinstance(value, RealAlgebraic):
        return as_exact(value)
    return as_rat(value)


class _Pair:
    """Feasibility of ``P(lam) & P(nu)`` for a fixed ``lam``."""

    def __init__(self, family: AffineFamily, lam: Number):
        self.family = family
        self.lam = lam
        if isinstance(lam, RealAlgebraic):
            self.lam_field = AlgebraicField(lam)
            lam_value = self.lam_field.gen
        else:
            self.lam_field = None
            lam_value = lam
        self.lam_sys = member_eval(family, (lam_value,))
        self.calls = 0

    def member_ok(self):
        feas = lp_feasible(self.lam_sys)
        if isinstance(feas, Infeasible):
            raise EmptyMember(self.lam)
        if not check_bounded(self.lam_sys):
            raise NotPolytope(self.lam)

    def system(self, nu) -> HalfspaceSystem:
        if isinstance(nu, RealAlgebraic):
            if self.lam_field is not None:
                raise UnsupportedError("both parameters irrational")
            nu = AlgebraicField(nu).gen
        return self.lam_sys.stack(member_eval(self.family, (nu,)))

    def solve(self, nu):
        self.calls += 1
        return lp_feasible(self.system(nu))

    def __call__(self, nu) -> bool:
        return isinstance(self.solve(nu), Feasible)

    # -- breakpoint polynomials

    def row_entries(self, idx: int) -> List[P.Bi]:
        """Stacked row ``idx`` as bivariate entries in (lam, nu), b last."""
        m = self.family.m
        A0, A1 = self.family.a.base, self.family.a.slopes[0]
        b0, b1 = self.family.b.base, self.family.b.slopes[0]
        if idx < m:
            r = idx
            if self.lam_field is None:
                vals = [A0[r][j] + self.lam * A1[r][j] for j in range(self.family.d)]
                vals.append(b0[r] + self.lam * b1[r])
                return [P.Bi.affine(v) for v in vals]
            ents = [P.Bi.affine(A0[r][j], ct=A1[r][j]) for j in range(self.family.d)]
            ents.append(P.Bi.affine(b0[r], ct=b1[r]))
            return ents
        r = idx - m
        ents = [P.Bi.affine(A0[r][j], cx=A1[r][j]) for j in range(self.family.d)]
        ents.append(P.Bi.affine(b0[r], cx=b1[r]))
        return ents

    def minor_polys(self, rsub: Sequence[int], box=None) -> List[tuple]:
        """Nonconstant polynomials in nu from the square minors on rows ``rsub``.

        ``box`` is an optional ``(lam_lo, lam_hi, nu_lo, nu_hi)``; minors whose
        enclosure on it excludes zero have no root there and are skipped.
        """
        ncols = self.family.d + 1
        entries = [self.row_entries(i) for i in rsub]
        out = []
        for csub in itertools.combinations(range(ncols), len(rsub)):
            g = P.det([[row[j] for j in csub] for row in entries])
            if box is not None and not g.is_zero():
                lo, hi = g.interval_eval(*box)
                if lo > 0 or hi < 0:
                    continue
            poly = self._to_univariate(g)
            if poly is not None and len(poly) > 1:
                out.append(tuple(P.primitive(poly)))
        return out

    def candidate_polys(self, rows: Sequence[int]) -> List[tuple]:
        """Polynomials whose real roots contain every feasibility change of
        the subsystem ``rows``."""
        m = self.family.m
        out = []
        for size in range(1, min(len(rows), self.family.d + 1) + 1):
            for rsub in itertools.combinations(rows, size):
                if rsub[-1] >= m:  # otherwise constant in nu
                    out.extend(self.minor_polys(rsub))
        return out

    def _to_univariate(self, g: P.Bi):
        if g.is_zero():
            return None
        if g.deg_t() <= 0:
            return g.substitute_t(0)
        # g(lam, nu) with irrational lam: eliminate lam by a resultant
        field_ = self.lam_field
        xcoeffs = [c for c in g.x_coefficients() if c]
        if all(field_(c).sign() == 0 for c in xcoeffs):
            return None
        defining = [Fraction(c) for c in field_.root.poly.coeffs]
        common = defining
        for c in xcoeffs:
            common = P.gcd_(common, c)
        # drop conjugates at which g vanishes identically in nu
        reduced = P.exact_div(defining, common) if len(common) > 1 else defining
        dt, dr = g.deg_t(), len(reduced) - 1
        xs = [Fraction(i) for i in range(g.deg_x() * dr + 1)]
        ys = [P.sylvester_resultant(g.t_coefficients_at(x), reduced, dt, dr) for x in xs]
        return P.interpolate(xs, ys)


def _roots_in(polys, lo: Number, hi: Number) -> Tuple[List[Number], bool]:
    """Distinct roots in ``(lo, hi)`` sorted ascending; flag if ``hi`` is a root."""
    wlo, whi = lower_bound(lo), upper_bound(hi)
    found: List[Number] = []
    hi_root = False
    for poly in set(polys):
        for r in isolate_roots(IntPoly(poly), wlo, whi):
            r = as_exact(r)
            if compare(r, lo) <= 0:
                continue
            c = compare(r, hi)
            if c == 0:
                hi_root = True
            elif c < 0:
                found.append(r)
    found.sort(key=functools.cmp_to_key(compare))
    distinct: List[Number] = []
    for r in found:
        if not distinct or compare(distinct[-1], r) != 0:
            distinct.append(r)
    return distinct, hi_root


def _as_result(value: Number, upper_probe) -> SigmaResult:
    value = as_exact(value)
    if isinstance(value, RealAlgebraic):
        return ExactAlg(value, upper_probe)
    return ExactRat(value, upper_probe)


# -- exact engine -------------------------------------------------------------------------


def _search_candidates(pair: _Pair, cands, lo, hi, hi_is_bound: bool = False):
    """Locate the transition given that it lies in ``[lo, hi)`` (or ``[lo, hi]``
    when ``hi_is_bound``) and is ``lo``, ``hi`` or one of the sorted ``cands``.

    Returns the transition and a rational probe above it with an infeasible pair.
    """
    points = [lo] + list(cands) + [hi]
    probes = [rational_between(points[i], points[i + 1]) for i in range(len(points) - 1)]
    # smallest i with pair(probes[i]) false
    left, right = 0, len(probes)
    while left < right:
        mid = (left + right) // 2
        if pair(probes[mid]):
            left = mid + 1
        else:
            right = mid
    if left == len(probes):
        if hi_is_bound:
            return hi, None
        raise ArithmeticError("breakpoint candidates missed the transition")
    return points[left], probes[left]


def _full_candidates(pair: _Pair, lo, hi) -> List[Number]:
    """Roots in ``(lo, hi)`` of every minor of the stacked pair system."""
    m, d = pair.family.m, pair.family.d
    lam = pair.lam
    if isinstance(lam, RealAlgebraic):
        lam = lam.refine_to(WITNESS_WIDTH)
        box = (lam.lo, lam.hi, lower_bound(lo), upper_bound(hi))
    else:
        box = (lam, lam, lower_bound(lo), upper_bound(hi))
    polys = set()
    for size in range(1, d + 2):
        for rsub in itertools.combinations(range(2 * m), size):
            if rsub[-1] >= m:
                polys.update(pair.minor_polys(rsub, box))
    return _roots_in(polys, lo, hi)[0]


def _sigma_exact(pair: _Pair, beta: Fraction) -> SigmaResult:
    """Farkas-support search.

    Invariant: the pair is feasible at ``lo`` and infeasible at ``hi`` with
    certificate ``cert``.  On the sign-invariant cell of the certificate's
    minors that contains ``hi`` the certificate's subsystem stays infeasible,
    so the transition is at most the largest root below ``hi``.
    """
    lam = pair.lam
    if compare(lam, beta) >= 0 or pair(beta):
        return ExactRat(beta)
    lo: Number = lam
    hi: Fraction = beta
    cert = pair.solve(hi)
    while True:
        support = [i for i, v in enumerate(cert.farkas) if v]
        cands, hi_root = _roots_in(pair.candidate_polys(support), lo, hi)
        below = cands[-1] if cands else lo
        if hi_root:
            r = rational_between(below, hi)
            out = pair.solve(r)
            if isinstance(out, Infeasible):
                hi, cert = r, out
                continue
            # transition lies in [r, hi) where this certificate says nothing
            value, probe = _search_candidates(pair, _full_candidates(pair, r, hi), r, hi)
            return _as_result(value, probe)
        if not cands:
            return _as_result(lo, hi)
        c = cands[-1]
        if not isinstance(c, RealAlgebraic):
            out = pair.solve(c)
            if isinstance(out, Feasible):
                return ExactRat(c, hi)
            hi, cert = c, out
            continue
        floor_ = cands[-2] if len(cands) > 1 else lo
        if pair.lam_field is not None:
            # lam and c both irrational: no exact LP at c, so probe just below it
            r = _rational_below(c, lower_bound(floor_))
            if compare(r, floor_) <= 0:
                r = rational_between(floor_, c)
            out = pair.solve(r)
            if isinstance(out, Infeasible):
                hi, cert = r, out
                continue
            value, probe = _search_candidates(
                pair, _full_candidates(pair, r, c), r, c, hi_is_bound=True
            )
            return _as_result(value, probe if probe is not None else hi)
        if pair(c):
            return ExactAlg(c, hi)
        # transition is strictly below c: find a rational infeasible probe
        while True:
            r = rational_between(floor_, c)
            out = pair.solve(r)
            if isinstance(out, Infeasible):
                hi, cert = r, out
                break
            floor_ = r


def _sigma_bisect(pair: _Pair, beta: Fraction, eps: Fraction) -> Certified:
    lam = pair.lam
    if isinstance(lam, RealAlgebraic):
        raise UnsupportedError("the bisection engine needs a rational starting point")
    if lam >= beta or pair(beta):
        return Certified(beta, beta, eps)
    lo, hi = lam, beta
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if pair(mid):
            lo = mid
        else:
            hi = mid
    return Certified(lo, hi, eps)


def sigma(family: AffineFamily, lam, engine: Engine | str = "exact") -> SigmaResult:
    """Farthest parameter whose member still meets ``P(lam)``.

    Raises :class:`EmptyMember` if ``P(lam)`` is empty and
    :class:`NotPolytope` if it is unbounded.
    """
    _require_interval_family(family)
    engine = make_engine(engine)
    lam = _coerce_number(lam)
    alpha, beta = family.domain.alpha, family.domain.beta
    if compare(lam, alpha) < 0 or compare(lam, beta) > 0:
        raise InputError(f"lambda must lie in [{alpha}, {beta}]")
    pair = _Pair(family, lam)
    pair.member_ok()
    if isinstance(engine, Bisect):
        return _sigma_bisect(pair, beta, engine.eps)
    return _sigma_exact(pair, beta)


# -- greedy chain and witnesses ----------------------------------------------------------------


def _max_slack_point(family: AffineFamily, lo: Fraction, hi: Fraction):
    """A point of ``P(lo) & P(hi)`` as deep inside both members as possible."""
    sys = member_eval(family, (lo,)).stack(member_eval(family, (hi,)))
    d = family.d
    a = [tuple(row) + (Fraction(1),) for row in sys.a]
    a.append(tuple([Fraction(0)] * d) + (Fraction(1),))
    b = list(sys.b) + [Fraction(1)]
    out = lp_optimize(tuple([Fraction(0)] * d) + (Fraction(1),), HalfspaceSystem(a, b, d + 1))
    if isinstance(out, Optimal) and out.value >= 0:
        return out.witness[:d]
    return None


def _rational_below(t: RealAlgebraic, floor_: Fraction) -> Fraction:
    """A rational just below the irrational ``t`` and not below ``floor_``."""
    if compare(floor_, t) >= 0:
        return floor_
    t = t.refine_to(WITNESS_WIDTH)
    return t.lo if t.lo > floor_ else rational_between(floor_, t)


def _extract_points(family: AffineFamily, chain: Sequence[Number]) -> List[tuple]:
    """Rational points whose dual intervals follow the breakpoint chain."""
    points = []
    reach: Fraction = family.domain.alpha
    for target in chain:
        t = as_exact(target)
        if isinstance(t, RealAlgebraic):
            t = _rational_below(t, reach)
        x = _max_slack_point(family, reach, t)
        # the pair may be infeasible when reach fell short of the breakpoint
        for _ in range(64):
            if x is not None:
                break
            t = (reach + t) / 2
            x = _max_slack_point(family, reach, t)
        if x is None:
            break
        points.append(tuple(x))
        iv = dual_interval(family, x)
        if iv is EMPTY:
            break
        reach = max(reach, iv.hi)
    return points


def verify(family: AffineFamily, points: Sequence[Sequence]) -> CoverageReport:
    """Exact check that the dual intervals of ``points`` cover the domain."""
    _require_interval_family(family)
    alpha, beta = family.domain.alpha, family.domain.beta
    ivs = [dual_interval(family, x) for x in points]
    ivs = sorted((iv for iv in ivs if iv is not EMPTY), key=lambda iv: (iv.lo, iv.hi))
    cur = None
    for iv in ivs:
        if cur is None:
            if iv.lo > alpha:
                return CoverageReport(False, (alpha, iv.lo), (True, False))
            cur = iv.hi
        elif iv.lo > cur:
            return CoverageReport(False, (cur, iv.lo), (False, False))
        else:
            cur = max(cur, iv.hi)
    if cur is None:
        return CoverageReport(False, (alpha, beta), (True, True))
    if cur < beta:
        return CoverageReport(False, (cur, beta), (False, True))
    return CoverageReport(True)


def _rational_step(res: SigmaResult, upper: bool, lam: Number) -> Fraction:
    value = as_exact(sigma_floor(res))
    if not isinstance(value, RealAlgebraic):
        return value
    value = value.refine_to(WITNESS_WIDTH)
    # snap to the dyadic grid so bit sizes stay bounded along the chain
    scale = 1 / WITNESS_WIDTH
    if upper:
        return Fraction(math.ceil(value.hi * scale)) / scale
    snapped = Fraction(math.floor(value.lo * scale)) / scale
    return snapped if compare(snapped, lam) > 0 else value.lo


def _empty_past(family: AffineFamily, bps: Sequence[SigmaResult]) -> Optional[Fraction]:
    """Look for an empty member beyond a chain that ran out of budget.

    A chain creeping towards a limit usually sits just below a stretch of
    empty members; probe outwards from the last step at doubling distances.
    """
    if not bps:
        return None
    beta = family.domain.beta
    last = upper_bound(sigma_floor(bps[-1]))
    prev = lower_bound(sigma_floor(bps[-2])) if len(bps) > 1 else family.domain.alpha
    gap = max(last - prev, WITNESS_WIDTH)
    while last < beta:
        w = min(last + gap, beta)
        if not isinstance(lp_feasible(member_eval(family, (w,))), Feasible):
            return w
        if w == beta:
            break
        gap *= 2
    return None


def _lower_chain(start: Fraction, bps: Sequence[SigmaResult]) -> List[Fraction]:
    """Replay the rounded steps of a ``"lower"`` chain."""
    out, lam = [], start
    for r in bps:
        lam = _rational_step(r, False, lam)
        out.append(lam)
    return out


def _probe_is_empty(family: AffineFamily, res: SigmaResult) -> Optional[Fraction]:
    """A rational above ``res`` (its infeasible probe or the midpoint below it)
    whose member is empty, if either is."""
    probe = res.hi if isinstance(res, Certified) else res.upper_probe
    if probe is None or probe > family.domain.beta:
        return None
    low = res.lo if isinstance(res, Certified) else lower_bound(res.value)
    for w in (probe, (low + probe) / 2):
        if not isinstance(lp_feasible(member_eval(family, (w,))), Feasible):
            return w
    return None


def _run_chain(family, start, budget, engine, mode="exact"):
    """Greedy chain from ``start`` for at most ``budget`` steps.

    ``mode`` is ``"exact"`` (follow sigma exactly, stopping with ``"switch"``
    once an irrational point exceeds the degree cap), ``"lower"`` or
    ``"upper"`` (round each step to a nearby rational below or above).
    Returns ``(status, breakpoints, last)`` with status one of ``"reached"``,
    ``"budget"``, ``"stall"``, ``"empty"`` or ``"switch"``.
    """
    beta = family.domain.beta
    lam: Number = start
    bps: List[SigmaResult] = []
    while True:
        if mode == "exact" and isinstance(lam, RealAlgebraic) and lam.poly.degree > MAX_EXACT_DEGREE:
            return "switch", bps, lam
        if len(bps) >= budget:
            return "budget", bps, lam
        try:
            res = sigma(family, lam, engine)
        except EmptyMember as exc:
            return "empty", bps, exc.omega
        empty = _probe_is_empty(family, res)
        if empty is not None:
            # the chain can only creep towards an empty member, never past it
            return "empty", bps, empty
        nxt = sigma_floor(res) if mode == "exact" else _rational_step(res, mode == "upper", lam)
        if compare(nxt, lam) <= 0 and compare(lam, beta) < 0:
            if isinstance(res, Certified):
                # the bracket cannot tell a stall from slow progress
                res = sigma(family, lam, Exact())
                nxt = sigma_floor(res) if mode == "exact" else _rational_step(res, mode == "upper", lam)
            if compare(nxt, lam) <= 0:
                return "stall", bps, lam
        bps.append(res)
        lam = nxt
        if compare(lam, beta) >= 0:
            return "reached", bps, lam


def _solution(family, breakpoints, chain, minimal) -> HittingSolution:
    points = _extract_points(family, chain)
    return HittingSolution(
        k=len(breakpoints),
        points=tuple(points),
        intervals=tuple(dual_interval(family, x) for x in points),
        breakpoints=tuple(breakpoints),
        coverage=verify(family, points),
        minimal=minimal,
    )


def hit_size(family: AffineFamily, kmax: int, engine: Engine | str = "exact") -> HitResult:
    """Run the greedy chain from ``alpha`` for at most ``kmax`` steps.

    With the exact engine, once a chain point's defining polynomial exceeds
    ``MAX_EXACT_DEGREE`` the remaining chain is sandwiched between chains
    started at rationals just below and just above it.  Since sigma is
    nondecreasing the lower chain yields a valid hitting set and the upper
    chain a lower bound on its size; ``minimal`` reports whether they agree.
    """
    _require_interval_family(family)
    engine = make_engine(engine)
    if kmax < 1:
        raise InputError("kmax must be at least 1")
    status, bps, last = _run_chain(family, family.domain.alpha, kmax, engine)
    if status == "reached":
        chain = [sigma_floor(r) for r in bps]
        return _solution(family, bps, chain, isinstance(engine, Exact))
    if status == "budget":
        empty = _empty_past(family, bps)
        if empty is not None:
            return NoFiniteHittingSet(empty, "empty member")
        return NoHittingSetUpTo(kmax, tuple(bps))
    if status == "stall":
        return NoFiniteHittingSet(last, "stall")
    if status == "empty":
        return NoFiniteHittingSet(last, "empty member")

    budget = kmax - len(bps)
    tight = last.refine_to(WITNESS_WIDTH)
    prev = sigma_floor(bps[-2]) if len(bps) > 1 else family.domain.alpha
    lower = tight.lo if compare(tight.lo, prev) > 0 else rational_between(prev, last)
    lo_status, lo_bps, lo_last = _run_chain(family, lower, budget, engine, "lower")
    up_status, up_bps, up_last = _run_chain(family, tight.hi, budget, engine, "upper")
    # an empty member found by either chain is a fact about the family
    if lo_status == "empty":
        return NoFiniteHittingSet(lo_last, "empty member")
    if up_status == "empty":
        return NoFiniteHittingSet(up_last, "empty member")
    if lo_status == "reached":
        chain = [sigma_floor(r) for r in bps] + _lower_chain(lower, lo_bps)
        minimal = up_status == "reached" and len(up_bps) == len(lo_bps)
        return _solution(family, bps + lo_bps, chain, minimal)
    # the true chain point stays below the upper chain
    if up_status == "budget":
        empty = _empty_past(family, up_bps)
        if empty is not None:
            return NoFiniteHittingSet(empty, "empty member")
        return NoHittingSetUpTo(kmax, tuple(bps))
    if up_status == "stall":
        return NoFiniteHittingSet(last, "stall")
    raise UnsupportedError(
        "could not certify the hitting set size: the chain point exceeds the "
        "algebraic degree limit and rational bounds disagree; try --engine bisect"
    )


def decide_hit(family: AffineFamily, k: int, engine: Engine | str = "exact"):
    """``(True, solution)`` iff a hitting set of size ``k`` exists.

    With the bisection engine a ``False`` answer only means the greedy chain
    over bracket lower ends needed more than ``k`` points.
    """
    res = hit_size(family, k, engine)
    if isinstance(res, HittingSolution):
        return True, res
    return False, res


__all__ = [
    "Exact",
    "Bisect",
    "make_engine",
    "DEFAULT_EPS",
    "ExactRat",
    "ExactAlg",
    "Certified",
    "SigmaResult",
    "sigma_floor",
    "CoverageReport",
    "HittingSolution",
    "NoHittingSetUpTo",
    "NoFiniteHittingSet",
    "sigma",
    "hit_size",
    "decide_hit",
    "verify",
]
