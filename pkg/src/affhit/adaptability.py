"""k-adaptability with one uncertain parameter and no first-stage decision.

The value of the problem is at most ``t`` exactly when the family ``P_t``
(second-stage rows plus the objective row ``c_s(omega) x <= t``) admits a
hitting set of size ``k``.  Deciding that is a greedy hitting-set run;
optimising over ``t`` is a monotone bisection on top of it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import EmptyMember, InputError, UnsupportedError
from .family import (
    AffineFamily,
    AffineMatrixMap,
    AffineVectorMap,
    Interval,
    ParameterDomain,
    member_eval,
    membership,
)
from .greedy import (
    CoverageReport,
    Engine,
    HittingSolution,
    NoFiniteHittingSet,
    hit_size,
    make_engine,
)
from .rational import as_rat, as_vector

BRACKET_CAP = Fraction(2) ** 60


@dataclass(frozen=True)
class FirstStage:
    """First-stage data: ``A_f(omega)`` (m x ell) and the cost ``c_f``."""

    a_f: AffineMatrixMap
    c_f: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c_f", as_vector(self.c_f))
        if self.a_f.d != len(self.c_f):
            raise InputError("c_f must have one entry per first-stage variable")

    @property
    def ell(self) -> int:
        return len(self.c_f)


@dataclass(frozen=True)
class AdaptInstance:
    a_s: AffineMatrixMap
    b: AffineVectorMap
    c_s: AffineVectorMap
    omega: ParameterDomain
    # optional per-variable bounds (lo, hi) on the second-stage point
    box: Optional[Tuple[Tuple[Fraction, Fraction], ...]] = None
    first_stage: Optional[FirstStage] = None

    def __post_init__(self):
        if self.a_s.m != self.b.m:
            raise InputError(f"A_s has {self.a_s.m} rows but b has {self.b.m}")
        if self.c_s.m != self.a_s.d:
            raise InputError(f"c_s has length {self.c_s.m}, expected {self.a_s.d}")
        if not (self.a_s.p == self.b.p == self.c_s.p == self.omega.dim):
            raise InputError("A_s, b, c_s and the domain must share the parameter dimension")
        if self.box is not None:
            box = tuple((as_rat(lo), as_rat(hi)) for lo, hi in self.box)
            if len(box) != self.a_s.d:
                raise InputError(f"box needs {self.a_s.d} bounds, got {len(box)}")
            if any(lo > hi for lo, hi in box):
                raise InputError("box bounds need lo <= hi")
            object.__setattr__(self, "box", box)
        fs = self.first_stage
        if fs is not None and (fs.a_f.m != self.a_s.m or fs.a_f.p != self.a_s.p):
            raise InputError("A_f must have the rows and parameters of A_s")

    @property
    def m(self) -> int:
        return self.a_s.m

    @property
    def d_s(self) -> int:
        return self.a_s.d

    @property
    def p(self) -> int:
        return self.a_s.p

    @property
    def ell(self) -> int:
        return 0 if self.first_stage is None else self.first_stage.ell

    @classmethod
    def from_arrays(cls, A0, A, b0, b, c0, c, omega, box=None) -> "AdaptInstance":
        if isinstance(omega, tuple) and len(omega) == 2 and not isinstance(omega[0], (tuple, list)):
            omega = Interval(*omega)
        return cls(
            AffineMatrixMap(A0, tuple(A)),
            AffineVectorMap(b0, tuple(b)),
            AffineVectorMap(c0, tuple(c)),
            omega,
            box,
        )


def build_pt(inst: AdaptInstance, t) -> AffineFamily:
    """Second-stage rows, the objective row at level ``t``, then the box rows."""
    if inst.ell > 0:
        raise UnsupportedError("first-stage decisions need the lifted construction")
    t = as_rat(t)
    d, p = inst.d_s, inst.p
    zero_row = tuple(Fraction(0) for _ in range(d))
    base = list(inst.a_s.base) + [inst.c_s.base]
    slopes = [list(s) + [inst.c_s.slopes[i]] for i, s in enumerate(inst.a_s.slopes)]
    rhs = list(inst.b.base) + [t]
    rhs_slopes = [list(s) + [Fraction(0)] for s in inst.b.slopes]
    for j, (lo, hi) in enumerate(inst.box or ()):
        e = tuple(Fraction(1) if k == j else Fraction(0) for k in range(d))
        base += [e, tuple(-v for v in e)]
        rhs += [hi, -lo]
        for i in range(p):
            slopes[i] += [zero_row, zero_row]
            rhs_slopes[i] += [Fraction(0), Fraction(0)]
    return AffineFamily(
        AffineMatrixMap(tuple(base), tuple(tuple(s) for s in slopes)),
        AffineVectorMap(tuple(rhs), tuple(tuple(s) for s in rhs_slopes)),
        inst.omega,
    )


@dataclass(frozen=True)
class AdaptDecision:
    """Truthy iff the value is at most ``t``; keeps the evidence either way."""

    holds: bool
    t: Fraction
    k: int
    solution: Optional[HittingSolution] = None
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _check_solver_instance(inst: AdaptInstance, k: int):
    if inst.ell > 0:
        raise UnsupportedError("first-stage decisions need the lifted construction")
    if not isinstance(inst.omega, Interval):
        raise UnsupportedError("the adaptability solver needs an interval of uncertainty")
    if k < 1:
        raise InputError("k must be at least 1")


def adapt_decide(inst: AdaptInstance, k: int, t, engine: Engine | str = "exact") -> AdaptDecision:
    """Is the k-adaptability value at most ``t``?

    An empty member means no candidate set works at this ``t``; that is
    reported as a negative answer with a diagnostic rather than an error.
    """
    _check_solver_instance(inst, k)
    t = as_rat(t)
    family = build_pt(inst, t)
    try:
        res = hit_size(family, k, engine)
    except EmptyMember as exc:
        return AdaptDecision(False, t, k, diagnostic=f"empty member at omega={exc.omega}")
    if isinstance(res, HittingSolution):
        if not res.coverage.covered:
            # never report a set that does not cover; treat as undecided-false
            return AdaptDecision(False, t, k, res, f"witnesses leave {res.coverage.describe()}")
        return AdaptDecision(True, t, k, res)
    if isinstance(res, NoFiniteHittingSet):
        why = "empty member" if res.reason == "empty member" else "greedy chain stalls"
        return AdaptDecision(False, t, k, diagnostic=f"{why} at omega={res.stall}")
    return AdaptDecision(False, t, k, diagnostic=f"more than {k} points needed")


@dataclass(frozen=True)
class AdaptResult:
    """Value bracket ``(lo, hi]``: the decision fails at ``lo`` and holds at ``hi``."""

    lo: Fraction
    hi: Fraction
    witnesses: Tuple[tuple, ...]
    k: int
    coverage: CoverageReport = field(default_factory=lambda: CoverageReport(True))
    probes: int = 0


class AdaptInfeasible(UnsupportedError):
    """No probed level ``t`` up to the cap admits ``k`` candidates."""

    def __init__(self, k: int, cap: Fraction, diagnostic: str = ""):
        self.k = k
        self.cap = cap
        super().__init__(f"no {k}-adaptable solution with value <= {cap}; {diagnostic}".rstrip("; "))


class AdaptUnbounded(UnsupportedError):
    """The decision holds at ``-cap``: the value is (numerically) unbounded below."""


def _auto_bracket(decide, cap: Fraction):
    at_zero = decide(Fraction(0))
    if at_zero:
        step = Fraction(1)
        hi_dec = at_zero
        while step <= cap:
            dec = decide(-step)
            if not dec:
                return -step, hi_dec
            hi_dec = dec
            step *= 2
        raise AdaptUnbounded(f"decision still holds at t={-cap}")
    step = Fraction(1)
    last = at_zero
    while step <= cap:
        dec = decide(step)
        if dec:
            return step / 2 if step > 1 else Fraction(0), dec
        last = dec
        step *= 2
    raise AdaptInfeasible(last.k, cap, last.diagnostic)


def adapt_optimize(
    inst: AdaptInstance,
    k: int,
    eps,
    engine: Engine | str = "exact",
    bracket: Optional[Sequence] = None,
    cap: Fraction = BRACKET_CAP,
) -> AdaptResult:
    """Bisect on ``t`` until the bracket is at most ``eps`` wide.

    ``bracket`` may supply ``(t_lo, t_hi)`` with the decision false at
    ``t_lo`` and true at ``t_hi``; both are checked.  Without it the bracket
    is found by doubling away from ``t = 0``.
    """
    _check_solver_instance(inst, k)
    eps = as_rat(eps)
    if eps <= 0:
        raise InputError("eps must be positive")
    engine = make_engine(engine)
    probes = 0

    def decide(t):
        nonlocal probes
        probes += 1
        return adapt_decide(inst, k, t, engine)

    if bracket is None:
        lo, best = _auto_bracket(decide, cap)
    else:
        lo, hi = as_rat(bracket[0]), as_rat(bracket[1])
        if lo >= hi:
            raise InputError("bracket needs t_lo < t_hi")
        if decide(lo):
            raise InputError(f"decision already holds at t_lo={lo}")
        best = decide(hi)
        if not best:
            raise AdaptInfeasible(k, hi, best.diagnostic)
    hi = best.t
    while hi - lo > eps:
        mid = (lo + hi) / 2
        dec = decide(mid)
        if dec:
            hi, best = mid, dec
        else:
            lo = mid
    sol = best.solution
    return AdaptResult(lo, hi, sol.points, k, sol.coverage, probes)


def select_witness(inst: AdaptInstance, witnesses: Sequence[Sequence], omega, t):
    """Index of the cheapest witness feasible at ``omega`` within level ``t``, or None."""
    family = build_pt(inst, t)
    sys = member_eval(family, omega)
    best, best_cost = None, None
    c = inst.c_s.at(omega if isinstance(omega, (tuple, list)) else (omega,))
    for i, x in enumerate(witnesses):
        if membership(x, sys):
            cost = sum(ci * xi for ci, xi in zip(c, x))
            if best is None or cost < best_cost:
                best, best_cost = i, cost
    return best


__all__ = [
    "AdaptInstance",
    "FirstStage",
    "AdaptDecision",
    "AdaptResult",
    "AdaptInfeasible",
    "AdaptUnbounded",
    "build_pt",
    "adapt_decide",
    "adapt_optimize",
    "select_witness",
    "BRACKET_CAP",
]
