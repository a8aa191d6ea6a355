"""Exact linear programming over ordered fields.

Every routine reduces to one standard-form problem

    minimise c.y  subject to  M y = q,  y >= 0

solved by a two-phase tableau simplex with Bland's rule.  Entries may be
Fractions or elements of a real algebraic number field; only field
arithmetic and sign tests are used.

Outcomes carry certificates that can be checked without trusting the solver:
a feasible point, a Farkas vector ``y >= 0`` with ``y A = 0`` and ``y b < 0``,
or a ray ``r`` with ``A r <= 0`` and ``c r > 0``.
"""
from __future__ import annotations

import os
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .family import HalfspaceSystem
from .errors import InputError

try:  # GMP rationals make the rational pivots several times faster
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = None


@dataclass(frozen=True)
class Feasible:
    witness: tuple

    is_feasible = True


@dataclass(frozen=True)
class Infeasible:
    farkas: tuple

    is_feasible = False


@dataclass(frozen=True)
class Unbounded:
    ray: tuple

    is_feasible = True


@dataclass(frozen=True)
class Optimal:
    witness: tuple
    value: object

    is_feasible = True


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _exact(v):
    return Fraction(v) if isinstance(v, int) else v


LpOutcome = Union[Feasible, Infeasible, Unbounded, Optimal]


# -- audit hook ---------------------------------------------------------------


class _Audit:
    """Counts certificate checks when ``AFFHIT_AUDIT=1`` is set."""

    def __init__(self):
        self.checked = 0
        self.infeasible_checked = 0
        self.failures: List[str] = []

    @property
    def enabled(self) -> bool:
        return os.environ.get("AFFHIT_AUDIT") == "1"

    def reset(self):
        self.checked = 0
        self.infeasible_checked = 0
        self.failures = []

    def record(self, sys: HalfspaceSystem, outcome, c=None):
        from . import certify

        self.checked += 1
        if isinstance(outcome, Infeasible):
            self.infeasible_checked += 1
        ok, why = certify.check_outcome(sys, outcome, c)
        if not ok:
            self.failures.append(why)
            raise AssertionError(f"certificate audit failed: {why}")


AUDIT = _Audit()


def _audited(sys, outcome, c=None):
    if AUDIT.enabled:
        AUDIT.record(sys, outcome, c)
    return outcome


# -- standard-form simplex ------------------------------------------------------


@dataclass
class _Result:
    status: str  # "optimal" | "infeasible" | "unbounded"
    y: Optional[list] = None
    duals: Optional[list] = None  # optimal: pi;  infeasible: u with uM <= 0, uq > 0
    direction: Optional[list] = None  # unbounded: d >= 0, Md = 0, cd < 0


def _reduced_cost(cost, cb, T, j):
    rc = cost[j]
    for i, ci in enumerate(cb):
        if ci:
            t = T[i][j]
            if t:
                rc = rc - ci * t
    return rc


def _pivot(T, rhs, basis, r, j):
    pr = T[r]
    pv = pr[j]
    if pv != 1:
        inv = 1 / pv
        pr = [v * inv if v else v for v in pr]
        T[r] = pr
        rhs[r] = rhs[r] * inv
    nz = [k for k, v in enumerate(pr) if v]
    for i in range(len(T)):
        if i == r:
            continue
        row = T[i]
        f = row[j]
        if not f:
            continue
        for k in nz:
            row[k] = row[k] - f * pr[k]
        rhs[i] = rhs[i] - f * rhs[r]
    basis[r] = j


def _simplex(T, rhs, basis, cost, ncols_allowed):
    """Bland's rule iterations on a tableau already in canonical form.

    Returns ``None`` at optimality or the index of an entering column whose
    ratio test is unbounded.
    """
    while True:
        cb = [cost[b] for b in basis]
        in_basis = set(basis)
        enter = None
        for j in range(ncols_allowed):
            if j in in_basis:
                continue
            if _reduced_cost(cost, cb, T, j) < 0:
                enter = j
                break
        if enter is None:
            return None
        leave, best = None, None
        for i in range(len(T)):
            t = T[i][enter]
            if t > 0:
                ratio = rhs[i] / t
                if (
                    leave is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    leave, best = i, ratio
        if leave is None:
            return enter
        _pivot(T, rhs, basis, leave, enter)


def _duals(T, basis, cost, signs, ncols, zero=_ZERO):
    """``u = D c_B B^-1``; B^-1 sits in the artificial columns."""
    rows = len(T)
    out = []
    for r in range(rows):
        acc = zero
        for i in range(rows):
            ci = cost[basis[i]]
            if ci:
                t = T[i][ncols + r]
                if t:
                    acc = acc + ci * t
        out.append(-acc if signs[r] < 0 else acc)
    return out


def _solve_standard(
    M: Sequence[Sequence], q: Sequence, c: Optional[Sequence], ncols: int, zero=_ZERO, one=_ONE
) -> _Result:
    rows = len(q)
    signs = [(-1 if qi < 0 else 1) for qi in q]
    T = []
    rhs = []
    for i in range(rows):
        s = signs[i]
        row = [(-v if s < 0 else v) for v in M[i]]
        row.extend(one if k == i else zero for k in range(rows))
        T.append(row)
        rhs.append(-q[i] if s < 0 else q[i])
    basis = [ncols + i for i in range(rows)]
    total = ncols + rows

    cost1 = [zero] * ncols + [one] * rows
    _simplex(T, rhs, basis, cost1, total)
    if any(rhs[i] for i in range(rows) if basis[i] >= ncols):
        return _Result("infeasible", duals=_duals(T, basis, cost1, signs, ncols, zero))

    # drive zero-level artificials out where possible; all-zero rows are redundant
    for i in range(rows):
        if basis[i] >= ncols:
            j = next((j for j in range(ncols) if T[i][j]), None)
            if j is not None:
                _pivot(T, rhs, basis, i, j)

    cost2 = list(c) + [zero] * rows if c is not None else [zero] * total
    if c is not None and any(c):
        enter = _simplex(T, rhs, basis, cost2, ncols)
        if enter is not None:
            direction = [zero] * ncols
            direction[enter] = one
            for i, b in enumerate(basis):
                if b < ncols and T[i][enter]:
                    direction[b] = -T[i][enter]
            return _Result("unbounded", direction=direction)

    y = [zero] * ncols
    for i, b in enumerate(basis):
        if b < ncols:
            y[b] = rhs[i]
    return _Result("optimal", y=y, duals=_duals(T, basis, cost2, signs, ncols, zero))


def _is_rational(v) -> bool:
    return isinstance(v, (int, Fraction))


def _solve(M: Sequence[Sequence], q: Sequence, c: Optional[Sequence], ncols: int) -> _Result:
    """``_solve_standard`` on GMP rationals when every entry is rational."""
    entries = [v for row in M for v in row] + list(q) + list(c or ())
    if _mpq is None or not all(_is_rational(v) for v in entries):
        return _solve_standard(M, q, c, ncols)
    cv = lambda v: _mpq(v.numerator, v.denominator)  # noqa: E731
    res = _solve_standard(
        [[cv(v) for v in row] for row in M],
        [cv(v) for v in q],
        None if c is None else [cv(v) for v in c],
        ncols,
        _mpq(0),
        _mpq(1),
    )
    back = lambda vec: None if vec is None else [Fraction(int(v.numerator), int(v.denominator)) for v in vec]  # noqa: E731
    return _Result(res.status, back(res.y), back(res.duals), back(res.direction))


# -- public API -------------------------------------------------------------------


def _zero_row_conflict(sys: HalfspaceSystem):
    for i, (row, rhs) in enumerate(zip(sys.a, sys.b)):
        if rhs < 0 and not any(row):
            y = [_ZERO] * sys.n
            y[i] = _ONE
            return tuple(y)
    return None


def _normalise(vec):
    """Scale a rational certificate to coprime integers; leave field elements."""
    if not all(isinstance(v, (int, Fraction)) for v in vec):
        return tuple(vec)
    fr = [Fraction(v) for v in vec]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(fr)
    return tuple(Fraction(v // g) for v in ints)


def lp_feasible(sys: HalfspaceSystem) -> LpOutcome:
    """Decide ``{x : a x <= b}`` nonempty, with a witness or a Farkas vector."""
    n, d = sys.n, sys.d
    if n == 0:
        return _audited(sys, Feasible(tuple(Fraction(0) for _ in range(d))))
    conflict = _zero_row_conflict(sys)
    if conflict is not None:
        return _audited(sys, Infeasible(conflict))
    # Farkas system: y >= 0, a^T y = 0, b.y = -1
    M = [[sys.a[i][j] for i in range(n)] for j in range(d)]
    M.append(list(sys.b))
    q = [_ZERO] * d + [-_ONE]
    res = _solve(M, q, None, n)
    if res.status == "optimal":
        return _audited(sys, Infeasible(_normalise(res.y)))
    u = res.duals
    w = u[d]
    # u M <= 0 and u q > 0 give a v + w b <= 0 with w < 0
    x = tuple(v / (-w) for v in u[:d])
    return _audited(sys, Feasible(x))


def lp_optimize(c: Sequence, sys: HalfspaceSystem) -> LpOutcome:
    """Maximise ``c.x`` over ``{x : a x <= b}``.

    Solves the dual ``min b.y, a^T y = c, y >= 0``; its dual values give the
    primal optimum.
    """
    c = tuple(c)
    if len(c) != sys.d:
        raise InputError(f"objective has dimension {len(c)}, system expects {sys.d}")
    n, d = sys.n, sys.d
    if n == 0:
        if any(c):
            return _audited(sys, Unbounded(c), c)
        return _audited(sys, Optimal(tuple(Fraction(0) for _ in range(d)), Fraction(0)), c)
    conflict = _zero_row_conflict(sys)
    if conflict is not None:
        return _audited(sys, Infeasible(conflict), c)
    M = [[sys.a[i][j] for i in range(n)] for j in range(d)]
    res = _solve(M, [_exact(v) for v in c], list(sys.b), n)
    if res.status == "optimal":
        x = tuple(res.duals)
        value = _ZERO
        for bi, yi in zip(sys.b, res.y):
            if yi:
                value = value + bi * yi
        return _audited(sys, Optimal(x, value), c)
    if res.status == "unbounded":
        # d >= 0 with a^T d = 0 and b.d < 0 is a Farkas vector for the primal
        return _audited(sys, Infeasible(_normalise(res.direction)), c)
    # dual infeasible: u with a u <= 0 and c.u > 0; primal is unbounded or empty
    feas = lp_feasible(sys)
    if isinstance(feas, Infeasible):
        return _audited(sys, feas, c)
    return _audited(sys, Unbounded(_normalise(res.duals)), c)


def check_bounded(sys: HalfspaceSystem) -> bool:
    """True iff the recession cone ``{x : a x <= 0}`` is ``{0}``."""
    cone = HalfspaceSystem(sys.a, tuple(_ZERO for _ in sys.b), sys.d)
    for j in range(sys.d):
        for s in (1, -1):
            c = tuple(s if k == j else 0 for k in range(sys.d))
            if isinstance(lp_optimize(c, cone), Unbounded):
                return False
    return True


def farkas_support(outcome: Infeasible) -> Tuple[int, ...]:
    return tuple(i for i, v in enumerate(outcome.farkas) if v)


def is_feasible(sys: HalfspaceSystem) -> bool:
    return isinstance(lp_feasible(sys), Feasible)


__all__ = [
    "Feasible",
    "Infeasible",
    "Unbounded",
    "Optimal",
    "LpOutcome",
    "lp_feasible",
    "lp_optimize",
    "check_bounded",
    "farkas_support",
    "is_feasible",
    "AUDIT",
]
