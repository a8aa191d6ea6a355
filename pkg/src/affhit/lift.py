"""Lifted form of k-adaptability with a first-stage decision.

The map ``L(x_f, omega) = (x_f, omega, omega_1 x_f, ..., omega_p x_f)``
turns the bilinear terms ``omega_i * A_{f,i} x_f`` into linear ones.  In
the lifted space the problem becomes a covering question between two
affine families: ``P_hat(x_f) = L({x_f} x Omega)`` and ``Q_hat_t(x_s)``.
Only the construction lives here; no solver consumes it.

Coordinates of ``z`` (0-based): ``z[:ell]`` is ``x_f``, ``z[ell:ell+p]`` is
``omega`` and ``z[ell + p + i*ell + j] = omega_i * x_f[j]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .adaptability import AdaptInstance
from .errors import InputError, UnsupportedError
from .family import (
    AffineFamily,
    AffineMatrixMap,
    AffineVectorMap,
    HalfspaceSystem,
    Interval,
    Unrestricted,
    VPolytope,
    membership,
    member_eval,
)
from .rational import as_rat


@dataclass(frozen=True)
class SurfaceRelation:
    """``z[product] == z[first_stage] * z[omega]`` on the lifted surface."""

    product: int
    first_stage: int
    omega: int


@dataclass(frozen=True)
class LiftOutput:
    ell: int
    p: int
    d_s: int
    t: Fraction
    q_hat: AffineFamily
    # one affine map x_f -> L(x_f, v) per generator v of Omega
    p_hat_vertices: Tuple[AffineVectorMap, ...]
    surface: Tuple[SurfaceRelation, ...]

    @property
    def dim(self) -> int:
        return self.ell + self.p + self.ell * self.p

    def lift(self, x_f: Sequence, omega: Sequence) -> tuple:
        return lift_point(x_f, omega)

    def p_hat_member(self, x_f: Sequence) -> VPolytope:
        x_f = tuple(as_rat(v) for v in x_f)
        return VPolytope(tuple(v.at(x_f) for v in self.p_hat_vertices))

    def on_surface(self, z: Sequence) -> bool:
        return all(z[r.product] == z[r.first_stage] * z[r.omega] for r in self.surface)


def lifted_dim(ell: int, p: int) -> int:
    return ell + p + ell * p


def lift_point(x_f: Sequence, omega: Sequence) -> tuple:
    x_f = tuple(as_rat(v) for v in x_f)
    omega = tuple(as_rat(v) for v in omega)
    return x_f + omega + tuple(w * x for w in omega for x in x_f)


def _generators(domain) -> Tuple[tuple, ...]:
    if isinstance(domain, (Interval, VPolytope)):
        return tuple(tuple(g) for g in domain.generators())
    raise UnsupportedError("the lift needs an interval or vertex domain")


def lift_instance(inst: AdaptInstance, t) -> LiftOutput:
    if inst.ell == 0:
        raise UnsupportedError("no first-stage variables to lift; solve with adapt_decide")
    t = as_rat(t)
    fs = inst.first_stage
    ell, p, d_s, m = inst.ell, inst.p, inst.d_s, inst.m
    D = lifted_dim(ell, p)
    zero = Fraction(0)
    omega_col = lambda i: ell + i  # noqa: E731
    prod_col = lambda i, j: ell + p + i * ell + j  # noqa: E731

    # constant part of Q_hat: A_{L,0} on x_f, -b_i on omega_i, A_{L,i} on block i
    base = []
    for r in range(m):
        row = [zero] * D
        for j in range(ell):
            row[j] = fs.a_f.base[r][j]
        for i in range(p):
            row[omega_col(i)] = -inst.b.slopes[i][r]
            for j in range(ell):
                row[prod_col(i, j)] = fs.a_f.slopes[i][r][j]
        base.append(tuple(row))
    obj = [zero] * D
    for j in range(ell):
        obj[j] = fs.c_f[j]
    base.append(tuple(obj))
    rhs = tuple(inst.b.base) + (t,)

    # coefficient of x_s[j]: A_{s,i}[:, j] and c_{s,i}[j] on omega_i
    slopes, rhs_slopes = [], []
    for j in range(d_s):
        rows = []
        for r in range(m):
            row = [zero] * D
            for i in range(p):
                row[omega_col(i)] = inst.a_s.slopes[i][r][j]
            rows.append(tuple(row))
        row = [zero] * D
        for i in range(p):
            row[omega_col(i)] = inst.c_s.slopes[i][j]
        rows.append(tuple(row))
        slopes.append(tuple(rows))
        rhs_slopes.append(tuple(-inst.a_s.base[r][j] for r in range(m)) + (-inst.c_s.base[j],))

    q_hat = AffineFamily(
        AffineMatrixMap(tuple(base), tuple(slopes)),
        AffineVectorMap(rhs, tuple(rhs_slopes)),
        Unrestricted(d_s),
    )

    vertices = []
    for v in _generators(inst.omega):
        vbase = [zero] * D
        for i in range(p):
            vbase[omega_col(i)] = v[i]
        vslopes = []
        for j in range(ell):
            s = [zero] * D
            s[j] = Fraction(1)
            for i in range(p):
                s[prod_col(i, j)] = v[i]
            vslopes.append(tuple(s))
        vertices.append(AffineVectorMap(tuple(vbase), tuple(vslopes)))

    surface = tuple(
        SurfaceRelation(prod_col(i, j), j, omega_col(i)) for i in range(p) for j in range(ell)
    )
    return LiftOutput(ell, p, d_s, t, q_hat, tuple(vertices), surface)


def first_stage_member(inst: AdaptInstance, t, omega: Sequence):
    """``P_t(omega)`` over ``(x_f, x_s)``: both stages plus the objective row."""
    if inst.ell == 0:
        raise UnsupportedError("instance has no first stage")
    t = as_rat(t)
    omega = tuple(as_rat(w) for w in omega)
    if len(omega) != inst.p:
        raise InputError(f"parameter has dimension {len(omega)}, instance expects {inst.p}")
    fs = inst.first_stage
    af, a_s = fs.a_f.at(omega), inst.a_s.at(omega)
    a = [tuple(af[r]) + tuple(a_s[r]) for r in range(inst.m)]
    a.append(tuple(fs.c_f) + tuple(inst.c_s.at(omega)))
    b = tuple(inst.b.at(omega)) + (t,)
    return HalfspaceSystem(tuple(a), b, inst.ell + inst.d_s)


def lifted_membership(out: LiftOutput, z: Sequence, x_s: Sequence) -> bool:
    """``z in Q_hat_t(x_s)``."""
    return membership(z, member_eval(out.q_hat, tuple(x_s)))


__all__ = [
    "SurfaceRelation",
    "LiftOutput",
    "lift_instance",
    "lift_point",
    "lifted_dim",
    "first_stage_member",
    "lifted_membership",
]
