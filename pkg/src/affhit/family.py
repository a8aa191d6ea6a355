"""Affine families of polyhedra P(omega) = {x : A(omega) x <= b(omega)}.

The maps are stored in coordinates, ``A(omega) = A0 + sum_i omega_i A_i``
and likewise for ``b``.  All data is exact and immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .errors import InputError, UnsupportedError
from .rational import (
    RatMatrix,
    RatVector,
    ZERO,
    as_matrix,
    as_rat,
    as_vector,
    dot,
)


@dataclass(frozen=True)
class AffineMatrixMap:
    """``omega -> base + sum_i omega_i * slopes[i]`` for m x d matrices."""

    base: RatMatrix
    slopes: Tuple[RatMatrix, ...]

    def __post_init__(self):
        base = as_matrix(self.base)
        shape = (len(base), len(base[0]) if base else 0)
        slopes = tuple(as_matrix(s) for s in self.slopes)
        for s in slopes:
            if len(s) != shape[0] or (s and len(s[0]) != shape[1]):
                raise InputError("slope matrices must share the base matrix shape")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slopes", slopes)

    @property
    def m(self) -> int:
        return len(self.base)

    @property
    def d(self) -> int:
        if self.base:
            return len(self.base[0])
        return len(self.slopes[0][0]) if self.slopes and self.slopes[0] else 0

    @property
    def p(self) -> int:
        return len(self.slopes)

    def at(self, omega: Sequence) -> tuple:
        out = [list(row) for row in self.base]
        for w, s in zip(omega, self.slopes):
            if w == 0:
                continue
            for i, row in enumerate(s):
                for j, v in enumerate(row):
                    if v:
                        out[i][j] = out[i][j] + w * v
        return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class AffineVectorMap:
    """``omega -> base + sum_i omega_i * slopes[i]`` for length-m vectors."""

    base: RatVector
    slopes: Tuple[RatVector, ...]

    def __post_init__(self):
        base = as_vector(self.base)
        slopes = tuple(as_vector(s, len(base)) for s in self.slopes)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slopes", slopes)

    @property
    def m(self) -> int:
        return len(self.base)

    @property
    def p(self) -> int:
        return len(self.slopes)

    def at(self, omega: Sequence) -> tuple:
        out = list(self.base)
        for w, s in zip(omega, self.slopes):
            if w == 0:
                continue
            for i, v in enumerate(s):
                if v:
                    out[i] = out[i] + w * v
        return tuple(out)


# -- parameter domains -------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = as_rat(self.alpha), as_rat(self.beta)
        if a > b:
            raise InputError(f"interval needs alpha <= beta, got [{a}, {b}]")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def dim(self) -> int:
        return 1

    def generators(self) -> Tuple[RatVector, ...]:
        if self.alpha == self.beta:
            return ((self.alpha,),)
        return ((self.alpha,), (self.beta,))


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite vertex list."""

    vertices: Tuple[RatVector, ...]

    def __post_init__(self):
        verts = tuple(as_vector(v) for v in self.vertices)
        if not verts:
            raise InputError("a vertex domain needs at least one vertex")
        if len({len(v) for v in verts}) != 1:
            raise InputError("domain vertices must share one dimension")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def generators(self) -> Tuple[RatVector, ...]:
        return self.vertices


@dataclass(frozen=True)
class Unrestricted:
    """All of R^dim; produced by :func:`dual_family`."""

    dim: int

    def generators(self):
        raise UnsupportedError("an unrestricted domain has no finite generator set")


ParameterDomain = Union[Interval, VPolytope, Unrestricted]


# -- systems and families ------------------------------------------------------


def _exact(v):
    # field elements pass through; plain numbers become Fractions
    return as_rat(v) if isinstance(v, (int, str, float)) else v


@dataclass(frozen=True)
class HalfspaceSystem:
    """The concrete system ``a x <= b``."""

    a: tuple
    b: tuple
    d: int = -1

    def __post_init__(self):
        a = tuple(tuple(_exact(v) for v in r) for r in self.a)
        b = tuple(_exact(v) for v in self.b)
        if len(a) != len(b):
            raise InputError(f"system has {len(a)} rows but {len(b)} right-hand sides")
        d = self.d if self.d >= 0 else (len(a[0]) if a else 0)
        if any(len(r) != d for r in a):
            raise InputError("system rows must all have length d")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return len(self.b)

    def stack(self, *others: "HalfspaceSystem") -> "HalfspaceSystem":
        a, b = list(self.a), list(self.b)
        for o in others:
            if o.d != self.d:
                raise InputError("cannot stack systems of different dimension")
            a.extend(o.a)
            b.extend(o.b)
        return HalfspaceSystem(tuple(a), tuple(b), self.d)


@dataclass(frozen=True)
class AffineFamily:
    a: AffineMatrixMap
    b: AffineVectorMap
    domain: ParameterDomain

    def __post_init__(self):
        if self.a.m != self.b.m:
            raise InputError(f"A has {self.a.m} rows but b has {self.b.m}")
        if self.a.p != self.b.p:
            raise InputError("A and b must depend on the same number of parameters")
        if self.a.p < 1:
            raise InputError("a family needs at least one parameter")
        if self.domain.dim != self.a.p:
            raise InputError(
                f"domain has dimension {self.domain.dim}, parameters have {self.a.p}"
            )

    @property
    def m(self) -> int:
        return self.a.m

    @property
    def d(self) -> int:
        return self.a.d

    @property
    def p(self) -> int:
        return self.a.p

    @property
    def dims(self) -> Tuple[int, int, int]:
        return self.m, self.d, self.p

    @classmethod
    def from_arrays(cls, A0, A, b0, b, domain) -> "AffineFamily":
        """Build a family from nested sequences of rationals.

        ``A`` and ``b`` hold one slope matrix (vector) per parameter; a domain
        given as a pair ``(alpha, beta)`` becomes an :class:`Interval`.
        """
        if isinstance(domain, tuple) and len(domain) == 2 and not isinstance(
            domain[0], (tuple, list)
        ):
            domain = Interval(domain[0], domain[1])
        return cls(AffineMatrixMap(A0, tuple(A)), AffineVectorMap(b0, tuple(b)), domain)


def _check_param(family: AffineFamily, omega) -> tuple:
    omega = tuple(omega) if isinstance(omega, (tuple, list)) else (omega,)
    if len(omega) != family.p:
        raise InputError(f"parameter has dimension {len(omega)}, family expects {family.p}")
    return tuple(_exact(w) for w in omega)


def member_eval(family: AffineFamily, omega) -> HalfspaceSystem:
    """The member P(omega) as a concrete system; omega need not lie in the domain."""
    omega = _check_param(family, omega)
    return HalfspaceSystem(family.a.at(omega), family.b.at(omega), family.d)


def membership(x: Sequence, sys: HalfspaceSystem) -> bool:
    """True iff ``x`` satisfies every row of ``sys`` (closed halfspaces)."""
    x = tuple(x)
    if len(x) != sys.d:
        raise InputError(f"point has dimension {len(x)}, system expects {sys.d}")
    return all(dot(row, x) <= rhs for row, rhs in zip(sys.a, sys.b))


def dual_family(family: AffineFamily) -> AffineFamily:
    """The dual family x -> {omega : A(omega) x <= b(omega)}.

    Ambient and parameter dimensions swap; the row count is kept.  The result
    lives on an :class:`Unrestricted` domain; restrict it explicitly.
    """
    m, d, p = family.dims
    A0, As = family.a.base, family.a.slopes
    b0, bs = family.b.base, family.b.slopes
    # column i of the dual matrix is A_i x - b_i
    dual_base = tuple(tuple(-bs[i][r] for i in range(p)) for r in range(m))
    dual_slopes = tuple(
        tuple(tuple(As[i][r][j] for i in range(p)) for r in range(m)) for j in range(d)
    )
    rhs_base = b0
    rhs_slopes = tuple(tuple(-A0[r][j] for r in range(m)) for j in range(d))
    return AffineFamily(
        AffineMatrixMap(dual_base, dual_slopes),
        AffineVectorMap(rhs_base, rhs_slopes),
        Unrestricted(d),
    )


@dataclass(frozen=True)
class EmptyInterval:
    def __repr__(self):
        return "EMPTY"

    @property
    def is_empty(self) -> bool:
        return True


EMPTY = EmptyInterval()


@dataclass(frozen=True)
class RatInterval:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("RatInterval needs lo <= hi; use EMPTY instead")

    @property
    def is_empty(self) -> bool:
        return False

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


def dual_interval(family: AffineFamily, x: Sequence) -> Union[RatInterval, EmptyInterval]:
    """Exact ``{omega in [alpha, beta] : x in P(omega)}`` for one-parameter families."""
    if family.p != 1:
        raise UnsupportedError("dual_interval needs a one-parameter family")
    if not isinstance(family.domain, Interval):
        raise UnsupportedError("dual_interval needs an interval domain")
    x = tuple(as_rat(v) for v in x)
    if len(x) != family.d:
        raise InputError(f"point has dimension {len(x)}, family expects {family.d}")
    lo, hi = family.domain.alpha, family.domain.beta
    A0, A1 = family.a.base, family.a.slopes[0]
    b0, b1 = family.b.base, family.b.slopes[0]
    for r in range(family.m):
        # row reads  c + omega * s <= 0
        c = dot(A0[r], x) - b0[r]
        s = dot(A1[r], x) - b1[r]
        if s > 0:
            hi = min(hi, -c / s)
        elif s < 0:
            lo = max(lo, -c / s)
        elif c > 0:
            return EMPTY
        if lo > hi:
            return EMPTY
    return RatInterval(lo, hi)


def restrict_domain(family: AffineFamily, domain: ParameterDomain) -> AffineFamily:
    if domain.dim != family.p:
        raise InputError(f"domain has dimension {domain.dim}, family expects {family.p}")
    return AffineFamily(family.a, family.b, domain)


__all__ = [
    "AffineMatrixMap",
    "AffineVectorMap",
    "Interval",
    "VPolytope",
    "Unrestricted",
    "ParameterDomain",
    "HalfspaceSystem",
    "AffineFamily",
    "EmptyInterval",
    "EMPTY",
    "RatInterval",
    "member_eval",
    "membership",
    "dual_family",
    "dual_interval",
    "restrict_domain",
    "ZERO",
]
