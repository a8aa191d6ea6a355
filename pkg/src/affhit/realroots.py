"""Exact real algebraic numbers.

A :class:`RealAlgebraic` is a square-free integer polynomial together with
an isolating interval ``(lo, hi]`` containing exactly one of its real roots.
Rational roots are stored with ``lo == hi``.  Everything here is exact;
isolation uses Sturm sequences.

:class:`AlgebraicField` implements arithmetic in Q(c) for a fixed real
algebraic ``c``, with signs decided exactly through :func:`sign_at_root`.
The LP kernel runs unchanged over its elements.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import sympy

from . import _poly as P
from .errors import InputError
from .rational import approx as _approx_rat


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    @classmethod
    def from_rational(cls, coeffs: Sequence) -> "IntPoly":
        return cls(tuple(P.primitive([Fraction(c) for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def squarefree(self) -> "IntPoly":
        return IntPoly.from_rational(P.squarefree([Fraction(c) for c in self.coeffs]))

    def __call__(self, x):
        return P.evaluate(self.coeffs, x)


Number = Union[int, Fraction, "RealAlgebraic"]


@lru_cache(maxsize=4096)
def _sturm(coeffs: Tuple[int, ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    p0 = [Fraction(c) for c in coeffs]
    seq = [p0, P.derivative(p0)]
    while seq[-1]:
        r = P.rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return tuple(tuple(s) for s in seq[:-1])


def _variations(seq, x) -> int:
    count, last = 0, 0
    for s in seq:
        v = P.evaluate(s, x)
        if v == 0:
            continue
        sgn = 1 if v > 0 else -1
        if last and sgn != last:
            count += 1
        last = sgn
    return count


def count_roots(poly, lo, hi) -> int:
    """Number of distinct real roots of ``poly`` in ``(lo, hi]``."""
    coeffs = _as_int_coeffs(poly)
    if len(coeffs) <= 1:
        return 0
    sqf = tuple(P.primitive(P.squarefree([Fraction(c) for c in coeffs])))
    seq = _sturm(sqf)
    return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))


def _as_int_coeffs(poly) -> Tuple[int, ...]:
    if isinstance(poly, IntPoly):
        return poly.coeffs
    return tuple(P.primitive([Fraction(c) for c in poly]))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _root_bound(coeffs: Sequence[int]) -> Fraction:
    lc = abs(coeffs[-1])
    bound = 1 + max(Fraction(abs(c), lc) for c in coeffs[:-1])
    b = Fraction(1)
    while b < bound:
        b *= 2
    return b


@dataclass(frozen=True, eq=False)
class RealAlgebraic:
    """A real root of ``poly`` isolated in ``(lo, hi]``; ``lo == hi`` if rational."""

    poly: IntPoly
    lo: Fraction
    hi: Fraction
    index: int = 0

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational number")
        return self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> "RealAlgebraic":
        """Halve the isolating interval (or detect that the midpoint is the root)."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        vm = self.poly(mid)
        if vm == 0:
            return replace(self, lo=mid, hi=mid)
        if _sign(vm) != _sign(self.poly(self.hi)):
            return replace(self, lo=mid)
        return replace(self, hi=mid)

    def refine_to(self, width) -> "RealAlgebraic":
        r = self
        while not r.is_rational and r.width > width:
            r = r.refine()
        return r

    def __float__(self) -> float:
        r = self.refine_to(Fraction(1, 2 ** 60))
        return float((r.lo + r.hi) / 2)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"RealAlgebraic({self.hi})"
        return f"RealAlgebraic(poly={list(self.poly.coeffs)}, ({self.lo}, {self.hi}])"

    # mathematical comparisons
    def __eq__(self, other):
        if not isinstance(other, (int, Fraction, RealAlgebraic)):
            return NotImplemented
        return compare(self, other) == 0

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        if not isinstance(other, (int, Fraction, RealAlgebraic)):
            return NotImplemented
        return compare(self, other) < 0

    def __le__(self, other):
        if not isinstance(other, (int, Fraction, RealAlgebraic)):
            return NotImplemented
        return compare(self, other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (int, Fraction, RealAlgebraic)):
            return NotImplemented
        return compare(self, other) > 0

    def __ge__(self, other):
        if not isinstance(other, (int, Fraction, RealAlgebraic)):
            return NotImplemented
        return compare(self, other) >= 0

    __hash__ = None


@lru_cache(maxsize=4096)
def _factors(coeffs: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    """Irreducible factors over the integers, each primitive with positive lead."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    out = []
    for f, _ in poly.factor_list()[1]:
        if f.degree() >= 1:
            out.append(tuple(P.primitive([Fraction(int(c)) for c in reversed(f.all_coeffs())])))
    return tuple(out)


def _root_of_factor(sqf: IntPoly, lo: Fraction, hi: Fraction) -> RealAlgebraic:
    """The root of ``sqf`` in ``(lo, hi]`` described by its minimal polynomial."""
    for f in _factors(sqf.coeffs):
        if len(f) == 2:
            r = Fraction(-f[0], f[1])
            if lo < r <= hi:
                return RealAlgebraic(IntPoly(f), r, r, index=1)
            continue
        if count_roots(f, lo, hi) == 1:
            seq = _sturm(f)
            index = _variations(seq, -_root_bound(f)) - _variations(seq, lo) + 1
            return RealAlgebraic(IntPoly(f), lo, hi, index=index)
    raise ArithmeticError("isolating interval matches no irreducible factor")


def _whole_line(coeffs) -> Tuple[Fraction, Fraction]:
    sqf = P.primitive(P.squarefree([Fraction(c) for c in coeffs]))
    if len(sqf) < 2:
        return Fraction(-1), Fraction(1)
    bound = _root_bound(tuple(sqf))
    return -bound, bound


def isolate_roots(poly, lo=None, hi=None) -> List[RealAlgebraic]:
    """All distinct real roots of ``poly``, ascending, with disjoint intervals.

    With rational ``lo < hi`` only the roots in ``(lo, hi]`` are returned.
    Each root carries its minimal polynomial, so rational roots come out
    exact and irrational ones have irreducible defining polynomials.
    """
    coeffs = _as_int_coeffs(poly)
    if not coeffs:
        raise InputError("cannot isolate the roots of the zero polynomial")
    if lo is None and hi is None:
        # whole-line isolation: tighten to width 1/2 for readable output
        return [r.refine_to(Fraction(1, 2)) for r in isolate_roots(coeffs, *_whole_line(coeffs))]
    sqf = IntPoly.from_rational(P.squarefree([Fraction(c) for c in coeffs]))
    if sqf.degree < 1:
        return []
    seq = _sturm(sqf.coeffs)
    bound = _root_bound(sqf.coeffs)
    lo = -bound if lo is None else lo
    hi = bound if hi is None else hi
    lo, hi = max(Fraction(lo), -bound), min(Fraction(hi), bound)
    if lo >= hi:
        return []
    found: List[Tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _variations(seq, lo), _variations(seq, hi))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(seq, mid)
        # push right half first so the left half is processed first
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    found.sort()
    return [_root_of_factor(sqf, a, b) for a, b in found]


def _enclose(coeffs, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Interval Horner enclosure of the polynomial over ``[lo, hi]``."""
    a = b = Fraction(0)
    for c in reversed(coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def _sign_at_root(p2, r: RealAlgebraic) -> Tuple[int, RealAlgebraic]:
    coeffs = [Fraction(c) for c in (p2.coeffs if isinstance(p2, IntPoly) else p2)]
    coeffs = P.trim(coeffs)
    if not coeffs:
        return 0, r
    if r.is_rational:
        return _sign(P.evaluate(coeffs, r.hi)), r
    if len(coeffs) == 1:
        return _sign(coeffs[0]), r
    g = P.gcd_(coeffs, [Fraction(c) for c in r.poly.coeffs])
    if len(g) > 1 and count_roots(g, r.lo, r.hi) > 0:
        return 0, r
    # nonzero at the root, so a narrow enough enclosure excludes zero
    while True:
        lo, hi = _enclose(coeffs, r.lo, r.hi)
        if lo > 0:
            return 1, r
        if hi < 0:
            return -1, r
        r = r.refine()
        if r.is_rational:
            return _sign(P.evaluate(coeffs, r.hi)), r


def sign_at_root(p2, r: RealAlgebraic) -> int:
    """Exact sign (-1, 0, 1) of the polynomial ``p2`` at the real number ``r``."""
    return _sign_at_root(p2, r)[0]


def _compare_rat(a: RealAlgebraic, q: Fraction) -> int:
    if a.is_rational:
        return _sign(a.hi - q)
    if a.lo < q <= a.hi and a.poly(q) == 0:
        return 0
    while True:
        if q <= a.lo:
            return 1
        if q >= a.hi:
            return -1
        a = a.refine()
        if a.is_rational:
            return _sign(a.hi - q)


def compare(a: Number, b: Number) -> int:
    """Exact three-way comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    if not isinstance(a, RealAlgebraic) and not isinstance(b, RealAlgebraic):
        return _sign(Fraction(a) - Fraction(b))
    if not isinstance(a, RealAlgebraic):
        return -compare(b, a)
    if not isinstance(b, RealAlgebraic):
        return _compare_rat(a, Fraction(b))
    if b.is_rational:
        return _compare_rat(a, b.hi)
    if a.is_rational:
        return -_compare_rat(b, a.hi)
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo < hi:
        g = P.gcd_([Fraction(c) for c in a.poly.coeffs], [Fraction(c) for c in b.poly.coeffs])
        if len(g) > 1 and count_roots(g, lo, hi) > 0:
            return 0
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        a, b = (a.refine(), b) if a.width >= b.width else (a, b.refine())
        if a.is_rational or b.is_rational:
            return compare(a, b)


def lower_bound(a: Number) -> Fraction:
    """A rational ``q`` with ``q <= a`` (equality only if ``a`` is rational)."""
    if isinstance(a, RealAlgebraic):
        return a.lo
    return Fraction(a)


def upper_bound(a: Number) -> Fraction:
    if isinstance(a, RealAlgebraic):
        return a.hi
    return Fraction(a)


def as_exact(a: Number) -> Number:
    """Collapse rational RealAlgebraic values to Fractions."""
    if isinstance(a, RealAlgebraic) and a.is_rational:
        return a.hi
    if isinstance(a, int):
        return Fraction(a)
    return a


def rational_between(a: Number, b: Number) -> Fraction:
    """A rational strictly between ``a < b``: midpoint of refined bounds.

    Enclosures are refined to at most half the gap between them, so the
    result stays within the middle of ``(a, b)`` and repeated calls that
    move one end converge on the other.
    """
    a, b = as_exact(a), as_exact(b)
    if compare(a, b) >= 0:
        raise ValueError("rational_between needs a < b")
    while True:
        ua = a.hi if isinstance(a, RealAlgebraic) else a
        lb = b.lo if isinstance(b, RealAlgebraic) else b
        wa = a.width if isinstance(a, RealAlgebraic) else 0
        wb = b.width if isinstance(b, RealAlgebraic) else 0
        if ua < lb and 2 * max(wa, wb) <= lb - ua:
            return (ua + lb) / 2
        if isinstance(a, RealAlgebraic) and (not isinstance(b, RealAlgebraic) or a.width >= b.width):
            a = as_exact(a.refine())
        else:
            b = as_exact(b.refine())


def to_decimal(a: Number, digits: int = 12) -> str:
    a = as_exact(a)
    if isinstance(a, RealAlgebraic):
        r = a.refine_to(Fraction(1, 10 ** (digits + 3)))
        return _approx_rat((r.lo + r.hi) / 2, digits)
    return _approx_rat(a, digits)


def to_float(a: Number) -> float:
    return float(a)


# ---------------------------------------------------------------------------
# Arithmetic in Q(c)


class AlgebraicField:
    """The number field Q(c) for a fixed irrational real algebraic ``c``.

    Elements are polynomials in ``c`` reduced modulo a multiple of the
    minimal polynomial.  The modulus may shrink when an inversion exposes a
    factor not vanishing at ``c``; earlier representations stay valid.
    """

    def __init__(self, root: RealAlgebraic):
        if root.is_rational:
            raise ValueError("AlgebraicField needs an irrational generator")
        self.root = root
        self.modulus: List[Fraction] = [Fraction(c) for c in root.poly.coeffs]
        self._signs: dict = {}

    def __call__(self, coeffs) -> "FieldElement":
        return FieldElement(self, coeffs)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, [Fraction(0), Fraction(1)])

    def reduce(self, coeffs) -> Tuple[Fraction, ...]:
        c = P.trim([Fraction(v) for v in coeffs])
        if len(c) >= len(self.modulus):
            c = P.rem(c, self.modulus)
        return tuple(c)

    def sign(self, coeffs: Tuple[Fraction, ...]) -> int:
        if len(coeffs) <= 1:
            return _sign(coeffs[0]) if coeffs else 0
        s = self._signs.get(coeffs)
        if s is None:
            s, self.root = _sign_at_root(list(coeffs), self.root)
            self._signs[coeffs] = s
        return s

    def inverse(self, coeffs: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        if self.sign(coeffs) == 0:
            raise ZeroDivisionError("division by zero in algebraic field")
        g, s, _ = P.ext_gcd(list(coeffs), self.modulus)
        if len(g) > 1:
            # g divides coeffs, which is nonzero at c, so c is a root of modulus/g
            self.modulus = P.exact_div(self.modulus, g)
            g, s, _ = P.ext_gcd(list(coeffs), self.modulus)
        return self.reduce(s)

    def approx(self, coeffs, width=Fraction(1, 2 ** 64)) -> float:
        self.root = self.root.refine_to(width)
        mid = (self.root.lo + self.root.hi) / 2
        return float(P.evaluate(list(coeffs), mid))


class FieldElement:
    """An element of an :class:`AlgebraicField`; behaves like an exact number."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: AlgebraicField, coeffs):
        self.field = field
        self.coeffs = field.reduce(coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise TypeError("mixing elements of different algebraic fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other else ()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, P.add(self.coeffs, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, P.sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, P.sub(o, self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, P.mul(self.coeffs, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o) <= 1:
            if not o:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.field, [c / o[0] for c in self.coeffs])
        return FieldElement(self.field, P.mul(self.coeffs, self.field.inverse(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, P.mul(o, self.field.inverse(self.coeffs)))

    def sign(self) -> int:
        return self.field.sign(self.coeffs)

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return self.field.sign(self.field.reduce(P.sub(self.coeffs, o)))

    def __eq__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s == 0

    def __ne__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s != 0

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __bool__(self):
        return self.sign() != 0

    __hash__ = None

    def __float__(self):
        return self.field.approx(self.coeffs)

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} at {self.field.root!r})"
