"""Dense univariate and sparse bivariate polynomial arithmetic over Q.

Univariate polynomials are lists of coefficients, lowest degree first, with
no trailing zeros (the zero polynomial is ``[]``).  Bivariate polynomials are
dicts mapping ``(i, j)`` exponent pairs to nonzero coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

Poly = List[Fraction]
BiPoly = Dict[Tuple[int, int], Fraction]


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(p) - 1


def const(c) -> Poly:
    return trim([Fraction(c)])


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, [-c for c in q])


def scale(c, p: Sequence) -> Poly:
    if c == 0:
        return []
    return [c * a for a in p]


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    dq, lq = len(q) - 1, Fraction(q[-1])
    if len(r) - 1 < dq:
        return [], trim(r)
    quo = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        coef = r[k + dq] / lq
        quo[k] = coef
        if coef:
            for j, b in enumerate(q):
                r[k + j] -= coef * b
    return trim(quo), trim(r[:dq])


def rem(p: Sequence, q: Sequence) -> Poly:
    return divmod_(p, q)[1]


def monic(p: Sequence) -> Poly:
    if not p:
        return []
    lc = Fraction(p[-1])
    return [Fraction(c) / lc for c in p]


def gcd_(p: Sequence, q: Sequence) -> Poly:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def ext_gcd(p: Sequence, q: Sequence) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [], []
    lc = Fraction(r0[-1])
    return monic(r0), scale(1 / lc, s0), scale(1 / lc, t0)


def exact_div(p: Sequence, q: Sequence) -> Poly:
    quo, r = divmod_(p, q)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return quo


def squarefree(p: Sequence) -> Poly:
    p = trim(p)
    if len(p) <= 2:
        return p
    g = gcd_(p, derivative(p))
    if len(g) <= 1:
        return p
    return exact_div(p, g)


def primitive(p: Sequence) -> list[int]:
    """Scale a rational polynomial to coprime integers, positive leading term."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def compose_linear(p: Sequence, a, b) -> Poly:
    """Return ``p(a + b*x)``."""
    out: Poly = []
    power: Poly = [Fraction(1)]
    lin = trim([Fraction(a), Fraction(b)])
    for c in p:
        out = add(out, scale(c, power))
        power = mul(power, lin)
    return out


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Newton interpolation through the points ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: Poly = []
    for i in range(n - 1, -1, -1):
        out = add(mul(out, [-Fraction(xs[i]), Fraction(1)]), [coef[i]])
    return out


def det(matrix: Sequence[Sequence]):
    """Determinant of a small square matrix over any commutative ring.

    Cofactor expansion along the first row; entries only need ``+``, ``-``
    and ``*``.  Intended for sizes up to about five.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor)
        if total is None:
            total = term if j % 2 == 0 else -term
        elif j % 2 == 0:
            total = total + term
        else:
            total = total - term
    return total


def det_field(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over Q (any size)."""
    a = [list(map(Fraction, row)) for row in matrix]
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        pv = a[col][col]
        result *= pv
        for r in range(col + 1, n):
            f = a[r][col] / pv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return result


def sylvester_resultant(p: Sequence, q: Sequence, dp: int, dq: int) -> Fraction:
    """Resultant of ``p`` and ``q`` taken with formal degrees ``dp``, ``dq``."""
    p = list(p) + [Fraction(0)] * (dp + 1 - len(p))
    q = list(q) + [Fraction(0)] * (dq + 1 - len(q))
    size = dp + dq
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(dq):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(p)):
            row[i + k] = c
        rows.append(row)
    for i in range(dp):
        row = [Fraction(0)] * size
        for k, c in enumerate(reversed(q)):
            row[i + k] = c
        rows.append(row)
    return det_field(rows)


def _ipow(lo, hi, n):
    if n == 0:
        return Fraction(1), Fraction(1)
    a, b = lo ** n, hi ** n
    if n % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(a, b)
    return min(a, b), max(a, b)


class Bi:
    """Bivariate polynomial in (t, x) supporting ring operations.

    Thin wrapper so that :func:`det` can run on matrices of bivariate
    entries.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: BiPoly | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def affine(cls, c0, ct=0, cx=0) -> "Bi":
        return cls({(0, 0): Fraction(c0), (1, 0): Fraction(ct), (0, 1): Fraction(cx)})

    def __add__(self, other: "Bi") -> "Bi":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Bi(out)

    def __neg__(self) -> "Bi":
        return Bi({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Bi") -> "Bi":
        return self + (-other)

    def __mul__(self, other: "Bi") -> "Bi":
        out: BiPoly = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return Bi(out)

    def is_zero(self) -> bool:
        return not self.terms

    def deg_t(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_x(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def x_coefficients(self) -> list[Poly]:
        """Coefficients in ``x`` as univariate polynomials in ``t``."""
        n = self.deg_x() + 1
        out: list[list[Fraction]] = [[Fraction(0)] * (self.deg_t() + 1) for _ in range(n)]
        for (i, j), v in self.terms.items():
            out[j][i] += v
        return [trim(c) for c in out]

    def interval_eval(self, tlo, thi, xlo, xhi) -> tuple:
        """Rigorous enclosure of the values on the box [tlo,thi] x [xlo,xhi]."""
        lo = hi = Fraction(0)
        for (i, j), v in self.terms.items():
            plo, phi = _ipow(tlo, thi, i)
            qlo, qhi = _ipow(xlo, xhi, j)
            prods = (plo * qlo, plo * qhi, phi * qlo, phi * qhi)
            a, b = min(prods), max(prods)
            if v > 0:
                lo, hi = lo + v * a, hi + v * b
            else:
                lo, hi = lo + v * b, hi + v * a
        return lo, hi

    def t_coefficients_at(self, x) -> Poly:
        """Substitute ``x`` and return the polynomial in ``t``."""
        out = [Fraction(0)] * (self.deg_t() + 1)
        for (i, j), v in self.terms.items():
            out[i] += v * Fraction(x) ** j
        return trim(out)

    def substitute_t(self, t) -> Poly:
        """Substitute a rational ``t`` and return the polynomial in ``x``."""
        out = [Fraction(0)] * (self.deg_x() + 1)
        for (i, j), v in self.terms.items():
            out[j] += v * Fraction(t) ** i
        return trim(out)
