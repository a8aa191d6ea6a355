"""Exact rational scalars, vectors and matrices.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors and matrices are plain tuples so that every value in
the package is immutable and hashable.
"""
from __future__ import annotations

import numbers
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import InputError

Rat = Fraction
RatVector = Tuple[Fraction, ...]
RatMatrix = Tuple[RatVector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(value) -> Fraction:
    """Convert ``value`` to a Fraction without losing information.

    Accepts ints, Fractions, strings such as ``"3/4"``, ``"-2"`` or
    ``"0.125"``.  Floats are read through their shortest repr, so ``0.7``
    becomes ``7/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise InputError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    # numpy scalars and the like
    if hasattr(value, "item"):
        return as_rat(value.item())
    raise InputError(f"not a rational number: {value!r}")


def as_vector(values: Iterable, dim: int | None = None) -> RatVector:
    try:
        vec = tuple(as_rat(v) for v in values)
    except TypeError as exc:
        raise InputError(f"expected a vector, got {values!r}") from exc
    if dim is not None and len(vec) != dim:
        raise InputError(f"expected a vector of length {dim}, got {len(vec)}")
    return vec


def as_matrix(rows: Iterable, shape: tuple[int, int] | None = None) -> RatMatrix:
    try:
        mat = tuple(as_vector(r) for r in rows)
    except TypeError as exc:
        raise InputError(f"expected a matrix, got {rows!r}") from exc
    if mat and len({len(r) for r in mat}) != 1:
        raise InputError("ragged matrix rows")
    if shape is not None:
        m, d = shape
        if len(mat) != m or (m and len(mat[0]) != d):
            got = (len(mat), len(mat[0]) if mat else 0)
            raise InputError(f"expected a {m}x{d} matrix, got {got[0]}x{got[1]}")
    return mat


def zeros(n: int) -> RatVector:
    return (ZERO,) * n


def zero_matrix(m: int, d: int) -> RatMatrix:
    return tuple(zeros(d) for _ in range(m))


def dot(u: Sequence, v: Sequence):
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def mat_vec(a: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in a)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def mat_add(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_scale(c, a: Sequence[Sequence]) -> tuple:
    return tuple(vec_scale(c, r) for r in a)


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> tuple:
    if not a:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*a))


def fmt_rat(q) -> str:
    """Serialize a rational as ``"n"`` or ``"n/d"``."""
    q = as_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def approx(q, digits: int = 12) -> str:
    """Decimal string of a rational, rounded to ``digits`` places."""
    q = as_rat(q)
    with localcontext() as ctx:
        ctx.prec = max(50, digits + len(str(abs(q.numerator) // q.denominator)) + 5)
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return f"{value.quantize(Decimal(1).scaleb(-digits)):f}"
