"""Independent checks of LP certificates.

Nothing here calls the solver; each check is a direct evaluation of the
defining identities in exact arithmetic.
"""
from __future__ import annotations

from typing import Sequence, Tuple


def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def check_witness(a, b, x) -> bool:
    return all(_dot(row, x) <= rhs for row, rhs in zip(a, b))


def check_farkas(a, b, y, d: int) -> bool:
    """``y >= 0``, ``y^T a = 0`` and ``y^T b < 0``."""
    if len(y) != len(b):
        return False
    if any(v < 0 for v in y):
        return False
    for j in range(d):
        if _dot([row[j] for row in a], y) != 0:
            return False
    return _dot(b, y) < 0


def check_ray(a, c, r) -> bool:
    """``a r <= 0`` and ``c^T r > 0``."""
    return all(_dot(row, r) <= 0 for row in a) and _dot(c, r) > 0


def check_outcome(sys, outcome, c: Sequence | None = None) -> Tuple[bool, str]:
    from .ratlp import Feasible, Infeasible, Optimal, Unbounded

    a, b, d = sys.a, sys.b, sys.d
    if isinstance(outcome, Feasible):
        ok = len(outcome.witness) == d and check_witness(a, b, outcome.witness)
        return ok, "" if ok else "feasible witness violates a constraint"
    if isinstance(outcome, Infeasible):
        ok = check_farkas(a, b, outcome.farkas, d)
        return ok, "" if ok else "Farkas vector fails y>=0, yA=0, yb<0"
    if isinstance(outcome, Unbounded):
        ok = c is not None and check_ray(a, c, outcome.ray) and True
        return ok, "" if ok else "ray fails Ar<=0, cr>0"
    if isinstance(outcome, Optimal):
        ok = check_witness(a, b, outcome.witness) and (
            c is None or _dot(c, outcome.witness) == outcome.value
        )
        return ok, "" if ok else "optimal witness infeasible or value mismatch"
    return False, f"unknown outcome {outcome!r}"
