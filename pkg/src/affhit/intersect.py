"""Points common to every member of a family.

Because each constraint row is affine in the parameter, a point lies in
every member over a convex domain iff it lies in the members at the domain's
generators (interval endpoints or listed vertices).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .family import AffineFamily, HalfspaceSystem, Interval, VPolytope, member_eval
from .errors import UnsupportedError
from .ratlp import LpOutcome, lp_feasible


@dataclass(frozen=True)
class IntersectionSystem:
    sys: HalfspaceSystem
    generators: Tuple[tuple, ...]


def common_intersection(family: AffineFamily) -> IntersectionSystem:
    """Stack the member systems at every generator of the domain."""
    if not isinstance(family.domain, (Interval, VPolytope)):
        raise UnsupportedError("common intersection needs an interval or vertex domain")
    gens = family.domain.generators()
    systems = [member_eval(family, g) for g in gens]
    return IntersectionSystem(systems[0].stack(*systems[1:]), tuple(gens))


def hit_one_point(family: AffineFamily) -> LpOutcome:
    """A single point in every member, or a Farkas proof that none exists."""
    return lp_feasible(common_intersection(family).sys)
