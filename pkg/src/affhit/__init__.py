"""Exact hitting sets for affine families of polytopes, with a k-adaptability solver."""
__version__ = "0.1.0"

from .errors import AffhitError, EmptyMember, InputError, NotPolytope, UnsupportedError
from .family import (
    EMPTY,
    AffineFamily,
    AffineMatrixMap,
    AffineVectorMap,
    HalfspaceSystem,
    Interval,
    RatInterval,
    Unrestricted,
    VPolytope,
    dual_family,
    dual_interval,
    member_eval,
    membership,
    restrict_domain,
)
from .ratlp import (
    Feasible,
    Infeasible,
    Optimal,
    Unbounded,
    check_bounded,
    lp_feasible,
    lp_optimize,
)
from .realroots import RealAlgebraic, compare, isolate_roots, sign_at_root
from .intersect import common_intersection, hit_one_point
from .greedy import (
    Bisect,
    Certified,
    CoverageReport,
    Exact,
    ExactAlg,
    ExactRat,
    HittingSolution,
    NoFiniteHittingSet,
    NoHittingSetUpTo,
    decide_hit,
    hit_size,
    sigma,
    verify,
)
from .adaptability import (
    AdaptInstance,
    AdaptResult,
    FirstStage,
    adapt_decide,
    adapt_optimize,
    build_pt,
)
from .lift import LiftOutput, lift_instance, lift_point
from .oracle import GridSpec, bisect_sigma_oracle, grid_hit_size, sample_verify

