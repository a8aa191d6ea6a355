"""scikit-learn style wrappers around the greedy and adaptability solvers.

``fit`` takes a problem instance instead of a data matrix; ``predict`` maps
parameter values to the index of the chosen point (or -1 when none fits).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .adaptability import adapt_optimize, select_witness
from .errors import UnsupportedError
from .greedy import HittingSolution, hit_size, make_engine
from .validation import check_adapt_instance, check_family, check_parameters, check_positive_int


class GreedyHittingSet(BaseEstimator):
    def __init__(self, kmax=16, engine="exact", eps=None):
        self.kmax = kmax
        self.engine = engine
        self.eps = eps

    def fit(self, X, y=None):
        family = check_family(X, one_parameter=True)
        kmax = check_positive_int(self.kmax, "kmax")
        res = hit_size(family, kmax, make_engine(self.engine, self.eps))
        if not isinstance(res, HittingSolution):
            raise UnsupportedError(f"no hitting set found: {res}")
        self.family_ = family
        self.result_ = res
        self.points_ = res.points
        self.k_ = res.k
        self.intervals_ = res.intervals
        self.covered_ = res.coverage.covered
        return self

    def predict(self, omegas):
        """Index of the first point whose dual interval holds each parameter."""
        check_is_fitted(self, "points_")
        out = []
        for w in check_parameters(omegas):
            out.append(next((i for i, iv in enumerate(self.intervals_) if not iv.is_empty and w in iv), -1))
        return np.asarray(out, dtype=int)


class KAdaptability(BaseEstimator):
    def __init__(self, k=1, eps="1/1000000", engine="exact"):
        self.k = k
        self.eps = eps
        self.engine = engine

    def fit(self, X, y=None):
        inst = check_adapt_instance(X)
        k = check_positive_int(self.k, "k")
        res = adapt_optimize(inst, k, self.eps, self.engine)
        self.instance_ = inst
        self.result_ = res
        self.value_bracket_ = (res.lo, res.hi)
        self.witnesses_ = res.witnesses
        return self

    def predict(self, omegas):
        """Cheapest candidate feasible at each parameter within the upper bound."""
        check_is_fitted(self, "witnesses_")
        hi = self.value_bracket_[1]
        out = []
        for w in check_parameters(omegas):
            idx = select_witness(self.instance_, self.witnesses_, (w,), hi)
            out.append(-1 if idx is None else idx)
        return np.asarray(out, dtype=int)


__all__ = ["GreedyHittingSet", "KAdaptability"]
