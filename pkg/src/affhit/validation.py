"""Input coercion shared by the estimator wrappers."""
from __future__ import annotations

import os
from fractions import Fraction
from typing import List

from .adaptability import AdaptInstance
from .errors import InputError
from .family import AffineFamily, Interval
from .io import adapt_from_json, family_from_json, load_json
from .rational import as_rat


def _load(X):
    if isinstance(X, (str, os.PathLike)):
        return load_json(os.fspath(X))
    return X


def check_family(X, one_parameter: bool = False) -> AffineFamily:
    """Accept a family, its JSON dict, or a path to a JSON file."""
    X = _load(X)
    if isinstance(X, dict):
        X = family_from_json(X)
    if not isinstance(X, AffineFamily):
        raise InputError(f"expected an affine family, got {type(X).__name__}")
    if one_parameter and (X.p != 1 or not isinstance(X.domain, Interval)):
        raise InputError("expected a one-parameter family on an interval")
    return X


def check_adapt_instance(X) -> AdaptInstance:
    X = _load(X)
    if isinstance(X, dict):
        X = adapt_from_json(X)
    if not isinstance(X, AdaptInstance):
        raise InputError(f"expected an adaptability instance, got {type(X).__name__}")
    return X


def check_parameters(omegas) -> List[Fraction]:
    """A flat list of exact parameter values from scalars, lists or 1-column arrays."""
    if hasattr(omegas, "tolist"):
        omegas = omegas.tolist()
    if not isinstance(omegas, (list, tuple)):
        omegas = [omegas]
    out = []
    for w in omegas:
        if isinstance(w, (list, tuple)):
            if len(w) != 1:
                raise InputError("expected one parameter value per sample")
            w = w[0]
        out.append(as_rat(w))
    return out


def check_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InputError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
