"""JSON reading and writing for families, adaptability instances and points.

Rationals are written as strings ``"n"`` or ``"n/d"``; integers and decimal
strings are accepted on input.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

from .adaptability import AdaptInstance, FirstStage
from .errors import InputError
from .family import (
    AffineFamily,
    AffineMatrixMap,
    AffineVectorMap,
    Interval,
    ParameterDomain,
    Unrestricted,
    VPolytope,
)
from .rational import as_matrix, as_rat, as_vector, fmt_rat


def _vec(v) -> List[str]:
    return [fmt_rat(x) for x in v]


def _mat(a) -> List[List[str]]:
    return [_vec(r) for r in a]


def _need(doc: Dict[str, Any], key: str):
    if key not in doc:
        raise InputError(f"instance is missing the field {key!r}")
    return doc[key]


def domain_to_json(domain: ParameterDomain) -> dict:
    if isinstance(domain, Interval):
        return {"interval": [fmt_rat(domain.alpha), fmt_rat(domain.beta)]}
    if isinstance(domain, VPolytope):
        return {"vertices": _mat(domain.vertices)}
    if isinstance(domain, Unrestricted):
        return {"unrestricted": domain.dim}
    raise InputError(f"cannot serialize domain {domain!r}")


def domain_from_json(doc) -> ParameterDomain:
    if not isinstance(doc, dict):
        raise InputError("domain must be an object with 'interval' or 'vertices'")
    if "interval" in doc:
        iv = doc["interval"]
        if not isinstance(iv, list) or len(iv) != 2:
            raise InputError("interval domain needs exactly two endpoints")
        return Interval(as_rat(iv[0]), as_rat(iv[1]))
    if "vertices" in doc:
        return VPolytope(tuple(as_vector(v) for v in doc["vertices"]))
    if "unrestricted" in doc:
        return Unrestricted(int(doc["unrestricted"]))
    raise InputError("domain must have 'interval', 'vertices' or 'unrestricted'")


def _maps(doc, mkey0, mkey, vkey0, vkey):
    A0 = as_matrix(_need(doc, mkey0))
    As = _need(doc, mkey)
    if not isinstance(As, list):
        raise InputError(f"{mkey!r} must be a list of matrices")
    b0 = as_vector(_need(doc, vkey0))
    bs = _need(doc, vkey)
    if not isinstance(bs, list):
        raise InputError(f"{vkey!r} must be a list of vectors")
    a = AffineMatrixMap(A0, tuple(as_matrix(x) for x in As))
    b = AffineVectorMap(b0, tuple(as_vector(x, len(b0)) for x in bs))
    return a, b


def _check_dims(doc, m, d, p):
    for key, val in (("m", m), ("d", d), ("p", p)):
        if key in doc and int(doc[key]) != val:
            raise InputError(f"declared {key}={doc[key]} but the data has {key}={val}")


def family_to_json(family: AffineFamily) -> dict:
    return {
        "m": family.m,
        "d": family.d,
        "p": family.p,
        "A0": _mat(family.a.base),
        "A": [_mat(s) for s in family.a.slopes],
        "b0": _vec(family.b.base),
        "b": [_vec(s) for s in family.b.slopes],
        "domain": domain_to_json(family.domain),
    }


def family_from_json(doc) -> AffineFamily:
    if not isinstance(doc, dict):
        raise InputError("a family instance must be a JSON object")
    a, b = _maps(doc, "A0", "A", "b0", "b")
    family = AffineFamily(a, b, domain_from_json(_need(doc, "domain")))
    _check_dims(doc, family.m, family.d, family.p)
    return family


def adapt_to_json(inst: AdaptInstance) -> dict:
    out = {
        "m": inst.m,
        "d": inst.d_s,
        "p": inst.p,
        "A0": _mat(inst.a_s.base),
        "A": [_mat(s) for s in inst.a_s.slopes],
        "b0": _vec(inst.b.base),
        "b": [_vec(s) for s in inst.b.slopes],
        "c_s0": _vec(inst.c_s.base),
        "c_s1": [_vec(s) for s in inst.c_s.slopes],
        "domain": domain_to_json(inst.omega),
    }
    if inst.box is not None:
        out["box"] = [[fmt_rat(lo), fmt_rat(hi)] for lo, hi in inst.box]
    if inst.first_stage is not None:
        fs = inst.first_stage
        out["A_f0"] = _mat(fs.a_f.base)
        out["A_f"] = [_mat(s) for s in fs.a_f.slopes]
        out["c_f"] = _vec(fs.c_f)
    return out


def adapt_from_json(doc) -> AdaptInstance:
    """Family fields describe ``A_s`` and ``b``; ``c_s1`` may be one vector when p = 1."""
    if not isinstance(doc, dict):
        raise InputError("an adaptability instance must be a JSON object")
    a, b = _maps(doc, "A0", "A", "b0", "b")
    c0 = as_vector(_need(doc, "c_s0"))
    c1 = _need(doc, "c_s1")
    if isinstance(c1, list) and c1 and not isinstance(c1[0], list):
        c1 = [c1]
    c = AffineVectorMap(c0, tuple(as_vector(x, len(c0)) for x in c1))
    box = doc.get("box")
    if box is not None:
        try:
            box = tuple((lo, hi) for lo, hi in box)
        except (TypeError, ValueError) as exc:
            raise InputError("box must be a list of [lo, hi] pairs") from exc
    first = None
    if "A_f0" in doc or "c_f" in doc:
        af = AffineMatrixMap(
            as_matrix(_need(doc, "A_f0")), tuple(as_matrix(x) for x in _need(doc, "A_f"))
        )
        first = FirstStage(af, as_vector(_need(doc, "c_f")))
    inst = AdaptInstance(a, b, c, domain_from_json(_need(doc, "domain")), box, first)
    _check_dims(doc, inst.m, inst.d_s, inst.p)
    return inst


def points_to_json(points: Sequence[Sequence]) -> dict:
    return {"points": [_vec(x) for x in points]}


def points_from_json(doc) -> List[tuple]:
    if isinstance(doc, dict):
        doc = _need(doc, "points")
    if not isinstance(doc, list):
        raise InputError("points must be a list of vectors")
    return [as_vector(x) for x in doc]


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def load_family(path: str) -> AffineFamily:
    return family_from_json(load_json(path))


def load_adapt(path: str) -> AdaptInstance:
    return adapt_from_json(load_json(path))


def load_points(path: str) -> List[tuple]:
    return points_from_json(load_json(path))


__all__ = [
    "family_to_json",
    "family_from_json",
    "adapt_to_json",
    "adapt_from_json",
    "points_to_json",
    "points_from_json",
    "domain_to_json",
    "domain_from_json",
    "load_json",
    "load_family",
    "load_adapt",
    "load_points",
]
