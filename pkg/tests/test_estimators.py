import json
from fractions import Fraction as F

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from affhit.errors import InputError, UnsupportedError
from affhit.estimators import GreedyHittingSet, KAdaptability
from affhit.io import family_to_json
from affhit.validation import check_family, check_parameters, check_positive_int

import families


def test_params_round_trip():
    est = GreedyHittingSet(kmax=4, engine="bisect", eps="1/1024")
    assert est.get_params() == {"kmax": 4, "engine": "bisect", "eps": "1/1024"}
    assert clone(est).get_params() == est.get_params()
    assert KAdaptability(k=3).set_params(k=2).k == 2


def test_greedy_fit_predict_f1(f1):
    est = GreedyHittingSet().fit(f1)
    assert est.k_ == 2 and est.points_ == ((1,), (2,)) and est.covered_
    assert est.predict(np.array([0, 0.5, 1.5, 2])).tolist() == [0, 0, 1, 1]


def test_predict_outside_domain_is_minus_one(f1):
    est = GreedyHittingSet().fit(f1)
    assert est.predict([5]).tolist() == [-1]


def test_predicted_point_lies_in_member(f2):
    from affhit.family import member_eval, membership

    est = GreedyHittingSet().fit(f2)
    ws = [F(j, 40) for j in range(41)]
    for w, i in zip(ws, est.predict(ws)):
        assert membership(est.points_[i], member_eval(f2, (w,)))


def test_fit_accepts_json_and_path(tmp_path, f1):
    doc = family_to_json(f1)
    path = tmp_path / "f1.json"
    path.write_text(json.dumps(doc))
    assert GreedyHittingSet().fit(doc).k_ == GreedyHittingSet().fit(str(path)).k_ == 2


def test_fit_without_solution_raises(f3_bounded):
    with pytest.raises(UnsupportedError):
        GreedyHittingSet().fit(f3_bounded)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        GreedyHittingSet().predict([0])
    with pytest.raises(NotFittedError):
        KAdaptability().predict([0])


def test_kadaptability_two_candidates(f4):
    est = KAdaptability(k=2, eps="1/100000").fit(f4)
    lo, hi = est.value_bracket_
    assert lo < F(1, 4) <= hi
    picks = est.predict(np.linspace(0, 1, 11))
    assert set(picks.tolist()) <= {0, 1} and -1 not in picks
    # the left candidate serves the left end, the right one the right end
    assert est.witnesses_[picks[0]][0] < est.witnesses_[picks[-1]][0]


def test_bad_hyperparameters(f1, f4):
    with pytest.raises(InputError):
        GreedyHittingSet(kmax=0).fit(f1)
    with pytest.raises(InputError):
        KAdaptability(k=1.5).fit(f4)


def test_check_family_requires_one_parameter():
    fam = families.random_family(families.seeded(0), 2, 1, 2)
    with pytest.raises(InputError):
        check_family(fam, one_parameter=True)
    with pytest.raises(InputError):
        check_family(42)


def test_check_parameters_shapes():
    assert check_parameters(0.7) == [F(7, 10)]
    assert check_parameters(np.array([[0.5], [1]])) == [F(1, 2), F(1)]
    with pytest.raises(InputError):
        check_parameters([[1, 2]])


def test_check_positive_int():
    assert check_positive_int(3.0, "k") == 3
    with pytest.raises(InputError):
        check_positive_int(True, "k")
