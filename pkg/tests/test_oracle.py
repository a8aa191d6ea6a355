from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affhit.errors import EmptyMember, InputError, NotPolytope, UnsupportedError
from affhit.family import HalfspaceSystem, Interval, member_eval, restrict_domain
from affhit.greedy import HittingSolution, hit_size, sigma, sigma_floor, verify
from affhit.oracle import GridSpec, bisect_sigma_oracle, grid_cover, grid_hit_size, sample_verify
from affhit.ratlp import Feasible, lp_feasible

import families

NANO = F(1, 10 ** 9)


def test_grid_spec_samples_endpoints():
    assert GridSpec(5).samples(F(0), F(2)) == [0, F(1, 2), 1, F(3, 2), 2]


def test_grid_spec_needs_two_samples():
    with pytest.raises(InputError):
        GridSpec(1)


def test_grid_hit_size_f1(f1):
    assert grid_hit_size(f1, 201) == 2


def test_grid_hit_size_f2(f2):
    assert grid_hit_size(f2, 201) == 2


def test_grid_hit_size_f1_unit(f1):
    assert grid_hit_size(restrict_domain(f1, Interval(0, 1)), 201) == 1


def test_grid_cover_points_hit_every_sample(f2):
    assert sample_verify(f2, grid_cover(f2, 51), 51)


def test_grid_rejects_empty_member(f3_bounded):
    with pytest.raises(EmptyMember):
        grid_hit_size(f3_bounded, 21)


def test_grid_rejects_unbounded_member(f3):
    with pytest.raises(NotPolytope):
        grid_hit_size(f3, 21)


def test_grid_needs_one_parameter():
    fam = families.random_family(families.seeded(0), 2, 1, 2)
    with pytest.raises(UnsupportedError):
        grid_hit_size(fam, 5)


def test_sigma_oracle_f1(f1):
    assert 1 in bisect_sigma_oracle(f1, 0, NANO)


def test_sigma_oracle_f2(f2):
    br = bisect_sigma_oracle(f2, 0, NANO)
    assert br.hi - br.lo <= NANO
    # 2 nu^2 - 1 changes sign across the bracket
    assert 2 * br.lo ** 2 - 1 <= 0 < 2 * br.hi ** 2 - 1


def test_sigma_oracle_f2_capped_at_beta(f2):
    assert bisect_sigma_oracle(f2, F(7, 10), NANO) == bisect_sigma_oracle(f2, 1, NANO)
    assert bisect_sigma_oracle(f2, F(7, 10), NANO).lo == 1


def test_sample_verify_f1(f1):
    assert sample_verify(f1, [(1,), (2,)], 201)
    assert not sample_verify(f1, [(1,)], 201)


def test_sample_verify_f2_greedy_output(f2):
    assert sample_verify(f2, hit_size(f2, 4).points, 201)


def _run_cover_by_stacking(fam, ws):
    # no endpoint shortcut: a run is hittable iff all its members stacked are feasible
    count, i = 0, 0
    while i < len(ws):
        j = i
        while j + 1 < len(ws):
            sys = HalfspaceSystem((), (), fam.d)
            for w in ws[i:j + 2]:
                sys = sys.stack(member_eval(fam, (w,)))
            if not isinstance(lp_feasible(sys), Feasible):
                break
            j += 1
        count, i = count + 1, j + 1
    return count


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_planar_oracle_matches_full_stacking(seed):
    fam = families.random_polytope_family(families.seeded(seed), 3, 2)
    try:
        k = grid_hit_size(fam, 9)
    except EmptyMember:
        return
    assert k == _run_cover_by_stacking(fam, GridSpec(9).samples(F(0), F(1)))


@given(st.integers(0, 10_000), st.integers(1, 2))
@settings(max_examples=30, deadline=None)
def test_grid_is_lower_bound(seed, d):
    fam = families.random_polytope_family(families.seeded(seed), 3, d)
    res = hit_size(fam, 20)
    if not isinstance(res, HittingSolution):
        return
    for r in (2, 17, 101):
        assert grid_hit_size(fam, r) <= res.k


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_covered_implies_sampled_cover(seed):
    fam = families.random_polytope_family(families.seeded(seed), 3, 2)
    res = hit_size(fam, 20)
    if isinstance(res, HittingSolution) and verify(fam, res.points).covered:
        for r in (2, 33, 101):
            assert sample_verify(fam, res.points, r)


@given(st.integers(0, 10_000), st.fractions(0, 1, max_denominator=8))
@settings(max_examples=30, deadline=None)
def test_bracket_contains_exact_sigma(seed, lam):
    fam = families.random_polytope_family(families.seeded(seed), 3, 2)
    try:
        exact = sigma(fam, lam)
    except (EmptyMember, NotPolytope):
        return
    assert sigma_floor(exact) in bisect_sigma_oracle(fam, lam, F(1, 2 ** 24))
