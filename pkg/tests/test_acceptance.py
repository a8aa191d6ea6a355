"""The ten acceptance criteria, one test each, at their stated tolerances.

Each test is tagged with ``criterion``; the terminal summary prints one
PASS/FAIL line per criterion.
"""
import time
from fractions import Fraction as F

import pytest

from affhit.adaptability import adapt_optimize, build_pt
from affhit.errors import EmptyMember, NotPolytope
from affhit.family import EMPTY, dual_family, dual_interval, member_eval, membership, restrict_domain, Interval
from affhit.greedy import (
    HittingSolution,
    NoFiniteHittingSet,
    hit_size,
    sigma,
    sigma_floor,
    verify,
)
from affhit.intersect import common_intersection
from affhit.lift import first_stage_member, lift_instance, lift_point, lifted_membership
from affhit.oracle import GridSpec, bisect_sigma_oracle, grid_cover, grid_hit_size
from affhit.ratlp import AUDIT, Feasible, Infeasible, lp_feasible
from affhit.certify import check_farkas
from affhit.realroots import compare, isolate_roots, sign_at_root

import families


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _inside_point(fam, omega):
    out = lp_feasible(member_eval(fam, omega))
    return out.witness if isinstance(out, Feasible) else None


@pytest.mark.criterion(1, "duality membership equivalence on 200 random families")
def test_duality_soundness():
    rng = families.seeded(1001)
    seen = {True: 0, False: 0}
    with Clock() as clock:
        for _ in range(200):
            m, d, p = rng.randint(1, 6), rng.randint(1, 3), rng.randint(1, 3)
            fam = families.random_family(rng, m, d, p)
            dual = dual_family(fam)
            for j in range(50):
                w = tuple(families.rat(rng) for _ in range(p))
                x = _inside_point(fam, w) if j % 2 else None
                if x is None:
                    x = tuple(families.rat(rng) for _ in range(d))
                got = membership(x, member_eval(fam, w))
                assert got == membership(w, member_eval(dual, x))
                seen[got] += 1
    assert seen[True] > 1000 and seen[False] > 1000
    assert clock.elapsed < 10


@pytest.mark.criterion(2, "endpoint system agrees with exact dual intervals")
def test_endpoint_intersection():
    rng = families.seeded(1002)
    seen = {True: 0, False: 0}
    for _ in range(100):
        fam = families.random_family(rng, rng.randint(1, 5), rng.randint(1, 3), 1)
        system = common_intersection(fam).sys
        alpha, beta = fam.domain.alpha, fam.domain.beta
        hit = lp_feasible(system)
        candidates = [tuple(families.rat(rng) for _ in range(fam.d)) for _ in range(5)]
        if isinstance(hit, Feasible):
            candidates.append(hit.witness)
        for x in candidates:
            iv = dual_interval(fam, x)
            contains = iv is not EMPTY and iv.lo <= alpha and beta <= iv.hi
            assert membership(x, system) == contains
            seen[contains] += 1
    assert seen[True] > 0 and seen[False] > 0


@pytest.mark.criterion(3, "sigma of F1 is 1 and of F2 is 1/sqrt 2")
def test_sigma_correctness(f1, f2):
    with Clock() as clock:
        assert sigma(f1, 0).value == 1
        res = sigma(f2, 0)
        root = isolate_roots([-1, 0, 2])[1]
        assert sign_at_root([-1, 0, 2], res.value) == 0 and compare(res.value, root) == 0
        eps = F(1, 2)
        while eps >= F(1, 10 ** 9):
            assert res.value in bisect_sigma_oracle(f2, 0, eps)
            eps /= 8
        assert res.value in bisect_sigma_oracle(f2, 0, F(1, 10 ** 9))
    assert clock.elapsed < 5


@pytest.mark.criterion(4, "sigma is nondecreasing on 100 random polytope families")
def test_sigma_monotone():
    rng = families.seeded(1004)
    compared = 0
    for _ in range(100):
        fam = families.random_polytope_family(rng, rng.randint(1, 4), rng.randint(1, 2))
        lams = sorted({F(rng.randint(0, 60), 60) for _ in range(5)})
        while len(lams) < 5:
            lams = sorted(set(lams) | {F(rng.randint(0, 60), 60)})
        values = []
        for lam in lams:
            try:
                values.append(sigma(fam, lam))
            except EmptyMember:
                values.append(None)
        for a, b in zip(values, values[1:]):
            if a is not None and b is not None:
                assert compare(sigma_floor(a), sigma_floor(b)) <= 0
                compared += 1
    assert compared >= 200


def _separated(points, fam, gap):
    alpha, beta = fam.domain.alpha, fam.domain.beta
    ends = {alpha, beta}
    for x in points:
        iv = dual_interval(fam, x)
        if iv is EMPTY:
            return False
        ends |= {min(max(iv.lo, alpha), beta), min(max(iv.hi, alpha), beta)}
    ends = sorted(ends)
    return all(b - a > gap for a, b in zip(ends, ends[1:]))


@pytest.mark.criterion(5, "greedy hitting sets: closed forms, coverage and the grid oracle")
def test_greedy_correctness(f1, f2):
    with Clock() as clock:
        assert hit_size(f1, 8).k == 2
        assert hit_size(restrict_domain(f1, Interval(0, 1)), 8).k == 1
        assert hit_size(f2, 8).k == 2
        for fam in (f1, f2, restrict_domain(f1, Interval(0, 1))):
            assert hit_size(fam, 8).coverage.covered

        rng = families.seeded(1005)
        valid = agreeing = 0
        while valid < 100:
            fam = families.random_polytope_family(rng, rng.randint(1, 4), 1)
            try:
                points = grid_cover(fam, GridSpec(501))
            except (EmptyMember, NotPolytope):
                continue
            valid += 1
            res = hit_size(fam, 40)
            if isinstance(res, HittingSolution):
                assert verify(fam, res.points).covered
            gap = (fam.domain.beta - fam.domain.alpha) / 500
            if not _separated(points, fam, gap):
                continue
            assert isinstance(res, HittingSolution)
            assert res.k == grid_hit_size(fam, 501) == len(points)
            agreeing += 1
    assert agreeing >= 90
    assert clock.elapsed < 60


@pytest.mark.criterion(6, "empty and unbounded members")
def test_empty_member_convention(f3, f3_bounded):
    with pytest.raises(NotPolytope):
        hit_size(f3, 5)
    res = hit_size(f3_bounded, 5)
    assert isinstance(res, NoFiniteHittingSet) and res.reason == "empty member"
    assert isinstance(lp_feasible(member_eval(f3_bounded, (res.stall,))), Infeasible)
    with pytest.raises(EmptyMember):
        sigma(f3_bounded, 1)


@pytest.mark.criterion(7, "k-adaptability of the interval k-center instance is 1/(2k)")
def test_k_adaptability_closed_form(f4):
    eps = F(1, 10 ** 6)
    with Clock() as clock:
        for k in (1, 2, 3, 4):
            res = adapt_optimize(f4, k, eps)
            assert res.hi - res.lo <= eps and res.lo <= F(1, 2 * k) <= res.hi
            assert verify(build_pt(f4, res.hi), res.witnesses).covered
    assert clock.elapsed < 30


@pytest.mark.criterion(8, "every infeasible outcome carries a verified Farkas vector")
def test_certificate_audit(f1, f2, f3_bounded):
    assert AUDIT.enabled
    before = AUDIT.infeasible_checked
    hit_size(f2, 5)
    hit_size(f3_bounded, 5)
    hit_size(families.translating_polygon(families.seeded(8), 12), 16)
    assert AUDIT.infeasible_checked > before
    assert AUDIT.failures == []
    # the verifier is not a rubber stamp
    assert not check_farkas(((1,), (-1,)), (1, 0), (1, 1), 1)


@pytest.mark.criterion(9, "lifted membership matches the two-stage system on 1000 tuples")
def test_lift_construction():
    rng = families.seeded(1009)
    inst = families.random_first_stage_instance(rng, 3, 1, 1, 1)
    seen = {True: 0, False: 0}
    for j in range(1000):
        t = families.rat(rng, -6, 6)
        omega = (families.rat(rng),)
        x = None
        if j % 2:
            out = lp_feasible(first_stage_member(inst, t, omega))
            x = out.witness if isinstance(out, Feasible) else None
        if x is None:
            x = tuple(families.rat(rng) for _ in range(2))
        x_f, x_s = x[:1], x[1:]
        lifted = lifted_membership(lift_instance(inst, t), lift_point(x_f, omega), x_s)
        direct = membership(x, first_stage_member(inst, t, omega))
        assert lifted == direct
        seen[direct] += 1
    assert seen[True] > 100 and seen[False] > 100


@pytest.mark.criterion(10, "performance smoke: d=2, m=64 with the bisection engine under 10 s")
def test_performance_smoke():
    fam = families.translating_polygon(families.seeded(1010), 60)
    assert (fam.m, fam.d) == (64, 2)
    with Clock() as clock:
        res = hit_size(fam, 32, "bisect")
    assert isinstance(res, HittingSolution) and res.coverage.covered
    assert clock.elapsed < 10
