from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affhit.errors import InputError, UnsupportedError
from affhit.family import membership
from affhit.lift import (
    first_stage_member,
    lift_instance,
    lift_point,
    lifted_dim,
    lifted_membership,
)

import families


def _tuples(rng, inst, n):
    for _ in range(n):
        x_f = tuple(families.rat(rng) for _ in range(inst.ell))
        x_s = tuple(families.rat(rng) for _ in range(inst.d_s))
        omega = tuple(families.rat(rng) for _ in range(inst.p))
        t = families.rat(rng, -8, 8)
        yield x_f, x_s, omega, t


def test_dimension_one_one():
    assert lifted_dim(1, 1) == 3
    assert lift_point((F(2, 3),), (5,)) == (F(2, 3), 5, F(10, 3))


def test_dimension_two_three():
    assert lifted_dim(2, 3) == 11
    inst = families.random_first_stage_instance(families.seeded(1), 2, 2, 3, 1)
    assert lift_instance(inst, 0).dim == 11


def test_product_coordinates_are_omega_major():
    # z = (x1, x2, w1, w2, w1 x1, w1 x2, w2 x1, w2 x2)
    assert lift_point((2, 3), (5, 7)) == (2, 3, 5, 7, 10, 15, 14, 21)


def test_requires_first_stage(f4):
    with pytest.raises(UnsupportedError):
        lift_instance(f4, 1)


def test_lifted_points_lie_on_surface():
    inst = families.random_first_stage_instance(families.seeded(2), 3, 2, 2, 1)
    out = lift_instance(inst, 1)
    assert out.on_surface(lift_point((1, 2), (3, 4)))
    z = list(lift_point((1, 2), (3, 4)))
    z[-1] += 1
    assert not out.on_surface(z)


def test_vertex_images_are_lifted_vertices():
    inst = families.random_first_stage_instance(families.seeded(3), 2, 2, 2, 1)
    out = lift_instance(inst, 0)
    x_f = (F(1, 2), F(-3))
    images = out.p_hat_member(x_f).vertices
    assert images == tuple(lift_point(x_f, v) for v in inst.omega.generators())
    assert all(out.on_surface(z) for z in images)


def test_equivalence_on_one_one_one_instance():
    rng = families.seeded(20)
    inst = families.random_first_stage_instance(rng, 3, 1, 1, 1)
    for t in (F(-1), F(0), F(5, 2)):
        out = lift_instance(inst, t)
        for x_f, x_s, omega, _ in _tuples(rng, inst, 200):
            direct = membership(x_f + x_s, first_stage_member(inst, t, omega))
            assert direct == lifted_membership(out, lift_point(x_f, omega), x_s)


def test_both_sides_of_equivalence_occur():
    # a test that only ever sees "outside" would prove nothing
    rng = families.seeded(21)
    inst = families.random_first_stage_instance(rng, 2, 1, 1, 1)
    out = lift_instance(inst, 100)
    seen = set()
    for x_f, x_s, omega, _ in _tuples(rng, inst, 400):
        seen.add(lifted_membership(out, lift_point(x_f, omega), x_s))
    assert seen == {True, False}


@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_equivalence_random_shapes(seed, ell, p, d_s):
    rng = families.seeded(seed)
    inst = families.random_first_stage_instance(rng, rng.randint(1, 4), ell, p, d_s)
    for x_f, x_s, omega, t in _tuples(rng, inst, 20):
        out = lift_instance(inst, t)
        direct = membership(x_f + x_s, first_stage_member(inst, t, omega))
        assert direct == lifted_membership(out, lift_point(x_f, omega), x_s)


def test_first_stage_member_checks_parameter_dimension():
    inst = families.random_first_stage_instance(families.seeded(4), 2, 1, 2, 1)
    with pytest.raises(InputError):
        first_stage_member(inst, 0, (1,))
