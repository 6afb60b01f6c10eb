import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghilb.errors import NonCommuting, NotInP
from ghilb.exact import QI, Matrix
from ghilb.liealg import build_spec
from ghilb.realforms import (
    NILPOTENT_FAMILIES,
    build_split,
    centralizer_in_p,
    circle_point,
    classify_real,
    decomposition_check,
    rational_orthogonal,
    rotation,
    rotation_scalar,
    sl2_p_element,
    sl2R_orbit_check,
    split_sample_correspondence,
)

F = Fraction


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_cartan_decomposition(name):
    rf = build_split(build_spec(name))
    assert all(decomposition_check(rf).values())
    m = rf.spec.m
    assert len(rf.k_basis) == m * (m - 1) // 2
    assert len(rf.p_basis) == m * (m + 1) // 2 - 1


def test_split_form_only_for_type_a():
    with pytest.raises(ValueError):
        build_split(build_spec("C2"))


def test_theta_fixes_k_and_negates_p():
    rf = build_split(build_spec("A2"))
    assert all(rf.theta_of(x) == x for x in rf.k_basis)
    assert all(rf.theta_of(x) == -x for x in rf.p_basis)


@given(st.integers(-50, 50), st.integers(1, 50))
def test_circle_point_is_on_circle(a, b):
    c, s = circle_point(F(a, b))
    assert c * c + s * s == 1


def test_rotation_scalar_at_one_half():
    # cos t = 3/5, sin t = 4/5, so cos 2t + i sin 2t = -7/25 + 24/25 i
    assert circle_point(F(1, 2)) == (F(3, 5), F(4, 5))
    assert rotation_scalar(F(1, 2)) == QI(F(-7, 25), F(24, 25))


@pytest.mark.parametrize("s", [F(1, 2), F(-3), F(2, 7)])
def test_rotations_scale_nilpotent_families(s):
    r = rotation(s)
    for sign, key in ((1, "+i"), (-1, "-i")):
        fam = NILPOTENT_FAMILIES[key]
        assert r @ fam @ r.T() == fam.scale(rotation_scalar(s, sign))


def test_sl2r_report_all_true():
    report = sl2R_orbit_check()
    assert all(v for v in report.values() if isinstance(v, bool))
    assert report["scalar at s=1/2"] == QI(F(-7, 25), F(24, 25))


def test_classify_real():
    rf = build_split(build_spec("A2"))
    a = Matrix.diag([1, 2, -3])
    c = classify_real(rf, a, a.scale(2))
    assert c.in_hilb and c.dimZp == 2
    z = Matrix.zeros(3)
    c0 = classify_real(rf, z, z)
    assert not c0.in_hilb and c0.dimZp == 5 and c0.A_nilpotent


def test_classify_real_errors():
    rf = build_split(build_spec("A1"))
    with pytest.raises(NotInP):
        classify_real(rf, Matrix([[0, 1], [-1, 0]]), Matrix.zeros(2))
    with pytest.raises(NonCommuting):
        classify_real(rf, sl2_p_element(1, 0), sl2_p_element(0, 1))


def test_nilpotent_family_centralizer():
    rf = build_split(build_spec("A1"))
    fam = NILPOTENT_FAMILIES["+i"]
    assert len(centralizer_in_p(rf, [fam])) == 1
    assert (fam @ fam).is_zero()


def test_rational_orthogonal():
    o = rational_orthogonal(3, random.Random(0))
    assert o @ o.T() == Matrix.identity(3)


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_split_correspondence(name):
    recs = split_sample_correspondence(build_spec(name), samples=6, seed=1)
    assert recs and all(r.agree for r in recs)
