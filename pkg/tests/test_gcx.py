import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghilb import gcx
from ghilb.exact import QI, MultiPoly
from ghilb.gcx import VARS, const, dz, dzb, fiber_monomial, poisson, reduce_mod, var
from ghilb.liealg import build_spec

F = Fraction
z, zb, p, pb = (var(v) for v in VARS)

exps = st.tuples(*(st.integers(0, 2) for _ in VARS))
polys = st.dictionaries(exps, st.integers(-3, 3).map(Fraction), max_size=4).map(lambda t: MultiPoly(VARS, t))
TYPES = ["A2", "A3", "A4", "B2", "B3", "C2", "C3", "D3", "D4"]


# -- the bracket -----------------------------------------------------------------

def test_bracket_on_coordinates():
    assert poisson(p, z) == const(1)
    assert poisson(z, p) == const(-1)
    assert poisson(pb, zb) == const(1)
    assert poisson(p, zb).is_zero() and poisson(p, pb).is_zero()
    assert poisson(p ** 2, z ** 2) == p * z * 4


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_bracket_is_antisymmetric(f, g):
    assert poisson(f, g) == -poisson(g, f)


@settings(max_examples=25, deadline=None)
@given(polys, polys, polys)
def test_jacobi_and_leibniz(f, g, h):
    jac = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))
    assert jac.is_zero()
    assert poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h)


# -- fiber ideals -------------------------------------------------------------------

def test_a_shape_reduction():
    ideal = gcx.FiberIdeal("A", 3, {1: z})
    assert reduce_mod(ideal, pb) == p * z
    assert reduce_mod(ideal, pb * pb) == p * p * z * z
    assert reduce_mod(ideal, pb * p * p).is_zero()
    assert reduce_mod(ideal, p ** 5).is_zero()


def test_d_shape_reduction():
    nu = zb * 2
    ideal = gcx.FiberIdeal("D", 6, {2: z}, nu)
    # R is the square of Q-tilde = z p, truncated below p^4
    assert ideal.r == {2: z * z}
    assert reduce_mod(ideal, p * pb) == p * p * z
    assert reduce_mod(ideal, pb * pb) == p * p * z * z + p ** 4 * nu
    assert reduce_mod(ideal, p ** 5).is_zero()
    assert ideal.basis() == [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1)]


def test_d_shape_rejects_constant_term():
    with pytest.raises(ValueError):
        gcx.FiberIdeal("D", 6, {0: z})


@pytest.mark.parametrize("name", TYPES)
def test_random_ideals_are_coisotropic_and_confluent(name):
    spec = build_spec(name)
    for seed in range(2):
        ideal = gcx.random_fiber_ideal(spec, random.Random(seed))
        ok, residuals = gcx.verify_coisotropy(ideal)
        assert ok and not residuals
        assert gcx.is_confluent(ideal)


def test_coisotropy_negative_control():
    # a z-dependent constant term in Q breaks coisotropy: {p^m, -pb + q0} = m p^{m-1} dz q0
    ideal = gcx.FiberIdeal("A", 3, {0: z * z, 1: zb})
    ok, residuals = gcx.verify_coisotropy(ideal)
    assert not ok
    assert residuals[(0, 1)] == p * p * z * 6


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["A3", "C2", "D3"]), st.integers(0, 10 ** 6), polys)
def test_bracket_is_well_defined_modulo_ideal(name, seed, h):
    ideal = gcx.random_fiber_ideal(build_spec(name), random.Random(seed), degree=1)
    for g in ideal.generators():
        assert reduce_mod(ideal, poisson(h, g)) == reduce_mod(ideal, poisson(reduce_mod(ideal, h), g))


@pytest.mark.parametrize("name", ["A3", "B2", "C3", "D3", "D4"])
def test_high_powers_of_p_act_trivially(name):
    spec = build_spec(name)
    ideal = gcx.random_fiber_ideal(spec, random.Random(3))
    top = spec.m - 1 if spec.type == "D" else spec.m
    for k in range(top, top + 3):
        h = fiber_monomial(k, 0, z * zb + 1)
        assert all(d.is_zero() for d in gcx.hamiltonian_variation(ideal, h))


def test_beltrami_variation_at_zero():
    w = z * zb * 3 + zb * zb
    for name, degree in (("A3", 1), ("A3", 2), ("C2", 1), ("C2", 3)):
        delta = gcx.beltrami_variation(gcx.zero_ideal(build_spec(name)), fiber_monomial(degree, 0, w))
        assert delta == {degree: dzb(w)}


def test_d_variation_of_the_mixed_generator():
    # {w pb, -p pb} = dz(w) pb^2 + dzb(w) p pb, and pb^2 = nu p^{m-2} at zero
    spec = build_spec("D3")
    nu = z * zb
    w = z * z + zb
    deltas = gcx.hamiltonian_variation(gcx.zero_ideal(spec, nu), fiber_monomial(0, 1, w))
    assert deltas[1] == fiber_monomial(4, 0, nu * dz(w))


def test_mu_names():
    assert gcx.mu_names(build_spec("A3")) == [("mu2", 1), ("mu3", 2), ("mu4", 3)]
    assert gcx.mu_names(build_spec("B2")) == [("mu2", 1), ("mu4", 3)]
    assert gcx.mu_names(build_spec("D4")) == [("mu2", 2), ("mu4", 4), ("mu6", 6)]


# -- non-reality ------------------------------------------------------------------

def test_nonreality_records():
    ok, recs = gcx.nonreality_check(z * F(1, 2), [F(1), QI(1, 1), F(2)])
    assert not ok
    assert [r.modulus2 for r in recs] == [F(1, 4), F(1, 2), F(1)]
    assert [r.violation for r in recs] == [False, False, True]
    assert [r.compatible for r in recs] == [True, True, False]


def test_nonreality_on_unit_circle():
    ok, recs = gcx.nonreality_check(z, [QI(F(3, 5), F(4, 5))])
    assert not ok and recs[0].modulus2 == 1


# -- the deformed spectral pair ------------------------------------------------------------

def test_truncation_is_a_ring_quotient():
    pair = gcx.spectral_pair(build_spec("A2"), {})
    vs = pair.variables
    e2, e3 = MultiPoly.var(vs, "e2"), MultiPoly.var(vs, "e3")
    f = pair.lift(z + p) + e2 * 3 + e2 * e3
    g = pair.lift(zb) + e3 + e2 * e2
    assert pair.truncate(f * g) == pair.truncate(pair.truncate(f) * pair.truncate(g))
    assert pair.truncate(e2 * e3).is_zero() and not pair.truncate(e2).is_zero()


def test_generators_reduce_to_zero():
    spec = build_spec("A3")
    pair = gcx.spectral_pair(spec, gcx.random_t(spec, random.Random(1)), {2: z})
    assert pair.reduce(pair.P()).is_zero()
    assert pair.reduce(pair.Q()).is_zero()


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "C2"])
def test_holomorphic_deformation_is_lagrangian(name):
    spec = build_spec(name)
    pair = gcx.spectral_pair(spec, gcx.random_t(spec, random.Random(2), holomorphic=True))
    ok, residual = gcx.lagrangian_order1_check(pair)
    assert ok and residual.is_zero()


def test_antiholomorphic_deformation_is_not_lagrangian():
    spec = build_spec("A2")
    pair = gcx.spectral_pair(spec, {2: zb, 3: const(0)})
    ok, residual = gcx.lagrangian_order1_check(pair)
    vs = pair.variables
    assert not ok
    assert residual == MultiPoly.var(vs, "e2") * MultiPoly.var(vs, "p")
