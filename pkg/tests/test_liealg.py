import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ghilb.exact import Matrix, UniPoly, charpoly, commutator, is_nilpotent, minimal_polynomial
from ghilb.liealg import (
    S_t,
    SliceParams,
    build_spec,
    centralizer_dim,
    exponent_identity,
    is_regular,
    matrix_S,
    params_from_roots,
    principal_centralizer_basis,
    principal_nilpotent,
    principal_slice,
    principal_sl2_triple,
    random_group_element,
    random_params,
    slice_charpoly_expected,
)

SPECS = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D3", "D4", "D5"]
small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def sym(m):
    return sympy.Matrix(m.nrows, m.ncols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries()])


def sympy_centralizer_dim(spec, mats):
    """dim {X in gl_m : X in g, [M, X] = 0} from the defining equations."""
    m = spec.m
    xs = sympy.symbols("x0:%d" % (m * m))
    x = sympy.Matrix(m, m, xs)
    if spec.type == "A":
        eqs = [x.trace()]
    else:
        j = sym(spec.form)
        eqs = list(x.T * j + j * x)
    for mat in mats:
        eqs += list(sym(mat) * x - x * sym(mat))
    a, _ = sympy.linear_eq_to_matrix([e for e in eqs if e != 0], xs)
    return m * m - a.rank()


@pytest.mark.parametrize(
    "name, m, dim, exps",
    [
        ("A3", 4, 15, (1, 2, 3)),
        ("B2", 5, 10, (1, 3)),
        ("C3", 6, 21, (1, 3, 5)),
        ("D4", 8, 28, (1, 3, 5, 3)),
    ],
)
def test_dimensions_and_exponents(name, m, dim, exps):
    spec = build_spec(name)
    assert (spec.m, spec.dim, spec.exponents) == (m, dim, exps)
    assert exponent_identity(spec)


@pytest.mark.parametrize("bad", ["E6", "D2", "A0", "x"])
def test_build_spec_rejects(bad):
    with pytest.raises(ValueError):
        build_spec(bad)


@pytest.mark.parametrize("name", SPECS)
def test_membership_matches_form(name):
    spec = build_spec(name)
    for b in spec.basis:
        assert spec.is_member(b)
    assert len(spec.basis) == spec.dim
    rng = random.Random(1)
    junk = Matrix([[rng.randint(-2, 2) for _ in range(spec.m)] for _ in range(spec.m)])
    j = sym(spec.form)
    expected = sym(junk).trace() == 0 if spec.type == "A" else (sym(junk).T * j + j * sym(junk)).is_zero_matrix
    assert spec.is_member(junk) == expected


@pytest.mark.parametrize("name", SPECS)
def test_principal_nilpotent_is_regular(name):
    spec = build_spec(name)
    f = principal_nilpotent(spec)
    assert spec.is_member(f) and is_nilpotent(f)
    assert centralizer_dim(spec, [f]) == spec.rank == sympy_centralizer_dim(spec, [f])


@pytest.mark.parametrize("name", SPECS)
def test_centralizer_basis_of_f(name):
    spec = build_spec(name)
    f = principal_nilpotent(spec)
    basis = principal_centralizer_basis(spec)
    assert len(basis) == spec.rank
    for _, z in basis:
        assert spec.is_member(z) and commutator(f, z).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_nilpotency_orders_in_d(n):
    spec = build_spec("D", n)
    f = principal_nilpotent(spec)
    assert not (f ** (2 * n - 2)).is_zero()
    assert (f ** (2 * n - 1)).is_zero()
    s = matrix_S(spec)
    assert commutator(f, s).is_zero() and spec.is_member(s)
    # the square of S is a multiple of f^{2n-2} with an n-dependent sign
    assert s @ s == (f ** (2 * n - 2)).scale((-1) ** (n + 1))


@pytest.mark.parametrize("name", SPECS)
def test_sl2_triple_relations(name):
    spec = build_spec(name)
    e, f, h = principal_sl2_triple(spec)
    assert commutator(h, e) == e.scale(2)
    assert commutator(h, f) == f.scale(-2)
    assert commutator(e, f) == h
    assert all(spec.is_member(x) for x in (e, f, h))


def test_sl3_h_is_standard():
    _, _, h = principal_sl2_triple(build_spec("A2"))
    assert h == Matrix.diag([-2, 0, 2]) or h == Matrix.diag([2, 0, -2])


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(SPECS), st.lists(small, min_size=5, max_size=5), small)
def test_slice_charpoly_formula_matches_sympy(name, ts, tau):
    spec = build_spec(name)
    k = spec.n - 1 if spec.type == "D" else spec.n
    params = SliceParams(ts[:k], tau if spec.type == "D" else 0)
    x = principal_slice(spec, params)
    assert spec.is_member(x)
    ref = sym(x).charpoly().all_coeffs()
    expected = slice_charpoly_expected(spec, params)
    assert [sympy.Rational(c.numerator, c.denominator) for c in reversed(expected.coeffs)] == ref


@pytest.mark.parametrize("name", SPECS)
def test_slice_is_regular(name):
    spec = build_spec(name)
    x = principal_slice(spec, random_params(spec, random.Random(3)))
    assert is_regular(spec, x)
    assert centralizer_dim(spec, [x]) == sympy_centralizer_dim(spec, [x])


@pytest.mark.parametrize("name", ["A3", "B2", "C3"])
def test_slice_is_cyclic_in_types_abc(name):
    spec = build_spec(name)
    x = principal_slice(spec, random_params(spec, random.Random(4)))
    assert minimal_polynomial(x) == charpoly(x)


@pytest.mark.parametrize("n", [3, 4])
def test_d_slice_at_tau_zero_has_smaller_minimal_polynomial(n):
    spec = build_spec("D", n)
    params = SliceParams([Fraction(k + 1) for k in range(n - 1)], 0)
    x = principal_slice(spec, params)
    chi = charpoly(x)
    assert minimal_polynomial(x) * UniPoly.x() == chi
    st_ = S_t(spec, params)
    assert commutator(x, st_).is_zero() and spec.is_member(st_)


@pytest.mark.parametrize(
    "name, roots",
    [("A2", [1, 2, -3]), ("B2", [1, 3]), ("C3", [1, 2, 5]), ("D3", [1, 2, 3]), ("D4", [1, -2, 3, 4])],
)
def test_params_from_roots(name, roots):
    spec = build_spec(name)
    chi = charpoly(principal_slice(spec, params_from_roots(spec, roots)))
    x = UniPoly.x()
    if spec.type == "A":
        want = UniPoly([1])
        for r in roots:
            want = want * (x - r)
    else:
        want = x if spec.type == "B" else UniPoly([1])
        for r in roots:
            want = want * (x - r) * (x + r)
    assert chi == want


@pytest.mark.parametrize("name", ["A3", "C2", "D4"])
def test_group_elements_preserve_g(name):
    spec = build_spec(name)
    g, ginv = random_group_element(spec, random.Random(5))
    assert g @ ginv == Matrix.identity(spec.m)
    for b in spec.basis[:6]:
        assert spec.is_member(g @ b @ ginv)
