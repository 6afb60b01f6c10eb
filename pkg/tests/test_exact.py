from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ghilb.errors import NonCommuting, SplitFieldRequired
from ghilb.exact import (
    QI,
    Dual,
    Matrix,
    MultiPoly,
    UniPoly,
    charpoly,
    commutator,
    det,
    eval_poly_pair,
    eval_unipoly,
    format_scalar,
    gcd,
    inverse,
    is_nilpotent,
    jordan_chevalley,
    kernel_basis,
    minimal_polynomial,
    parse_scalar,
    rank,
    solve,
)
from ghilb.roots import roots_with_multiplicity

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
gauss = st.builds(QI.make, fracs, fracs)


def square(n, elems=fracs):
    return st.lists(st.lists(elems, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def to_sympy(m):
    return sympy.Matrix(m.nrows, m.ncols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries()])


# -- scalars ---------------------------------------------------------------

@pytest.mark.parametrize(
    "text, value",
    [
        ("1/2", Fraction(1, 2)),
        ("-3", Fraction(-3)),
        ("i", QI(0, 1)),
        ("-3*i", QI(0, -3)),
        ("1/2-i", QI(Fraction(1, 2), -1)),
        ("2+3/4*i", QI(2, Fraction(3, 4))),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1/2/3", "x", "1 2", "*i"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(gauss)
def test_format_parse_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


def test_qi_collapses_to_fraction():
    assert QI.make(Fraction(3), 0) == Fraction(3)
    assert isinstance(QI.make(Fraction(3), 0), Fraction)
    assert QI(0, 1) * QI(0, 1) == -1


@given(gauss, gauss, gauss)
def test_qi_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b != 0:
        assert (a / b) * b == a


@given(gauss)
def test_qi_matches_python_complex(z):
    re, im = (z.re, z.im) if isinstance(z, QI) else (z, 0)
    w = complex(float(re), float(im)) ** 2
    sq = z * z
    sre, sim = (sq.re, sq.im) if isinstance(sq, QI) else (sq, 0)
    assert abs(complex(float(sre), float(sim)) - w) < 1e-9


# -- polynomials -----------------------------------------------------------

def test_unipoly_division_and_gcd():
    x = UniPoly.x()
    p = (x - 1) ** 2 * (x + 2)
    q = (x - 1) * (x - 3)
    assert gcd(p, q) == x - 1
    quo, rem = divmod(p, q)
    assert quo * q + rem == p and rem.degree < q.degree


def test_roots_over_gaussian_rationals():
    x = UniPoly.x()
    assert sorted(roots_with_multiplicity(x * x + 1), key=lambda r: r[0].im) == [(QI(0, -1), 1), (QI(0, 1), 1)]
    assert roots_with_multiplicity((x - Fraction(1, 2)) ** 3) == [(Fraction(1, 2), 3)]
    with pytest.raises(SplitFieldRequired):
        roots_with_multiplicity(x * x - 2)


# -- matrices: independent checks against sympy ------------------------------

@settings(max_examples=40, deadline=None)
@given(square(4))
def test_charpoly_matches_sympy(m):
    ours = charpoly(m)
    ref = to_sympy(m).charpoly().all_coeffs()
    assert [sympy.Rational(c.numerator, c.denominator) for c in reversed(ours.coeffs)] == ref


@settings(max_examples=40, deadline=None)
@given(square(4))
def test_cayley_hamilton(m):
    assert eval_unipoly(charpoly(m), m).is_zero()


@settings(max_examples=40, deadline=None)
@given(square(4, st.integers(-2, 2).map(Fraction)))
def test_rank_det_kernel_match_sympy(m):
    ref = to_sympy(m)
    assert rank(m) == ref.rank()
    assert det(m) == ref.det()
    kern = kernel_basis(m)
    assert len(kern) == 4 - ref.rank()
    for v in kern:
        assert all(x == 0 for x in m.apply(v.as_vector()))


@settings(max_examples=30, deadline=None)
@given(square(3))
def test_inverse_and_solve(m):
    if det(m) == 0:
        return
    assert m @ inverse(m) == Matrix.identity(3)
    b = [Fraction(1), Fraction(-2), Fraction(3)]
    assert m.apply(solve(m, b)) == b


def test_kernel_over_gaussian_field():
    m = Matrix([[1, QI(0, 1)], [QI(0, 1), -1]])
    (v,) = kernel_basis(m)
    assert all(x == 0 for x in m.apply(v.as_vector()))


def test_minimal_polynomial_of_jordan_block():
    j = Matrix([[2, 1, 0], [0, 2, 0], [0, 0, 2]])
    x = UniPoly.x()
    assert minimal_polynomial(j) == (x - 2) ** 2
    assert charpoly(j) == (x - 2) ** 3


@settings(max_examples=25, deadline=None)
@given(square(3, st.integers(-3, 3).map(Fraction)), square(3, st.integers(-3, 3).map(Fraction)))
def test_jordan_chevalley_conditions(n, g):
    # a matrix with a nontrivial Jordan structure, conjugated by g
    if det(g) == 0:
        return
    base = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, -2]])
    m = g @ base @ inverse(g)
    s, nil = jordan_chevalley(m)
    assert s + nil == m
    assert commutator(s, nil).is_zero()
    assert is_nilpotent(nil)
    x = UniPoly.x()
    assert minimal_polynomial(s) == (x - 1) * (x + 2)


def test_eval_poly_pair_and_noncommuting():
    xy = ("x", "y")
    p = MultiPoly.var(xy, "x") * MultiPoly.var(xy, "y") - MultiPoly.const(xy, 2)
    a = Matrix.diag([1, 2])
    b = Matrix.diag([2, 1])
    assert eval_poly_pair(p, a, b).is_zero()
    with pytest.raises(NonCommuting):
        eval_poly_pair(p, a, Matrix([[0, 1], [0, 0]]))


# -- dual numbers ------------------------------------------------------------

@given(fracs, fracs, fracs, fracs)
def test_dual_leibniz(a, da, b, db):
    x, y = Dual(a, [da]), Dual(b, [db])
    prod = x * y
    assert prod.value == a * b
    assert prod.partials[0] == a * db + da * b


@given(fracs.filter(lambda v: v != 0), fracs)
def test_dual_inverse(a, da):
    x = Dual(a, [da])
    assert x * x.inverse() == 1


def test_dual_polynomial_derivative():
    x = Dual.variable(Fraction(3), 0, 1)
    f = x ** 3 - 2 * x
    assert f.value == 21 and f.partials[0] == 25
