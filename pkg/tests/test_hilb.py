import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghilb.errors import MembershipViolation, NonCommuting, NotInCentralizer, NotStandardForm
from ghilb.exact import Matrix
from ghilb.hilb import (
    CommutingPair,
    canonicalize_weyl,
    chow,
    classify,
    cyclicity,
    embed_sl2,
    joint_spectrum,
    mu2,
    point_key,
)
from ghilb.liealg import (
    build_spec,
    matrix_S,
    principal_nilpotent,
    principal_sl2_triple,
    random_group_element,
)

F = Fraction
ints = st.integers(-3, 3).map(Fraction)
points = st.tuples(ints, ints)


def weyl_orbit_max(kind, pairs):
    """Largest sorted encoding over signed permutations (even sign changes for D)."""
    best = None
    for perm in itertools.permutations(pairs):
        for signs in itertools.product((1, -1), repeat=len(pairs)):
            if kind == "D" and signs.count(-1) % 2:
                continue
            img = tuple(sorted(((s * x, s * y) for s, (x, y) in zip(signs, perm)), key=point_key))
            key = tuple(point_key(p) for p in img)
            if best is None or key > best[0]:
                best = (key, img)
    return best[1]


def unit(m, i, j):
    return Matrix.unit(m, i, j)


# -- classification ------------------------------------------------------------

def test_zero_pair_is_not_in_hilb():
    spec = build_spec("A2")
    z = Matrix.zeros(3)
    c = classify(CommutingPair(spec, z, z))
    assert (c.dimZ, c.in_hilb, c.nilpotent_pair, c.cyclic.status) == (8, False, True, "certified-no")


def test_principal_pair_is_cyclic():
    spec = build_spec("A3")
    f = principal_nilpotent(spec)
    c = classify(CommutingPair(spec, f, Matrix.zeros(4)))
    assert c.in_hilb and c.A_regular and c.cyclic.status == "certified-yes"


def test_regular_but_not_cyclic_in_sl3():
    spec = build_spec("A2")
    c = classify(CommutingPair(spec, unit(3, 0, 1), unit(3, 0, 2)))
    assert c.dimZ == 2 and c.in_hilb
    assert not c.A_regular and not c.B_regular
    assert c.cyclic.status == "probably-no"


@pytest.mark.parametrize("n", [3, 4])
def test_d_principal_nilpotent_is_regular_but_not_cyclic(n):
    spec = build_spec("D", n)
    f = principal_nilpotent(spec)
    c = classify(CommutingPair(spec, f, Matrix.zeros(2 * n)))
    assert c.in_hilb and c.cyclic.status == "certified-no"
    c2 = classify(CommutingPair(spec, f, matrix_S(spec)))
    assert c2.in_hilb and c2.cyclic.status == "certified-yes"


def test_validation_errors():
    spec = build_spec("A2")
    with pytest.raises(NonCommuting):
        classify(CommutingPair(spec, unit(3, 0, 1), unit(3, 1, 0)))
    with pytest.raises(MembershipViolation):
        classify(CommutingPair(spec, Matrix.identity(3), Matrix.zeros(3)))


def test_cyclicity_witness_spans():
    spec = build_spec("B2")
    f = principal_nilpotent(spec)
    c = cyclicity(f, f ** 3, seed=2)
    assert c.status == "certified-yes" and len(c.witness) == spec.m


# -- mu_2 ------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["A3", "B2", "C3", "D4"])
def test_mu2_reads_the_f_coefficient(name):
    spec = build_spec(name)
    f = principal_nilpotent(spec)
    b = f.scale(F(3, 2)) + (f ** 3).scale(-2)
    if spec.type == "D":
        b = b + matrix_S(spec).scale(5)
    assert mu2(CommutingPair(spec, f, b)) == F(3, 2)


def test_mu2_errors():
    spec = build_spec("A2")
    f = principal_nilpotent(spec)
    with pytest.raises(NotStandardForm):
        mu2(CommutingPair(spec, f.scale(2), f))
    with pytest.raises(NotInCentralizer):
        mu2(CommutingPair(spec, f, Matrix.diag([1, 0, -1])))


# -- joint spectra and the Chow map -------------------------------------------

def test_joint_spectrum_of_diagonal_pair():
    spec = build_spec("A2")
    a, b = Matrix.diag([1, 1, -2]), Matrix.diag([0, 3, -3])
    got = sorted(((p, mult) for p, mult, _ in joint_spectrum(a, b)), key=lambda t: point_key(t[0]))
    assert got == [((F(-2), F(-3)), 1), ((F(1), F(0)), 1), ((F(1), F(3)), 1)]


def test_sl2_chow_uses_both_points():
    spec = build_spec("A1")
    value = chow(CommutingPair(spec, Matrix.diag([1, -1]), Matrix.diag([2, -2])))
    assert value.coords == ((F(-1), F(-2)), (F(1), F(2)))


def test_nilpotent_pair_has_zero_chow():
    spec = build_spec("C2")
    f = principal_nilpotent(spec)
    value = chow(CommutingPair(spec, f, f ** 3))
    assert all(p == (0, 0) for p in value.coords)


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "D3"])
def test_chow_is_conjugation_invariant(name):
    spec = build_spec(name)
    rng = random.Random(11)
    n = spec.n
    xs = [F(k + 1) for k in range(n)]
    ys = [F(2 * k - 1) for k in range(n)]
    if spec.type == "A":
        xs, ys = [F(1), F(2), F(-3)], [F(0), F(-1), F(1)]
        a, b = Matrix.diag(xs), Matrix.diag(ys)
    else:
        mid = [0] if spec.type == "B" else []
        if spec.type == "C":
            a, b = Matrix.diag(xs + [-x for x in xs]), Matrix.diag(ys + [-y for y in ys])
        else:
            a = Matrix.diag(xs + mid + [-x for x in reversed(xs)])
            b = Matrix.diag(ys + mid + [-y for y in reversed(ys)])
    base = chow(CommutingPair(spec, a, b))
    g, ginv = random_group_element(spec, rng)
    moved = chow(CommutingPair(spec, g @ a @ ginv, g @ b @ ginv))
    assert moved.coords == base.coords
    if spec.type in "BCD":
        assert base.coords == weyl_orbit_max(spec.type, list(zip(xs, ys)))


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "D4"])
def test_principal_embedding_spectrum(name):
    spec = build_spec(name)
    a2 = Matrix([[0, 1], [1, 0]])
    pair = embed_sl2(spec, a2, a2.scale(2))
    pair.validate()
    _, _, h = principal_sl2_triple(spec)
    # e + f is conjugate to h inside the principal sl_2
    expected = sorted(((h[i, i], 2 * h[i, i]) for i in range(spec.m)), key=point_key)
    assert list(chow(pair).points) == expected


def test_embed_rejects_nonstandard_input():
    spec = build_spec("A2")
    with pytest.raises(NotStandardForm):
        embed_sl2(spec, Matrix([[1, 0], [0, -1]]), Matrix.zeros(2))


# -- canonical forms -------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["B", "C", "D"]), st.lists(points, min_size=3, max_size=3))
def test_canonical_form_is_orbit_maximum(kind, pairs):
    spec = build_spec(kind, 3)
    assert canonicalize_weyl(spec, pairs) == weyl_orbit_max(kind, pairs)


@settings(max_examples=60, deadline=None)
@given(st.lists(points, min_size=4, max_size=4), st.permutations(range(4)))
def test_type_a_canonical_form_ignores_order(pairs, perm):
    spec = build_spec("A3")
    assert canonicalize_weyl(spec, pairs) == canonicalize_weyl(spec, [pairs[i] for i in perm])
