"""The split real form sl_n(R): Cartan decomposition g = k + p, the
classification of commuting pairs in p, and the sl_2(R) nilpotent example."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonCommuting, NotInP
from .exact import QI, Matrix, commutator, inverse, is_nilpotent, kernel_basis, rank
from .hilb import CommutingPair, canonicalize_weyl, chow, classify
from .liealg import LieAlgebraSpec, build_spec, random_rational

I = QI(0, 1)


@dataclass(frozen=True)
class RealFormSpec:
    spec: LieAlgebraSpec
    k_basis: tuple
    p_basis: tuple
    a_basis: tuple
    theta: str = "X -> -X^T"

    @property
    def real_rank(self):
        return len(self.a_basis)

    def in_k(self, x: Matrix) -> bool:
        return self.spec.is_member(x) and x.T() == -x

    def in_p(self, x: Matrix) -> bool:
        return self.spec.is_member(x) and x.T() == x

    def theta_of(self, x: Matrix) -> Matrix:
        return -x.T()


def build_split(spec: LieAlgebraSpec) -> RealFormSpec:
    """sl_n(R): k = skew-symmetric, p = symmetric traceless, a = diagonal."""
    if spec.type != "A":
        raise ValueError("only the split form of type A is implemented")
    m = spec.m
    k_basis, p_basis, a_basis = [], [], []
    for i in range(m):
        for j in range(i + 1, m):
            k_basis.append(Matrix.unit(m, i, j) - Matrix.unit(m, j, i))
            p_basis.append(Matrix.unit(m, i, j) + Matrix.unit(m, j, i))
    for i in range(m - 1):
        h = Matrix.unit(m, i, i) - Matrix.unit(m, i + 1, i + 1)
        p_basis.append(h)
        a_basis.append(h)
    return RealFormSpec(spec, tuple(k_basis), tuple(p_basis), tuple(a_basis))


def decomposition_check(rf: RealFormSpec) -> dict:
    """Exact checks of g = k + p and the bracket inclusions on basis pairs."""
    spec = rf.spec
    ks, ps = rf.k_basis, rf.p_basis
    direct = len(ks) + len(ps) == spec.dim and rank([x.entries() for x in ks + ps]) == spec.dim
    kk = all(rf.in_k(commutator(a, b)) for a in ks for b in ks)
    kp = all(rf.in_p(commutator(a, b)) for a in ks for b in ps)
    pp = all(rf.in_k(commutator(a, b)) for a in ps for b in ps)
    a_abelian = all(commutator(a, b).is_zero() for a in rf.a_basis for b in rf.a_basis)
    return {
        "direct_sum": direct,
        "[k,k] in k": kk,
        "[k,p] in p": kp,
        "[p,p] in k": pp,
        "a abelian": a_abelian,
        "real rank = rank": rf.real_rank == spec.rank,
    }


def centralizer_in_p(rf: RealFormSpec, matrices):
    """Basis of {X in p : [M, X] = 0 for every M} as coefficient vectors over p_basis."""
    rows = []
    for x in matrices:
        cols = [commutator(x, b).entries() for b in rf.p_basis]
        rows.extend([col[r] for col in cols] for r in range(len(cols[0])))
    rows = [r for r in rows if any(c != 0 for c in r)]
    if not rows:
        return [Matrix.column([1 if i == j else 0 for i in range(len(rf.p_basis))]) for j in range(len(rf.p_basis))]
    return kernel_basis(rows)


@dataclass(frozen=True)
class RealClass:
    dimZp: int
    real_rank: int
    in_hilb: bool
    A_nilpotent: bool
    B_nilpotent: bool

    def to_json(self):
        return {
            "dimZp": self.dimZp,
            "real_rank": self.real_rank,
            "in_hilb": self.in_hilb,
            "A_nilpotent": self.A_nilpotent,
            "B_nilpotent": self.B_nilpotent,
        }


def classify_real(rf: RealFormSpec, a: Matrix, b: Matrix) -> RealClass:
    for name, x in (("A", a), ("B", b)):
        if not rf.in_p(x):
            raise NotInP("%s is not a symmetric traceless matrix" % name)
    if not commutator(a, b).is_zero():
        raise NonCommuting("[A, B] != 0")
    dim = len(centralizer_in_p(rf, [a, b]))
    return RealClass(dim, rf.real_rank, dim == rf.real_rank, is_nilpotent(a), is_nilpotent(b))


# -- the sl_2(R) example --------------------------------------------------------

def sl2_p_element(a, b) -> Matrix:
    return Matrix([[a, b], [b, -a]])


NILPOTENT_FAMILIES = {
    "+i": sl2_p_element(1, I),
    "-i": sl2_p_element(1, -I),
}


def circle_point(s):
    """Rational point (cos t, sin t) = ((1 - s^2)/(1 + s^2), 2s/(1 + s^2))."""
    s = Fraction(s)
    d = 1 + s * s
    return (1 - s * s) / d, 2 * s / d


def rotation(s) -> Matrix:
    c, sn = circle_point(s)
    return Matrix([[c, sn], [-sn, c]])


def rotation_scalar(s, sign=1):
    """cos 2t + sign * i sin 2t."""
    c, sn = circle_point(s)
    return QI.make(c * c - sn * sn, sign * 2 * c * sn)


def sl2R_orbit_check(samples=(Fraction(1, 2), Fraction(2), Fraction(-1, 3), Fraction(3, 7))) -> dict:
    """Exact checks of the nilpotent analysis in p for sl_2(R)."""
    import sympy

    report = {}
    # (1) X^2 = (a^2 + b^2) I, so X is nilpotent exactly when b = +-i a
    a, b = sympy.symbols("a b")
    x = sympy.Matrix([[a, b], [b, -a]])
    report["square is (a^2+b^2) I"] = sympy.expand(x * x - (a ** 2 + b ** 2) * sympy.eye(2)) == sympy.zeros(2)
    sols = sympy.solve(a ** 2 + b ** 2, b)
    report["nilpotent iff b = +-i a"] = set(sols) == {sympy.I * a, -sympy.I * a}
    fams = NILPOTENT_FAMILIES
    report["families are nilpotent in p"] = all(
        (m @ m).is_zero() and m.T() == m and m.trace() == 0 for m in fams.values()
    )
    # (2) SO(2, C) acts on each family by a scalar
    action = True
    for s in samples:
        r = rotation(s)
        rinv = r.T()
        action &= r @ rinv == Matrix.identity(2)
        action &= r @ fams["+i"] @ rinv == fams["+i"].scale(rotation_scalar(s, 1))
        action &= r @ fams["-i"] @ rinv == fams["-i"].scale(rotation_scalar(s, -1))
    report["rotation scales the families"] = action
    report["scalar at s=1/2"] = rotation_scalar(Fraction(1, 2))
    # (3) an element of O(2) with determinant -1 swaps the families
    w = Matrix.diag([1, -1])
    report["reflection swaps the families"] = (
        w @ fams["+i"] @ w == fams["-i"] and w @ fams["-i"] @ w == fams["+i"]
    )
    # commuting pairs in p are proportional: Z_p(X) = span(X) for generic X
    field, ga, gb = sympy.field("a,b", sympy.QQ)
    rf = build_split(build_spec("A1"))
    xg = Matrix([[ga, gb], [gb, -ga]])
    kern = centralizer_in_p(rf, [xg])
    report["generic centralizer in p is span(X)"] = len(kern) == 1 and _proportional(
        rf, kern[0].as_vector(), xg
    )
    return report


def _proportional(rf, coeffs, x: Matrix) -> bool:
    y = Matrix.zeros(2)
    for c, b in zip(coeffs, rf.p_basis):
        y = y + b.scale(c)
    k = next((i for i, v in enumerate(x.entries()) if v != 0), None)
    lam = y.entries()[k] / x.entries()[k]
    return all(u == lam * v for u, v in zip(y.entries(), x.entries()))


# -- split real form versus complex --------------------------------------------------

def rational_orthogonal(m, rng, bound=3) -> Matrix:
    """Cayley transform (I - K)(I + K)^{-1} of a random rational skew matrix."""
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            c = random_rational(rng, bound)
            rows[i][j] = c
            rows[j][i] = -c
    k = Matrix(rows)
    ident = Matrix.identity(m)
    return (ident - k) @ inverse(ident + k)


def _random_traceless_diag(m, rng, bound=5):
    d = [Fraction(rng.randint(-bound, bound)) for _ in range(m - 1)]
    d.append(-sum(d, Fraction(0)))
    return d


@dataclass(frozen=True)
class CorrespondenceRecord:
    real_in_hilb: bool
    complex_in_hilb: bool
    chow_matches: bool

    @property
    def agree(self):
        return self.real_in_hilb == self.complex_in_hilb and self.chow_matches


def split_pair_record(rf: RealFormSpec, a: Matrix, b: Matrix, expected_points=None) -> CorrespondenceRecord:
    real = classify_real(rf, a, b)
    cplx = classify(CommutingPair(rf.spec, a, b), trials=3)
    matches = True
    if expected_points is not None:
        value = chow(CommutingPair(rf.spec, a, b))
        matches = value.coords == canonicalize_weyl(rf.spec, expected_points)
    return CorrespondenceRecord(real.in_hilb, cplx.in_hilb, matches)


def split_sample_correspondence(spec: LieAlgebraSpec, samples=10, seed=0):
    """Sampled symmetric commuting pairs O D1 O^T, O D2 O^T, plus the
    nilpotent sl_2 family and degenerate pairs."""
    rf = build_split(spec)
    rng = random.Random(seed)
    m = spec.m
    records = []
    for k in range(samples):
        o = rational_orthogonal(m, rng)
        d1 = _random_traceless_diag(m, rng)
        d2 = _random_traceless_diag(m, rng)
        if k % 4 == 3 and m > 2:
            # a repeated joint eigenvalue: not regular in either sense
            d1[1], d2[1] = d1[0], d2[0]
            d1[-1] = -sum(d1[:-1], Fraction(0))
            d2[-1] = -sum(d2[:-1], Fraction(0))
        a = o @ Matrix.diag(d1) @ o.T()
        b = o @ Matrix.diag(d2) @ o.T()
        records.append(split_pair_record(rf, a, b, list(zip(d1, d2))))
    zero = Matrix.zeros(m)
    records.append(split_pair_record(rf, zero, zero, [(Fraction(0), Fraction(0))] * m))
    if m == 2:
        fam = NILPOTENT_FAMILIES["+i"]
        records.append(split_pair_record(rf, fam, fam.scale(Fraction(3, 2))))
    return records
