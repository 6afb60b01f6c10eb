"""Classification of commuting pairs: centralizers, regularity, cyclicity,
the mu_2 coordinate, the Chow map and the principal sl_2 embedding."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    MembershipViolation,
    NonCommuting,
    NotInCentralizer,
    NotStandardForm,
)
from .exact import Matrix, Span, charpoly, commutator, is_nilpotent, kernel_basis, minimal_polynomial
from .exact.linalg import jordan_chevalley
from .exact.scalars import format_scalar, sort_key
from .liealg import (
    LieAlgebraSpec,
    build_spec,
    centralizer_dim,
    principal_centralizer_basis,
    principal_nilpotent,
    principal_sl2_triple,
)
from .roots import roots_with_multiplicity


@dataclass(frozen=True)
class CommutingPair:
    spec: LieAlgebraSpec
    A: Matrix
    B: Matrix

    def validate(self):
        for name, x in (("A", self.A), ("B", self.B)):
            if not self.spec.is_member(x):
                raise MembershipViolation("%s is not in %s" % (name, self.spec.name))
        if not commutator(self.A, self.B).is_zero():
            raise NonCommuting("[A, B] != 0")
        return self


# -- cyclicity ----------------------------------------------------------------------

def krylov_span(a: Matrix, b: Matrix, v) -> Span:
    """Span of all words in a, b applied to v."""
    span = Span()
    if not span.add(v):
        return span
    queue = [list(v)]
    while queue:
        w = queue.pop()
        for m in (a, b):
            u = m.apply(w)
            if span.add(u):
                queue.append(u)
    return span


def is_cyclic_vector(a: Matrix, b: Matrix, v) -> bool:
    return len(krylov_span(a, b, v)) == a.nrows


def _random_vector(rng, m, bound=9):
    return [Fraction(rng.randint(-bound, bound)) for _ in range(m)]


def _in_span(x: Matrix, y: Matrix) -> bool:
    """Is x a scalar multiple of y (including x = 0)?"""
    if x.is_zero():
        return True
    if y.is_zero():
        return False
    sp = Span()
    sp.add(y.entries())
    return sp.express(x.entries()) is not None


def _algebra_dim(a: Matrix, b: Matrix) -> int:
    """Dimension of the unital algebra generated by two commuting matrices."""
    m = a.nrows
    return len(krylov_span(_lmul(a), _lmul(b), Matrix.identity(m).entries()))


def _lmul(a: Matrix) -> Matrix:
    """Left multiplication by a on row-major flattened m x m matrices."""
    m = a.nrows
    n = m * m
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        for k in range(m):
            c = a[i, k]
            if c == 0:
                continue
            for j in range(m):
                rows[i * m + j][k * m + j] = c
    return Matrix(rows)


@dataclass(frozen=True)
class Cyclicity:
    status: str  # "certified-yes" | "probably-no" | "certified-no"
    witness: tuple = None
    trials: int = 0
    reason: str = ""

    def to_json(self):
        out = {"status": self.status, "trials": self.trials, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = [format_scalar(x) for x in self.witness]
        return out


def cyclicity(a: Matrix, b: Matrix, seed=0, trials=20) -> Cyclicity:
    rng = random.Random(seed)
    m = a.nrows
    single = None
    if _in_span(b, a):
        single = a
    elif _in_span(a, b):
        single = b
    if single is not None and minimal_polynomial(single) != charpoly(single):
        return Cyclicity("certified-no", None, 0, "minimal polynomial differs from characteristic polynomial")
    if single is None and _algebra_dim(a, b) < m:
        return Cyclicity("certified-no", None, 0, "generated algebra has dimension < m")
    for k in range(trials):
        v = _random_vector(rng, m)
        if is_cyclic_vector(a, b, v):
            return Cyclicity("certified-yes", tuple(v), k + 1, "Krylov span is full")
    if single is not None:
        # cyclic by the minimal polynomial criterion; keep looking for a witness
        for k in range(20 * trials + 100):
            v = _random_vector(rng, m, bound=10 ** 6)
            if is_cyclic_vector(a, b, v):
                return Cyclicity("certified-yes", tuple(v), trials + k + 1, "Krylov span is full")
        raise ArithmeticError("no witness found for a cyclic matrix")
    return Cyclicity("probably-no", None, trials, "no random vector was cyclic")


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class HilbClass:
    spec: str
    dimZ: int
    rank: int
    in_hilb: bool
    A_regular: bool
    B_regular: bool
    nilpotent_pair: bool
    cyclic: Cyclicity

    def to_json(self):
        return {
            "spec": self.spec,
            "dimZ": self.dimZ,
            "rank": self.rank,
            "in_hilb": self.in_hilb,
            "A_regular": self.A_regular,
            "B_regular": self.B_regular,
            "nilpotent_pair": self.nilpotent_pair,
            "cyclic": self.cyclic.to_json(),
        }


def classify(pair: CommutingPair, seed=0, trials=20) -> HilbClass:
    pair.validate()
    spec = pair.spec
    dim_z = centralizer_dim(spec, [pair.A, pair.B])
    return HilbClass(
        spec=spec.name,
        dimZ=dim_z,
        rank=spec.rank,
        in_hilb=dim_z == spec.rank,
        A_regular=centralizer_dim(spec, [pair.A]) == spec.rank,
        B_regular=centralizer_dim(spec, [pair.B]) == spec.rank,
        nilpotent_pair=is_nilpotent(pair.A) and is_nilpotent(pair.B),
        cyclic=cyclicity(pair.A, pair.B, seed, trials),
    )


# -- mu_2 -------------------------------------------------------------------------

def centralizer_coordinates(spec: LieAlgebraSpec, b: Matrix):
    """Coefficients of b in the named basis of Z(f) (f, f^2, ... or f, f^3, ..., S)."""
    f = principal_nilpotent(spec)
    if not spec.is_member(b):
        raise MembershipViolation("B is not in %s" % spec.name)
    if not commutator(f, b).is_zero():
        raise NotInCentralizer("B does not commute with the principal nilpotent")
    named = principal_centralizer_basis(spec)
    sp = Span()
    for _, x in named:
        sp.add(x.entries())
    coeffs = sp.express(b.entries())
    if coeffs is None:
        raise NotInCentralizer("B is not in the span of the centralizer basis")
    return {name: c for (name, _), c in zip(named, coeffs)}


def mu2(pair: CommutingPair, seed=0) -> Fraction:
    spec = pair.spec
    f = principal_nilpotent(spec)
    if pair.A != f:
        raise NotStandardForm("A must be the standard principal nilpotent of %s" % spec.name)
    coords = centralizer_coordinates(spec, pair.B)
    value = coords["f^1"]
    if not mu2_verify(spec, pair.B, value, seed):
        raise ArithmeticError("mu_2 post-verification failed")
    return value


def mu2_verify(spec: LieAlgebraSpec, b: Matrix, value, seed=0, samples=3) -> bool:
    f = principal_nilpotent(spec)
    if centralizer_dim(spec, [b - f.scale(value)]) <= spec.rank:
        return False
    rng = random.Random(seed)
    seen = set()
    while len(seen) < samples:
        mu = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        if mu == value or mu in seen:
            continue
        seen.add(mu)
        if centralizer_dim(spec, [b - f.scale(mu)]) != spec.rank:
            return False
    return True


# -- joint spectra and the Chow map -------------------------------------------

def _restrict(op: Matrix, basis):
    """Matrix of op on the invariant subspace spanned by ``basis``."""
    sp = Span()
    for v in basis:
        sp.add(v)
    cols = []
    for v in basis:
        c = sp.express(op.apply(v))
        if c is None:
            raise ArithmeticError("subspace is not invariant")
        cols.append(c)
    return Matrix.from_columns(cols)


def _shifted(m: Matrix, lam):
    return m - Matrix.identity(m.nrows).scale(lam)


def joint_spectrum(a: Matrix, b: Matrix):
    """Joint eigenvalues of commuting a, b with multiplicities and generalized
    joint eigenspaces: [((x, y), multiplicity, basis vectors), ...]."""
    m = a.nrows
    out = []
    for lam, _ in roots_with_multiplicity(charpoly(a)):
        k = [v.as_vector() for v in kernel_basis(_shifted(a, lam) ** m)]
        rb = _restrict(b, k)
        d = len(k)
        for mu, mult in roots_with_multiplicity(charpoly(rb)):
            sub = kernel_basis(_shifted(rb, mu) ** d)
            vecs = [_combine(k, s.as_vector()) for s in sub]
            out.append(((lam, mu), mult, vecs))
    return out


def _combine(basis, coeffs):
    m = len(basis[0])
    out = [Fraction(0)] * m
    for c, v in zip(coeffs, basis):
        if c != 0:
            out = [x + c * y for x, y in zip(out, v)]
    return out


def point_key(p):
    return (sort_key(p[0]), sort_key(p[1]))


def _neg(p):
    return (-p[0], -p[1])


def _is_positive(p):
    """The lexicographically larger of p and -p (p != 0)."""
    return point_key(p) > point_key(_neg(p))


def _is_zero_point(p):
    return p[0] == 0 and p[1] == 0


def canonicalize_weyl(spec: LieAlgebraSpec, pairs):
    """Canonical encoding of a W-orbit of Cartan coordinate pairs."""
    pairs = [tuple(p) for p in pairs]
    t = spec.type
    if t == "A":
        if len(pairs) != spec.m:
            raise ValueError("A-type canonicalization needs %d points" % spec.m)
        return tuple(sorted(pairs, key=point_key))
    if len(pairs) != spec.rank:
        raise ValueError("%s canonicalization needs %d pairs" % (spec.name, spec.rank))
    flips = 0
    out = []
    for p in pairs:
        if not _is_zero_point(p) and not _is_positive(p):
            p = _neg(p)
            flips += 1
        out.append(p)
    out.sort(key=point_key)
    if t == "D" and flips % 2 == 1 and not any(_is_zero_point(p) for p in out):
        out[0] = _neg(out[0])
        out.sort(key=point_key)
    return tuple(out)


@dataclass(frozen=True)
class ChowValue:
    spec: str
    coords: tuple  # canonical Cartan coordinates
    points: tuple  # full multiset of m joint eigenvalues, sorted
    parity_note: str = ""

    def to_json(self):
        fmt = lambda ps: [[format_scalar(x), format_scalar(y)] for x, y in ps]
        out = {"spec": self.spec, "coords": fmt(self.coords), "points": fmt(self.points)}
        if self.parity_note:
            out["parity"] = self.parity_note
        return out


def points_to_cartan(spec: LieAlgebraSpec, points):
    """Pick rank-many representatives (one of each +-pair) from m points.

    Returns (representatives, zero_count) where the representatives are the
    lexicographically larger members of each pair."""
    if spec.type == "A":
        return list(points), 0
    counts = {}
    for p in points:
        counts[p] = counts.get(p, 0) + 1
    reps = []
    zeros = 0
    for p, c in counts.items():
        if _is_zero_point(p):
            zeros = c
            continue
        if counts.get(_neg(p), 0) != c:
            raise ValueError("joint spectrum is not symmetric under -1")
        if _is_positive(p):
            reps.extend([p] * c)
    if spec.type == "B":
        zeros -= 1
    if zeros % 2:
        raise ValueError("unexpected multiplicity of the origin")
    reps.extend([(Fraction(0), Fraction(0))] * (zeros // 2))
    if len(reps) != spec.rank:
        raise ValueError("could not read %d Cartan pairs" % spec.rank)
    return reps, zeros


def _d_parity_flip(spec: LieAlgebraSpec, spectrum, reps) -> bool:
    """True when the isotropic subspace built from the chosen representatives
    lies in the other family than span(e_1..e_n)."""
    n = spec.n
    vecs = []
    for p, _, space in spectrum:
        if _is_zero_point(p):
            return False
        if _is_positive(p):
            vecs.extend(space)
    m = spec.m
    sp = Span()
    for v in vecs:
        sp.add(v)
    if len(sp) != n:
        raise ArithmeticError("representative eigenspaces do not form a maximal isotropic subspace")
    # dim(L + E) = n + n - dim(L cap E)
    for i in range(n):
        sp.add([Fraction(1) if k == i else Fraction(0) for k in range(m)])
    inter = 2 * n - len(sp)
    return (inter - n) % 2 != 0


def chow(pair: CommutingPair) -> ChowValue:
    pair.validate()
    spec = pair.spec
    a_s, _ = jordan_chevalley(pair.A)
    b_s, _ = jordan_chevalley(pair.B)
    spectrum = joint_spectrum(a_s, b_s)
    points = []
    for p, mult, _ in spectrum:
        points.extend([p] * mult)
    points.sort(key=point_key)
    reps, _ = points_to_cartan(spec, points)
    note = ""
    if spec.type == "D":
        if _d_parity_flip(spec, spectrum, reps):
            reps = [_neg(reps[0])] + reps[1:]
            note = "odd"
        else:
            note = "even"
    coords = canonicalize_weyl(spec, reps)
    return ChowValue(spec.name, coords, tuple(points), note)


# -- principal sl_2 embedding ----------------------------------------------------

def embed_sl2(spec: LieAlgebraSpec, a2: Matrix, b2: Matrix) -> CommutingPair:
    """Image of an sl_2 pair (f + t e, B) under the principal embedding."""
    sl2 = build_spec("A1")
    for x in (a2, b2):
        if x.shape != (2, 2) or not sl2.is_member(x):
            raise NotStandardForm("input is not a pair in sl_2")
    if a2[0, 0] != 0 or a2[1, 0] != 1:
        raise NotStandardForm("A must have the form f + t e = [[0, t], [1, 0]]")
    if not commutator(a2, b2).is_zero():
        raise NonCommuting("[A, B] != 0")
    e, f, h = principal_sl2_triple(spec)

    def psi(x):
        return h.scale(x[0, 0]) + e.scale(x[0, 1]) + f.scale(x[1, 0])

    return CommutingPair(spec, psi(a2), psi(b2))
