"""Classical Lie algebras in their standard representations.

Conventions:

* A_n is sl_{n+1}.
* B_n and D_n preserve the anti-diagonal form, so M is in g iff
  M[i][j] == -M[m-1-j][m-1-i].
* C_n preserves sum_i e_i ^ e_{n+i}, so the 2x2 block matrix [[A, B], [C, D]]
  is in g iff D = -A^T and B, C are symmetric.

The principal nilpotents and slices are the explicit generalized companion
matrices.  Two parameter scalings are fixed so the characteristic polynomials
come out with the literal signs and factors recorded in
``slice_charpoly_expected``:

* the A-type companion column carries -t_k;
* the D-type tau entries form (tau/2) * S^T.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

from .errors import MembershipViolation
from .exact import Matrix, UniPoly, commutator, kernel_basis, rank, solve

TYPES = ("A", "B", "C", "D")


def _sparse_to_matrix(m, entries):
    rows = [[0] * m for _ in range(m)]
    for (i, j), c in entries.items():
        rows[i][j] = c
    return Matrix(rows)


@dataclass(frozen=True)
class LieAlgebraSpec:
    type: str
    n: int  # rank

    def __post_init__(self):
        if self.type not in TYPES:
            raise ValueError("unknown type %r" % self.type)
        low = {"A": 1, "B": 1, "C": 1, "D": 3}[self.type]
        if not isinstance(self.n, int) or self.n < low:
            raise ValueError("unsupported rank %r for type %s" % (self.n, self.type))

    @property
    def name(self):
        return "%s%d" % (self.type, self.n)

    @property
    def rank(self):
        return self.n

    @property
    def m(self):
        """Dimension of the standard representation."""
        n = self.n
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.type]

    @property
    def dim(self):
        n = self.n
        return {
            "A": (n + 1) ** 2 - 1,
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
        }[self.type]

    @property
    def exponents(self):
        n = self.n
        if self.type == "A":
            return tuple(range(1, n + 1))
        if self.type in "BC":
            return tuple(range(1, 2 * n, 2))
        return tuple(range(1, 2 * n - 2, 2)) + (n - 1,)

    @property
    def form(self):
        """Matrix of the invariant bilinear form."""
        m = self.m
        if self.type == "A":
            return Matrix.identity(m)
        if self.type in "BD":
            return Matrix([[1 if i + j == m - 1 else 0 for j in range(m)] for i in range(m)])
        n = self.n
        rows = [[0] * m for _ in range(m)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return Matrix(rows)

    # -- membership and basis -------------------------------------------------
    def is_member(self, x: Matrix) -> bool:
        m = self.m
        if x.shape != (m, m):
            return False
        if self.type == "A":
            return x.trace() == 0
        if self.type in "BD":
            return all(x[i, j] == -x[m - 1 - j, m - 1 - i] for i in range(m) for j in range(m))
        n = self.n
        for i in range(n):
            for j in range(n):
                if x[n + i, n + j] != -x[j, i]:
                    return False
                if x[i, n + j] != x[j, n + i] or x[n + i, j] != x[n + j, i]:
                    return False
        return True

    @cached_property
    def basis_sparse(self):
        m, n = self.m, self.n
        out = []
        if self.type == "A":
            for i in range(m):
                for j in range(m):
                    if i != j:
                        out.append({(i, j): Fraction(1)})
            for i in range(m - 1):
                out.append({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)})
        elif self.type in "BD":
            for i in range(m):
                for j in range(m):
                    if i + j < m - 1:
                        out.append({(i, j): Fraction(1), (m - 1 - j, m - 1 - i): Fraction(-1)})
        else:
            for i in range(n):
                for j in range(n):
                    out.append({(i, j): Fraction(1), (n + j, n + i): Fraction(-1)})
            for i in range(n):
                for j in range(i, n):
                    if i == j:
                        out.append({(i, n + i): Fraction(1)})
                        out.append({(n + i, i): Fraction(1)})
                    else:
                        out.append({(i, n + j): Fraction(1), (j, n + i): Fraction(1)})
                        out.append({(n + i, j): Fraction(1), (n + j, i): Fraction(1)})
        return tuple(out)

    @cached_property
    def basis(self):
        return tuple(_sparse_to_matrix(self.m, e) for e in self.basis_sparse)

    def coordinates(self, x: Matrix):
        """Coefficients of x in ``basis``; raises if x is not in g."""
        if not self.is_member(x):
            raise MembershipViolation("matrix is not in %s" % self.name)
        cols = [b.entries() for b in self.basis]
        mat = [[c[k] for c in cols] for k in range(self.m * self.m)]
        sol = solve(mat, x.entries())
        if sol is None:
            raise MembershipViolation("matrix is not in the span of the basis")
        return sol

    def combine(self, coeffs) -> Matrix:
        rows = [[Fraction(0)] * self.m for _ in range(self.m)]
        for c, e in zip(coeffs, self.basis_sparse):
            if c == 0:
                continue
            for (i, j), v in e.items():
                rows[i][j] = rows[i][j] + c * v
        return Matrix(rows)

    def num_params(self):
        return self.n


_SPEC_RE = re.compile(r"^\s*([ABCDabcd])\s*(\d+)\s*$")


def build_spec(kind, rank=None) -> LieAlgebraSpec:
    """``build_spec("D", 3)`` or ``build_spec("D3")``."""
    if rank is None:
        mt = _SPEC_RE.match(str(kind))
        if not mt:
            raise ValueError("cannot parse Lie algebra name %r" % kind)
        kind, rank = mt.group(1).upper(), int(mt.group(2))
    return LieAlgebraSpec(str(kind).upper(), int(rank))


def exponent_identity(spec: LieAlgebraSpec) -> bool:
    return sum(2 * e + 1 for e in spec.exponents) == spec.dim


# -- principal nilpotent, S, slices ---------------------------------------------

def principal_nilpotent(spec: LieAlgebraSpec) -> Matrix:
    m, n = spec.m, spec.n
    e = {}
    if spec.type == "A":
        for i in range(1, m):
            e[(i, i - 1)] = 1
    elif spec.type == "B":
        for i in range(1, n + 1):
            e[(i, i - 1)] = 1
        for i in range(n + 1, 2 * n + 1):
            e[(i, i - 1)] = -1
    elif spec.type == "C":
        for i in range(1, n):
            e[(i, i - 1)] = 1
        for i in range(n, 2 * n - 1):
            e[(i, i + 1)] = -1
        e[(2 * n - 1, n - 1)] = 1
    else:
        for i in range(1, n):
            e[(i, i - 1)] = 1
        e[(n, n - 2)] = 1
        e[(n + 1, n - 1)] = -1
        e[(n + 1, n)] = -1
        for i in range(n + 2, 2 * n):
            e[(i, i - 1)] = -1
    return _sparse_to_matrix(m, e)


def matrix_S(spec: LieAlgebraSpec) -> Matrix:
    """The extra centralizer element of the D_n principal nilpotent."""
    if spec.type != "D":
        raise ValueError("S is only defined for type D")
    n = spec.n
    return _sparse_to_matrix(
        2 * n, {(n - 1, 0): 1, (n, 0): -1, (2 * n - 1, n - 1): 1, (2 * n - 1, n): -1}
    )


@dataclass(frozen=True)
class SliceParams:
    """t = (t_2, t_3, ...) for A; (t_2, t_4, ...) for B/C/D; tau only for D."""

    t: tuple = ()
    tau: object = Fraction(0)

    def __init__(self, t=(), tau=0):
        object.__setattr__(self, "t", tuple(Fraction(x) if isinstance(x, int) else x for x in t))
        object.__setattr__(self, "tau", Fraction(tau) if isinstance(tau, int) else tau)


def param_names(spec: LieAlgebraSpec):
    n = spec.n
    if spec.type == "A":
        return ["t%d" % k for k in range(2, n + 2)]
    if spec.type in "BC":
        return ["t%d" % (2 * k) for k in range(1, n + 1)]
    return ["t%d" % (2 * k) for k in range(1, n)] + ["tau"]


def _check_params(spec, params):
    want = spec.n - 1 if spec.type == "D" else spec.n
    if len(params.t) != want:
        raise ValueError(
            "%s slice needs %d t-parameters, got %d" % (spec.name, want, len(params.t))
        )
    if spec.type != "D" and params.tau != 0:
        raise ValueError("tau only exists for type D")


def principal_slice(spec: LieAlgebraSpec, params: SliceParams) -> Matrix:
    _check_params(spec, params)
    f = principal_nilpotent(spec)
    rows = [list(r) for r in f.rows]
    m, n = spec.m, spec.n
    t = params.t

    def put(i, j, c):
        rows[i][j] = rows[i][j] + c

    if spec.type == "A":
        for k in range(2, m + 1):
            put(m - k, m - 1, -t[k - 2])
    elif spec.type == "B":
        for k in range(1, n + 1):
            put(n - k, n + k - 1, t[k - 1])
            put(n - k + 1, n + k, -t[k - 1])
    elif spec.type == "C":
        for i in range(n):
            k = n - i  # t_{2k} sits in row i
            put(i, n + i, t[k - 1])
    else:
        if n >= 2:
            t2 = t[0]
            put(n - 2, n - 1, t2)
            put(n - 2, n, t2)
            put(n - 1, n + 1, -t2)
            put(n, n + 1, -t2)
        for k in range(2, n):
            put(n - 1 - k, n + k - 1, t[k - 1])
            put(n - k, n + k, -t[k - 1])
        half = params.tau / 2
        st = matrix_S(spec).T()
        for i in range(m):
            for j in range(m):
                if st[i, j] != 0:
                    put(i, j, half * st[i, j])
    return Matrix(rows)


def slice_charpoly_expected(spec: LieAlgebraSpec, params: SliceParams, var="x") -> UniPoly:
    """Characteristic polynomial of the slice, as a closed formula."""
    _check_params(spec, params)
    m, n = spec.m, spec.n
    c = [Fraction(0)] * (m + 1)
    c[m] = Fraction(1)
    t = params.t
    if spec.type == "A":
        for k in range(2, m + 1):
            c[m - k] = t[k - 2]
    elif spec.type == "B":
        for k in range(1, n + 1):
            c[m - 2 * k] = (-1) ** k * 2 * t[k - 1]
    elif spec.type == "C":
        for k in range(1, n + 1):
            c[m - 2 * k] = (-1) ** k * t[k - 1]
    else:
        for k in range(1, n):
            c[m - 2 * k] = (-1) ** k * 4 * t[k - 1]
        c[0] = (-1) ** n * params.tau * params.tau
    return UniPoly(c, var)


def S_t(spec: LieAlgebraSpec, params: SliceParams) -> Matrix:
    """S + t_{2n-2} S^T, which commutes with the tau = 0 slice."""
    s = matrix_S(spec)
    return s + s.T().scale(params.t[-1])


# -- centralizers ---------------------------------------------------------------

def _commutator_rows(spec, x: Matrix):
    """Columns of the linear map c -> [x, sum_k c_k b_k] (as m*m rows)."""
    m = spec.m
    cols = []
    for e in spec.basis_sparse:
        out = {}
        for (i, j), v in e.items():
            # x E_ij has column j equal to x[:, i]; E_ij x has row i equal to x[j, :]
            for a in range(m):
                xa = x[a, i]
                if xa != 0:
                    out[(a, j)] = out.get((a, j), 0) + v * xa
            for b in range(m):
                xb = x[j, b]
                if xb != 0:
                    out[(i, b)] = out.get((i, b), 0) - v * xb
        cols.append(out)
    rows = [[Fraction(0)] * len(cols) for _ in range(m * m)]
    for k, col in enumerate(cols):
        for (a, b), v in col.items():
            rows[a * m + b][k] = v
    return rows


def _system(spec, matrices):
    rows = []
    for x in matrices:
        if not spec.is_member(x):
            raise MembershipViolation("input matrix is not in %s" % spec.name)
        rows.extend(r for r in _commutator_rows(spec, x) if any(c != 0 for c in r))
    return rows


def centralizer_in_g(spec: LieAlgebraSpec, matrices) -> list:
    """Basis (as matrices) of the common centralizer inside g."""
    rows = _system(spec, matrices)
    if not rows:
        return list(spec.basis)
    return [spec.combine(v.as_vector()) for v in kernel_basis(rows)]


def centralizer_dim(spec: LieAlgebraSpec, matrices) -> int:
    rows = _system(spec, matrices)
    return spec.dim - (rank(rows) if rows else 0)


def is_regular(spec: LieAlgebraSpec, x: Matrix) -> bool:
    return centralizer_dim(spec, [x]) == spec.rank


def principal_centralizer_basis(spec: LieAlgebraSpec):
    """Named basis of Z(f): powers of f (and S for D)."""
    f = principal_nilpotent(spec)
    if spec.type == "A":
        powers = list(range(1, spec.m))
    elif spec.type in "BC":
        powers = list(range(1, 2 * spec.n, 2))
    else:
        powers = list(range(1, 2 * spec.n - 2, 2))
    out = [("f^%d" % k, f ** k) for k in powers]
    if spec.type == "D":
        out.append(("S", matrix_S(spec)))
    return out


# -- principal sl2 triple --------------------------------------------------------

def principal_sl2_triple(spec: LieAlgebraSpec):
    f = principal_nilpotent(spec)
    m = spec.m
    # diagonal h: h_i - h_j = -2 whenever f[i, j] != 0, plus membership
    eqs, rhs = [], []
    for i in range(m):
        for j in range(m):
            if f[i, j] != 0:
                row = [0] * m
                row[i] += 1
                row[j] -= 1
                eqs.append(row)
                rhs.append(-2)
    if spec.type == "A":
        eqs.append([1] * m)
        rhs.append(0)
    elif spec.type in "BD":
        for i in range(m):
            row = [0] * m
            row[i] += 1
            row[m - 1 - i] += 1
            eqs.append(row)
            rhs.append(0)
    else:
        n = spec.n
        for i in range(n):
            row = [0] * m
            row[i] = 1
            row[n + i] = 1
            eqs.append(row)
            rhs.append(0)
    hs = solve(eqs, rhs)
    if hs is None or rank(eqs) != m:
        raise ArithmeticError("no unique diagonal h for %s" % spec.name)
    h = Matrix.diag(hs)
    # e in g: [h, e] = 2e and [e, f] = h
    dim = spec.dim
    basis = spec.basis
    brackets_h = [(commutator(h, b) - b.scale(2)).entries() for b in basis]
    brackets_f = [commutator(b, f).entries() for b in basis]
    mat = []
    vec = []
    for k in range(m * m):
        mat.append([col[k] for col in brackets_h])
        vec.append(Fraction(0))
    target = h.entries()
    for k in range(m * m):
        mat.append([col[k] for col in brackets_f])
        vec.append(target[k])
    coeffs = solve(mat, vec)
    if coeffs is None or rank(mat) != dim:
        raise ArithmeticError("no unique e for %s" % spec.name)
    e = spec.combine(coeffs)
    return e, f, h


# -- Cartan data and group elements ---------------------------------------------

def cartan_element(spec: LieAlgebraSpec, coords) -> Matrix:
    """Diagonal Cartan element from rank-many (A: m zero-sum) coordinates."""
    coords = list(coords)
    n = spec.n
    if spec.type == "A":
        if len(coords) != spec.m or sum(coords) != 0:
            raise ValueError("A-type Cartan coordinates must be m values summing to 0")
        return Matrix.diag(coords)
    if len(coords) != n:
        raise ValueError("need %d coordinates" % n)
    if spec.type == "B":
        return Matrix.diag(coords + [0] + [-c for c in reversed(coords)])
    if spec.type == "C":
        return Matrix.diag(coords + [-c for c in coords])
    return Matrix.diag(coords + [-c for c in reversed(coords)])


def cartan_coordinates(spec: LieAlgebraSpec, diag_matrix: Matrix):
    d = [diag_matrix[i, i] for i in range(spec.m)]
    n = spec.n
    if spec.type == "A":
        return d
    return d[:n]


def exp_nilpotent(x: Matrix) -> Matrix:
    """exp of a nilpotent matrix as a finite sum."""
    n = x.nrows
    out = Matrix.identity(n)
    power = Matrix.identity(n)
    for k in range(1, n + 1):
        power = power @ x
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def nilpotent_basis(spec: LieAlgebraSpec):
    """Basis elements of g that are strictly upper or strictly lower triangular."""
    out = []
    for b in spec.basis:
        upper = all(b[i, j] == 0 for i in range(spec.m) for j in range(spec.m) if j <= i)
        lower = all(b[i, j] == 0 for i in range(spec.m) for j in range(spec.m) if j >= i)
        if upper or lower:
            out.append(b)
    return out


def random_group_element(spec: LieAlgebraSpec, rng, steps=3, bound=2):
    """Product of exponentials of random nilpotent basis elements, with inverse."""
    nb = nilpotent_basis(spec)
    g = Matrix.identity(spec.m)
    ginv = Matrix.identity(spec.m)
    for _ in range(steps):
        x = rng.choice(nb).scale(Fraction(rng.randint(-bound, bound), rng.randint(1, 2)))
        g = g @ exp_nilpotent(x)
        ginv = exp_nilpotent(-x) @ ginv
    return g, ginv


def random_rational(rng, bound=5, den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_params(spec: LieAlgebraSpec, rng, tau=True) -> SliceParams:
    k = spec.n - 1 if spec.type == "D" else spec.n
    t = [random_rational(rng) for _ in range(k)]
    tv = random_rational(rng) if (spec.type == "D" and tau) else Fraction(0)
    return SliceParams(t, tv)


def random_centralizer_element(spec: LieAlgebraSpec, x_basis, rng, bound=5):
    acc = Matrix.zeros(spec.m)
    for b in x_basis:
        acc = acc + b.scale(random_rational(rng, bound))
    return acc


def params_from_roots(spec: LieAlgebraSpec, roots) -> SliceParams:
    """Slice parameters whose characteristic polynomial has the given roots.

    A: the m roots (summing to zero).  B/C/D: r_1..r_n, giving the spectrum
    +-r_i (and 0 for B).  For D, tau = r_1 ... r_n.
    """
    roots = [Fraction(r) if isinstance(r, int) else r for r in roots]
    x = UniPoly.x()
    if spec.type == "A":
        if len(roots) != spec.m or sum(roots, Fraction(0)) != 0:
            raise ValueError("need %d roots summing to zero" % spec.m)
        chi = UniPoly([1])
        for r in roots:
            chi = chi * (x - UniPoly([r]))
        return SliceParams([chi.coeff(spec.m - k) for k in range(2, spec.m + 1)])
    if len(roots) != spec.n:
        raise ValueError("need %d roots" % spec.n)
    chi = UniPoly([1])
    for r in roots:
        chi = chi * (x * x - UniPoly([r * r]))
    m2 = 2 * spec.n
    c = [chi.coeff(m2 - 2 * k) for k in range(1, spec.n + 1)]
    if spec.type == "B":
        t = [c[k - 1] / (2 * (-1) ** k) for k in range(1, spec.n + 1)]
        return SliceParams(t)
    if spec.type == "C":
        t = [c[k - 1] * (-1) ** k for k in range(1, spec.n + 1)]
        return SliceParams(t)
    t = [c[k - 1] / (4 * (-1) ** k) for k in range(1, spec.n)]
    tau = Fraction(1)
    for r in roots:
        tau = tau * r
    return SliceParams(t, tau)
