"""Exact linear algebra over a field.

Everything here is written against the field operations only, so the same
code runs over Q, Q(i), dual numbers and rational-function fields.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import NonCommuting
from .matrix import Matrix, commutator
from .multipoly import MultiPoly
from .poly import UniPoly, inverse_mod


def is_pivot(x) -> bool:
    """Whether x may be divided by.  Dual numbers only need a nonzero value."""
    unit = getattr(x, "is_unit", None)
    if unit is not None:
        return unit()
    return x != 0


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


def _rows(m):
    if isinstance(m, Matrix):
        return [list(r) for r in m.rows]
    return [[_num(x) for x in r] for r in m]


# -- elimination ----------------------------------------------------------------

def rref(m):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    a = _rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if is_pivot(a[i][c])), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def _bareiss(a):
    """Fraction-free elimination in place; returns (rank, sign, last pivot)."""
    nr = len(a)
    nc = len(a[0]) if a else 0
    prev = Fraction(1)
    sign = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (piv * a[i][j] - a[i][c] * a[r][j]) / prev
            a[i][c] = Fraction(0)
        prev = piv
        r += 1
    return r, sign, prev


def _integer_rows(a):
    """Scale each rational row to integers (rank-preserving); None if not all rational."""
    out = []
    for r in a:
        if not all(isinstance(x, Fraction) for x in r):
            return None
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _bareiss_int(a):
    nr = len(a)
    nc = len(a[0]) if a else 0
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        rowr = a[r]
        for i in range(r + 1, nr):
            ai = a[i]
            aic = ai[c]
            if aic == 0 and prev == 1:
                if piv != 1:
                    for j in range(c + 1, nc):
                        ai[j] = piv * ai[j]
                continue
            for j in range(c + 1, nc):
                ai[j] = (piv * ai[j] - aic * rowr[j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
    return r


def rank(m) -> int:
    a = _rows(m)
    if not a:
        return 0
    ints = _integer_rows(a)
    if ints is not None:
        return _bareiss_int(ints)
    return _bareiss(a)[0]


def det(m):
    a = _rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    r, sign, last = _bareiss(a)
    if r < n:
        return Fraction(0)
    return last if sign > 0 else -last


def kernel_basis(m):
    """Basis of the right kernel as a list of column matrices."""
    a = _rows(m)
    nc = m.ncols if isinstance(m, Matrix) else (len(a[0]) if a else 0)
    if not a:
        return [Matrix.column([1 if i == j else 0 for i in range(nc)]) for j in range(nc)]
    red, pivots = rref(a)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(Matrix.column(v))
    return basis


def nullity(m) -> int:
    nc = m.ncols if isinstance(m, Matrix) else len(m[0])
    return nc - rank(m)


def solve(m, b):
    """One solution x of m x = b (b a list or column); None if inconsistent."""
    a = _rows(m)
    bb = b.as_vector() if isinstance(b, Matrix) else [_num(x) for x in b]
    nc = len(a[0]) if a else 0
    aug = [r + [x] for r, x in zip(a, bb)]
    red, pivots = rref(aug)
    if nc in pivots:
        return None
    x = [Fraction(0)] * nc
    for r, pc in enumerate(pivots):
        x[pc] = red[r][nc]
    return x


def inverse(m: Matrix) -> Matrix:
    n = m.nrows
    aug = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, r in enumerate(m.rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix([r[n:] for r in red])


class Span:
    """Incrementally grown span that remembers how to express vectors.

    ``express(v)`` returns coefficients of v in terms of the vectors added so
    far (in insertion order), or None when v is independent of them.
    """

    def __init__(self):
        self._rows = []  # (pivot index, echelon vector, combination over inserted vectors)
        self.vectors = []

    def __len__(self):
        return len(self.vectors)

    def _reduce(self, v):
        v = [_num(x) for x in v]
        combo = [Fraction(0)] * len(self.vectors)
        for p, row, t in self._rows:
            c = v[p]
            if c == 0:
                continue
            v = [x - c * y for x, y in zip(v, row)]
            combo = [x + c * y for x, y in zip(combo, t)]
        return v, combo

    def express(self, v):
        res, combo = self._reduce(v)
        if any(is_pivot(x) for x in res):
            return None
        return combo

    def add(self, v) -> bool:
        """Add v if it is independent; return whether it was added."""
        res, combo = self._reduce(v)
        p = next((i for i, x in enumerate(res) if is_pivot(x)), None)
        if p is None:
            return False
        inv = 1 / res[p]
        row = [x * inv for x in res]
        k = len(self.vectors)
        t = [-c * inv for c in combo] + [inv]
        for i, (q, r, tt) in enumerate(self._rows):
            self._rows[i] = (q, r, list(tt) + [Fraction(0)])
        self._rows.append((p, row, t))
        self.vectors.append(list(v))
        assert len(t) == k + 1
        return True


# -- characteristic and minimal polynomials ------------------------------------

def charpoly(m: Matrix, var="x") -> UniPoly:
    """det(x I - m) by Berkowitz's division-free algorithm."""
    if not m.is_square():
        raise ValueError("charpoly needs a square matrix")
    n = m.nrows
    if n == 0:
        return UniPoly([1], var)
    a = m.rows
    vec = [Fraction(1), -a[n - 1][n - 1]]  # high degree first
    for k in range(n - 2, -1, -1):
        size = n - k
        sub = [list(r[k + 1:]) for r in a[k + 1:]]
        row = list(a[k][k + 1:])
        v = [r[k] for r in a[k + 1:]]
        col = [Fraction(1), -a[k][k]]
        for _ in range(size - 1):
            acc = Fraction(0)
            for x, y in zip(row, v):
                acc = acc + x * y
            col.append(-acc)
            v = [sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in sub]
        new = []
        for i in range(size + 1):
            acc = Fraction(0)
            for j in range(min(i, size - 1) + 1):
                acc = acc + col[i - j] * vec[j]
            new.append(acc)
        vec = new
    return UniPoly(list(reversed(vec)), var)


def eval_unipoly(p: UniPoly, m: Matrix) -> Matrix:
    n = m.nrows
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


def minimal_polynomial(m: Matrix, var="x") -> UniPoly:
    n = m.nrows
    span = Span()
    power = Matrix.identity(n)
    k = 0
    while True:
        vec = power.entries()
        combo = span.express(vec)
        if combo is not None:
            return UniPoly([-c for c in combo] + [1], var)
        span.add(vec)
        power = power @ m
        k += 1


def jordan_chevalley(m: Matrix):
    """Return (semisimple, nilpotent) parts, with the semisimple part a
    polynomial in m.  The polynomial is available via ``jordan_chevalley_poly``."""
    q = jordan_chevalley_poly(m)
    s = eval_unipoly(q, m)
    return s, m - s


def jordan_chevalley_poly(m: Matrix) -> UniPoly:
    chi = charpoly(m)
    p = chi.squarefree_part()
    dp = p.derivative()
    q = UniPoly.x(chi.var)
    while True:
        val = p.compose(q) % chi
        if val.is_zero():
            return q
        step = val * inverse_mod(dp.compose(q) % chi, chi)
        q = (q - step) % chi


# -- polynomial evaluation at commuting pairs ----------------------------------

def eval_poly_pair(poly: MultiPoly, a: Matrix, b: Matrix, xvar="x", yvar="y") -> Matrix:
    """Substitute x -> a, y -> b in a polynomial in (x, y)."""
    if not commutator(a, b).is_zero():
        raise NonCommuting("the two matrices do not commute")
    ix = poly.index(xvar)
    iy = poly.index(yvar)
    n = a.nrows
    apow = [Matrix.identity(n)]
    bpow = [Matrix.identity(n)]
    out = Matrix.zeros(n)
    for mono, c in poly.terms.items():
        if any(e for k, e in enumerate(mono) if k not in (ix, iy)):
            raise ValueError("polynomial involves variables other than x, y")
        i, j = mono[ix], mono[iy]
        while len(apow) <= i:
            apow.append(apow[-1] @ a)
        while len(bpow) <= j:
            bpow.append(bpow[-1] @ b)
        out = out + (apow[i] @ bpow[j]).scale(c)
    return out


def is_nilpotent(m: Matrix) -> bool:
    return (m ** m.nrows).is_zero()
