"""Codimension-m ideals of C[x, y] in border presentation.

A monomial x^i y^j is the tuple (i, j).  A presentation stores an order
ideal of standard monomials (the staircase) and, for every border monomial,
its expansion over the staircase modulo the ideal.  Box (row r, col c) of a
Young diagram is the monomial x^c y^r: x moves right, y moves down.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ChartBoundary, DegenerateConfiguration, NotCyclic, NotInChart
from .exact import Dual, Matrix, MultiPoly, Span, eval_poly_pair
from .exact.linalg import rref
from .exact.scalars import format_scalar
from .hilb import joint_spectrum, point_key

XY = ("x", "y")


def _mono_key(mono):
    # y is eliminated first: compare the y-degree, then the x-degree
    return (mono[1], mono[0])


def border_monomials(staircase):
    s = set(staircase)
    out = set()
    for i, j in s:
        for nb in ((i + 1, j), (i, j + 1)):
            if nb not in s:
                out.add(nb)
    return sorted(out, key=_mono_key)


def is_order_ideal(staircase) -> bool:
    s = set(staircase)
    return (0, 0) in s and all(
        (i == 0 or (i - 1, j) in s) and (j == 0 or (i, j - 1) in s) for i, j in s
    )


@dataclass(frozen=True)
class IdealPresentation:
    staircase: tuple  # monomials in basis order
    borders: tuple  # ((monomial, (coeff over staircase, ...)), ...) sorted

    @property
    def m(self):
        return len(self.staircase)

    def border_dict(self):
        return dict(self.borders)

    def expansion(self, mono):
        """Coefficient vector of a standard or border monomial."""
        if mono in self.staircase:
            k = self.staircase.index(mono)
            return tuple(Fraction(1) if i == k else Fraction(0) for i in range(self.m))
        return self.border_dict()[mono]

    def generators(self):
        """Border generators m - sum c_s s as polynomials in x, y."""
        out = []
        for mono, coeffs in self.borders:
            terms = {mono: Fraction(1)}
            for s, c in zip(self.staircase, coeffs):
                if c != 0:
                    terms[s] = terms.get(s, 0) - c
            out.append(MultiPoly(XY, terms))
        return out

    def same_as(self, other) -> bool:
        if set(self.staircase) != set(other.staircase):
            return False
        perm = [other.staircase.index(s) for s in self.staircase]
        od = other.border_dict()
        for mono, coeffs in self.borders:
            oc = od[mono]
            if any(c != oc[p] for c, p in zip(coeffs, perm)):
                return False
        return True

    def to_json(self):
        return {
            "staircase": [list(s) for s in self.staircase],
            "borders": {
                "%d,%d" % mono: {"%d,%d" % s: _fmt(c) for s, c in zip(self.staircase, coeffs) if c != 0}
                for mono, coeffs in self.borders
            },
        }

    def map_coeffs(self, fn):
        return IdealPresentation(
            self.staircase, tuple((mono, tuple(fn(c) for c in cs)) for mono, cs in self.borders)
        )


def _fmt(c):
    try:
        return format_scalar(c)
    except (TypeError, ValueError):
        return str(c)


def _make(staircase, expansions):
    borders = tuple(sorted(((m, tuple(expansions[m])) for m in border_monomials(staircase)), key=lambda t: _mono_key(t[0])))
    return IdealPresentation(tuple(staircase), borders)


# -- the idealic map --------------------------------------------------------

class _Words:
    """Caches A^i B^j v."""

    def __init__(self, a, b, v):
        self.a, self.b = a, b
        self.cache = {(0, 0): list(v)}

    def __call__(self, mono):
        if mono not in self.cache:
            i, j = mono
            if i > 0:
                self.cache[mono] = self.a.apply(self(((i - 1), j)))
            else:
                self.cache[mono] = self.b.apply(self((i, j - 1)))
        return self.cache[mono]


def _check_reconstruction(pres, a, b):
    for g in pres.generators():
        if not eval_poly_pair(g, a, b).is_zero():
            raise ArithmeticError("border generator does not vanish at the pair")


def idealic_map(a: Matrix, b: Matrix, v, check=True) -> IdealPresentation:
    """I(A, B) from a cyclic vector, with y eliminated first."""
    m = a.nrows
    words = _Words(a, b, v)
    span = Span()
    staircase = []
    prev_row = None
    j = 0
    while True:
        row = []
        i = 0
        while True:
            if prev_row is not None and i >= len(prev_row):
                break
            if not span.add(words((i, j))):
                break
            row.append((i, j))
            i += 1
        if not row:
            break
        staircase.extend(row)
        prev_row = row
        j += 1
    if len(staircase) != m:
        raise NotCyclic("Krylov span has dimension %d < %d" % (len(staircase), m))
    expansions = {}
    for mono in border_monomials(staircase):
        expansions[mono] = span.express(words(mono))
    pres = _make(staircase, expansions)
    if check:
        _check_reconstruction(pres, a, b)
    return pres


def present_in_chart(a: Matrix, b: Matrix, v, staircase, check=True) -> IdealPresentation:
    """Presentation of I(A, B) with a prescribed staircase (chart)."""
    staircase = list(staircase)
    if not is_order_ideal(staircase):
        raise ValueError("staircase is not an order ideal")
    if len(staircase) != a.nrows:
        raise NotInChart("staircase has %d boxes, need %d" % (len(staircase), a.nrows))
    words = _Words(a, b, v)
    span = Span()
    for mono in staircase:
        if not span.add(words(mono)):
            raise NotInChart("monomials of the chart are linearly dependent modulo I")
    expansions = {mono: span.express(words(mono)) for mono in border_monomials(staircase)}
    pres = _make(staircase, expansions)
    if check:
        _check_reconstruction(pres, a, b)
    return pres


# -- multiplication matrices and normal forms -------------------------------

def multiplication_matrices(pres: IdealPresentation):
    m = pres.m
    cols_x, cols_y = [], []
    for i, j in pres.staircase:
        cols_x.append(pres.expansion((i + 1, j)))
        cols_y.append(pres.expansion((i, j + 1)))
    return Matrix.from_columns(cols_x), Matrix.from_columns(cols_y)


def unit_vector(pres: IdealPresentation):
    k = pres.staircase.index((0, 0))
    return [Fraction(1) if i == k else Fraction(0) for i in range(pres.m)]


def normal_form(pres: IdealPresentation, poly: MultiPoly):
    """Coefficients over the staircase of P mod I, computed as P(M_x, M_y) 1."""
    mx, my = multiplication_matrices(pres)
    words = _Words(mx, my, unit_vector(pres))
    ix, iy = poly.index("x"), poly.index("y")
    out = [Fraction(0)] * pres.m
    for mono, c in poly.terms.items():
        if any(e for k, e in enumerate(mono) if k not in (ix, iy)):
            raise ValueError("polynomial involves variables other than x, y")
        w = words((mono[ix], mono[iy]))
        out = [acc + c * x for acc, x in zip(out, w)]
    return out


def contains(pres: IdealPresentation, poly: MultiPoly) -> bool:
    return all(c == 0 for c in normal_form(pres, poly))


def w_invariance_check(pres: IdealPresentation) -> bool:
    """Invariance under (x, y) -> (-x, -y)."""
    for g in pres.generators():
        flipped = MultiPoly(XY, {mono: c * (-1) ** (mono[0] + mono[1]) for mono, c in g.terms.items()})
        if not contains(pres, flipped):
            return False
    return True


def support(pres: IdealPresentation):
    """Points of V(I) with multiplicity, sorted."""
    mx, my = multiplication_matrices(pres)
    points = []
    for p, mult, _ in joint_spectrum(mx, my):
        points.extend([p] * mult)
    return tuple(sorted(points, key=point_key))


# -- Young diagrams and Haiman coordinates ----------------------------------

@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple  # row lengths, weakly decreasing

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if not rows or any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError("row lengths must be positive and weakly decreasing")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def rectangle(cls, k, l):
        """k rows of length l."""
        return cls((l,) * k)

    @classmethod
    def parse(cls, text):
        text = str(text).strip()
        if "x" in text:
            k, l = text.split("x")
            return cls.rectangle(int(k), int(l))
        return cls(tuple(int(t) for t in text.replace("[", "").replace("]", "").split(",")))

    def boxes(self):
        return [(r, c) for r, length in enumerate(self.rows) for c in range(length)]

    def column_height(self, c):
        return sum(1 for length in self.rows if length > c)

    def monomials(self):
        return [(c, r) for r, c in self.boxes()]

    def __len__(self):
        return sum(self.rows)


@dataclass(frozen=True)
class HaimanCoords:
    diagram: YoungDiagram
    values: tuple  # ((box, b_r, b_b), ...) in box order

    def flat(self):
        out = []
        for _, br, bb in self.values:
            out.extend([br, bb])
        return out


def _haiman_from_expansions(diagram: YoungDiagram, expand):
    """expand(monomial) -> dict monomial -> coefficient."""
    vals = []
    for r, c in diagram.boxes():
        last = diagram.rows[r] - 1  # column of B_r
        bottom = diagram.column_height(c) - 1  # row of B_b
        right_of_br = (diagram.rows[r], r)
        below_bb = (c, bottom + 1)
        b_r = expand(right_of_br).get((c, bottom), Fraction(0))
        b_b = expand(below_bb).get((last, r), Fraction(0))
        vals.append(((r, c), b_r, b_b))
    return HaimanCoords(diagram, tuple(vals))


def haiman_coords(pres: IdealPresentation, diagram: YoungDiagram) -> HaimanCoords:
    mx, my = multiplication_matrices(pres)
    chart = present_in_chart(mx, my, unit_vector(pres), diagram.monomials(), check=False)
    stair = chart.staircase

    def expand(mono):
        return dict(zip(stair, chart.expansion(mono)))

    return _haiman_from_expansions(diagram, expand)


def ideal_from_haiman_chart(pres: IdealPresentation, diagram: YoungDiagram) -> IdealPresentation:
    mx, my = multiplication_matrices(pres)
    return present_in_chart(mx, my, unit_vector(pres), diagram.monomials())


def points_ideal(points):
    """Ideal of distinct points via diagonal multiplication matrices."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    a = Matrix.diag(xs)
    b = Matrix.diag(ys)
    return idealic_map(a, b, [Fraction(1)] * len(points))


def monomial_ideal(diagram: YoungDiagram) -> IdealPresentation:
    """The monomial ideal spanned by the monomials outside the diagram."""
    stair = diagram.monomials()
    zero = tuple(Fraction(0) for _ in stair)
    return IdealPresentation(
        tuple(stair), tuple((mono, zero) for mono in border_monomials(stair))
    )


def young_pair(diagram: YoungDiagram):
    """(right shift, down shift) on the boxes of the diagram."""
    return multiplication_matrices(monomial_ideal(diagram))


# -- symplectic structure on rectangle charts --------------------------------

def _haiman_of_points(diagram, pts):
    """Haiman coordinates of the ideal of the given points, via V c = w."""
    monos = diagram.monomials()
    vmat = [[x ** i * y ** j for (i, j) in monos] for (x, y) in pts]
    cache = {}

    def expand(mono):
        if mono not in cache:
            i, j = mono
            w = [x ** i * y ** j for (x, y) in pts]
            aug = [row + [wv] for row, wv in zip(vmat, w)]
            red, piv = rref(aug)
            if piv != list(range(len(monos))):
                raise DegenerateConfiguration("evaluation matrix is singular")
            cache[mono] = {s: red[k][-1] for k, s in enumerate(monos)}
        return cache[mono]

    return _haiman_from_expansions(diagram, expand)


def haiman_pullback(diagram: YoungDiagram, points):
    """J^T Omega_b J for the Haiman coordinates of the ideal of ``points``.

    Returns (pullback matrix, Omega_xy)."""
    n = len(points)
    if n != len(diagram):
        raise ValueError("need %d points" % len(diagram))
    dirs = 2 * n
    pts = [
        (Dual.variable(x, 2 * k, dirs), Dual.variable(y, 2 * k + 1, dirs))
        for k, (x, y) in enumerate(points)
    ]
    coords = _haiman_of_points(diagram, pts).flat()
    jac = Matrix([[c.partials[d] if isinstance(c, Dual) else 0 for d in range(dirs)] for c in coords])
    omega = _standard_omega(n)
    return jac.T() @ omega @ jac, omega


def _standard_omega(n):
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return Matrix(rows)


@dataclass(frozen=True)
class SymplecticResult:
    equal: bool
    sign: int  # +1, -1, or 0 when neither
    points: tuple
    pullback: Matrix


def symplectic_rectangle_check(k, l, points=None, seed=0, max_tries=50) -> SymplecticResult:
    """Check J^T Omega_b J = +-Omega_xy for the k x l rectangle chart."""
    diagram = YoungDiagram.rectangle(k, l)
    rng = random.Random(seed)
    tries = 0
    while True:
        if points is None:
            pts = _random_points(rng, k * l)
        else:
            pts = [tuple(Fraction(c) for c in p) for p in points]
        try:
            pull, omega = haiman_pullback(diagram, pts)
            break
        except DegenerateConfiguration:
            if points is not None:
                raise
            tries += 1
            if tries > max_tries:
                raise
    if pull == omega:
        sign = 1
    elif pull == -omega:
        sign = -1
    else:
        sign = 0
    return SymplecticResult(sign != 0, sign, tuple(pts), pull)


def _random_points(rng, n, bound=9):
    seen = set()
    out = []
    while len(out) < n:
        p = (Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


# -- D_n charts -----------------------------------------------------------------

def d_chart_staircase(n, chart):
    """Staircase of the [2n] chart or the [2n-1, 1] chart."""
    if chart == "2n":
        return [(i, 0) for i in range(2 * n)]
    if chart == "2n-1,1":
        return [(i, 0) for i in range(2 * n - 1)] + [(0, 1)]
    raise ValueError("unknown chart %r" % chart)


@dataclass(frozen=True)
class ChartTwoCoords:
    """[2n-1,1] chart: x^{2n-1} = sum u_{2k} x^{2k-1} + u y,
    xy = v_0 + sum v_{2k} x^{2k}, y^2 = w_0 + sum w_{2k} x^{2k}."""

    n: int
    u: dict  # 2k -> u_{2k}, k = 1..n-1
    u_y: object
    v: dict  # 2k -> v_{2k}, k = 0..n-1
    w: dict


@dataclass(frozen=True)
class ChartOneCoords:
    """[2n] chart: x^{2n} = sum_k t_{2k} x^{2n-2k} + tau2, y = sum mu_{2k} x^{2k-1}."""

    n: int
    t: dict  # 2k -> t_{2k}, k = 1..n-1
    tau2: object
    mu: dict  # 2k -> mu_{2k}, k = 1..n


def read_chart_two(pres: IdealPresentation, n) -> ChartTwoCoords:
    st = d_chart_staircase(n, "2n-1,1")
    if set(pres.staircase) != set(st):
        raise NotInChart("presentation is not in the [2n-1,1] chart")
    ex = lambda mono: dict(zip(pres.staircase, pres.expansion(mono)))
    top = ex((2 * n - 1, 0))
    xy = ex((1, 1))
    yy = ex((0, 2))
    u = {2 * k: top.get((2 * k - 1, 0), Fraction(0)) for k in range(1, n)}
    for k in range(0, n):
        if top.get((2 * k, 0), 0) != 0:
            raise ValueError("odd/even pattern of the [2n-1,1] chart violated")
    v = {2 * k: xy.get((2 * k, 0), Fraction(0)) for k in range(0, n)}
    w = {2 * k: yy.get((2 * k, 0), Fraction(0)) for k in range(0, n)}
    return ChartTwoCoords(n, u, top.get((0, 1), Fraction(0)), v, w)


def read_chart_one(pres: IdealPresentation, n) -> ChartOneCoords:
    st = d_chart_staircase(n, "2n")
    if set(pres.staircase) != set(st):
        raise NotInChart("presentation is not in the [2n] chart")
    ex = lambda mono: dict(zip(pres.staircase, pres.expansion(mono)))
    top = ex((2 * n, 0))
    y = ex((0, 1))
    t = {2 * k: top.get((2 * n - 2 * k, 0), Fraction(0)) for k in range(1, n)}
    mu = {2 * k: y.get((2 * k - 1, 0), Fraction(0)) for k in range(1, n + 1)}
    return ChartOneCoords(n, t, top.get((0, 0), Fraction(0)), mu)


def chart_change_D(c: ChartTwoCoords) -> ChartOneCoords:
    """Coordinates of the same ideal in the [2n] chart (requires u != 0)."""
    n, u = c.n, c.u_y
    if u == 0:
        raise ChartBoundary("u = 0: the ideal is not in the [2n] chart")
    tau2 = u * c.v[0]
    mu = {2 * n: 1 / u}
    for k in range(1, n):
        mu[2 * k] = -c.u[2 * k] / u
    t = {2 * k: c.u[2 * n - 2 * k] + u * c.v[2 * n - 2 * k] for k in range(1, n)}
    return ChartOneCoords(n, t, tau2, mu)


def _rational_field(name):
    import sympy

    field, gen = sympy.field(name, sympy.QQ)
    return field, gen


def _value_at_zero(c, gen):
    """Evaluate an element of Q(eps) at eps = 0 (must not have a pole)."""
    if isinstance(c, (Fraction, int)):
        return Fraction(c)
    num = c.numer.evaluate(gen.numer, 0)
    den = c.denom.evaluate(gen.numer, 0)
    if den == 0:
        raise ArithmeticError("coefficient has a pole at eps = 0")
    q = num / den
    return Fraction(int(q.numerator), int(q.denominator))


def d_limit_ideal(a: Matrix, b: Matrix, s_t: Matrix, v, n) -> IdealPresentation:
    """Limit at eps = 0 of I(A, B + eps S_t) in the [2n-1,1] chart.

    This extends the idealic map to regular D_n pairs without a cyclic vector
    (sigma = tau = 0).  The computation runs over Q(eps)."""
    for x in a.entries() + b.entries() + s_t.entries():
        if not isinstance(x, Fraction):
            raise ValueError("the limit map is implemented for rational pairs")
    _, eps = _rational_field("eps")
    b_eps = Matrix([[b[i, j] + eps * s_t[i, j] for j in range(b.ncols)] for i in range(b.nrows)])
    pres = present_in_chart(a, b_eps, v, d_chart_staircase(n, "2n-1,1"), check=False)
    limit = pres.map_coeffs(lambda c: _value_at_zero(c, eps))
    _check_reconstruction(limit, a, b)
    return limit
