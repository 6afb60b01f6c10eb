"""Fiberwise calculus on C[z, zb, p, pb].

z and zb are independent formal variables; p, pb are the fiber coordinates.
Coefficient functions (mu, nu, w, t) are polynomials in z, zb.

Poisson bracket convention:
    {f, g} = f_p g_z - f_z g_p + f_pb g_zb - f_zb g_pb
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import MultiPoly
from .exact.scalars import conj
from .liealg import LieAlgebraSpec

VARS = ("z", "zb", "p", "pb")
FIBER = ("p", "pb")


def var(name, variables=VARS):
    return MultiPoly.var(variables, name)


def const(c, variables=VARS):
    return MultiPoly.const(variables, c)


def fiber_monomial(a, b, coeff=None, variables=VARS):
    """coeff * p^a pb^b."""
    mono = MultiPoly.monomial(variables, {"p": a, "pb": b})
    return mono if coeff is None else mono * coeff


def poisson(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return (
        f.diff("p") * g.diff("z")
        - f.diff("z") * g.diff("p")
        + f.diff("pb") * g.diff("zb")
        - f.diff("zb") * g.diff("pb")
    )


def dz(f):
    return f.diff("z")


def dzb(f):
    return f.diff("zb")


def random_coefficient(rng, degree=2, bound=4, variables=VARS, holomorphic=False):
    """Random polynomial in z (and zb unless holomorphic) of total degree <= degree."""
    terms = {}
    iz, izb = variables.index("z"), variables.index("zb")
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            if holomorphic and b:
                continue
            c = rng.randint(-bound, bound)
            if c:
                mono = [0] * len(variables)
                mono[iz], mono[izb] = a, b
                terms[tuple(mono)] = Fraction(c, rng.randint(1, 3))
    return MultiPoly(variables, terms)


# -- fiber ideals -------------------------------------------------------------

@dataclass
class FiberIdeal:
    """Ideal in (p, pb) with coefficients in C[z, zb].

    A / BC:  < p^m, -pb + Q(p) >
    D:       < p^{m-1}, -p pb + Q(p), -pb^2 + R(p) + nu p^{m-2} >
    where q maps a p-degree to its coefficient.  For D, R is the square of
    (Q without its top term) / p, truncated below degree m - 2.
    """

    shape: str
    m: int
    q: dict
    nu: MultiPoly = None
    r: dict = field(default=None)

    def __post_init__(self):
        if self.shape not in ("A", "BC", "D"):
            raise ValueError("unknown shape %r" % self.shape)
        self.q = {k: c for k, c in self.q.items() if not c.is_zero()}
        if self.shape == "D":
            if self.nu is None:
                self.nu = const(0)
            if self.r is None:
                self.r = self._convolution()

    def _convolution(self):
        top = self.m - 2
        tilde = {k - 1: c for k, c in self.q.items() if k < top}
        if any(k < 0 for k in tilde):
            raise ValueError("D-shape Q must not have a constant term")
        out = {}
        for a, ca in tilde.items():
            for b, cb in tilde.items():
                if a + b < top:
                    out[a + b] = out.get(a + b, const(0)) + ca * cb
        return out

    def q_poly(self):
        return sum((fiber_monomial(k, 0, c) for k, c in self.q.items()), const(0))

    def generators(self):
        p, pb = var("p"), var("pb")
        if self.shape in ("A", "BC"):
            return [p ** self.m, -pb + self.q_poly()]
        r = sum((fiber_monomial(k, 0, c) for k, c in self.r.items()), const(0))
        return [
            p ** (self.m - 1),
            -p * pb + self.q_poly(),
            -pb * pb + r + fiber_monomial(self.m - 2, 0, self.nu),
        ]

    def basis(self):
        """Standard monomials (a, b) of p^a pb^b."""
        if self.shape in ("A", "BC"):
            return [(a, 0) for a in range(self.m)]
        return [(a, 0) for a in range(self.m - 1)] + [(0, 1)]

    def _rule(self, a, b):
        """Rewrite of p^a pb^b as {(a', b'): coeff}, or None when standard."""
        if self.shape in ("A", "BC"):
            if b >= 1:
                out = {}
                for k, c in self.q.items():
                    out[(a + k, b - 1)] = c
                return out
            if a >= self.m:
                return {}
            return None
        if b >= 2:
            out = {(a + k, b - 2): c for k, c in self.r.items()}
            key = (a + self.m - 2, b - 2)
            out[key] = out.get(key, const(0)) + self.nu
            return out
        if b == 1 and a >= 1:
            return {(a - 1 + k, 0): c for k, c in self.q.items()}
        if b == 0 and a >= self.m - 1:
            return {}
        return None


def reduce_mod(ideal: FiberIdeal, f: MultiPoly) -> MultiPoly:
    """Normal form of f over the standard monomials of the ideal."""
    work = dict(f.split(FIBER))
    done = {}
    while work:
        key = max(work, key=lambda ab: (ab[1], ab[0]))
        coeff = work.pop(key)
        if coeff.is_zero():
            continue
        rule = ideal._rule(*key)
        if rule is None:
            done[key] = done.get(key, const(0)) + coeff
            continue
        for nk, c in rule.items():
            work[nk] = work.get(nk, const(0)) + coeff * c
    return sum((fiber_monomial(a, b, c) for (a, b), c in done.items()), const(0))


def is_confluent(ideal: FiberIdeal) -> bool:
    """p (pb s) and pb (p s) agree for every standard monomial s."""
    p, pb = var("p"), var("pb")
    for a, b in ideal.basis():
        s = fiber_monomial(a, b)
        left = reduce_mod(ideal, p * reduce_mod(ideal, pb * s))
        right = reduce_mod(ideal, pb * reduce_mod(ideal, p * s))
        if left != right:
            return False
    return True


def verify_coisotropy(ideal: FiberIdeal):
    """(ok, residuals): {f_i, f_j} mod I for every generator pair."""
    gens = ideal.generators()
    residuals = {}
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            res = reduce_mod(ideal, poisson(gens[i], gens[j]))
            if not res.is_zero():
                residuals[(i, j)] = res
    return not residuals, residuals


def hamiltonian_variation(ideal: FiberIdeal, h: MultiPoly):
    """Raw generator deltas {H mod I, f_k} mod I."""
    hr = reduce_mod(ideal, h)
    return [reduce_mod(ideal, poisson(hr, g)) for g in ideal.generators()]


def p_coefficients(f: MultiPoly):
    """{a: coefficient of p^a} for a pb-free polynomial."""
    out = {}
    for (a, b), c in f.split(FIBER).items():
        if b:
            raise ValueError("polynomial still contains pb")
        out[a] = c
    return out


def beltrami_variation(ideal: FiberIdeal, h: MultiPoly):
    """First-order change of the mu coefficients: {k: delta of the p^k
    coefficient of the Q-generator}.  Meaningful at mu = 0."""
    deltas = hamiltonian_variation(ideal, h)
    return p_coefficients(deltas[1])


# -- constructors -----------------------------------------------------------

def mu_names(spec: LieAlgebraSpec):
    """Names mu_i of the Beltrami coefficients and the p-degree they multiply."""
    n = spec.n
    if spec.type == "A":
        return [("mu%d" % i, i - 1) for i in range(2, spec.m + 1)]
    if spec.type in "BC":
        return [("mu%d" % (2 * i), 2 * i - 1) for i in range(1, n + 1)]
    return [("mu%d" % (2 * i), 2 * i) for i in range(1, n)]


def fiber_ideal(spec: LieAlgebraSpec, mus: dict, nu=None) -> FiberIdeal:
    """Fiber ideal of the given type from named coefficients (missing names are 0)."""
    q = {}
    for name, deg in mu_names(spec):
        if name in mus:
            q[deg] = mus[name]
    shape = "BC" if spec.type in "BC" else spec.type
    return FiberIdeal(shape, spec.m, q, nu)


def random_fiber_ideal(spec: LieAlgebraSpec, rng, degree=2) -> FiberIdeal:
    mus = {name: random_coefficient(rng, degree) for name, _ in mu_names(spec)}
    nu = random_coefficient(rng, degree) if spec.type == "D" else None
    return fiber_ideal(spec, mus, nu)


def zero_ideal(spec: LieAlgebraSpec, nu=None) -> FiberIdeal:
    return fiber_ideal(spec, {}, nu)


# -- non-reality -------------------------------------------------------------

@dataclass(frozen=True)
class NonrealityPoint:
    z: object
    modulus2: Fraction
    violation: bool
    compatible: bool


def nonreality_check(mu2: MultiPoly, points):
    """Evaluate mu2 * conj(mu2) at z = point, zb = conj(point).

    Returns (ok, per-point records); ok is False when |mu2|^2 = 1 somewhere."""
    records = []
    for z in points:
        val = _eval_z(mu2, z)
        mod2 = val * conj(val)
        records.append(NonrealityPoint(z, mod2, mod2 == 1, mod2 < 1))
    return all(not r.violation for r in records), records


def _eval_z(poly: MultiPoly, z):
    values = {v: Fraction(0) for v in poly.vars}
    values["z"] = z
    values["zb"] = conj(z)
    if any(e for m in poly.terms for v, e in zip(poly.vars, m) if v not in ("z", "zb")):
        raise ValueError("coefficient depends on fiber variables")
    return poly.evaluate(values)


# -- spectral pair (P, Q) to first order in t ------------------------------------

@dataclass
class DeformedPair:
    """P = p^m + sum_i eps_i t_i p^{m-i}, Q = -pb + sum_i mu_i p^{i-1},
    with every monomial of total eps-degree >= 2 dropped."""

    m: int
    degrees: tuple  # the i with a t_i term
    t: dict  # i -> coefficient polynomial in z, zb (in the base VARS ring)
    mu: dict = field(default_factory=dict)  # i -> coefficient

    @property
    def variables(self):
        return VARS + tuple("e%d" % i for i in self.degrees)

    def lift(self, f: MultiPoly) -> MultiPoly:
        return f.with_vars(self.variables)

    def truncate(self, f: MultiPoly) -> MultiPoly:
        ks = [f.index("e%d" % i) for i in self.degrees]
        return f.filter(lambda mono: sum(mono[k] for k in ks) < 2)

    def P(self):
        vs = self.variables
        out = MultiPoly.var(vs, "p") ** self.m
        for i in self.degrees:
            e = MultiPoly.var(vs, "e%d" % i)
            out = out + e * self.lift(self.t.get(i, const(0))) * MultiPoly.var(vs, "p") ** (self.m - i)
        return out

    def Q(self):
        vs = self.variables
        out = -MultiPoly.var(vs, "pb")
        for i, c in self.mu.items():
            out = out + self.lift(c) * MultiPoly.var(vs, "p") ** (i - 1)
        return out

    def reduce(self, f: MultiPoly) -> MultiPoly:
        """Normal form modulo <P, Q> in the truncated ring."""
        vs = self.variables
        qtail = self.Q() + MultiPoly.var(vs, "pb")  # pb -> Q tail
        ptail = MultiPoly.var(vs, "p") ** self.m - self.P()  # p^m -> ptail
        ip, ipb = vs.index("p"), vs.index("pb")
        f = self.truncate(f)
        out = {}
        while True:
            pending = {}
            changed = False
            for mono, c in f.terms.items():
                if mono[ipb] > 0:
                    rest = list(mono)
                    rest[ipb] -= 1
                    term = MultiPoly(vs, {tuple(rest): c}) * qtail
                elif mono[ip] >= self.m:
                    rest = list(mono)
                    rest[ip] -= self.m
                    term = MultiPoly(vs, {tuple(rest): c}) * ptail
                else:
                    out[mono] = out.get(mono, 0) + c
                    continue
                changed = True
                for mm, cc in self.truncate(term).terms.items():
                    pending[mm] = pending.get(mm, 0) + cc
            f = MultiPoly(vs, pending)
            if not changed or f.is_zero():
                break
        return MultiPoly(vs, out)


def spectral_pair(spec: LieAlgebraSpec, t: dict, mu=None) -> DeformedPair:
    """Deformed pair for the degrees of the type's characteristic polynomial."""
    if spec.type == "A":
        degrees = tuple(range(2, spec.m + 1))
    else:
        degrees = tuple(2 * k for k in range(1, spec.n + 1))
    return DeformedPair(spec.m, degrees, dict(t), dict(mu or {}))


def lagrangian_order1_check(pair: DeformedPair):
    """(ok, residual): {P, Q} modulo <P, Q> and eps^2."""
    br = pair.truncate(poisson(pair.P(), pair.Q()))
    res = pair.reduce(br)
    return res.is_zero(), res


def random_t(spec: LieAlgebraSpec, rng, holomorphic=True, degree=2):
    pair = spectral_pair(spec, {})
    return {i: random_coefficient(rng, degree, holomorphic=holomorphic) for i in pair.degrees}
