"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  The coefficient type is not
fixed: rationals, Gaussian rationals and other field-like objects all work as
long as they support ``+ - * /`` and comparison with 0.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import format_scalar


def _norm(c):
    return Fraction(c) if isinstance(c, int) else c


class UniPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="x"):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k, c=1, var="x"):
        return cls([0] * k + [c], var)

    @classmethod
    def x(cls, var="x"):
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots, var="x"):
        out = cls([1], var)
        for r in roots:
            out = out * cls([-r, 1], var)
        return out

    # -- basic properties -----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self):
        if not self.coeffs:
            return self
        c = self.lc()
        return UniPoly([a / c for a in self.coeffs], self.var)

    # -- arithmetic -----------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    def __add__(self, other):
        other = self._wrap(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UniPoly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([], self.var), self
        quo = [Fraction(0)] * (dq + 1)
        lc = other.lc()
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lc
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(quo, self.var), UniPoly(rem[: len(other.coeffs) - 1], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UniPoly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation ---------------------------------------------
    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, value):
        """Horner evaluation at a scalar (or anything with + and *)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, other):
        acc = UniPoly([], self.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def squarefree_part(self):
        if self.degree <= 0:
            return self.monic()
        g = gcd(self, self.derivative())
        return (self // g).monic()

    def __repr__(self):
        return "UniPoly(%s)" % self

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(format_scalar(c) if _is_exact(c) else str(c))
                continue
            mono = self.var if k == 1 else "%s^%d" % (self.var, k)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = format_scalar(c) if _is_exact(c) else str(c)
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = "(" + cs + ")"
                parts.append(cs + "*" + mono)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def _is_exact(c):
    from .scalars import QI

    return isinstance(c, (Fraction, QI, int))


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1], a.var), UniPoly([], a.var)
    t0, t1 = UniPoly([], a.var), UniPoly([1], a.var)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = r0.lc()
    return r0.monic(), s0 * (1 / c), t0 * (1 / c)


def inverse_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    g, s, _ = xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return s % m
