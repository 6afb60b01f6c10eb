"""Sparse multivariate polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction

from .scalars import QI, conj, format_scalar


def _c(x):
    return Fraction(x) if isinstance(x, int) else x


class MultiPoly:
    """Polynomial in an ordered tuple of named variables.

    ``terms`` maps exponent tuples to nonzero coefficients.  Two polynomials
    can only be combined when their variable tuples agree.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != len(self.vars):
                    raise ValueError("monomial %r does not match variables %r" % (mono, self.vars))
                if any(e < 0 for e in mono):
                    raise ValueError("negative exponent in %r" % (mono,))
                if c != 0:
                    clean[tuple(mono)] = _c(c)
        self.terms = clean

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        mono = tuple(1 if v == name else 0 for v in variables)
        if sum(mono) != 1:
            raise ValueError("unknown variable %r" % name)
        return cls(variables, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        variables = tuple(variables)
        if isinstance(exps, dict):
            mono = tuple(exps.get(v, 0) for v in variables)
        else:
            mono = tuple(exps)
        return cls(variables, {mono: c})

    def gens(self):
        return [MultiPoly.var(self.vars, v) for v in self.vars]

    # -- helpers --------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("variable mismatch %r vs %r" % (self.vars, other.vars))
            return other
        return MultiPoly.const(self.vars, other)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def index(self, name):
        return self.vars.index(name)

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(sum(m) for m in self.terms)
        k = self.index(name)
        return max(m[k] for m in self.terms)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._other(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {m: c * other for m, c in self.terms.items()})
        other = self._other(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            if not c.is_constant():
                raise ZeroDivisionError("only division by constants is supported")
            c = c.constant_term()
        return MultiPoly(self.vars, {m: a / c for m, a in self.terms.items()})

    def __pow__(self, k):
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return self.terms == MultiPoly.const(self.vars, other).terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus / substitution ---------------------------------------------
    def diff(self, name):
        k = self.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[k] == 0:
                continue
            mm = list(m)
            mm[k] -= 1
            out[tuple(mm)] = c * m[k]
        return MultiPoly(self.vars, out)

    def subs(self, values):
        """Substitute variables by scalars or same-ring polynomials."""
        result = MultiPoly(self.vars)
        idx = [(self.index(v), val) for v, val in values.items()]
        cache = {}
        for m, c in self.terms.items():
            mm = list(m)
            factor = MultiPoly.const(self.vars, c)
            for k, val in idx:
                e = mm[k]
                mm[k] = 0
                if e:
                    key = (k, e)
                    if key not in cache:
                        cache[key] = self._other(val) ** e
                    factor = factor * cache[key]
            result = result + factor * MultiPoly(self.vars, {tuple(mm): Fraction(1)})
        return result

    def evaluate(self, values):
        """Full evaluation at a point given as {name: scalar}."""
        acc = Fraction(0)
        pts = [values[v] for v in self.vars]
        for m, c in self.terms.items():
            term = c
            for x, e in zip(pts, m):
                if e:
                    term = term * x ** e
            acc = acc + term
        return acc

    def with_vars(self, variables):
        """Re-embed into a larger (or reordered) variable tuple."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        out = {}
        for m, c in self.terms.items():
            mm = [0] * len(variables)
            for p, e in zip(pos, m):
                mm[p] = e
            out[tuple(mm)] = c
        return MultiPoly(variables, out)

    def drop_vars(self, names):
        """Project to a smaller variable tuple; the dropped vars must be absent."""
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        out = {}
        for m, c in self.terms.items():
            if any(m[i] for i, v in enumerate(self.vars) if v in names):
                raise ValueError("polynomial still depends on %r" % (names,))
            out[tuple(m[i] for i in keep)] = c
        return MultiPoly([self.vars[i] for i in keep], out)

    def split(self, names):
        """Group terms by their exponents in ``names``.

        Returns {exponents in names: coefficient polynomial in the same ring
        with those variables set to exponent 0}.
        """
        ks = [self.index(n) for n in names]
        groups = {}
        for m, c in self.terms.items():
            key = tuple(m[k] for k in ks)
            mm = list(m)
            for k in ks:
                mm[k] = 0
            groups.setdefault(key, {})[tuple(mm)] = c
        return {key: MultiPoly(self.vars, t) for key, t in groups.items()}

    def filter(self, keep):
        return MultiPoly(self.vars, {m: c for m, c in self.terms.items() if keep(m)})

    def map_coeffs(self, fn):
        return MultiPoly(self.vars, {m: fn(c) for m, c in self.terms.items()})

    def conj_coeffs(self):
        return self.map_coeffs(conj)

    # -- display ----------------------------------------------------------------
    def __repr__(self):
        return "MultiPoly(%s)" % self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                v if e == 1 else "%s^%d" % (v, e) for v, e in zip(self.vars, m) if e
            )
            cs = format_scalar(c) if isinstance(c, (Fraction, QI)) else str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = "(" + cs + ")"
                parts.append(cs + "*" + mono)
        return " + ".join(parts).replace("+ -", "- ")
