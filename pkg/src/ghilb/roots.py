"""Roots of exact univariate polynomials in Q or Q(i).

Factoring is delegated to sympy; everything is converted back to the
package's own scalars and each root is re-verified by exact evaluation.
"""
from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import SplitFieldRequired
from .exact import QI, UniPoly
from .exact.scalars import re_im

_X = sympy.Symbol("x")


def _to_sympy(c):
    a, b = re_im(c)
    return sympy.Rational(a.numerator, a.denominator) + sympy.I * sympy.Rational(
        b.numerator, b.denominator
    )


def _from_sympy(v):
    re, im = v.as_real_imag()
    re = sympy.nsimplify(re)
    im = sympy.nsimplify(im)
    if not (re.is_Rational and im.is_Rational):
        raise SplitFieldRequired("root %s is not in Q(i)" % v)
    return QI.make(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def roots_with_multiplicity(p: UniPoly):
    """[(root, multiplicity), ...]; raises SplitFieldRequired if p does not split."""
    if p.degree < 1:
        return []
    expr = sum(_to_sympy(c) * _X ** k for k, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.expand(expr), _X, gaussian=True)
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, _X)
        if poly.degree() != 1:
            raise SplitFieldRequired(
                "factor %s of degree %d does not split over Q(i)" % (fac, poly.degree())
            )
        a, b = poly.all_coeffs()
        r = _from_sympy(-b / a)
        if p(r) != 0:
            raise ArithmeticError("root verification failed")
        out.append((r, mult))
    return out
