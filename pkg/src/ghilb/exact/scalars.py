"""Exact scalars: rationals (``Fraction``) and Gaussian rationals (``QI``).

A Gaussian rational with zero imaginary part is always collapsed back to a
plain ``Fraction`` so that the field of a matrix can be read off its entries.
"""
from __future__ import annotations

import re
from fractions import Fraction


class QI:
    """Element a + b*i of Q(i) with a, b rational and b != 0."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def make(re, im):
        re = Fraction(re)
        im = Fraction(im)
        if im == 0:
            return re
        return QI(re, im)

    @staticmethod
    def _parts(other):
        if isinstance(other, QI):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        return QI.make(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        return QI.make(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        return QI.make(p[0] - self.re, p[1] - self.im)

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return QI.make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        return QI(self.re / n, -self.im / n)

    def __truediv__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        if p[1] == 0:
            if p[0] == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return QI.make(self.re / p[0], self.im / p[0])
        return self * QI(*p).inverse()

    def __rtruediv__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        return QI.make(*p) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Fraction(1)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return QI(self.re, -self.im)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        p = QI._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True  # im != 0 by construction

    def __repr__(self):
        return "QI(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


I = QI(0, 1)


def to_scalar(x):
    """Coerce ints, Fractions and QI to the canonical exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QI):
        return QI.make(x.re, x.im)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError("not an exact scalar: %r" % (x,))


def is_gaussian(x):
    return isinstance(x, QI)


def conj(x):
    """Complex conjugation; fixes rationals."""
    if isinstance(x, QI):
        return x.conjugate()
    if hasattr(x, "conjugate") and not isinstance(x, (int, Fraction)):
        return x.conjugate()
    return x


def re_im(x):
    if isinstance(x, QI):
        return x.re, x.im
    return Fraction(x), Fraction(0)


def sort_key(x):
    """Total order on Q(i) used for canonical encodings: by (re, im)."""
    return re_im(x)


# -- text format ---------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*i)?")


def parse_scalar(text) -> object:
    """Parse "a/b", "a/b+c/d*i", "i", "-3*i", "1/2-i" and similar."""
    if isinstance(text, (int, Fraction, QI)):
        return to_scalar(text)
    if re.search(r"[\d/]\s+[\d/]", str(text)):
        raise ValueError("bad scalar text: %r" % text)
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    seen = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError("bad scalar text: %r" % text)
        sign, num, imag = m.groups()
        if num is None and imag is None:
            raise ValueError("bad scalar text: %r" % text)
        if seen and not sign:
            raise ValueError("bad scalar text: %r" % text)
        val = Fraction(num) if num is not None else Fraction(1)
        if imag is not None and num is None and "*" in imag:
            raise ValueError("bad scalar text: %r" % text)
        if sign == "-":
            val = -val
        if imag is not None:
            im_part += val
        else:
            re_part += val
        pos = m.end()
        seen = True
    return QI.make(re_part, im_part)


def _fmt_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def format_scalar(x) -> str:
    a, b = re_im(x)
    if b == 0:
        return _fmt_frac(a)
    if b == 1:
        im = "i"
    elif b == -1:
        im = "-i"
    else:
        im = _fmt_frac(b) + "*i"
    if a == 0:
        return im
    if not im.startswith("-"):
        im = "+" + im
    return _fmt_frac(a) + im
