"""Forward-mode exact differentiation with several directions at once."""
from __future__ import annotations

from fractions import Fraction


class Dual:
    """value + sum_k partials[k] * eps_k with eps_j * eps_k = 0."""

    __slots__ = ("value", "partials")

    def __init__(self, value, partials=()):
        self.value = Fraction(value) if isinstance(value, int) else value
        self.partials = tuple(Fraction(p) if isinstance(p, int) else p for p in partials)

    @classmethod
    def variable(cls, value, index, ndirs):
        parts = [Fraction(0)] * ndirs
        parts[index] = Fraction(1)
        return cls(value, parts)

    def _lift(self, other):
        if isinstance(other, Dual):
            return other
        return Dual(other, (Fraction(0),) * len(self.partials))

    def _zip(self, other):
        a, b = self.partials, other.partials
        if len(a) < len(b):
            a = a + (Fraction(0),) * (len(b) - len(a))
        elif len(b) < len(a):
            b = b + (Fraction(0),) * (len(a) - len(b))
        return a, b

    def __add__(self, other):
        other = self._lift(other)
        a, b = self._zip(other)
        return Dual(self.value + other.value, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.value, [-x for x in self.partials])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Dual):
            return Dual(self.value * other, [x * other for x in self.partials])
        a, b = self._zip(other)
        return Dual(
            self.value * other.value,
            [self.value * y + x * other.value for x, y in zip(a, b)],
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("dual number with zero value is not invertible")
        inv = 1 / self.value
        inv2 = inv * inv
        return Dual(inv, [-x * inv2 for x in self.partials])

    def __truediv__(self, other):
        if not isinstance(other, Dual):
            return Dual(self.value / other, [x / other for x in self.partials])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        out = Dual(Fraction(1), (Fraction(0),) * len(self.partials))
        for _ in range(k):
            out = out * self
        return out

    def is_unit(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Dual):
            a, b = self._zip(other)
            return self.value == other.value and a == b
        return self.value == other and all(x == 0 for x in self.partials)

    def __hash__(self):
        return hash((self.value, self.partials))

    def __repr__(self):
        return "Dual(%s, %s)" % (self.value, list(self.partials))
