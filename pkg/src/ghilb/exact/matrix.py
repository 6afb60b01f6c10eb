"""Immutable dense matrices with exact (or generic field) entries."""
from __future__ import annotations

from fractions import Fraction

from .scalars import QI, format_scalar, parse_scalar


def _coerce(x):
    if isinstance(x, bool):
        raise TypeError("bool entries are not allowed")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    return x


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_coerce(x) for x in r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged matrix rows")
        else:
            w = 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = w

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n, one=1):
        return cls([[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j, c=1):
        """Elementary matrix with c at (i, j), zero-based."""
        return cls([[c if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries):
        return cls([[e] for e in entries])

    @classmethod
    def from_columns(cls, cols):
        cols = [list(c) for c in cols]
        if not cols:
            return cls([])
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    # -- access ---------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def entries(self):
        """Row-major flattening, used when matrices are viewed as vectors."""
        return [x for r in self.rows for x in r]

    def as_vector(self):
        if self.ncols != 1:
            raise ValueError("not a column vector")
        return [r[0] for r in self.rows]

    @property
    def field(self):
        for r in self.rows:
            for x in r:
                if isinstance(x, QI):
                    return "Qi"
        return "Q"

    # -- arithmetic -----------------------------------------------------------
    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Matrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("cannot multiply %s by %s" % (self.shape, other.shape))
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a == 0 or b == 0:
                        continue
                    acc = a * b + acc
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __pow__(self, k):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, vec):
        """Matrix times a plain list vector."""
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, vec):
                if a == 0 or b == 0:
                    continue
                acc = a * b + acc
            out.append(_coerce(acc))
        return out

    def T(self):
        return Matrix([list(c) for c in zip(*self.rows)]) if self.rows else self

    transpose = T

    def trace(self):
        acc = Fraction(0)
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def map(self, fn):
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def is_diagonal(self):
        return all(a == 0 for i, r in enumerate(self.rows) for j, a in enumerate(r) if i != j)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%s)" % [[str(a) for a in r] for r in self.rows]

    # -- JSON -----------------------------------------------------------------
    def to_json(self):
        return {
            "field": self.field,
            "rows": [[format_scalar(a) for a in r] for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict):
            if "rows" not in obj:
                raise ValueError("matrix JSON needs a 'rows' field")
            rows = obj["rows"]
            field = obj.get("field", "Q")
        else:
            rows, field = obj, None
        m = cls([[parse_scalar(x) for x in r] for r in rows])
        if field == "Q" and m.field != "Q":
            raise ValueError("matrix declared over Q has Gaussian entries")
        if field not in (None, "Q", "Qi"):
            raise ValueError("unknown field %r" % field)
        return m


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def block(blocks):
    """Assemble a matrix from a 2D list of equally-sized-per-row blocks."""
    rows = []
    for brow in blocks:
        h = brow[0].nrows
        for i in range(h):
            row = []
            for b in brow:
                row.extend(b.rows[i])
            rows.append(row)
    return Matrix(rows)
