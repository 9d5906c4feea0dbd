"""Exact rational matrices, circulants and elimination.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with a positive denominator).  A :class:`Matrix` stores an
integer numerator array together with one positive common denominator, which
keeps products of the integer and half-integer matrices used throughout this
package cheap while remaining exact.

>>> m = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
>>> (m @ m) == circulant(CirculantSpec((2, 1, 1)))
True
>>> render_rational(Fraction(-3, 6))
'-1/2'
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Fraction",
    "Matrix",
    "CirculantSpec",
    "SingularMatrixError",
    "parse_rational",
    "render_rational",
    "as_vector",
    "shift",
    "circulant",
    "circ_mul",
    "vec_mat",
    "gauss_jordan_inverse",
    "determinant",
    "cofactor",
    "rank",
    "has_tail_symmetry",
]

_INT64_LIMIT = 2**62


class SingularMatrixError(ZeroDivisionError):
    """Raised when an exact inverse is requested for a singular matrix."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical :class:`Fraction`."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def render_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _to_fraction(x) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted in the exact lane")
    return Fraction(x)


def as_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(_to_fraction(v) for v in values)


def _obj_array(rows, cols) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


class Matrix:
    """Immutable dense matrix over the rationals.

    Entries are indexed 0-based, ``m[i, j]``, and returned as ``Fraction``.
    Two matrices compare equal iff they have the same shape and identical
    entries; there is no tolerance.
    """

    __slots__ = ("_num", "_den", "_bound", "_i64")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[_to_fraction(x) for x in row] for row in entries]
        if not rows:
            raise ValueError("matrix must have at least one row")
        ncols = len(rows[0])
        if ncols == 0 or any(len(r) != ncols for r in rows):
            raise ValueError("ragged or empty rows")
        den = 1
        for row in rows:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        num = _obj_array(len(rows), ncols)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                num[i, j] = x.numerator * (den // x.denominator)
        self._set(num, den)

    def _set(self, num: np.ndarray, den: int) -> None:
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(den, *num.flat)
        if g > 1:
            num = num // g
            den //= g
        num.flags.writeable = False
        self._num = num
        self._den = den
        self._bound = int(np.max(np.abs(num)))
        self._i64 = None

    @classmethod
    def from_scaled(cls, numerators, denominator: int = 1) -> "Matrix":
        """Build ``numerators / denominator`` from an integer array."""
        arr = np.asarray(numerators)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("expected a nonempty 2-D integer array")
        if arr.dtype == object:
            num = np.array(arr, dtype=object)
        elif np.issubdtype(arr.dtype, np.integer):
            num = arr.astype(object)
        else:
            raise TypeError(f"integer numerators required, got {arr.dtype}")
        m = cls.__new__(cls)
        m._set(num, int(denominator))
        return m

    @classmethod
    def identity(cls, k: int) -> "Matrix":
        return cls.from_scaled(np.eye(k, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        return cls.from_scaled(np.zeros((rows, rows if cols is None else cols), dtype=np.int64))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "Matrix":
        return cls.from_scaled(np.ones((rows, rows if cols is None else cols), dtype=np.int64))

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        return cls([[v] for v in values])

    @classmethod
    def row(cls, values: Iterable) -> "Matrix":
        return cls([list(values)])

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def denominator(self) -> int:
        """Least common denominator of all entries."""
        return self._den

    def numerators(self) -> np.ndarray:
        """Integer array ``N`` (dtype object) with ``self == N / denominator``."""
        return self._num.copy()

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return Fraction(int(self._num[i, j]), self._den)

    def to_rows(self) -> list[list[Fraction]]:
        d = self._den
        return [[Fraction(int(v), d) for v in row] for row in self._num]

    def row_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num[i])

    def column_vector(self, j: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num[:, j])

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num.diagonal())

    def to_float(self) -> np.ndarray:
        if self._bound < 2**53:
            return self._num.astype(np.float64) / self._den
        return np.array(
            [[float(Fraction(int(v), self._den)) for v in row] for row in self._num],
            dtype=np.float64,
        )

    def __iter__(self):
        return iter(self.to_rows())

    def __repr__(self) -> str:
        body = "; ".join(" ".join(render_rational(x) for x in row) for row in self.to_rows())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._den == other._den
            and bool(np.all(self._num == other._num))
        )

    def __hash__(self) -> int:
        return hash((self.shape, self._den, tuple(self._num.flat)))

    def first_difference(self, other: "Matrix") -> tuple[int, int] | None:
        """0-based position of the first entry where two equal-shape matrices differ."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        lhs = self._num * other._den
        rhs = other._num * self._den
        diff = np.argwhere(lhs != rhs)
        if len(diff) == 0:
            return None
        return int(diff[0][0]), int(diff[0][1])

    # -- structure predicates -------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and bool(np.all(self._num == self._num.T))

    def is_hollow(self) -> bool:
        return self.is_square and all(v == 0 for v in self._num.diagonal())

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num.sum(axis=1))

    def col_sums(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self._den) for v in self._num.sum(axis=0))

    # -- arithmetic -----------------------------------------------------

    @property
    def T(self) -> "Matrix":
        return Matrix.from_scaled(self._num.T, self._den)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        den = self._den * other._den // math.gcd(self._den, other._den)
        num = self._num * (den // self._den) + sign * other._num * (den // other._den)
        return Matrix.from_scaled(num, den)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return Matrix.from_scaled(-self._num, self._den)

    def scale(self, factor) -> "Matrix":
        f = _to_fraction(factor)
        return Matrix.from_scaled(self._num * f.numerator, self._den * f.denominator)

    def __mul__(self, factor) -> "Matrix":
        if isinstance(factor, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(factor)

    __rmul__ = __mul__

    def __truediv__(self, factor) -> "Matrix":
        return self.scale(1 / _to_fraction(factor))

    def _as_int64(self) -> np.ndarray:
        if self._i64 is None:
            self._i64 = self._num.astype(np.int64)
        return self._i64

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self._bound * other._bound * self.cols < _INT64_LIMIT:
            # no partial sum can overflow
            prod = (self._as_int64() @ other._as_int64()).astype(object)
        else:
            prod = np.dot(self._num, other._num)
        return Matrix.from_scaled(prod, self._den * other._den)

    def with_entry(self, i: int, j: int, value) -> "Matrix":
        """Copy with entry ``(i, j)`` (0-based) replaced."""
        rows = self.to_rows()
        rows[i][j] = _to_fraction(value)
        return Matrix(rows)

    def delete(self, i: int, j: int) -> "Matrix":
        """Copy with row ``i`` and column ``j`` (0-based) removed."""
        num = np.delete(np.delete(self._num, i, axis=0), j, axis=1)
        return Matrix.from_scaled(num, self._den)

    # -- serialization --------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[render_rational(x) for x in row] for row in self.to_rows()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Matrix":
        m = cls(obj["entries"])
        if m.shape != (obj["rows"], obj["cols"]):
            raise ValueError("declared shape does not match entries")
        return m

    @classmethod
    def from_json(cls, text: str) -> "Matrix":
        return cls.from_json_obj(json.loads(text))

    def to_csv(self) -> str:
        return "".join(
            ",".join(render_rational(x) for x in row) + "\n" for row in self.to_rows()
        )


# ---------------------------------------------------------------------------
# circulants


def shift(v: Sequence) -> tuple:
    """Cyclic shift ``(v1, ..., vm) -> (vm, v1, ..., v_{m-1})``."""
    v = tuple(v)
    if not v:
        raise ValueError("empty")
    return (v[-1],) + v[:-1]


@dataclass(frozen=True)
class CirculantSpec:
    """Generator ``c`` of the circulant whose k-th row is ``shift^(k-1)(c)``."""

    generator: tuple[Fraction, ...]

    def __init__(self, generator: Iterable):
        gen = as_vector(generator)
        if not gen:
            raise ValueError("generator must be nonempty")
        object.__setattr__(self, "generator", gen)

    def __len__(self) -> int:
        return len(self.generator)

    def matrix(self) -> Matrix:
        return circulant(self)


def circulant(spec: CirculantSpec | Sequence) -> Matrix:
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(spec)
    gen = spec.generator
    m = len(gen)
    den = math.lcm(*(x.denominator for x in gen))
    num = np.array([x.numerator * (den // x.denominator) for x in gen], dtype=object)
    # row k is the generator rotated right k times
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
    return Matrix.from_scaled(num[idx], den)


def vec_mat(v: Sequence, m: Matrix) -> tuple[Fraction, ...]:
    """Row vector times matrix, ``v' m``."""
    return (Matrix.row(v) @ m).row_vector(0)


def circ_mul(a: CirculantSpec, b: CirculantSpec) -> CirculantSpec:
    """Generator of ``Circ(a) Circ(b)``, which is again circulant: ``a' Circ(b)``."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return CirculantSpec(vec_mat(a.generator, circulant(b)))


# ---------------------------------------------------------------------------
# elimination


def gauss_jordan_inverse(m: Matrix) -> Matrix:
    """Exact inverse by rational Gauss-Jordan elimination.

    Pivots on the first nonzero entry at or below the diagonal.  Raises
    :class:`SingularMatrixError` when no pivot exists.
    """
    if not m.is_square:
        raise ValueError("matrix must be square")
    n = m.rows
    a = m.to_rows()
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
        arow, irow = a[col], inv[col]
        for r in range(n):
            f = a[r][col]
            if r == col or f == 0:
                continue
            a[r] = [x - f * y for x, y in zip(a[r], arow)]
            inv[r] = [x - f * y for x, y in zip(inv[r], irow)]
    return Matrix(inv)


def _bareiss(num: np.ndarray) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = np.array(num, dtype=object)
    n = a.shape[0]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k, k] == 0:
            nz = [r for r in range(k + 1, n) if a[r, k] != 0]
            if not nz:
                return 0
            a[[k, nz[0]]] = a[[nz[0], k]]
            sign = -sign
        piv = a[k, k]
        a[k + 1 :, k + 1 :] = (
            piv * a[k + 1 :, k + 1 :] - np.outer(a[k + 1 :, k], a[k, k + 1 :])
        ) // prev
        a[k + 1 :, k] = 0
        prev = piv
    return sign * int(a[n - 1, n - 1])


def determinant(m: Matrix) -> Fraction:
    if not m.is_square:
        raise ValueError("matrix must be square")
    return Fraction(_bareiss(m._num), m._den**m.rows)


def cofactor(m: Matrix, i: int, j: int) -> Fraction:
    """Signed minor ``(-1)^(i+j) det(m without row i, column j)``.

    ``i`` and ``j`` are 1-based, matching the usual matrix-entry labels.
    """
    if not m.is_square or m.rows < 2:
        raise ValueError("cofactor needs a square matrix of order >= 2")
    if not (1 <= i <= m.rows and 1 <= j <= m.cols):
        raise IndexError(f"cofactor index ({i}, {j}) out of range for order {m.rows}")
    sign = -1 if (i + j) % 2 else 1
    return sign * determinant(m.delete(i - 1, j - 1))


def rank(m: Matrix) -> int:
    """Exact rank: number of pivot rows after integer row reduction."""
    a = np.array(m._num, dtype=object)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = [i for i in range(r, nrows) if a[i, c] != 0]
        if not nz:
            continue
        if nz[0] != r:
            a[[r, nz[0]]] = a[[nz[0], r]]
        piv = a[r, c]
        below = a[r + 1 :, c].copy()
        # columns left of c are already zero below row r
        a[r + 1 :, c:] = piv * a[r + 1 :, c:] - np.outer(below, a[r, c:])
        if r + 1 < nrows:
            g = np.gcd.reduce(a[r + 1 :, c:], axis=1)
            g[g == 0] = 1
            a[r + 1 :, c:] //= g[:, None]
        r += 1
    return r


def has_tail_symmetry(v: Sequence) -> bool:
    """True iff ``v_i == v_{len+2-i}`` for ``i = 2..len`` (1-based).

    For a vector of length ``n - 1`` this is symmetry of the last ``n - 2``
    coordinates about their midpoint; the first coordinate is free.
    """
    tail = tuple(v)[1:]
    return tail == tail[::-1]
