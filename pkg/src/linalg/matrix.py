"""Exact dense matrices over a field (`Matrix`) and over the integers (`IntMatrix`).

Entries live in numpy object arrays so that Fractions, Residues and Python
ints keep exact arithmetic while numpy does the broadcasting and products.
Both classes are immutable: the wrapped array is marked read-only.
"""
from typing import Iterable, Sequence

import numpy as np

from src.core.errors import DimensionMismatchError, FieldMismatchError
from src.linalg.field import FieldSpec, format_scalar


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=object)
    array.setflags(write=False)
    return array


class _DenseMatrix:
    _a: np.ndarray

    def _zero(self):
        raise NotImplementedError

    def _new(self, array: np.ndarray):
        raise NotImplementedError

    def _check_same_kind(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _full(self, rows: int, cols: int):
        array = np.empty((rows, cols), dtype=object)
        array.fill(self._zero())
        return self._new(array)

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major entries."""
        return tuple(self._a.flat)

    def to_array(self) -> np.ndarray:
        """Writable copy of the entries."""
        return np.array(self._a, dtype=object)

    def tolist(self) -> list[list]:
        return [list(row) for row in self._a]

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in row] for row in self._a]

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, int) and isinstance(j, int):
            return self._a[i, j]
        # integer indices next to a slice keep the 2-d shape
        if isinstance(i, int):
            i = slice(i, i + 1)
        if isinstance(j, int):
            j = slice(j, j + 1)
        return self._new(self._a[i, j])

    def row(self, i: int):
        return self._new(self._a[i : i + 1, :])

    def col(self, j: int):
        return self._new(self._a[:, j : j + 1])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]):
        if len(rows) == 0 or len(cols) == 0:
            return self._full(len(rows), len(cols))
        return self._new(self._a[np.ix_(list(rows), list(cols))])

    @property
    def T(self):
        return self._new(self._a.T)

    def transpose(self):
        return self.T

    def __matmul__(self, other):
        self._check_same_kind(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return self._full(self.rows, other.cols)
        return self._new(self._a @ other._a)

    def __add__(self, other):
        self._check_same_kind(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return self._new(self._a + other._a)

    def __sub__(self, other):
        self._check_same_kind(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        return self._new(self._a - other._a)

    def __neg__(self):
        return self._new(-self._a)

    def scale(self, c):
        if self.rows == 0 or self.cols == 0:
            return self
        return self._new(self._a * c)

    def __eq__(self, other):
        if type(other) is not type(self) or self.shape != other.shape:
            return False
        return bool(np.all(self._a == other._a))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._a.flat)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self):
        if not self.is_square():
            raise DimensionMismatchError(f"trace of non-square {self.shape} matrix")
        total = self._zero()
        for i in range(self.rows):
            total = total + self._a[i, i]
        return total

    def kron(self, other):
        """Kronecker product; block (i, j) is self[i, j] * other."""
        self._check_same_kind(other)
        rows, cols = self.rows * other.rows, self.cols * other.cols
        if rows == 0 or cols == 0:
            return self._full(rows, cols)
        outer = np.multiply.outer(self._a, other._a)
        return self._new(outer.transpose(0, 2, 1, 3).reshape(rows, cols))

    def hstack(self, *others):
        blocks = [self, *others]
        for b in others:
            self._check_same_kind(b)
            if b.rows != self.rows:
                raise DimensionMismatchError("hstack needs equal row counts")
        cols = sum(b.cols for b in blocks)
        if cols == 0:
            return self._full(self.rows, 0)
        return self._new(np.concatenate([b._a for b in blocks if b.cols], axis=1))

    def vstack(self, *others):
        blocks = [self, *others]
        for b in others:
            self._check_same_kind(b)
            if b.cols != self.cols:
                raise DimensionMismatchError("vstack needs equal column counts")
        rows = sum(b.rows for b in blocks)
        if rows == 0:
            return self._full(0, self.cols)
        return self._new(np.concatenate([b._a for b in blocks if b.rows], axis=0))

    def block_diag(self, *others):
        blocks = [self, *others]
        out = self._full(sum(b.rows for b in blocks), sum(b.cols for b in blocks)).to_array()
        r = c = 0
        for b in blocks:
            self._check_same_kind(b)
            out[r : r + b.rows, c : c + b.cols] = b._a
            r += b.rows
            c += b.cols
        return self._new(out)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_strings()})"


class Matrix(_DenseMatrix):
    """Dense matrix over the field named by `field`."""

    def __init__(self, array, field: FieldSpec):
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise DimensionMismatchError(f"matrix data must be 2-d, got shape {array.shape}")
        self.field = field
        self._a = _frozen(array)

    def _zero(self):
        return self.field.zero

    def _new(self, array):
        return Matrix(array, self.field)

    def _check_same_kind(self, other) -> None:
        super()._check_same_kind(other)
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine matrices over {self.field} and {other.field}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], field: FieldSpec, cols: int | None = None) -> "Matrix":
        data = [[field.coerce(x) for x in row] for row in rows]
        if not data:
            return cls.zeros(0, cols or 0, field)
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatchError("ragged matrix rows")
        array = np.empty((len(data), width), dtype=object)
        for i, r in enumerate(data):
            for j, x in enumerate(r):
                array[i, j] = x
        return cls(array, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        array = np.empty((rows, cols), dtype=object)
        array.fill(field.zero)
        return cls(array, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        array = np.empty((n, n), dtype=object)
        array.fill(field.zero)
        for i in range(n):
            array[i, i] = field.one
        return cls(array, field)

    @classmethod
    def column(cls, values: Sequence, field: FieldSpec) -> "Matrix":
        return cls.from_rows([[v] for v in values], field, cols=1)

    @classmethod
    def row_vector(cls, values: Sequence, field: FieldSpec) -> "Matrix":
        values = list(values)
        if not values:
            return cls.zeros(1, 0, field)
        return cls.from_rows([values], field)

    @classmethod
    def unit_row(cls, length: int, index: int, field: FieldSpec) -> "Matrix":
        array = np.empty((1, length), dtype=object)
        array.fill(field.zero)
        array[0, index] = field.one
        return cls(array, field)

    def rank(self) -> int:
        from src.linalg.elimination import rref

        return rref(self).rank


class IntMatrix(_DenseMatrix):
    """Dense matrix of arbitrary-precision integers."""

    def __init__(self, array):
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise DimensionMismatchError(f"matrix data must be 2-d, got shape {array.shape}")
        self._a = _frozen(array)

    def _zero(self):
        return 0

    def _new(self, array):
        return IntMatrix(array)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        data = [[int(x) for x in row] for row in rows]
        if not data:
            return cls.zeros(0, cols or 0)
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatchError("ragged matrix rows")
        array = np.empty((len(data), width), dtype=object)
        for i, r in enumerate(data):
            for j, x in enumerate(r):
                array[i, j] = x
        return cls(array)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        return cls(array)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zeros(n, n).to_array()
        for i in range(n):
            m[i, i] = 1
        return cls(m)

    @classmethod
    def column(cls, values: Sequence[int]) -> "IntMatrix":
        return cls.from_rows([[v] for v in values], cols=1)

    def over(self, field: FieldSpec) -> Matrix:
        """Image of this integer matrix in the given field."""
        array = np.empty(self.shape, dtype=object)
        for idx, x in np.ndenumerate(self._a):
            array[idx] = field.coerce(x)
        return Matrix(array, field)

    def to_ints(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]
