"""Gauss-Jordan elimination and the integer routines built on it."""
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from src.core.errors import DimensionMismatchError, UnimodularityError
from src.linalg.field import FieldSpec
from src.linalg.matrix import IntMatrix, Matrix


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int


def _rref_array(a: np.ndarray, ncols: Optional[int] = None) -> list[int]:
    """Reduce `a` in place; pivots are only searched in the first `ncols` columns."""
    rows = a.shape[0]
    ncols = a.shape[1] if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = a[r] / a[r, c]
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form, pivot columns and rank."""
    if m.rows == 0 or m.cols == 0:
        return RrefResult(m, (), 0)
    a = m.to_array()
    pivots = _rref_array(a)
    return RrefResult(Matrix(a, m.field), tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of {x : m x = 0}."""
    field = m.field
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    out = Matrix.zeros(m.cols, len(free), field).to_array()
    for k, f in enumerate(free):
        out[f, k] = field.one
        for r, pc in enumerate(pivots):
            out[pc, k] = -reduced[r, f]
    return Matrix(out, field)


def left_kernel_basis(m: Matrix) -> Matrix:
    """Rows form a basis of {y : y m = 0}."""
    return kernel_basis(m.T).T


def row_space_basis(m: Matrix) -> Matrix:
    """Rows of the result are a basis of the row space of m (its nonzero rref rows)."""
    reduced, _, r = rref(m)
    return reduced[0:r, :]


def solve_linear(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some x with a x = b, or None when the system is inconsistent."""
    if a.rows != b.rows:
        raise DimensionMismatchError(f"solve_linear: {a.shape} against right-hand side {b.shape}")
    field = a.field
    if a.rows == 0:
        return Matrix.zeros(a.cols, b.cols, field)
    aug = a.hstack(b).to_array()
    pivots = _rref_array(aug, ncols=a.cols)
    # rows below the pivots must have a zero right-hand side
    for r in range(len(pivots), a.rows):
        if any(aug[r, a.cols + t] != 0 for t in range(b.cols)):
            return None
    x = Matrix.zeros(a.cols, b.cols, field).to_array()
    for r, pc in enumerate(pivots):
        x[pc, :] = aug[r, a.cols :]
    return Matrix(x, field)


def solve_left(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some y with y a = b (row-vector form), or None."""
    x = solve_linear(a.T, b.T)
    return None if x is None else x.T


def int_determinant(m: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if not m.is_square():
        raise DimensionMismatchError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m.tolist()]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def int_inverse(m: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a unimodular matrix."""
    det = int_determinant(m)
    if abs(det) != 1:
        raise UnimodularityError(det)
    n = m.rows
    q = FieldSpec.rationals()
    aug = m.over(q).hstack(Matrix.identity(n, q)).to_array()
    _rref_array(aug, ncols=n)
    inverse = aug[:, n:]
    out = np.empty((n, n), dtype=object)
    for idx, x in np.ndenumerate(inverse):
        x = Fraction(x)
        assert x.denominator == 1
        out[idx] = x.numerator
    return IntMatrix(out)


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a.kron(b)
