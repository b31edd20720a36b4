"""Finite cochain complexes of vector spaces, built block by block."""
from dataclasses import dataclass
from typing import Optional

from src.linalg.field import FieldSpec
from src.linalg.matrix import Matrix
from src.linalg.subspace import Subquotient, cycles
from src.linalg.elimination import row_space_basis


class BlockBuilder:
    """Dense matrix assembled from blocks addressed by (row part, column part)."""

    def __init__(self, row_sizes: list[int], col_sizes: list[int], fld: FieldSpec):
        self.row_offsets = [sum(row_sizes[:k]) for k in range(len(row_sizes))]
        self.col_offsets = [sum(col_sizes[:k]) for k in range(len(col_sizes))]
        self._a = Matrix.zeros(sum(row_sizes), sum(col_sizes), fld).to_array()
        self.field = fld

    def add(self, r: int, c: int, block: Matrix) -> None:
        if block.rows == 0 or block.cols == 0:
            return
        r0, c0 = self.row_offsets[r], self.col_offsets[c]
        self._a[r0 : r0 + block.rows, c0 : c0 + block.cols] += block.to_array()

    def build(self) -> Matrix:
        return Matrix(self._a, self.field)


@dataclass
class LinearComplex:
    """Spaces k^{dims[n]} and row-acting differentials dims[n] × dims[n+1]."""

    field: FieldSpec
    dims: dict[int, int]
    differentials: dict[int, Matrix]
    endomorphisms: Optional[dict[int, Matrix]] = None

    def differential(self, n: int) -> Matrix:
        d = self.differentials.get(n)
        if d is None:
            return Matrix.zeros(self.dims.get(n, 0), self.dims.get(n + 1, 0), self.field)
        return d

    def _subquotient(self, n: int) -> Subquotient:
        z = cycles(self.differential(n))
        incoming = self.differential(n - 1)
        b = row_space_basis(incoming) if incoming.rows else Matrix.zeros(0, incoming.cols, self.field)
        return Subquotient(z, b)

    def cohomology_dims(self) -> dict[int, int]:
        return {n: self._subquotient(n).dim for n in sorted(self.dims)}

    def cohomology_traces(self) -> Optional[dict[int, object]]:
        if self.endomorphisms is None:
            return None
        out = {}
        for n in sorted(self.dims):
            sq = self._subquotient(n)
            out[n] = sq.trace(self.endomorphisms[n]) if sq.dim else self.field.zero
        return out
