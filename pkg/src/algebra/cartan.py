"""Cartan matrix, Coxeter matrix and the Ringel form."""
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from src.algebra.algebra import Algebra
from src.core.errors import DimensionMismatchError
from src.linalg.elimination import int_inverse
from src.linalg.field import FieldSpec
from src.linalg.matrix import IntMatrix, Matrix

Operand = Union[IntMatrix, Matrix]


def cartan_matrix(a: Algebra) -> IntMatrix:
    """c_ij = dim e_j A e_i = dim Hom_A(e_i A, e_j A)."""
    return IntMatrix.from_rows(
        [[len(a.peirce_component(j, i)) for j in range(a.n)] for i in range(a.n)]
    )


@dataclass(frozen=True)
class RingelFormData:
    cartan: IntMatrix
    cartan_inverse: IntMatrix
    coxeter: IntMatrix

    @property
    def n(self) -> int:
        return self.cartan.rows

    @cached_property
    def _inverse_transpose(self) -> IntMatrix:
        return self.cartan_inverse.T

    def _pair(self, x: Operand, middle: IntMatrix, y: Operand):
        if x.rows != self.n or y.rows != self.n:
            raise DimensionMismatchError(
                f"Ringel form on {self.n} vertices got operands {x.shape} and {y.shape}"
            )
        if isinstance(x, Matrix) or isinstance(y, Matrix):
            field = x.field if isinstance(x, Matrix) else y.field
            x, y = _over(x, field), _over(y, field)
            value = x.T @ middle.over(field) @ y
        else:
            value = x.T @ middle @ y
        if value.shape == (1, 1):
            return value[0, 0]
        return value

    def ringel_form(self, x: Operand, y: Operand):
        """xᵀ·C^{-T}·y; a scalar for columns, the rectangular matrix form otherwise."""
        return self._pair(x, self._inverse_transpose, y)

    def opposite_ringel_form(self, x: Operand, y: Operand):
        """xᵀ·C^{-1}·y, the Ringel form of the opposite algebra."""
        return self._pair(x, self.cartan_inverse, y)

    def coxeter_trace(self) -> int:
        return self.coxeter.trace()


def _over(m: Operand, field: FieldSpec) -> Matrix:
    return m.over(field) if isinstance(m, IntMatrix) else m


def ringel_data(a: Algebra) -> RingelFormData:
    """C_A, C_A^{-1} and Φ_A = -C_A^{-T}·C_A; UnimodularityError when det C_A ≠ ±1."""
    c = cartan_matrix(a)
    inverse = int_inverse(c)
    return RingelFormData(c, inverse, -(inverse.T @ c))
