"""Tests for exact matrices, fields and elimination."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import DimensionMismatchError, FieldMismatchError, UnimodularityError, ValidationError
from src.linalg.elimination import (
    int_determinant,
    int_inverse,
    kernel_basis,
    kronecker,
    left_kernel_basis,
    rank,
    rref,
    solve_left,
    solve_linear,
)
from src.linalg.field import FieldSpec, Residue, format_scalar
from src.linalg.matrix import IntMatrix, Matrix

small_ints = st.integers(min_value=-3, max_value=3)


def int_rows(rows: int, cols: int):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


class TestFieldSpec:
    def test_parse(self):
        assert FieldSpec.parse("Q") == FieldSpec.rationals()
        assert FieldSpec.parse("Fp:7") == FieldSpec.prime(7)

    def test_parse_rejects_unknown_spelling(self):
        with pytest.raises(ValidationError):
            FieldSpec.parse("R")

    def test_prime_field_needs_a_prime(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(4)

    def test_coerce_rational_strings(self, q):
        assert q.coerce("3/6") == Fraction(1, 2)
        assert format_scalar(q.coerce("-4/2")) == "-2"

    def test_coerce_into_prime_field(self):
        f5 = FieldSpec.prime(5)
        half = f5.coerce("1/2")
        assert half == Residue(3, 5)
        assert half * 2 == f5.one

    def test_denominator_divisible_by_p(self):
        with pytest.raises(ValidationError):
            FieldSpec.prime(3).coerce("1/3")

    def test_residues_of_different_primes_do_not_mix(self):
        with pytest.raises(FieldMismatchError):
            Residue(1, 5) + Residue(1, 7)

    def test_to_json(self):
        assert FieldSpec.rationals().to_json() == "Q"
        assert FieldSpec.prime(11).to_json() == {"Fp": 11}


class TestMatrix:
    def test_product_and_trace(self, q):
        m = Matrix.from_rows([[1, 2], [3, 4]], q)
        assert (m @ Matrix.identity(2, q)) == m
        assert m.trace() == 5
        assert m.T[0, 1] == 3

    def test_shape_mismatch(self, q):
        with pytest.raises(DimensionMismatchError):
            Matrix.zeros(2, 3, q) @ Matrix.zeros(2, 3, q)

    def test_field_mismatch(self, q):
        with pytest.raises(FieldMismatchError):
            Matrix.identity(2, q) + Matrix.identity(2, FieldSpec.prime(5))

    def test_empty_blocks(self, q):
        z = Matrix.zeros(0, 3, q)
        assert (z.T @ z).shape == (3, 3)
        assert (z.T @ z).is_zero()
        assert Matrix.identity(2, q).block_diag(z).shape == (2, 5)

    def test_kron(self, q):
        a = Matrix.from_rows([[1, 2]], q)
        b = Matrix.from_rows([[0], [1]], q)
        assert a.kron(b).to_strings() == [["0", "0"], ["1", "2"]]

    def test_entries_are_immutable(self, q):
        m = Matrix.identity(2, q)
        with pytest.raises(ValueError):
            m._a[0, 0] = 5

    def test_int_matrix_over_field(self):
        m = IntMatrix.from_rows([[2, -1], [0, 3]])
        assert m.over(FieldSpec.prime(2)).to_strings() == [["0", "1"], ["0", "1"]]


class TestElimination:
    def test_rank_and_kernel(self, q):
        m = Matrix.from_rows([[1, 2], [2, 4]], q)
        assert rank(m) == 1
        k = kernel_basis(m)
        assert k.cols == 1
        assert (m @ k).is_zero()

    def test_left_kernel(self, q):
        m = Matrix.from_rows([[1, 2], [2, 4], [0, 1]], q)
        y = left_kernel_basis(m)
        assert y.rows == 1
        assert (y @ m).is_zero()

    def test_solve(self, q):
        a = Matrix.from_rows([[1, 1], [0, 1]], q)
        b = Matrix.column([3, 1], q)
        x = solve_linear(a, b)
        assert (a @ x) == b
        assert solve_left(Matrix.zeros(1, 2, q), Matrix.from_rows([[1, 0]], q)) is None

    def test_integer_inverse(self):
        c = IntMatrix.from_rows([[1, 0], [1, 1]])
        inv = int_inverse(c)
        assert inv.to_ints() == [[1, 0], [-1, 1]]
        assert (c @ inv) == IntMatrix.identity(2)

    def test_non_unimodular(self):
        with pytest.raises(UnimodularityError) as excinfo:
            int_inverse(IntMatrix.from_rows([[2]]))
        assert excinfo.value.determinant == 2

    def test_kronecker_shape(self):
        a = IntMatrix.from_rows([[1, 0], [1, 1]])
        assert kronecker(a, a).shape == (4, 4)
        assert int_determinant(kronecker(a, a)) == 1


@settings(max_examples=40, deadline=None)
@given(int_rows(3, 4))
def test_rank_nullity(rows):
    q = FieldSpec.rationals()
    m = Matrix.from_rows(rows, q)
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    assert (m @ k).is_zero()


@settings(max_examples=40, deadline=None)
@given(int_rows(3, 3))
def test_unit_triangular_inverse(rows):
    upper = IntMatrix.from_rows(
        [[1 if i == j else (rows[i][j] if j > i else 0) for j in range(3)] for i in range(3)]
    )
    assert int_determinant(upper) == 1
    assert (upper @ int_inverse(upper)) == IntMatrix.identity(3)


@settings(max_examples=40, deadline=None)
@given(int_rows(3, 4), st.sampled_from([0, 2, 5]))
def test_rref_is_idempotent(rows, p):
    fld = FieldSpec.rationals() if p == 0 else FieldSpec.prime(p)
    once = rref(Matrix.from_rows(rows, fld))
    twice = rref(once.matrix)
    assert twice.matrix == once.matrix
    assert twice.pivots == once.pivots


@settings(max_examples=30, deadline=None)
@given(int_rows(2, 1), int_rows(1, 2), int_rows(2, 2))
def test_kronecker_is_associative(a, b, c):
    a, b, c = IntMatrix.from_rows(a), IntMatrix.from_rows(b), IntMatrix.from_rows(c)
    assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))


@settings(max_examples=30, deadline=None)
@given(int_rows(2, 3), int_rows(3, 1))
def test_kronecker_transpose(a, b):
    a, b = IntMatrix.from_rows(a), IntMatrix.from_rows(b)
    assert kronecker(a, b).T == kronecker(a.T, b.T)


@settings(max_examples=40, deadline=None)
@given(int_rows(3, 4), st.sampled_from([2, 3, 5, 7]))
def test_rank_drops_modulo_p(rows, p):
    m = IntMatrix.from_rows(rows)
    assert rank(m.over(FieldSpec.prime(p))) <= rank(m.over(FieldSpec.rationals()))
