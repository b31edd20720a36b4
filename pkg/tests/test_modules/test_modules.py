"""Tests for representations, projectives, Hom spaces and bimodules."""
import pytest

from src.algebra.cartan import cartan_matrix
from src.algebra.constructions import opposite_algebra
from src.core.errors import AlgebraMismatchError, DimensionMismatchError, ValidationError
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import (
    dim_matrix,
    dual_bimodule,
    left_slice,
    outer_tensor,
    regular_bimodule,
    right_slice,
    trace_matrix,
)
from src.modules.operations import cokernel, dual_module, hom_basis, kernel
from src.modules.projective import indecomposable_projective, projective_sum, simple_module
from src.modules.random import random_bimodule, random_endomorphism, random_module
from src.modules.representation import (
    ModuleMorphism,
    Representation,
    check_module,
    dim_vector,
    direct_sum,
    identity_morphism,
    trace_vector,
)


def test_projective_dims_are_cartan_columns(a3r):
    c = cartan_matrix(a3r)
    for i in range(a3r.n):
        p = indecomposable_projective(a3r, i)
        assert list(p.dims) == [c[j, i] for j in range(a3r.n)]
        check_module(p)


def test_simple_module(a2):
    s = simple_module(a2, 1)
    assert s.dims == (0, 1)
    with pytest.raises(ValidationError):
        simple_module(a2, 2)


def test_relation_violation_is_reported(a3r, q):
    one = Matrix.identity(1, q)
    m = Representation(a3r, (1, 1, 1), (one, one))
    with pytest.raises(ValidationError) as excinfo:
        check_module(m)
    assert excinfo.value.location == "relations[0]"


def test_action_shapes_are_checked(a2, q):
    with pytest.raises(DimensionMismatchError):
        Representation(a2, (1, 2), (Matrix.zeros(1, 1, q),))


def test_hom_between_projectives_counts_paths(a2):
    p1, p2 = indecomposable_projective(a2, 0), indecomposable_projective(a2, 1)
    assert len(hom_basis(p2, p1)) == 1
    assert len(hom_basis(p1, p2)) == 0
    assert len(hom_basis(p1, p1)) == 1


def test_hom_basis_elements_intertwine(kronecker):
    m = random_module(kronecker, 11)
    for f in hom_basis(m, m):
        assert f.intertwining_defect() == []


def test_kernel_and_cokernel_of_augmentation(a2):
    p1 = indecomposable_projective(a2, 0)
    s1 = simple_module(a2, 0)
    onto = hom_basis(p1, s1)[0]
    ker, inclusion = kernel(onto)
    assert ker.dims == (0, 1)
    assert inclusion.intertwining_defect() == []
    coker, _ = cokernel(inclusion)
    assert coker.dims == (1, 0)


def test_dual_module_lives_over_opposite(a2):
    p1 = indecomposable_projective(a2, 0)
    d = dual_module(p1)
    assert d.algebra == opposite_algebra(a2)
    assert d.dims == p1.dims
    check_module(d)


def test_direct_sum_and_traces(a2, q):
    p1, s2 = indecomposable_projective(a2, 0), simple_module(a2, 1)
    total = direct_sum(p1, s2)
    assert dim_vector(total) == IntMatrix.column([1, 2])
    assert trace_vector(identity_morphism(total)) == Matrix.column([1, 2], q)


def test_trace_vector_needs_endomorphism(a2):
    p1, p2 = indecomposable_projective(a2, 0), indecomposable_projective(a2, 1)
    f = hom_basis(p2, p1)[0]
    with pytest.raises(DimensionMismatchError):
        trace_vector(f)


def test_morphism_between_algebras_is_rejected(a2, kronecker):
    with pytest.raises(AlgebraMismatchError):
        ModuleMorphism(simple_module(a2, 0), simple_module(kronecker, 0), ())


def test_projective_sum_multiplicities(a3r):
    p = projective_sum(a3r, [0, 2, 0])
    assert p.multiplicities() == (2, 0, 1)
    assert p.rank == 3


class TestRandom:
    def test_seeded(self, a3r):
        m1, m2 = random_module(a3r, 5), random_module(a3r, 5)
        assert m1.same_as(m2)

    def test_random_modules_satisfy_relations(self, a3r):
        for seed in range(10):
            check_module(random_module(a3r, seed))

    def test_random_endomorphism_intertwines(self, a3r):
        m = random_module(a3r, 3)
        assert random_endomorphism(m, 4).intertwining_defect() == []


class TestBimodules:
    def test_regular_bimodule_dims_are_cartan(self, a3r):
        assert dim_matrix(regular_bimodule(a3r)) == cartan_matrix(a3r)
        check_module(regular_bimodule(a3r).module)

    def test_slices(self, a2):
        reg = regular_bimodule(a2)
        assert right_slice(reg, 0).dims == indecomposable_projective(a2, 0).dims
        assert left_slice(reg, 1).algebra == opposite_algebra(a2)
        assert left_slice(reg, 1).dims == (1, 1)

    def test_outer_tensor_dims(self, a2, kronecker):
        m = indecomposable_projective(a2, 0)
        n_left = simple_module(opposite_algebra(kronecker), 1)
        t = outer_tensor(n_left, m)
        assert t.left == kronecker and t.right == a2
        assert dim_matrix(t) == dim_vector(m) @ dim_vector(n_left).T

    def test_dual_transposes(self, a2, kronecker):
        b = random_bimodule(kronecker, a2, 9, budget=1)
        d = dual_bimodule(b)
        assert dim_matrix(d) == dim_matrix(b).T
        check_module(d.module)

    def test_left_module_form_only_for_one_algebra(self, a2, kronecker):
        b = random_bimodule(kronecker, a2, 2, budget=1)
        with pytest.raises(AlgebraMismatchError):
            b.left_module_form()

    def test_trace_matrix_of_identity(self, a2, q):
        reg = regular_bimodule(a2)
        tm = trace_matrix(reg, identity_morphism(reg.module))
        assert tm == cartan_matrix(a2).over(q)
