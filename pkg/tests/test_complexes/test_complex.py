"""Tests for bounded complexes, chain maps, shifts and cones."""
import pytest

from src.complexes.complex import (
    BoundedComplex,
    ChainEndomorphism,
    chain_endomorphism,
    chain_map_basis,
    cohomology,
    complex_dim_vector,
    complex_trace_vector,
    concentrated,
    cone,
    identity_chain_map,
    induced_cohomology_endo,
    shift,
)
from src.complexes.random import random_chain_endomorphism, random_complex
from src.core.errors import ValidationError
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.operations import hom_basis
from src.modules.projective import indecomposable_projective, simple_module
from src.modules.representation import identity_morphism


@pytest.fixture
def resolution_of_s1(a2) -> BoundedComplex:
    """e2A → e1A in degrees -1, 0."""
    p1, p2 = indecomposable_projective(a2, 0), indecomposable_projective(a2, 1)
    return BoundedComplex(-1, (p2, p1), (hom_basis(p2, p1)[0],))


def test_cohomology_is_the_simple(resolution_of_s1):
    c = resolution_of_s1
    assert cohomology(c, 0).dims == (1, 0)
    assert cohomology(c, -1).is_zero()
    assert cohomology(c, 3).is_zero()


def test_super_dimension_vector(resolution_of_s1):
    assert complex_dim_vector(resolution_of_s1) == IntMatrix.column([1, 0])


def test_shift_negates(resolution_of_s1):
    shifted = shift(resolution_of_s1)
    assert shifted.lo == -2
    assert complex_dim_vector(shifted) == IntMatrix.column([-1, 0])
    assert complex_dim_vector(shift(resolution_of_s1, 2)) == IntMatrix.column([1, 0])


def test_cone_of_identity_is_acyclic(resolution_of_s1):
    c = cone(identity_chain_map(resolution_of_s1))
    assert complex_dim_vector(c) == IntMatrix.column([0, 0])
    for l in c.degrees():
        assert cohomology(c, l).is_zero()


def test_d_squared_must_vanish(a2):
    p1, p2 = indecomposable_projective(a2, 0), indecomposable_projective(a2, 1)
    inclusion = hom_basis(p2, p1)[0]
    with pytest.raises(ValidationError):
        BoundedComplex(0, (p2, p1, p1), (inclusion, identity_morphism(p1)))


def test_concentrated(a2):
    c = concentrated(simple_module(a2, 1), degree=1)
    assert c.hi == 1
    assert complex_dim_vector(c) == IntMatrix.column([0, -1])


def test_trace_of_scaled_identity(resolution_of_s1, q):
    three = q.coerce(3)
    phi = chain_endomorphism(resolution_of_s1, [identity_morphism(m).scale(three) for m in resolution_of_s1.components])
    assert complex_trace_vector(phi) == Matrix.column([3, 0], q)
    assert induced_cohomology_endo(phi, 0).maps[0].trace() == 3


def test_non_commuting_maps_are_rejected(resolution_of_s1, q):
    c = resolution_of_s1
    with pytest.raises(ValidationError):
        ChainEndomorphism(c, c, {-1: identity_morphism(c.component(-1)).scale(q.coerce(2)), 0: identity_morphism(c.component(0))})


def test_chain_map_basis_members_commute(resolution_of_s1):
    basis = chain_map_basis(resolution_of_s1, resolution_of_s1)
    assert basis
    for f in basis:
        for l in resolution_of_s1.degrees():
            lhs = resolution_of_s1.differential(l).then(f.at(l + 1))
            rhs = f.at(l).then(resolution_of_s1.differential(l))
            assert (lhs - rhs).is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_random_complexes_are_complexes(a3r, seed):
    c = random_complex(a3r, seed)
    assert 1 <= len(c.components) <= 3
    phi = random_chain_endomorphism(c, seed)
    complex_trace_vector(phi)
