"""Ext, Tor and Hochschild values checked against hand computations."""
import pytest

from src.algebra.constructions import opposite_algebra
from src.complexes.complex import concentrated
from src.core.errors import AlgebraMismatchError
from src.homology.functors import ext_data, hochschild_data, tor_data
from src.homology.replacement import derived_data_complex, projective_replacement
from src.modules.bimodule import regular_bimodule
from src.modules.projective import indecomposable_projective, simple_module
from src.modules.representation import identity_morphism


def test_ext_between_simples_of_a2(a2):
    data = ext_data(simple_module(a2, 0), simple_module(a2, 1))
    assert data.dim(0) == 0
    assert data.dim(1) == 1
    assert data.euler_dim == -1
    assert data.traces is None


def test_ext_from_a_projective_is_hom(a2):
    data = ext_data(indecomposable_projective(a2, 0), simple_module(a2, 0))
    assert data.dim(0) == 1
    assert data.euler_dim == 1


def test_ext_trace(a2, q):
    s1, s2 = simple_module(a2, 0), simple_module(a2, 1)
    psi = identity_morphism(s2).scale(q.coerce(2))
    data = ext_data(s1, s2, identity_morphism(s1), psi)
    assert data.euler_trace == -2


def test_ext_in_degree_two_over_a3r(a3r):
    data = ext_data(simple_module(a3r, 0), simple_module(a3r, 2))
    assert data.dim(2) == 1
    assert data.euler_dim == 1


def test_tor_with_left_simples(a2):
    left = opposite_algebra(a2)
    assert tor_data(simple_module(a2, 0), simple_module(left, 1)).euler_dim == -1
    assert tor_data(simple_module(a2, 1), simple_module(left, 1)).euler_dim == 1
    assert tor_data(simple_module(a2, 0), simple_module(left, 0)).euler_dim == 1


def test_tor_needs_a_left_module(a2):
    with pytest.raises(AlgebraMismatchError):
        tor_data(simple_module(a2, 0), simple_module(a2, 1))


@pytest.mark.parametrize("fixture, expected", [("a2", 1), ("kronecker", -2), ("a3r", 1)])
def test_hochschild_cohomology_euler(request, fixture, expected):
    a = request.getfixturevalue(fixture)
    assert hochschild_data(a, regular_bimodule(a)).euler_dim == expected


@pytest.mark.parametrize("fixture", ["a2", "kronecker", "a3r"])
def test_hochschild_homology_is_the_vertices(request, fixture):
    a = request.getfixturevalue(fixture)
    homology = hochschild_data(a, regular_bimodule(a), variant="homology")
    assert homology.dims.get(0) == a.n
    assert homology.euler_dim == a.n


def test_hochschild_needs_an_a_a_bimodule(a2, kronecker):
    with pytest.raises(AlgebraMismatchError):
        hochschild_data(kronecker, regular_bimodule(a2))


def test_replacement_of_a_simple(a2):
    rep = projective_replacement(concentrated(simple_module(a2, 0)))
    assert rep.projective.term(0, a2).multiplicities() == (1, 0)
    assert rep.projective.term(-1, a2).multiplicities() == (0, 1)


def test_hyper_ext_agrees_with_ext(a3r):
    s1, s3 = simple_module(a3r, 0), simple_module(a3r, 2)
    data = derived_data_complex(concentrated(s1), concentrated(s3))
    assert data.dim(2) == 1
    assert data.euler_dim == ext_data(s1, s3).euler_dim
