"""Tests for bound quiver algebras, their constructions and Cartan data."""
import pytest

from src.algebra.algebra import build_algebra, multiply
from src.algebra.bundled import (
    a2_presentation,
    bundled_algebra,
    loop_presentation,
    oriented_cycle_presentation,
)
from src.algebra.cartan import cartan_matrix, ringel_data
from src.algebra.constructions import enveloping_algebra, opposite_algebra, tensor_algebra, tensor_arrow_name
from src.algebra.quiver import Arrow, Presentation, Quiver
from src.core.config import settings
from src.core.errors import NonAdmissibleError, UnimodularityError, ValidationError
from src.linalg.elimination import kronecker as kron
from src.linalg.matrix import IntMatrix


@pytest.mark.parametrize("name, dim, vertices", [("K", 1, 1), ("A2", 3, 2), ("A3R", 5, 3), ("KR", 4, 2)])
def test_bundled_dimensions(name, dim, vertices):
    a = bundled_algebra(name)
    assert a.dim == dim
    assert a.n == vertices


def test_relation_kills_path(a3r):
    ab = a3r.quiver.path(["a", "b"])
    assert ab not in a3r.index
    assert a3r.reduce_path(ab) == {}
    assert a3r.loewy_bound == 2


def test_unit_is_identity(a2):
    x = a2.element([1, 2, 3])
    assert multiply(a2, a2.unit(), x) == x
    assert multiply(a2, x, a2.unit()) == x


def test_oriented_cycle_is_not_admissible():
    with pytest.raises(NonAdmissibleError):
        build_algebra(oriented_cycle_presentation(), cap=6)


def test_loop_with_square_zero_builds(q):
    a = build_algebra(loop_presentation(q))
    assert a.dim == 2


def test_commutativity_relation():
    """Square 1 → 2 → 4, 1 → 3 → 4 with ab = cd keeps one path of length two."""
    quiver = Quiver(4, (Arrow("a", 0, 1), Arrow("b", 1, 3), Arrow("c", 0, 2), Arrow("d", 2, 3)))
    bare = Presentation(quiver)
    p = Presentation(quiver, (bare.relation((1, ["a", "b"]), (-1, ["c", "d"])),))
    a = build_algebra(p)
    assert a.dim == 4 + 4 + 1
    assert cartan_matrix(a)[3, 0] == 1


def test_path_must_compose():
    quiver = a2_presentation().quiver
    with pytest.raises(ValidationError):
        quiver.path(["a", "a"])


def test_duplicate_arrow_names():
    with pytest.raises(ValidationError):
        Quiver(2, (Arrow("a", 0, 1), Arrow("a", 1, 0)))


class TestCartan:
    def test_a2(self, a2):
        assert cartan_matrix(a2).to_ints() == [[1, 0], [1, 1]]

    def test_kronecker(self, kronecker):
        assert cartan_matrix(kronecker).to_ints() == [[1, 0], [2, 1]]

    def test_coxeter_traces(self, a2, a3r, kronecker):
        assert ringel_data(a2).coxeter_trace() == -1
        assert ringel_data(kronecker).coxeter_trace() == 2
        assert ringel_data(a3r).cartan_inverse.to_ints() == [[1, 0, 0], [-1, 1, 0], [1, -1, 1]]

    def test_ringel_form_on_simples(self, a2):
        ringel = ringel_data(a2)
        s1, s2 = IntMatrix.column([1, 0]), IntMatrix.column([0, 1])
        assert ringel.ringel_form(s1, s2) == -1
        assert ringel.ringel_form(s2, s1) == 0
        assert ringel.opposite_ringel_form(s2, s1) == -1

    def test_loop_is_not_unimodular(self, q):
        with pytest.raises(UnimodularityError):
            ringel_data(build_algebra(loop_presentation(q)))


class TestConstructions:
    def test_opposite_reverses_arrows(self, a2):
        op = opposite_algebra(a2)
        arrow = op.quiver.arrows[0]
        assert (arrow.name, arrow.source, arrow.target) == ("a", 1, 0)
        assert cartan_matrix(op) == cartan_matrix(a2).T

    def test_opposite_is_an_involution(self, a2):
        assert opposite_algebra(opposite_algebra(a2)) == a2

    def test_tensor_cartan(self, a2, kronecker):
        t = tensor_algebra(kronecker, a2)
        assert t.n == 4
        assert t.dim == kronecker.dim * a2.dim
        assert cartan_matrix(t) == kron(cartan_matrix(kronecker), cartan_matrix(a2))

    def test_enveloping_cartan(self, a3r):
        ca = cartan_matrix(a3r)
        assert cartan_matrix(enveloping_algebra(a3r)) == kron(ca.T, ca)

    def test_tensor_arrow_names(self, a2):
        env = enveloping_algebra(a2)
        names = {arrow.name for arrow in env.quiver.arrows}
        assert tensor_arrow_name("left", "a", 0) in names
        assert tensor_arrow_name("right", "a", 1) in names
        assert len(names) == 4


def truncated_cycle(length: int) -> Presentation:
    """1 --a--> 2 --b--> 1 with every path of `length` arrows set to zero."""
    quiver = Quiver(2, (Arrow("a", 0, 1), Arrow("b", 1, 0)))
    bare = Presentation(quiver)
    words = [[("a", "b")[(start + k) % 2] for k in range(length)] for start in (0, 1)]
    return Presentation(quiver, tuple(bare.relation((1, w)) for w in words))


def loop_algebra():
    return build_algebra(loop_presentation())


SMALL_ALGEBRAS = {
    "K": lambda: bundled_algebra("K"),
    "A2": lambda: bundled_algebra("A2"),
    "A3R": lambda: bundled_algebra("A3R"),
    "KR": lambda: bundled_algebra("KR"),
    "loop": loop_algebra,
    "cycle2": lambda: build_algebra(truncated_cycle(2)),
    "cycle3": lambda: build_algebra(truncated_cycle(3)),
}


@pytest.mark.parametrize("name", sorted(SMALL_ALGEBRAS))
def test_rebuild_from_canonical_presentation(name):
    a = SMALL_ALGEBRAS[name]()
    rebuilt = build_algebra(a.canonical_presentation())
    assert rebuilt.dim == a.dim
    assert rebuilt.basis == a.basis
    assert rebuilt.structure_constants() == a.structure_constants()
    assert build_algebra(rebuilt.canonical_presentation()).basis == a.basis


@pytest.mark.parametrize("length, dim", [(2, 4), (3, 6)])
def test_truncated_cycle_dimensions(length, dim):
    a = build_algebra(truncated_cycle(length))
    assert a.dim == dim
    assert a.loewy_bound == length


@pytest.mark.parametrize("name", ["A2", "A3R", "KR", "loop", "cycle3"])
def test_multiplication_is_associative(name):
    a = SMALL_ALGEBRAS[name]()
    basis = [a.basis_vector(k) for k in range(a.dim)]
    for x in basis:
        for y in basis:
            xy = multiply(a, x, y)
            for z in basis:
                assert multiply(a, xy, z) == multiply(a, x, multiply(a, y, z))


def test_construction_caches_are_bounded():
    for construction in (opposite_algebra, tensor_algebra):
        assert construction.cache_info().maxsize == settings.construction_cache_size
