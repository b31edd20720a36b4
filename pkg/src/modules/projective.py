"""Simple modules, indecomposable projectives e_iA and finite sums of them.

A projective sum P = e_{i_1}A ⊕ … ⊕ e_{i_r}A has, at vertex j, one coordinate
per pair (k, b) with b a basis path of e_{i_k} A e_j. A morphism out of P is
fixed by the images of its generators e_{i_k}, which is how maps between
projectives are stored throughout the homological engine.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from src.algebra.algebra import Algebra
from src.core.errors import DimensionMismatchError, ValidationError
from src.linalg.matrix import Matrix
from src.modules.representation import ModuleMorphism, Representation


def _check_vertex(a: Algebra, i: int) -> None:
    if not 0 <= i < a.n:
        raise ValidationError("vertex", f"vertex {i + 1} outside 1..{a.n}")


def simple_module(a: Algebra, i: int) -> Representation:
    _check_vertex(a, i)
    dims = tuple(1 if v == i else 0 for v in range(a.n))
    actions = tuple(Matrix.zeros(dims[x.source], dims[x.target], a.field) for x in a.quiver.arrows)
    return Representation(a, dims, actions)


@dataclass(frozen=True, eq=False)
class ProjectiveSum(Representation):
    tops: tuple[int, ...] = ()
    coords: tuple[tuple[tuple[int, int], ...], ...] = ()

    @cached_property
    def position(self) -> tuple[dict[tuple[int, int], int], ...]:
        return tuple({c: p for p, c in enumerate(vertex)} for vertex in self.coords)

    @property
    def rank(self) -> int:
        return len(self.tops)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.tops.count(i) for i in range(self.n))

    def generator(self, k: int) -> Matrix:
        """Row of e_{i_k} in the vertex-i_k space."""
        i = self.tops[k]
        return Matrix.unit_row(self.dims[i], self.position[i][(k, self.algebra.idempotent(i))], self.field)

    def map_to(self, target: Representation, images: Sequence[Matrix]) -> "GeneratorMap":
        return GeneratorMap(self, target, tuple(images))


def projective_sum(a: Algebra, tops: Sequence[int]) -> ProjectiveSum:
    """⊕_k e_{tops[k]} A with right multiplication as the arrow actions."""
    tops = tuple(tops)
    for i in tops:
        _check_vertex(a, i)
    coords = [[] for _ in range(a.n)]
    for k, i in enumerate(tops):
        for j in range(a.n):
            for b in a.peirce_component(i, j):
                coords[j].append((k, b))
    position = [{c: p for p, c in enumerate(vertex)} for vertex in coords]
    dims = tuple(len(c) for c in coords)
    actions = []
    for arrow_index, arrow in enumerate(a.quiver.arrows):
        x = Matrix.zeros(dims[arrow.source], dims[arrow.target], a.field).to_array()
        arrow_basis = a.index[a.quiver.path([arrow.name])]
        for row, (k, b) in enumerate(coords[arrow.source]):
            for b2, c in a.basis_product(b, arrow_basis).items():
                x[row, position[arrow.target][(k, b2)]] += c
        actions.append(Matrix(x, a.field))
    return ProjectiveSum(a, dims, tuple(actions), tops, tuple(tuple(c) for c in coords))


def indecomposable_projective(a: Algebra, i: int) -> ProjectiveSum:
    """e_iA; its dimension vector is column i of the Cartan matrix."""
    return projective_sum(a, (i,))


@dataclass(frozen=True, eq=False)
class GeneratorMap:
    """Morphism out of a projective sum, given by the images of its generators.

    `images[k]` is a row vector in the vertex-tops[k] space of the target.
    """

    source: ProjectiveSum
    target: Representation
    images: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise DimensionMismatchError(f"{len(self.images)} images for {self.source.rank} generators")
        for k, (i, row) in enumerate(zip(self.source.tops, self.images)):
            if row.shape != (1, self.target.dims[i]):
                raise DimensionMismatchError(
                    f"image of generator {k} has shape {row.shape}, expected (1, {self.target.dims[i]})"
                )

    @cached_property
    def morphism(self) -> ModuleMorphism:
        """The module map: the row of coordinate (k, b) is images[k]·act(b)."""
        src, tgt = self.source, self.target
        maps = []
        for j in range(src.n):
            rows = [self.images[k] @ tgt.basis_action(b) for k, b in src.coords[j]]
            if rows:
                maps.append(rows[0].vstack(*rows[1:]))
            else:
                maps.append(Matrix.zeros(0, tgt.dims[j], src.field))
        return ModuleMorphism(src, tgt, tuple(maps))

    def coefficients(self, g: int) -> dict[tuple[int, int], object]:
        """Image of generator g as {(k, b): c} over the coordinates of a projective target."""
        tgt = self.target
        assert isinstance(tgt, ProjectiveSum)
        i = self.source.tops[g]
        row = self.images[g]
        return {tgt.coords[i][p]: row[0, p] for p in range(row.cols) if row[0, p] != 0}

    def then(self, f: Union[ModuleMorphism, "GeneratorMap"]) -> "GeneratorMap":
        """f ∘ self, again as generator images."""
        g = f.morphism if isinstance(f, GeneratorMap) else f
        images = tuple(row @ g.maps[i] for i, row in zip(self.source.tops, self.images))
        return GeneratorMap(self.source, g.target, images)

    def is_radical(self) -> bool:
        """Whether every generator lands in the radical of a projective target."""
        a = self.source.algebra
        for g in range(self.source.rank):
            if any(a.basis[b].length == 0 for (_, b) in self.coefficients(g)):
                return False
        return True
