"""Bound quiver algebras kQ/I realized by a normal-form path basis.

The ideal is closed degree by degree: at truncation level L every shifted
relation p·ρ·q is expanded over the paths of length at most L, each Peirce
block e_i(kQ)e_j is row reduced, and the non-pivot paths form the basis. The
first level at which every path of that length is a pivot is the Loewy length.
"""
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from src.core.config import settings
from src.core.errors import DimensionMismatchError, NonAdmissibleError
from src.core.logging import logger
from src.algebra.quiver import Path, Presentation, Quiver, Relation
from src.linalg.elimination import rref
from src.linalg.field import FieldSpec, Scalar
from src.linalg.matrix import Matrix


@dataclass(frozen=True)
class ArrowOrigin:
    """Where an arrow of a tensor algebra B⊗A comes from.

    `side` is "left" for (β, i) with β an arrow of B and i a vertex of A, and
    "right" for (j, α) with j a vertex of B and α an arrow of A.
    """

    side: str
    arrow: int
    vertex: int


@dataclass(frozen=True)
class TensorFactors:
    left: "Algebra"
    right: "Algebra"
    arrow_origin: tuple[ArrowOrigin, ...]

    def vertex(self, j: int, i: int) -> int:
        """Index of f_j ⊗ e_i (f-major, e-minor)."""
        return j * self.right.n + i

    def split_vertex(self, v: int) -> tuple[int, int]:
        return divmod(v, self.right.n)


@dataclass(frozen=True, eq=False)
class Algebra:
    presentation: Presentation
    basis: tuple[Path, ...]
    reductions: dict
    truncation: int
    factors: Optional[TensorFactors] = None

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.presentation == other.presentation

    def __hash__(self):
        return hash(self.presentation)

    @property
    def quiver(self) -> Quiver:
        return self.presentation.quiver

    @property
    def field(self) -> FieldSpec:
        return self.presentation.field

    @property
    def n(self) -> int:
        return self.presentation.vertex_count

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def index(self) -> dict[Path, int]:
        return {p: k for k, p in enumerate(self.basis)}

    @cached_property
    def loewy_bound(self) -> int:
        """Least N with every path of length N zero."""
        return 1 + max(p.length for p in self.basis)

    @cached_property
    def radical_basis(self) -> tuple[int, ...]:
        return tuple(k for k, p in enumerate(self.basis) if p.length >= 1)

    def peirce_index(self, k: int) -> tuple[int, int]:
        """(i, j) with basis element k in e_i A e_j."""
        p = self.basis[k]
        return (p.start, p.end)

    @cached_property
    def peirce_blocks(self) -> dict[tuple[int, int], tuple[int, ...]]:
        blocks = defaultdict(list)
        for k, p in enumerate(self.basis):
            blocks[(p.start, p.end)].append(k)
        return {key: tuple(v) for key, v in blocks.items()}

    def peirce_component(self, i: int, j: int) -> tuple[int, ...]:
        return self.peirce_blocks.get((i, j), ())

    def idempotent(self, i: int) -> int:
        return self.index[self.quiver.trivial_path(i)]

    def reduce_path(self, p: Path) -> dict[int, Scalar]:
        """Coordinates of a path of kQ in the basis."""
        if p.length > self.truncation:
            return {}
        return self.reductions[p]

    @cached_property
    def _products(self) -> dict:
        return {}

    def basis_product(self, i: int, j: int) -> dict[int, Scalar]:
        key = (i, j)
        cached = self._products.get(key)
        if cached is None:
            w = self.basis[i].concat(self.basis[j])
            cached = {} if w is None else self.reduce_path(w)
            self._products[key] = cached
        return cached

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Scalar]]:
        return {(i, j): self.basis_product(i, j) for i in range(self.dim) for j in range(self.dim)}

    def element(self, coefficients: Sequence) -> tuple:
        if len(coefficients) != self.dim:
            raise DimensionMismatchError(f"expected {self.dim} coordinates, got {len(coefficients)}")
        return tuple(self.field.coerce(c) for c in coefficients)

    def unit(self) -> tuple:
        one = [self.field.zero] * self.dim
        for i in range(self.n):
            one[self.idempotent(i)] = self.field.one
        return tuple(one)

    def basis_vector(self, k: int) -> tuple:
        v = [self.field.zero] * self.dim
        v[k] = self.field.one
        return tuple(v)

    def describe(self, k: int) -> str:
        return self.quiver.describe(self.basis[k])

    def canonical_presentation(self) -> Presentation:
        """The same quiver with the reduced relations p - (normal form of p)."""
        relations = []
        zero = self.field.zero
        for path in sorted(self.reductions, key=self.quiver.path_key):
            if path in self.index:
                continue
            terms = [(self.field.one, path)]
            for k, c in sorted(self.reductions[path].items()):
                if c != zero:
                    terms.append((-c, self.basis[k]))
            relations.append(Relation(tuple(terms)))
        return Presentation(self.quiver, tuple(relations), self.field)


def multiply(a: Algebra, x: Sequence, y: Sequence) -> tuple:
    """Product of two elements given by basis coordinates."""
    x, y = a.element(x), a.element(y)
    out = [a.field.zero] * a.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            for k, c in a.basis_product(i, j).items():
                out[k] = out[k] + xi * yj * c
    return tuple(out)


def _shifted_relations(p: Presentation, by_length: list[list[Path]], level: int):
    """Rows p·ρ·q truncated at `level`, bucketed by Peirce block."""
    ending_at = defaultdict(list)
    starting_at = defaultdict(list)
    for layer in by_length[: level + 1]:
        for path in layer:
            ending_at[path.end].append(path)
            starting_at[path.start].append(path)
    rows = defaultdict(list)
    for rel in p.relations:
        budget = level - rel.min_length
        if budget < 0:
            continue
        for left in ending_at[rel.source]:
            if left.length > budget:
                continue
            for right in starting_at[rel.target]:
                if left.length + right.length > budget:
                    continue
                terms = defaultdict(lambda: p.field.zero)
                for c, path in rel.terms:
                    w = left.arrows + path.arrows + right.arrows
                    if len(w) <= level:
                        terms[Path(left.start, right.end, w)] += c
                terms = {w: c for w, c in terms.items() if c != 0}
                if terms:
                    rows[(left.start, right.end)].append(terms)
    return rows


def _reduce_level(p: Presentation, by_length: list[list[Path]], level: int):
    """Normal forms at truncation `level`: (basis paths, reductions, survivors of length `level`)."""
    quiver, fld = p.quiver, p.field
    columns = defaultdict(list)
    for layer in by_length[: level + 1]:
        for path in layer:
            columns[(path.start, path.end)].append(path)
    rows = _shifted_relations(p, by_length, level)
    basis: list[Path] = []
    pivot_rows: dict[Path, dict[Path, Scalar]] = {}
    survivors = 0
    for block, cols in columns.items():
        cols.sort(key=quiver.path_key)
        block_rows = rows.get(block, [])
        pivots: tuple[int, ...] = ()
        reduced = None
        if block_rows:
            position = {path: c for c, path in enumerate(cols)}
            data = [[fld.zero] * len(cols) for _ in block_rows]
            for r, terms in enumerate(block_rows):
                for w, c in terms.items():
                    data[r][position[w]] = c
            reduced, pivots, _ = rref(Matrix.from_rows(data, fld))
        pivot_set = set(pivots)
        free = [c for c in range(len(cols)) if c not in pivot_set]
        for c in free:
            basis.append(cols[c])
            if cols[c].length == level:
                survivors += 1
        for r, pc in enumerate(pivots):
            pivot_rows[cols[pc]] = {
                cols[c]: -reduced[r, c] for c in free if reduced[r, c] != 0
            }
    return basis, pivot_rows, survivors


def build_algebra(p: Presentation, cap: Optional[int] = None) -> Algebra:
    """kQ/I for an admissible I, or NonAdmissibleError when paths of length `cap` survive."""
    cap = settings.max_loewy_length if cap is None else cap
    quiver = p.quiver
    by_length = [[quiver.trivial_path(v) for v in range(quiver.vertex_count)]]
    total = quiver.vertex_count
    for level in range(1, cap + 1):
        layer = [q for path in by_length[-1] for q in quiver.extensions(path)]
        by_length.append(layer)
        total += len(layer)
        if total > settings.max_path_count:
            raise NonAdmissibleError(
                cap, level, reason=f"more than {settings.max_path_count} paths up to length {level}"
            )
        basis, pivot_rows, survivors = _reduce_level(p, by_length, level)
        if survivors == 0:
            basis.sort(key=quiver.path_key)
            index = {path: k for k, path in enumerate(basis)}
            reductions = {path: {k: p.field.one} for path, k in index.items()}
            for path, combo in pivot_rows.items():
                reductions[path] = {index[w]: c for w, c in combo.items()}
            logger.debug(f"built algebra: {len(basis)} basis paths, truncation {level}")
            return Algebra(p, tuple(basis), reductions, level)
    raise NonAdmissibleError(cap, cap)
