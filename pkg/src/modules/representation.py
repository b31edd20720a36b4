"""Right modules as quiver representations, and the morphisms between them.

A representation M of A = kQ/I holds a space k^{d_i} per vertex and, for each
arrow α: i → j, a d_i × d_j matrix X_α acting on row vectors, so a path acts by
the product of its arrow matrices in path order. Left modules are
representations of the opposite algebra.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from src.algebra.algebra import Algebra
from src.algebra.quiver import Path
from src.core.errors import AlgebraMismatchError, DimensionMismatchError, ValidationError
from src.linalg.field import FieldSpec
from src.linalg.matrix import IntMatrix, Matrix


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: Algebra
    dims: tuple[int, ...]
    actions: tuple[Matrix, ...]

    def __post_init__(self):
        a = self.algebra
        if len(self.dims) != a.n:
            raise DimensionMismatchError(f"{len(self.dims)} vertex dimensions for {a.n} vertices")
        if len(self.actions) != len(a.quiver.arrows):
            raise DimensionMismatchError(
                f"{len(self.actions)} action matrices for {len(a.quiver.arrows)} arrows"
            )
        for arrow, x in zip(a.quiver.arrows, self.actions):
            expected = (self.dims[arrow.source], self.dims[arrow.target])
            if x.shape != expected:
                raise DimensionMismatchError(
                    f"arrow {arrow.name!r} acts by a {x.shape} matrix, expected {expected}"
                )
            if x.field != a.field:
                raise AlgebraMismatchError(f"arrow {arrow.name!r} matrix is over {x.field}, not {a.field}")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_action(self, p: Path) -> Matrix:
        out = Matrix.identity(self.dims[p.start], self.field)
        for k in p.arrows:
            out = out @ self.actions[k]
        return out

    @cached_property
    def _basis_actions(self) -> dict[int, Matrix]:
        return {}

    def basis_action(self, k: int) -> Matrix:
        """Action of the k-th basis element of the algebra, a d_start × d_end matrix."""
        cached = self._basis_actions.get(k)
        if cached is None:
            cached = self.path_action(self.algebra.basis[k])
            self._basis_actions[k] = cached
        return cached

    def same_as(self, other: "Representation") -> bool:
        return (
            self.algebra == other.algebra
            and self.dims == other.dims
            and all(x == y for x, y in zip(self.actions, other.actions))
        )


def check_module(m: Representation) -> None:
    """Raise ValidationError unless every relation of the algebra acts by zero."""
    a = m.algebra
    zero = a.field.zero
    for k, rel in enumerate(a.presentation.relations):
        total = Matrix.zeros(m.dims[rel.source], m.dims[rel.target], m.field)
        for c, p in rel.terms:
            total = total + m.path_action(p).scale(c)
        if not total.is_zero():
            raise ValidationError(f"relations[{k}]", "relation does not act by zero")
    # normal forms also cover the completed part of an inhomogeneous ideal
    for p, combo in a.reductions.items():
        if p in a.index:
            continue
        total = m.path_action(p)
        for k, c in combo.items():
            if c != zero:
                total = total - m.basis_action(k).scale(c)
        if not total.is_zero():
            raise ValidationError(f"path {a.quiver.describe(p)}", "path acts differently from its normal form")


@dataclass(frozen=True, eq=False)
class ModuleMorphism:
    source: Representation
    target: Representation
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if self.source.algebra != self.target.algebra:
            raise AlgebraMismatchError("morphism between modules over different algebras")
        for i, f in enumerate(self.maps):
            expected = (self.source.dims[i], self.target.dims[i])
            if f.shape != expected:
                raise DimensionMismatchError(f"vertex {i + 1} map has shape {f.shape}, expected {expected}")

    @property
    def algebra(self) -> Algebra:
        return self.source.algebra

    def is_endomorphism(self) -> bool:
        return self.source is self.target or self.source.same_as(self.target)

    def intertwining_defect(self) -> list[str]:
        """Names of the arrows α: i → j with X_α f_j ≠ f_i Y_α."""
        bad = []
        for k, arrow in enumerate(self.algebra.quiver.arrows):
            lhs = self.source.actions[k] @ self.maps[arrow.target]
            rhs = self.maps[arrow.source] @ self.target.actions[k]
            if lhs != rhs:
                bad.append(arrow.name)
        return bad

    def check(self) -> None:
        bad = self.intertwining_defect()
        if bad:
            raise ValidationError(f"arrow {bad[0]!r}", "map does not intertwine the arrow actions")

    def then(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """other ∘ self."""
        return ModuleMorphism(self.source, other.target, tuple(f @ g for f, g in zip(self.maps, other.maps)))

    def __add__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, tuple(f + g for f, g in zip(self.maps, other.maps)))

    def __sub__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, tuple(f - g for f, g in zip(self.maps, other.maps)))

    def scale(self, c) -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, tuple(f.scale(c) for f in self.maps))

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.maps)

    def same_as(self, other: "ModuleMorphism") -> bool:
        return all(f == g for f, g in zip(self.maps, other.maps))

    def rank(self) -> int:
        return sum(f.rank() for f in self.maps)


def identity_morphism(m: Representation) -> ModuleMorphism:
    return ModuleMorphism(m, m, tuple(Matrix.identity(d, m.field) for d in m.dims))


def zero_morphism(source: Representation, target: Representation) -> ModuleMorphism:
    return ModuleMorphism(
        source, target, tuple(Matrix.zeros(s, t, source.field) for s, t in zip(source.dims, target.dims))
    )


def zero_module(a: Algebra) -> Representation:
    return Representation(
        a, (0,) * a.n, tuple(Matrix.zeros(0, 0, a.field) for _ in a.quiver.arrows)
    )


def dim_vector(m: Representation) -> IntMatrix:
    """Column [dim Me_1, …, dim Me_n]ᵀ."""
    return IntMatrix.column(m.dims)


def trace_vector(phi: ModuleMorphism) -> Matrix:
    """Column [tr φ_1, …, tr φ_n]ᵀ of an endomorphism."""
    if not phi.is_endomorphism():
        raise DimensionMismatchError("trace vector needs an endomorphism")
    return Matrix.column([f.trace() for f in phi.maps], phi.source.field)


def direct_sum(*modules: Representation) -> Representation:
    a = modules[0].algebra
    for m in modules[1:]:
        if m.algebra != a:
            raise AlgebraMismatchError("direct sum of modules over different algebras")
    dims = tuple(sum(m.dims[i] for m in modules) for i in range(a.n))
    actions = tuple(
        modules[0].actions[k].block_diag(*(m.actions[k] for m in modules[1:]))
        for k in range(len(a.quiver.arrows))
    )
    return Representation(a, dims, actions)


def direct_sum_morphism(
    source: Representation, target: Representation, *parts: ModuleMorphism
) -> ModuleMorphism:
    """Block-diagonal morphism between direct sums built from `parts`."""
    maps = tuple(
        parts[0].maps[i].block_diag(*(p.maps[i] for p in parts[1:])) for i in range(source.n)
    )
    return ModuleMorphism(source, target, maps)


def summand_inclusion(total: Representation, parts: Sequence[Representation], k: int) -> ModuleMorphism:
    """Inclusion of parts[k] into total = direct_sum(*parts)."""
    maps = []
    for i in range(total.n):
        before = sum(p.dims[i] for p in parts[:k])
        f = Matrix.zeros(parts[k].dims[i], total.dims[i], total.field).to_array()
        for r in range(parts[k].dims[i]):
            f[r, before + r] = total.field.one
        maps.append(Matrix(f, total.field))
    return ModuleMorphism(parts[k], total, tuple(maps))


def summand_projection(total: Representation, parts: Sequence[Representation], k: int) -> ModuleMorphism:
    inclusion = summand_inclusion(total, parts, k)
    return ModuleMorphism(total, parts[k], tuple(f.T for f in inclusion.maps))
