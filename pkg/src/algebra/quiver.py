"""Quivers, paths, relations and bound quiver presentations.

Paths compose left to right: for p from i to j and q from j to l the product
pq traverses p first, so a path from i to j satisfies p = e_i p e_j. Vertices
are 0-based here; problem files use 1-based labels.
"""
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Iterator, Sequence

from src.core.errors import ValidationError
from src.linalg.field import FieldSpec, Scalar


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValidationError("quiver.vertices", "a quiver needs at least one vertex")
        seen = set()
        for k, arrow in enumerate(self.arrows):
            if arrow.name in seen:
                raise ValidationError(f"quiver.arrows[{k}]", f"duplicate arrow name {arrow.name!r}")
            seen.add(arrow.name)
            for end in (arrow.source, arrow.target):
                if not 0 <= end < self.vertex_count:
                    raise ValidationError(
                        f"quiver.arrows[{k}]",
                        f"arrow {arrow.name!r} touches vertex {end + 1} outside 1..{self.vertex_count}",
                    )

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: k for k, a in enumerate(self.arrows)}

    @cached_property
    def name_rank(self) -> tuple[int, ...]:
        """Position of each arrow in the sorted order of arrow names."""
        order = sorted(range(len(self.arrows)), key=lambda k: self.arrows[k].name)
        rank = [0] * len(self.arrows)
        for r, k in enumerate(order):
            rank[k] = r
        return tuple(rank)

    @cached_property
    def outgoing(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.vertex_count)]
        for k, a in enumerate(self.arrows):
            out[a.source].append(k)
        return tuple(tuple(o) for o in out)

    def trivial_path(self, vertex: int) -> "Path":
        return Path(vertex, vertex, ())

    def path(self, names: Sequence[str]) -> "Path":
        """Path through the named arrows, checking that consecutive arrows compose."""
        if not names:
            raise ValidationError("path", "use trivial_path for paths of length zero")
        indices = []
        for name in names:
            if name not in self.arrow_index:
                raise ValidationError("path", f"unknown arrow {name!r}")
            indices.append(self.arrow_index[name])
        for prev, nxt in zip(indices, indices[1:]):
            if self.arrows[prev].target != self.arrows[nxt].source:
                raise ValidationError(
                    "path",
                    f"arrows {self.arrows[prev].name!r} and {self.arrows[nxt].name!r} do not compose",
                )
        return Path(self.arrows[indices[0]].source, self.arrows[indices[-1]].target, tuple(indices))

    def path_key(self, p: "Path") -> tuple:
        """Degree-lexicographic key: length first, then arrow-name order."""
        if not p.arrows:
            return (0, p.start)
        return (len(p.arrows), tuple(self.name_rank[k] for k in p.arrows))

    def extensions(self, p: "Path") -> Iterator["Path"]:
        for k in self.outgoing[p.end]:
            yield Path(p.start, self.arrows[k].target, p.arrows + (k,))

    def reversed(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def describe(self, p: "Path") -> str:
        if not p.arrows:
            return f"e{p.start + 1}"
        return "".join(self.arrows[k].name if len(self.arrows[k].name) == 1 else f"[{self.arrows[k].name}]" for k in p.arrows)


@dataclass(frozen=True)
class Path:
    start: int
    end: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def concat(self, other: "Path") -> "Path | None":
        """pq (traverse self, then other), or None when they do not compose."""
        if self.end != other.start:
            return None
        return Path(self.start, other.end, self.arrows + other.arrows)

    def reversed(self) -> "Path":
        return Path(self.end, self.start, tuple(reversed(self.arrows)))


@dataclass(frozen=True)
class Relation:
    """Field-linear combination of parallel paths of length at least two."""

    terms: tuple[tuple[Scalar, Path], ...]

    def __post_init__(self):
        if not any(c != 0 for c, _ in self.terms):
            raise ValidationError("relation", "a relation needs a nonzero coefficient")
        first = self.terms[0][1]
        for _, p in self.terms:
            if p.length < 2:
                raise ValidationError("relation", "relation paths must have length at least 2")
            if (p.start, p.end) != (first.start, first.end):
                raise ValidationError("relation", "relation paths must be parallel")

    @property
    def source(self) -> int:
        return self.terms[0][1].start

    @property
    def target(self) -> int:
        return self.terms[0][1].end

    @property
    def min_length(self) -> int:
        return min(p.length for _, p in self.terms)

    def reversed(self) -> "Relation":
        return Relation(tuple((c, p.reversed()) for c, p in self.terms))

    def is_homogeneous(self) -> bool:
        return len({p.length for _, p in self.terms}) == 1


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple[Relation, ...] = ()
    field: FieldSpec = dataclass_field(default_factory=FieldSpec.rationals)

    def __post_init__(self):
        for k, rel in enumerate(self.relations):
            for c, p in rel.terms:
                if not self.field.owns(c):
                    raise ValidationError(f"relations[{k}]", f"coefficient {c!r} is not in {self.field}")
                if any(a >= len(self.quiver.arrows) for a in p.arrows):
                    raise ValidationError(f"relations[{k}]", "relation uses an unknown arrow")

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    def relation(self, *terms: tuple[object, Sequence[str]]) -> Relation:
        """Relation from (coefficient, arrow names) pairs."""
        return Relation(tuple((self.field.coerce(c), self.quiver.path(names)) for c, names in terms))
