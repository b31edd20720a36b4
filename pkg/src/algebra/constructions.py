"""Opposite, tensor and enveloping algebras."""
from dataclasses import replace
from functools import lru_cache
from typing import Optional

from src.core.config import settings
from src.core.errors import FieldMismatchError, InvariantViolation
from src.core.logging import logger
from src.algebra.algebra import Algebra, ArrowOrigin, TensorFactors, build_algebra
from src.algebra.quiver import Arrow, Path, Presentation, Quiver, Relation


def opposite_presentation(p: Presentation) -> Presentation:
    return Presentation(
        p.quiver.reversed(), tuple(rel.reversed() for rel in p.relations), p.field
    )


@lru_cache(maxsize=settings.construction_cache_size)
def opposite_algebra(a: Algebra) -> Algebra:
    """Arrows reversed (names kept) and relations path-reversed."""
    return build_algebra(opposite_presentation(a.presentation), a.truncation)


def tensor_arrow_name(side: str, arrow: str, vertex: int) -> str:
    return f"b.{arrow}@{vertex + 1}" if side == "left" else f"a.{arrow}@{vertex + 1}"


def tensor_presentation(b: Presentation, a: Presentation) -> tuple[Presentation, tuple[ArrowOrigin, ...]]:
    """Product quiver with vertex (j, i) at index j*n + i and the lifted relations."""
    if b.field != a.field:
        raise FieldMismatchError(f"cannot tensor algebras over {b.field} and {a.field}")
    m, n = b.vertex_count, a.vertex_count

    def v(j: int, i: int) -> int:
        return j * n + i

    arrows, origins = [], []
    left_arrow, right_arrow = {}, {}
    for k, beta in enumerate(b.quiver.arrows):
        for i in range(n):
            left_arrow[(k, i)] = len(arrows)
            arrows.append(Arrow(tensor_arrow_name("left", beta.name, i), v(beta.source, i), v(beta.target, i)))
            origins.append(ArrowOrigin("left", k, i))
    for j in range(m):
        for k, alpha in enumerate(a.quiver.arrows):
            right_arrow[(j, k)] = len(arrows)
            arrows.append(Arrow(tensor_arrow_name("right", alpha.name, j), v(j, alpha.source), v(j, alpha.target)))
            origins.append(ArrowOrigin("right", k, j))
    quiver = Quiver(m * n, tuple(arrows))

    relations = []
    for rel in b.relations:
        for i in range(n):
            relations.append(Relation(tuple(
                (c, Path(v(p.start, i), v(p.end, i), tuple(left_arrow[(x, i)] for x in p.arrows)))
                for c, p in rel.terms
            )))
    for j in range(m):
        for rel in a.relations:
            relations.append(Relation(tuple(
                (c, Path(v(j, p.start), v(j, p.end), tuple(right_arrow[(j, x)] for x in p.arrows)))
                for c, p in rel.terms
            )))
    one = a.field.one
    for kb, beta in enumerate(b.quiver.arrows):
        for ka, alpha in enumerate(a.quiver.arrows):
            u, w = beta.source, beta.target
            i, i2 = alpha.source, alpha.target
            # (β, i)(w, α) - (u, α)(β, i')
            first = Path(v(u, i), v(w, i2), (left_arrow[(kb, i)], right_arrow[(w, ka)]))
            second = Path(v(u, i), v(w, i2), (right_arrow[(u, ka)], left_arrow[(kb, i2)]))
            relations.append(Relation(((one, first), (-one, second))))
    return Presentation(quiver, tuple(relations), a.field), tuple(origins)


@lru_cache(maxsize=settings.construction_cache_size)
def tensor_algebra(b: Algebra, a: Algebra, cap: Optional[int] = None) -> Algebra:
    """B⊗A on the product quiver, idempotents f_1⊗e_1, …, f_1⊗e_n, …, f_m⊗e_n."""
    presentation, origins = tensor_presentation(b.presentation, a.presentation)
    if cap is None:
        cap = b.loewy_bound + a.loewy_bound
    product = build_algebra(presentation, cap)
    if product.dim != b.dim * a.dim:
        raise InvariantViolation(f"dim(B⊗A) = {product.dim}, expected {b.dim} * {a.dim}")
    logger.debug(f"tensor algebra on {presentation.vertex_count} vertices, dim {product.dim}")
    return replace(product, factors=TensorFactors(b, a, origins))


def enveloping_algebra(a: Algebra) -> Algebra:
    """A^e = A^op ⊗ A."""
    return tensor_algebra(opposite_algebra(a), a)
