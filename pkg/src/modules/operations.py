"""Kernels, cokernels, subquotients, duals and Hom spaces of representations."""
from dataclasses import dataclass
from typing import Optional, Sequence

from src.algebra.constructions import opposite_algebra
from src.core.errors import AlgebraMismatchError
from src.core.logging import logger
from src.linalg.elimination import kernel_basis, left_kernel_basis, row_space_basis
from src.linalg.matrix import Matrix
from src.linalg.subspace import Subquotient
from src.modules.representation import ModuleMorphism, Representation


@dataclass(frozen=True, eq=False)
class SubquotientModule:
    """Z/B for subrepresentations B ⊆ Z of `ambient`, given vertexwise by row bases."""

    ambient: Representation
    pieces: tuple[Subquotient, ...]
    module: Representation

    def induced_endomorphism(self, phi: ModuleMorphism) -> ModuleMorphism:
        maps = tuple(sq.induced(f) for sq, f in zip(self.pieces, phi.maps))
        return ModuleMorphism(self.module, self.module, maps)

    def induced_map(self, other: "SubquotientModule", f: ModuleMorphism) -> ModuleMorphism:
        maps = tuple(sq.induced_to(o, g) for sq, o, g in zip(self.pieces, other.pieces, f.maps))
        return ModuleMorphism(self.module, other.module, maps)

    def projection_rows(self, i: int) -> Matrix:
        """Representatives in the ambient vertex-i space of the basis classes."""
        return self.pieces[i].representatives


def subquotient(m: Representation, z: Sequence[Matrix], b: Optional[Sequence[Matrix]] = None) -> SubquotientModule:
    """Z/B with the induced arrow actions; z and b are per-vertex row bases."""
    fld = m.field
    if b is None:
        b = [Matrix.zeros(0, d, fld) for d in m.dims]
    pieces = tuple(Subquotient(zi, bi) for zi, bi in zip(z, b))
    actions = []
    for k, arrow in enumerate(m.algebra.quiver.arrows):
        src, tgt = pieces[arrow.source], pieces[arrow.target]
        actions.append(src.induced_to(tgt, m.actions[k]))
    module = Representation(m.algebra, tuple(p.dim for p in pieces), tuple(actions))
    return SubquotientModule(m, pieces, module)


def kernel(f: ModuleMorphism) -> tuple[Representation, ModuleMorphism]:
    """ker f with its inclusion into the source."""
    sq = subquotient(f.source, [left_kernel_basis(g) for g in f.maps])
    inclusion = ModuleMorphism(sq.module, f.source, tuple(p.representatives for p in sq.pieces))
    return sq.module, inclusion


def image_rows(f: ModuleMorphism) -> list[Matrix]:
    return [row_space_basis(g) if g.rows else Matrix.zeros(0, g.cols, g.field) for g in f.maps]


def cokernel(f: ModuleMorphism) -> tuple[Representation, ModuleMorphism]:
    """coker f with the quotient map from the target."""
    t = f.target
    full = [Matrix.identity(d, t.field) for d in t.dims]
    sq = subquotient(t, full, image_rows(f))
    projection = ModuleMorphism(t, sq.module, tuple(p.coordinates(Matrix.identity(d, t.field)) for p, d in zip(sq.pieces, t.dims)))
    return sq.module, projection


def dual_module(m: Representation) -> Representation:
    """M* = Hom_k(M, k) over A^op: same dimensions, transposed actions on reversed arrows."""
    return Representation(opposite_algebra(m.algebra), m.dims, tuple(x.T for x in m.actions))


def dual_morphism(f: ModuleMorphism, source: Representation, target: Representation) -> ModuleMorphism:
    """f*: target(f)* → source(f)*; pass the dual modules built by dual_module."""
    return ModuleMorphism(source, target, tuple(g.T for g in f.maps))


def dual_endomorphism(phi: ModuleMorphism, dual: Optional[Representation] = None) -> ModuleMorphism:
    dual = dual_module(phi.source) if dual is None else dual
    return ModuleMorphism(dual, dual, tuple(g.T for g in phi.maps))


def hom_basis(m: Representation, n: Representation) -> list[ModuleMorphism]:
    """Basis of Hom_A(M, N): the kernel of the intertwining system X_α f_j = f_i Y_α.

    Unknowns are the vertex blocks f_i flattened row-major; with that
    flattening vec(P·X·Q) = (P ⊗ Qᵀ)·vec(X).
    """
    if m.algebra != n.algebra:
        raise AlgebraMismatchError("Hom between modules over different algebras")
    fld = m.field
    sizes = [m.dims[i] * n.dims[i] for i in range(m.n)]
    offsets = [sum(sizes[:i]) for i in range(m.n)]
    unknowns = sum(sizes)
    blocks = []
    for k, arrow in enumerate(m.algebra.quiver.arrows):
        i, j = arrow.source, arrow.target
        rows = m.dims[i] * n.dims[j]
        if rows == 0:
            continue
        eq = Matrix.zeros(rows, unknowns, fld).to_array()
        left = m.actions[k].kron(Matrix.identity(n.dims[j], fld))
        right = Matrix.identity(m.dims[i], fld).kron(n.actions[k].T)
        eq[:, offsets[j] : offsets[j] + sizes[j]] += left.to_array()
        eq[:, offsets[i] : offsets[i] + sizes[i]] -= right.to_array()
        blocks.append(Matrix(eq, fld))
    if not blocks:
        system = Matrix.zeros(0, unknowns, fld)
    else:
        system = blocks[0].vstack(*blocks[1:])
    solutions = kernel_basis(system) if unknowns else Matrix.zeros(0, 0, fld)
    out = []
    for s in range(solutions.cols):
        maps = []
        for i in range(m.n):
            flat = [solutions[offsets[i] + r, s] for r in range(sizes[i])]
            block = [flat[r * n.dims[i] : (r + 1) * n.dims[i]] for r in range(m.dims[i])]
            maps.append(Matrix.from_rows(block, fld, cols=n.dims[i]) if block else Matrix.zeros(0, n.dims[i], fld))
        out.append(ModuleMorphism(m, n, tuple(maps)))
    logger.debug(f"dim Hom = {len(out)} for modules of dims {m.dims} and {n.dims}")
    return out
