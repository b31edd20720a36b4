"""Hom and tensor over the algebra, and the Ext, Tor and Hochschild oracles.

Hom_A(⊕ e_{i_k}A, N) is identified with ⊕ N e_{i_k} (a map is the tuple of
generator images) and (⊕ e_{i_k}A) ⊗_A N with ⊕ e_{i_k} N, so every functor
value below is a finite complex of coordinate spaces.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Optional

from src.algebra.algebra import Algebra
from src.algebra.constructions import opposite_algebra
from src.complexes.complex import BoundedComplex, ChainMap, chain_endomorphism, concentrated
from src.core.errors import AlgebraMismatchError
from src.core.logging import logger
from src.homology.linear import BlockBuilder, LinearComplex
from src.homology.resolution import (
    ProjectiveComplex,
    Resolution,
    lift_module_map,
    minimal_projective_resolution,
    resolution_of_regular_bimodule,
)
from src.linalg.elimination import rank
from src.linalg.matrix import Matrix
from src.linalg.subspace import Subquotient
from src.modules.bimodule import BimoduleHandle, regular_bimodule
from src.modules.projective import GeneratorMap, ProjectiveSum
from src.modules.representation import ModuleMorphism, Representation


@dataclass(frozen=True)
class DerivedTraceData:
    """Per-degree dimensions and, when endomorphisms were given, traces."""

    dims: dict[int, int]
    traces: Optional[dict[int, object]] = None

    @property
    def euler_dim(self) -> int:
        return sum(d if k % 2 == 0 else -d for k, d in self.dims.items())

    @property
    def euler_trace(self):
        if self.traces is None:
            return None
        total = 0
        for k, t in self.traces.items():
            total = total + t if k % 2 == 0 else total - t
        return total

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)


class HomSpace:
    """Hom_A(P, N) ≅ ⊕_k N e_{i_k} for a projective sum P."""

    def __init__(self, p: ProjectiveSum, n: Representation):
        if p.algebra != n.algebra:
            raise AlgebraMismatchError("Hom between modules over different algebras")
        self.p, self.n = p, n
        self.sizes = [n.dims[i] for i in p.tops]
        self.dim = sum(self.sizes)

    def element(self, f: ModuleMorphism) -> Matrix:
        """Coordinates of f: P → N (the generator images, concatenated)."""
        rows = [self.p.generator(k) @ f.maps[i] for k, i in enumerate(self.p.tops)]
        if not rows:
            return Matrix.zeros(1, 0, self.n.field)
        return rows[0].hstack(*rows[1:])

    def morphism(self, coords: Matrix) -> ModuleMorphism:
        images, start = [], 0
        for size in self.sizes:
            images.append(coords[0:1, start : start + size])
            start += size
        return self.p.map_to(self.n, images).morphism

    def _composed_blocks(self, f: GeneratorMap, out: BlockBuilder, right: Optional[ModuleMorphism]) -> None:
        """Blocks (k, g) of f ↦ (right ∘ (·) ∘ f): Σ_b c_{k,b}(f g)·act(b)·right_{i_g}."""
        for g, i in enumerate(f.source.tops):
            for (k, b), c in f.coefficients(g).items():
                block = self.n.basis_action(b).scale(c)
                if right is not None:
                    block = block @ right.maps[i]
                out.add(k, g, block)

    def pullback(self, f: GeneratorMap, other: "HomSpace") -> Matrix:
        """x ↦ x∘f from Hom(P, N) to Hom(Q, N) for f: Q → P."""
        out = BlockBuilder(self.sizes, other.sizes, self.n.field)
        self._composed_blocks(f, out, None)
        return out.build()

    def postcompose(self, d: ModuleMorphism, other: "HomSpace") -> Matrix:
        """x ↦ d∘x from Hom(P, N) to Hom(P, N')."""
        out = BlockBuilder(self.sizes, other.sizes, self.n.field)
        for k, i in enumerate(self.p.tops):
            out.add(k, k, d.maps[i])
        return out.build()

    def endomorphism(self, lift: Optional[GeneratorMap], psi: Optional[ModuleMorphism]) -> Matrix:
        """x ↦ ψ∘x∘φ̃ (an absent map is the identity)."""
        if lift is None:
            out = BlockBuilder(self.sizes, self.sizes, self.n.field)
            for k, i in enumerate(self.p.tops):
                out.add(k, k, psi.maps[i] if psi is not None else Matrix.identity(self.n.dims[i], self.n.field))
            return out.build()
        out = BlockBuilder(self.sizes, self.sizes, self.n.field)
        self._composed_blocks(lift, out, psi)
        return out.build()


def hom_over_algebra(p: ProjectiveSum, n: Representation) -> HomSpace:
    return HomSpace(p, n)


class TensorSpace:
    """P ⊗_A N ≅ ⊕_k e_{i_k} N for a projective sum P and a left module N."""

    def __init__(self, p: ProjectiveSum, n_left: Representation):
        if n_left.algebra != opposite_algebra(p.algebra):
            raise AlgebraMismatchError("tensor needs a right A-module and a left A-module")
        self.p, self.n = p, n_left
        self.sizes = [n_left.dims[i] for i in p.tops]
        self.dim = sum(self.sizes)

    def left_action(self, b: int) -> Matrix:
        """y ↦ b·y from e_{end(b)} N to e_{start(b)} N."""
        return self.n.path_action(self.p.algebra.basis[b].reversed())

    def _blocks(self, f: GeneratorMap, out: BlockBuilder, first: Optional[ModuleMorphism]) -> None:
        for g, i in enumerate(f.source.tops):
            for (k, b), c in f.coefficients(g).items():
                block = self.left_action(b).scale(c)
                if first is not None:
                    block = first.maps[i] @ block
                out.add(g, k, block)

    def pushforward(self, f: GeneratorMap, other: "TensorSpace") -> Matrix:
        """g ⊗ y ↦ f(g) ⊗ y from P ⊗ N to Q ⊗ N for f: P → Q."""
        out = BlockBuilder(self.sizes, other.sizes, self.n.field)
        self._blocks(f, out, None)
        return out.build()

    def apply(self, d: ModuleMorphism, other: "TensorSpace") -> Matrix:
        """1 ⊗ d from P ⊗ N to P ⊗ N'."""
        out = BlockBuilder(self.sizes, other.sizes, self.n.field)
        for k, i in enumerate(self.p.tops):
            out.add(k, k, d.maps[i])
        return out.build()

    def endomorphism(self, lift: Optional[GeneratorMap], psi: Optional[ModuleMorphism]) -> Matrix:
        """φ̃ ⊗ ψ (an absent map is the identity)."""
        out = BlockBuilder(self.sizes, self.sizes, self.n.field)
        if lift is None:
            for k, i in enumerate(self.p.tops):
                out.add(k, k, psi.maps[i] if psi is not None else Matrix.identity(self.n.dims[i], self.n.field))
            return out.build()
        self._blocks(lift, out, psi)
        return out.build()


@dataclass(frozen=True, eq=False)
class TensorProduct:
    """M ⊗_A N as the quotient of ⊕_i Me_i ⊗ e_iN by the balancing relations."""

    right: Representation
    left: Representation

    @cached_property
    def _offsets(self) -> list[int]:
        sizes = [self.right.dims[i] * self.left.dims[i] for i in range(self.right.n)]
        return [sum(sizes[:i]) for i in range(len(sizes) + 1)]

    @cached_property
    def balancing(self) -> Matrix:
        """Rows m·α ⊗ y − m ⊗ α·y for every arrow α and basis vectors m, y."""
        m, y, fld = self.right, self.left, self.right.field
        total = self._offsets[-1]
        rows = []
        for k, arrow in enumerate(m.algebra.quiver.arrows):
            i, j = arrow.source, arrow.target
            x, z = m.actions[k], y.actions[k]
            for r in range(m.dims[i]):
                for s in range(y.dims[j]):
                    row = Matrix.zeros(1, total, fld).to_array()
                    unit_s = Matrix.unit_row(y.dims[j], s, fld)
                    unit_r = Matrix.unit_row(m.dims[i], r, fld)
                    moved_right = x.row(r).kron(unit_s)
                    moved_left = unit_r.kron(z.row(s))
                    if moved_right.cols:
                        row[0, self._offsets[j] : self._offsets[j + 1]] += moved_right.to_array()[0]
                    if moved_left.cols:
                        row[0, self._offsets[i] : self._offsets[i + 1]] -= moved_left.to_array()[0]
                    rows.append(Matrix(row, fld))
        if not rows:
            return Matrix.zeros(0, total, fld)
        return rows[0].vstack(*rows[1:])

    @property
    def dim(self) -> int:
        return self._offsets[-1] - rank(self.balancing)

    def induced(self, phi: ModuleMorphism, psi: ModuleMorphism) -> Matrix:
        """Matrix of φ ⊗ ψ on the quotient."""
        fld = self.right.field
        blocks = [phi.maps[i].kron(psi.maps[i]) for i in range(self.right.n)]
        whole = blocks[0].block_diag(*blocks[1:])
        sq = Subquotient(Matrix.identity(self._offsets[-1], fld), self.balancing)
        return sq.induced(whole)


def tensor_over_algebra(x: Representation, y: Representation) -> TensorProduct:
    """M ⊗_A N for a right module M and a left module N (a representation of A^op)."""
    if y.algebra != opposite_algebra(x.algebra):
        raise AlgebraMismatchError("tensor needs a right A-module and a left A-module")
    return TensorProduct(x, y)


def hom_total_complex(
    proj: ProjectiveComplex,
    target: BoundedComplex,
    lift: Optional[dict[int, GeneratorMap]] = None,
    psi: Optional[ChainMap] = None,
) -> LinearComplex:
    """Hom^n = ⊕_p Hom(P^p, N^{p+n}) with D(f) = d_N f − (−1)^n f δ_P."""
    a = target.algebra
    fld = a.field
    degrees = range(target.lo - proj.hi, target.hi - proj.lo + 1)
    parts = {n: [p for p in sorted(proj.terms) if target.lo <= p + n <= target.hi] for n in degrees}
    spaces = {(p, p + n): HomSpace(proj.terms[p], target.component(p + n)) for n in degrees for p in parts[n]}
    dims = {n: sum(spaces[(p, p + n)].dim for p in parts[n]) for n in degrees}
    differentials, endos = {}, {}
    for n in degrees:
        src = [spaces[(p, p + n)] for p in parts[n]]
        nxt = parts.get(n + 1, [])
        tgt_index = {p: k for k, p in enumerate(nxt)}
        out = BlockBuilder([s.dim for s in src], [spaces[(p, p + n + 1)].dim for p in nxt], fld)
        sign = fld.coerce(-1 if n % 2 == 0 else 1)
        for k, p in enumerate(parts[n]):
            q = p + n
            space = spaces[(p, q)]
            if p in tgt_index:
                out.add(k, tgt_index[p], space.postcompose(target.differential(q), spaces[(p, q + 1)]))
            if p - 1 in tgt_index and p - 1 in proj.deltas:
                pulled = space.pullback(proj.deltas[p - 1], spaces[(p - 1, q)])
                out.add(k, tgt_index[p - 1], pulled.scale(sign))
        differentials[n] = out.build()
        if lift is not None or psi is not None:
            e = BlockBuilder([s.dim for s in src], [s.dim for s in src], fld)
            for k, p in enumerate(parts[n]):
                e.add(k, k, spaces[(p, p + n)].endomorphism(
                    lift.get(p) if lift is not None else None,
                    psi.at(p + n) if psi is not None else None,
                ))
            endos[n] = e.build()
    return LinearComplex(fld, dims, differentials, endos if endos else None)


def tensor_total_complex(
    proj: ProjectiveComplex,
    left: BoundedComplex,
    lift: Optional[dict[int, GeneratorMap]] = None,
    psi: Optional[ChainMap] = None,
) -> LinearComplex:
    """T^n = ⊕_{p+q=n} P^p ⊗ N^q with D = δ ⊗ 1 + (−1)^p 1 ⊗ d_N."""
    fld = left.algebra.field
    degrees = range(proj.lo + left.lo, proj.hi + left.hi + 1)
    parts = {n: [p for p in sorted(proj.terms) if left.lo <= n - p <= left.hi] for n in degrees}
    spaces = {(p, n - p): TensorSpace(proj.terms[p], left.component(n - p)) for n in degrees for p in parts[n]}
    dims = {n: sum(spaces[(p, n - p)].dim for p in parts[n]) for n in degrees}
    differentials, endos = {}, {}
    for n in degrees:
        src = [spaces[(p, n - p)] for p in parts[n]]
        nxt = parts.get(n + 1, [])
        tgt_index = {p: k for k, p in enumerate(nxt)}
        out = BlockBuilder([s.dim for s in src], [spaces[(p, n + 1 - p)].dim for p in nxt], fld)
        for k, p in enumerate(parts[n]):
            q = n - p
            space = spaces[(p, q)]
            if p + 1 in tgt_index and p in proj.deltas:
                out.add(k, tgt_index[p + 1], space.pushforward(proj.deltas[p], spaces[(p + 1, q)]))
            if p in tgt_index:
                sign = fld.coerce(-1 if p % 2 else 1)
                out.add(k, tgt_index[p], space.apply(left.differential(q), spaces[(p, q + 1)]).scale(sign))
        differentials[n] = out.build()
        if lift is not None or psi is not None:
            e = BlockBuilder([s.dim for s in src], [s.dim for s in src], fld)
            for k, p in enumerate(parts[n]):
                e.add(k, k, spaces[(p, n - p)].endomorphism(
                    lift.get(p) if lift is not None else None,
                    psi.at(n - p) if psi is not None else None,
                ))
            endos[n] = e.build()
    return LinearComplex(fld, dims, differentials, endos if endos else None)


def _lift_dict(res: Resolution, phi: Optional[ModuleMorphism], lifts=None) -> Optional[dict[int, GeneratorMap]]:
    if lifts is None:
        if phi is None:
            return None
        lifts = lift_module_map(phi, res, res)
    return {-l: f for l, f in enumerate(lifts)}


def ext_from_resolution(
    res: Resolution,
    n: Representation,
    phi: Optional[ModuleMorphism] = None,
    psi: Optional[ModuleMorphism] = None,
    lifts: Optional[list[GeneratorMap]] = None,
) -> DerivedTraceData:
    target = concentrated(n)
    psi_chain = chain_endomorphism(target, [psi]) if psi is not None else None
    lin = hom_total_complex(res.as_complex(), target, _lift_dict(res, phi, lifts), psi_chain)
    dims = lin.cohomology_dims()
    traces = lin.cohomology_traces()
    return DerivedTraceData({l: d for l, d in dims.items() if l >= 0}, traces)


def tor_from_resolution(
    res: Resolution,
    n_left: Representation,
    phi: Optional[ModuleMorphism] = None,
    psi: Optional[ModuleMorphism] = None,
    lifts: Optional[list[GeneratorMap]] = None,
) -> DerivedTraceData:
    left = concentrated(n_left)
    psi_chain = chain_endomorphism(left, [psi]) if psi is not None else None
    lin = tensor_total_complex(res.as_complex(), left, _lift_dict(res, phi, lifts), psi_chain)
    dims = {-n: d for n, d in lin.cohomology_dims().items()}
    traces = lin.cohomology_traces()
    return DerivedTraceData(dims, None if traces is None else {-n: t for n, t in traces.items()})


def ext_data(
    m: Representation,
    n: Representation,
    phi: Optional[ModuleMorphism] = None,
    psi: Optional[ModuleMorphism] = None,
    cap: Optional[int] = None,
) -> DerivedTraceData:
    """dim Ext^l_A(M, N) and the traces of Ext^l(φ, ψ): f ↦ ψ∘f∘φ̃."""
    if m.algebra != n.algebra:
        raise AlgebraMismatchError("Ext between modules over different algebras")
    res = minimal_projective_resolution(m, cap)
    return ext_from_resolution(res, n, phi, psi)


def tor_data(
    m: Representation,
    n_left: Representation,
    phi: Optional[ModuleMorphism] = None,
    psi: Optional[ModuleMorphism] = None,
    cap: Optional[int] = None,
) -> DerivedTraceData:
    """dim Tor_l^A(M, N) and the traces of Tor_l(φ, ψ)."""
    if n_left.algebra != opposite_algebra(m.algebra):
        raise AlgebraMismatchError("Tor needs a right A-module and a left A-module")
    res = minimal_projective_resolution(m, cap)
    return tor_from_resolution(res, n_left, phi, psi)


def hochschild_data(
    a: Algebra,
    m: BimoduleHandle,
    phi: Optional[ModuleMorphism] = None,
    variant: Literal["cohomology", "homology"] = "cohomology",
    cap: Optional[int] = None,
) -> DerivedTraceData:
    """HH^•(A, M) = Ext_{A^e}(A, M) or HH_•(A, M) = Tor^{A^e}(A, M)."""
    if m.left != a or m.right != a:
        raise AlgebraMismatchError("Hochschild coefficients must be an A-A-bimodule")
    res = resolution_of_regular_bimodule(a, cap)
    logger.debug(f"Hochschild {variant}: A^e resolution of length {res.length}")
    if variant == "cohomology":
        return ext_from_resolution(res, m.module, None, phi)
    form = m.left_module_form()
    psi = m.left_endomorphism(phi, form) if phi is not None else None
    return tor_from_resolution(res, form, None, psi)


__all__ = [
    "DerivedTraceData",
    "HomSpace",
    "TensorProduct",
    "TensorSpace",
    "ext_data",
    "hochschild_data",
    "hom_over_algebra",
    "tensor_over_algebra",
    "tor_data",
    "regular_bimodule",
]
