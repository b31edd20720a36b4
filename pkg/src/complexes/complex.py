"""Bounded cochain complexes of representations and their chain maps.

Components are indexed cohomologically: a complex holds M^lo, …, M^hi and
differentials d^l: M^l → M^{l+1} for lo ≤ l < hi. Chain-indexed data is
converted with M^l = M_{-l} before it reaches this module.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from src.algebra.algebra import Algebra
from src.core.errors import AlgebraMismatchError, DimensionMismatchError, InvariantViolation, ValidationError
from src.linalg.elimination import kernel_basis, left_kernel_basis
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import BimoduleHandle, dim_matrix, left_slice, right_slice, trace_matrix
from src.modules.operations import SubquotientModule, image_rows, subquotient
from src.modules.representation import (
    ModuleMorphism,
    Representation,
    dim_vector,
    direct_sum,
    identity_morphism,
    trace_vector,
    zero_module,
    zero_morphism,
)


@dataclass(frozen=True, eq=False)
class BoundedComplex:
    lo: int
    components: tuple[Representation, ...]
    differentials: tuple[ModuleMorphism, ...] = ()

    def __post_init__(self):
        if not self.components:
            raise ValidationError("complex", "a complex needs at least one component")
        if len(self.differentials) != len(self.components) - 1:
            raise ValidationError(
                "complex", f"{len(self.differentials)} differentials for {len(self.components)} components"
            )
        a = self.components[0].algebra
        for m in self.components:
            if m.algebra != a:
                raise AlgebraMismatchError("complex components over different algebras")
        for k, d in enumerate(self.differentials):
            if d.source.dims != self.components[k].dims or d.target.dims != self.components[k + 1].dims:
                raise DimensionMismatchError(f"differential d^{self.lo + k} does not match its components")
            bad = d.intertwining_defect()
            if bad:
                raise ValidationError(f"differentials[{self.lo + k}]", f"not a module map at arrow {bad[0]!r}")
        for k in range(len(self.differentials) - 1):
            if not self.differentials[k].then(self.differentials[k + 1]).is_zero():
                raise ValidationError(f"differentials[{self.lo + k}]", "d∘d is not zero")

    @property
    def hi(self) -> int:
        return self.lo + len(self.components) - 1

    @property
    def algebra(self) -> Algebra:
        return self.components[0].algebra

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def component(self, l: int) -> Representation:
        if self.lo <= l <= self.hi:
            return self.components[l - self.lo]
        return zero_module(self.algebra)

    def differential(self, l: int) -> ModuleMorphism:
        """d^l: M^l → M^{l+1}, zero outside the stored range."""
        if self.lo <= l < self.hi:
            return self.differentials[l - self.lo]
        return zero_morphism(self.component(l), self.component(l + 1))

    def is_projective_in_each_degree(self) -> bool:
        from src.modules.projective import ProjectiveSum

        return all(isinstance(m, ProjectiveSum) for m in self.components)


def concentrated(m: Representation, degree: int = 0) -> BoundedComplex:
    return BoundedComplex(degree, (m,), ())


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: BoundedComplex
    target: BoundedComplex
    maps: dict[int, ModuleMorphism]

    def __post_init__(self):
        for l in self.degrees():
            f, g = self.at(l), self.at(l + 1)
            lhs = self.source.differential(l).then(g)
            rhs = f.then(self.target.differential(l))
            if not (lhs - rhs).is_zero():
                raise ValidationError(f"chain map degree {l}", "does not commute with the differentials")

    def degrees(self) -> range:
        return range(min(self.source.lo, self.target.lo) - 1, max(self.source.hi, self.target.hi) + 1)

    def at(self, l: int) -> ModuleMorphism:
        f = self.maps.get(l)
        if f is None:
            return zero_morphism(self.source.component(l), self.target.component(l))
        return f


class ChainEndomorphism(ChainMap):
    """φ^l: M^l → M^l commuting with d."""

    @property
    def complex(self) -> BoundedComplex:
        return self.source


def chain_endomorphism(c: BoundedComplex, maps: Sequence[ModuleMorphism]) -> ChainEndomorphism:
    """Chain endomorphism from maps listed for degrees lo..hi."""
    return ChainEndomorphism(c, c, {c.lo + k: f for k, f in enumerate(maps)})


def identity_chain_map(c: BoundedComplex) -> ChainEndomorphism:
    return chain_endomorphism(c, [identity_morphism(m) for m in c.components])


def zero_chain_map(c: BoundedComplex) -> ChainEndomorphism:
    return chain_endomorphism(c, [zero_morphism(m, m) for m in c.components])


def shift(c: BoundedComplex, k: int = 1) -> BoundedComplex:
    """M[k]: (M[k])^l = M^{l+k}, differential (-1)^k d."""
    sign = c.algebra.field.coerce(-1 if k % 2 else 1)
    return BoundedComplex(c.lo - k, c.components, tuple(d.scale(sign) for d in c.differentials))


def shift_endomorphism(phi: ChainEndomorphism, shifted: BoundedComplex, k: int = 1) -> ChainEndomorphism:
    return ChainEndomorphism(shifted, shifted, {l - k: phi.at(l) for l in phi.complex.degrees()})


def cone(f: ChainMap) -> BoundedComplex:
    """cone(f)^l = M^{l+1} ⊕ N^l with d(m, n) = (-d m, f m + d n)."""
    m, n = f.source, f.target
    lo, hi = min(m.lo - 1, n.lo), max(m.hi - 1, n.hi)
    fld = m.algebra.field
    comps = [direct_sum(m.component(l + 1), n.component(l)) for l in range(lo, hi + 1)]
    diffs = []
    for l in range(lo, hi):
        src, tgt = comps[l - lo], comps[l + 1 - lo]
        dm, fm, dn = m.differential(l + 1), f.at(l + 1), n.differential(l)
        maps = []
        for i in range(m.algebra.n):
            top = (-dm.maps[i]).hstack(fm.maps[i])
            bottom = Matrix.zeros(dn.maps[i].rows, dm.maps[i].cols, fld).hstack(dn.maps[i])
            maps.append(top.vstack(bottom))
        diffs.append(ModuleMorphism(src, tgt, tuple(maps)))
    return BoundedComplex(lo, tuple(comps), tuple(diffs))


def cohomology_subquotient(c: BoundedComplex, l: int) -> SubquotientModule:
    m = c.component(l)
    z = [left_kernel_basis(g) for g in c.differential(l).maps]
    b = image_rows(c.differential(l - 1))
    return subquotient(m, z, b)


def cohomology(c: BoundedComplex, l: int) -> Representation:
    """H^l = ker d^l / im d^{l-1} with the induced arrow actions."""
    return cohomology_subquotient(c, l).module


def induced_cohomology_endo(phi: ChainMap, l: int) -> ModuleMorphism:
    """H^l(φ) on H^l of the source complex (φ an endomorphism)."""
    return cohomology_subquotient(phi.source, l).induced_endomorphism(phi.at(l))


def induced_cohomology_map(f: ChainMap, l: int) -> ModuleMorphism:
    """H^l(f): H^l(M) → H^l(N)."""
    return cohomology_subquotient(f.source, l).induced_map(cohomology_subquotient(f.target, l), f.at(l))


def _signed_sum(terms, zero):
    total = zero
    for l, x in terms:
        total = total + x if l % 2 == 0 else total - x
    return total


def complex_dim_vector(c: BoundedComplex) -> IntMatrix:
    """Σ(-1)^l dv M^l, checked against Σ(-1)^l dv H^l."""
    zero = IntMatrix.zeros(c.algebra.n, 1)
    by_components = _signed_sum(((l, dim_vector(c.component(l))) for l in c.degrees()), zero)
    by_cohomology = _signed_sum(((l, dim_vector(cohomology(c, l))) for l in c.degrees()), zero)
    if by_components != by_cohomology:
        raise InvariantViolation("super dimension vector differs from its cohomology version")
    return by_components


def complex_trace_vector(phi: ChainEndomorphism) -> Matrix:
    c = phi.complex
    zero = Matrix.zeros(c.algebra.n, 1, c.algebra.field)
    by_components = _signed_sum(((l, trace_vector(phi.at(l))) for l in c.degrees()), zero)
    by_cohomology = _signed_sum(((l, trace_vector(induced_cohomology_endo(phi, l))) for l in c.degrees()), zero)
    if by_components != by_cohomology:
        raise InvariantViolation("super trace vector differs from its cohomology version")
    return by_components


@dataclass(frozen=True, eq=False)
class BimoduleComplex:
    """Complex of B-A-bimodules, stored over B^op ⊗ A."""

    left: Algebra
    right: Algebra
    complex: BoundedComplex

    def handle(self, m: Representation) -> BimoduleHandle:
        return BimoduleHandle(self.left, self.right, m)


def complex_dim_matrix(c: BimoduleComplex) -> IntMatrix:
    """Σ(-1)^l dm M^l, checked against Σ(-1)^l dm H^l."""
    zero = IntMatrix.zeros(c.right.n, c.left.n)
    cx = c.complex
    by_components = _signed_sum(((l, dim_matrix(c.handle(cx.component(l)))) for l in cx.degrees()), zero)
    by_cohomology = _signed_sum(((l, dim_matrix(c.handle(cohomology(cx, l)))) for l in cx.degrees()), zero)
    if by_components != by_cohomology:
        raise InvariantViolation("super dimension matrix differs from its cohomology version")
    return by_components


def complex_trace_matrix(c: BimoduleComplex, phi: ChainEndomorphism) -> Matrix:
    """Σ(-1)^l tm φ^l, checked against Σ(-1)^l tm H^l(φ)."""
    cx = c.complex
    zero = Matrix.zeros(c.right.n, c.left.n, cx.algebra.field)
    by_components = _signed_sum(
        ((l, trace_matrix(c.handle(cx.component(l)), phi.at(l))) for l in cx.degrees()), zero
    )
    terms = []
    for l in cx.degrees():
        h = induced_cohomology_endo(phi, l)
        terms.append((l, trace_matrix(c.handle(h.source), h)))
    by_cohomology = _signed_sum(terms, zero)
    if by_components != by_cohomology:
        raise InvariantViolation("super trace matrix differs from its cohomology version")
    return by_components


def bimodule_concentrated(m: BimoduleHandle, degree: int = 0) -> BimoduleComplex:
    return BimoduleComplex(m.left, m.right, concentrated(m.module, degree))


def slice_complex(
    c: BimoduleComplex, index: int, side: str, phi: Optional[ChainEndomorphism] = None
) -> tuple[BoundedComplex, Optional[ChainEndomorphism]]:
    """f_jM (side "right") or M e_i (side "left") taken degreewise."""
    cx = c.complex
    handles = [c.handle(m) for m in cx.components]
    if side == "right":
        comps = tuple(right_slice(h, index) for h in handles)
        vertices = [handles[0].vertex(index, i) for i in range(c.right.n)]
    else:
        comps = tuple(left_slice(h, index) for h in handles)
        vertices = [handles[0].vertex(j, index) for j in range(c.left.n)]

    def restrict(f: ModuleMorphism, source: Representation, target: Representation) -> ModuleMorphism:
        return ModuleMorphism(source, target, tuple(f.maps[v] for v in vertices))

    diffs = tuple(restrict(d, comps[k], comps[k + 1]) for k, d in enumerate(cx.differentials))
    sliced = BoundedComplex(cx.lo, comps, diffs)
    if phi is None:
        return sliced, None
    maps = [restrict(phi.at(l), comps[l - cx.lo], comps[l - cx.lo]) for l in cx.degrees()]
    return sliced, chain_endomorphism(sliced, maps)


def left_module_complex(
    c: BimoduleComplex, phi: Optional[ChainEndomorphism] = None
) -> tuple[BoundedComplex, Optional[ChainEndomorphism]]:
    """An A-A-bimodule complex as a complex of left A^e-modules."""
    cx = c.complex
    handles = [c.handle(m) for m in cx.components]
    forms = tuple(h.left_module_form() for h in handles)
    n = c.right.n
    order = [i * n + j for j in range(n) for i in range(n)]

    def carry(f: ModuleMorphism, source: Representation, target: Representation) -> ModuleMorphism:
        return ModuleMorphism(source, target, tuple(f.maps[v] for v in order))

    diffs = tuple(carry(d, forms[k], forms[k + 1]) for k, d in enumerate(cx.differentials))
    out = BoundedComplex(cx.lo, forms, diffs)
    if phi is None:
        return out, None
    return out, chain_endomorphism(out, [carry(phi.at(l), forms[l - cx.lo], forms[l - cx.lo]) for l in cx.degrees()])


def chain_map_basis(source: BoundedComplex, target: BoundedComplex) -> list[ChainMap]:
    """Basis of the chain maps source → target, as the kernel of one linear system.

    Unknowns are the blocks f^l_i flattened row-major, so that
    vec(P·X·Q) = (P ⊗ Qᵀ)·vec(X).
    """
    a = source.algebra
    if target.algebra != a:
        raise AlgebraMismatchError("chain maps between complexes over different algebras")
    fld = a.field
    degrees = [l for l in source.degrees() if target.lo <= l <= target.hi]
    blocks = {}
    offset = 0
    for l in degrees:
        for i in range(a.n):
            size = source.component(l).dims[i] * target.component(l).dims[i]
            blocks[(l, i)] = (offset, size)
            offset += size
    unknowns = offset
    equations = []

    def equation(rows: int, parts: list[tuple[tuple[int, int], Matrix]]) -> None:
        if rows == 0:
            return
        eq = Matrix.zeros(rows, unknowns, fld).to_array()
        for key, coeff in parts:
            if key not in blocks or coeff.cols == 0:
                continue
            start, size = blocks[key]
            eq[:, start : start + size] += coeff.to_array()
        equations.append(Matrix(eq, fld))

    for l in degrees:
        m, n = source.component(l), target.component(l)
        for k, arrow in enumerate(a.quiver.arrows):
            i, j = arrow.source, arrow.target
            left = m.actions[k].kron(Matrix.identity(n.dims[j], fld))
            right = Matrix.identity(m.dims[i], fld).kron(n.actions[k].T)
            equation(m.dims[i] * n.dims[j], [((l, j), left), ((l, i), -right)])
    # d_M f^{l+1} = f^l d_N
    for l in range(min(source.lo, target.lo) - 1, max(source.hi, target.hi) + 1):
        m, n_next = source.component(l), target.component(l + 1)
        d_m, d_n = source.differential(l), target.differential(l)
        for i in range(a.n):
            left = d_m.maps[i].kron(Matrix.identity(n_next.dims[i], fld))
            right = Matrix.identity(m.dims[i], fld).kron(d_n.maps[i].T)
            equation(m.dims[i] * n_next.dims[i], [((l + 1, i), left), ((l, i), -right)])
    if equations:
        system = equations[0].vstack(*equations[1:])
    else:
        system = Matrix.zeros(0, unknowns, fld)
    solutions = kernel_basis(system) if unknowns else Matrix.zeros(0, 0, fld)
    out = []
    for s in range(solutions.cols):
        maps = {}
        for l in degrees:
            m, n = source.component(l), target.component(l)
            vertex_maps = []
            for i in range(a.n):
                start, size = blocks[(l, i)]
                flat = [solutions[start + r, s] for r in range(size)]
                rows = [flat[r * n.dims[i] : (r + 1) * n.dims[i]] for r in range(m.dims[i])]
                vertex_maps.append(
                    Matrix.from_rows(rows, fld, cols=n.dims[i]) if rows else Matrix.zeros(0, n.dims[i], fld)
                )
            maps[l] = ModuleMorphism(m, n, tuple(vertex_maps))
        out.append(ChainMap(source, target, maps))
    return out
