"""Projective replacements of bounded complexes and the derived functors built on them.

The replacement P → C is grown one degree at a time from the top. At degree p
the partial mapping cone P^{p+1} ⊕ C^p has a cohomology defect W/B; a
projective cover of that defect supplies P^p together with δ^p and ε^p.
Below the bottom of C the same step resolves the last syzygy, so the loop
stops once the defect vanishes.
"""
from dataclasses import dataclass
from typing import Literal, Optional

from src.algebra.algebra import Algebra
from src.algebra.constructions import opposite_algebra
from src.complexes.complex import BimoduleComplex, BoundedComplex, ChainEndomorphism, ChainMap, left_module_complex
from src.core.config import settings
from src.core.errors import AlgebraMismatchError, CapExceeded, InvariantViolation
from src.core.logging import logger
from src.homology.functors import DerivedTraceData, hom_total_complex, tensor_total_complex
from src.homology.resolution import ProjectiveComplex, projective_cover, resolution_of_regular_bimodule
from src.linalg.elimination import left_kernel_basis, solve_left
from src.linalg.matrix import Matrix
from src.modules.operations import image_rows, subquotient
from src.modules.projective import GeneratorMap, ProjectiveSum, projective_sum
from src.modules.representation import ModuleMorphism, Representation, direct_sum


@dataclass(frozen=True, eq=False)
class ProjectiveReplacement:
    original: BoundedComplex
    projective: ProjectiveComplex
    complex: BoundedComplex
    augmentation: ChainMap
    lift: Optional[dict[int, GeneratorMap]] = None
    lift_map: Optional[ChainEndomorphism] = None
    homotopy: Optional[dict[int, GeneratorMap]] = None


def _as_generator_map(p: ProjectiveSum, f: ModuleMorphism) -> GeneratorMap:
    return p.map_to(f.target, [p.generator(k) @ f.maps[i] for k, i in enumerate(p.tops)])


def _assemble(
    c: BoundedComplex,
    terms: dict[int, ProjectiveSum],
    deltas: dict[int, GeneratorMap],
    eps: dict[int, GeneratorMap],
    lift: Optional[dict[int, GeneratorMap]],
    homotopy: Optional[dict[int, GeneratorMap]],
) -> ProjectiveReplacement:
    lo, hi = min(terms), max(terms)
    comps = tuple(terms[p] for p in range(lo, hi + 1))
    diffs = tuple(deltas[p].morphism for p in range(lo, hi))
    px = BoundedComplex(lo, comps, diffs)
    augmentation = ChainMap(px, c, {p: eps[p].morphism for p in range(lo, hi + 1)})
    lift_map = None
    if lift is not None:
        lift_map = ChainEndomorphism(px, px, {p: lift[p].morphism for p in range(lo, hi + 1)})
    return ProjectiveReplacement(c, ProjectiveComplex(terms, deltas), px, augmentation, lift, lift_map, homotopy)


def _already_projective(c: BoundedComplex, phi: Optional[ChainEndomorphism]) -> ProjectiveReplacement:
    terms = {l: c.component(l) for l in c.degrees()}
    deltas = {l: _as_generator_map(terms[l], c.differential(l)) for l in range(c.lo, c.hi)}
    eps = {l: _as_generator_map(terms[l], ModuleMorphism(terms[l], terms[l], tuple(
        Matrix.identity(d, c.algebra.field) for d in terms[l].dims
    ))) for l in c.degrees()}
    lift = None
    if phi is not None:
        lift = {l: _as_generator_map(terms[l], phi.at(l)) for l in c.degrees()}
    return _assemble(c, terms, deltas, eps, lift, None)


def _cone_differential(
    cone_src: Representation,
    cone_tgt: Representation,
    delta: Optional[GeneratorMap],
    eps: Optional[GeneratorMap],
    d: ModuleMorphism,
    p_dims: tuple[int, ...],
    p_next_dims: tuple[int, ...],
) -> ModuleMorphism:
    """D(x, m) = (−δx, εx + dm) from P^{q} ⊕ C^{q−1} to P^{q+1} ⊕ C^q, per vertex."""
    fld = cone_src.field
    maps = []
    for i in range(cone_src.n):
        top_left = -delta.morphism.maps[i] if delta is not None else Matrix.zeros(p_dims[i], p_next_dims[i], fld)
        top_right = eps.morphism.maps[i] if eps is not None else Matrix.zeros(p_dims[i], d.target.dims[i], fld)
        bottom = Matrix.zeros(d.source.dims[i], p_next_dims[i], fld).hstack(d.maps[i])
        maps.append(top_left.hstack(top_right).vstack(bottom))
    return ModuleMorphism(cone_src, cone_tgt, tuple(maps))


def projective_replacement(
    c: BoundedComplex, phi: Optional[ChainEndomorphism] = None, cap: Optional[int] = None
) -> ProjectiveReplacement:
    """A bounded complex of projectives P with a quasi-isomorphism ε: P → C.

    With φ given, also φ̃ on P and a homotopy h with εφ̃ − φε = dh + hδ, so
    H^l(φ̃) matches H^l(φ) under H^l(ε).
    """
    if phi is not None and phi.source is not c:
        raise AlgebraMismatchError("the chain endomorphism must act on the complex being replaced")
    if c.is_projective_in_each_degree():
        return _already_projective(c, phi)
    cap = settings.max_resolution_length if cap is None else cap
    a = c.algebra
    fld = a.field
    empty = projective_sum(a, ())
    terms: dict[int, ProjectiveSum] = {}
    deltas: dict[int, GeneratorMap] = {}
    eps: dict[int, GeneratorMap] = {}
    lift: Optional[dict[int, GeneratorMap]] = {} if phi is not None else None
    homotopy: Optional[dict[int, GeneratorMap]] = {} if phi is not None else None

    p = c.hi
    while True:
        if p < c.lo - cap - 1:
            raise CapExceeded(cap, "projective replacement")
        upper = terms.get(p + 1, empty)
        m_p, m_below = c.component(p), c.component(p - 1)
        cone_p = direct_sum(upper, m_p)
        cone_next = direct_sum(terms.get(p + 2, empty), c.component(p + 1))
        d_out = _cone_differential(
            cone_p, cone_next, deltas.get(p + 1), eps.get(p + 1), c.differential(p),
            upper.dims, terms.get(p + 2, empty).dims,
        )
        z = [left_kernel_basis(g) for g in d_out.maps]
        incoming = ModuleMorphism(
            m_below,
            cone_p,
            tuple(Matrix.zeros(m_below.dims[i], upper.dims[i], fld).hstack(c.differential(p - 1).maps[i])
                  for i in range(a.n)),
        )
        defect = subquotient(cone_p, z, image_rows(incoming))
        if defect.module.is_zero() and p < c.lo:
            break
        top, cover = projective_cover(defect.module)
        delta_images, eps_images = [], []
        for g, i in enumerate(top.tops):
            w = cover.images[g] @ defect.pieces[i].representatives
            split = upper.dims[i]
            delta_images.append(-w[0:1, 0:split])
            eps_images.append(w[0:1, split : w.cols])
        terms[p] = top
        deltas[p] = top.map_to(upper, delta_images)
        eps[p] = top.map_to(m_p, eps_images)
        if phi is not None:
            _lift_degree(c, phi, p, terms, deltas, eps, lift, homotopy, upper)
        p -= 1

    logger.debug(f"projective replacement over degrees {min(terms)}..{c.hi}")
    return _assemble(c, terms, deltas, eps, lift, homotopy)


def _lift_degree(c, phi, p, terms, deltas, eps, lift, homotopy, upper) -> None:
    """φ̃^p and h^p for the generators of P^p, one solve per generator."""
    a = c.algebra
    fld = a.field
    top = terms[p]
    m_p, m_below = c.component(p), c.component(p - 1)
    # D^{p−1}: P^p ⊕ C^{p−1} → P^{p+1} ⊕ C^p
    d_in = _cone_differential(
        direct_sum(top, m_below), direct_sum(upper, m_p), deltas[p], eps[p], c.differential(p - 1),
        top.dims, upper.dims,
    )
    upper_lift = lift.get(p + 1)
    upper_h = homotopy.get(p + 1)
    images, h_images = [], []
    for g, i in enumerate(top.tops):
        x_g = -deltas[p].images[g]
        m_g = eps[p].images[g]
        moved = x_g @ upper_lift.morphism.maps[i] if upper_lift is not None else Matrix.zeros(1, 0, fld)
        corrected = m_g @ phi.at(p).maps[i]
        if upper_h is not None:
            corrected = corrected - x_g @ upper_h.morphism.maps[i]
        wanted = moved.hstack(corrected)
        sol = solve_left(d_in.maps[i], wanted)
        if sol is None:
            raise InvariantViolation(f"chain lift failed at degree {p}, generator {g}")
        images.append(sol[0:1, 0 : top.dims[i]])
        h_images.append(-sol[0:1, top.dims[i] : sol.cols])
    lift[p] = top.map_to(top, images)
    homotopy[p] = top.map_to(m_below, h_images)


def derived_data_complex(
    m_c: BoundedComplex,
    n_c: BoundedComplex,
    phi: Optional[ChainEndomorphism] = None,
    psi: Optional[ChainEndomorphism] = None,
    functor: Literal["ext", "tor"] = "ext",
    cap: Optional[int] = None,
) -> DerivedTraceData:
    """Hyper-Ext or hyper-Tor of bounded complexes, indexed by cohomological degree.

    For "tor", `n_c` is a complex of left modules (representations of A^op).
    """
    if functor == "ext" and m_c.algebra != n_c.algebra:
        raise AlgebraMismatchError("Ext between complexes over different algebras")
    if functor == "tor" and n_c.algebra != opposite_algebra(m_c.algebra):
        raise AlgebraMismatchError("Tor needs a right complex and a left complex")
    rep = projective_replacement(m_c, phi, cap)
    if functor == "ext":
        lin = hom_total_complex(rep.projective, n_c, rep.lift, psi)
    else:
        lin = tensor_total_complex(rep.projective, n_c, rep.lift, psi)
    return DerivedTraceData(lin.cohomology_dims(), lin.cohomology_traces())


def hochschild_complex_data(
    a: Algebra,
    c: BimoduleComplex,
    phi: Optional[ChainEndomorphism] = None,
    variant: Literal["cohomology", "homology"] = "cohomology",
    cap: Optional[int] = None,
) -> DerivedTraceData:
    """Hochschild hyper(co)homology of A with coefficients in a complex of bimodules."""
    if c.left != a or c.right != a:
        raise AlgebraMismatchError("Hochschild coefficients must be A-A-bimodules")
    proj = resolution_of_regular_bimodule(a, cap).as_complex()
    if variant == "cohomology":
        lin = hom_total_complex(proj, c.complex, None, phi)
    else:
        left, psi = left_module_complex(c, phi)
        lin = tensor_total_complex(proj, left, None, psi)
    return DerivedTraceData(lin.cohomology_dims(), lin.cohomology_traces())
