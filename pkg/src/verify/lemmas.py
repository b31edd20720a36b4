"""Randomized checks of the supporting lemmas, the alternate pairings, and oracle cross-checks."""
import numpy as np

from src.algebra.algebra import Algebra
from src.algebra.cartan import cartan_matrix, ringel_data
from src.algebra.constructions import enveloping_algebra, opposite_algebra, tensor_algebra
from src.complexes.complex import (
    ChainMap,
    chain_map_basis,
    complex_dim_vector,
    complex_trace_vector,
    cone,
    shift,
    shift_endomorphism,
)
from src.complexes.random import random_chain_endomorphism, random_complex
from src.homology.functors import ext_data, ext_from_resolution, tor_data
from src.homology.replacement import projective_replacement
from src.homology.resolution import (
    lift_module_map,
    minimal_projective_resolution,
    perturbed_lift,
    resolution_of_regular_bimodule,
    resolution_of_simple,
)
from src.linalg.elimination import kronecker
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import (
    dim_matrix,
    dual_bimodule,
    dual_bimodule_endomorphism,
    outer_tensor,
    outer_tensor_endomorphism,
    trace_matrix,
)
from src.modules.operations import dual_endomorphism, dual_module, hom_basis
from src.modules.projective import simple_module
from src.modules.random import (
    random_bimodule,
    random_endomorphism,
    random_module,
    random_morphism,
    random_seeds,
)
from src.modules.representation import (
    ModuleMorphism,
    direct_sum,
    dim_vector,
    identity_morphism,
    summand_inclusion,
    summand_projection,
    trace_vector,
)
from src.verify.checks import compare
from src.verify.identities import VerificationReport, digest


def _cartan_lemmas(a: Algebra, b: Algebra) -> list[VerificationReport]:
    ca, cb = cartan_matrix(a), cartan_matrix(b)
    return [
        compare("lemma.cartan_opposite", cartan_matrix(opposite_algebra(a)), ca.T,
                "Cartan matrix of the opposite algebra", "C_Aᵀ"),
        compare("lemma.cartan_tensor", cartan_matrix(tensor_algebra(b, a)), kronecker(cb, ca),
                "Cartan matrix of B ⊗ A", "C_B ⊗ C_A"),
        compare("lemma.cartan_enveloping", cartan_matrix(enveloping_algebra(a)), kronecker(ca.T, ca),
                "Cartan matrix of A^e", "C_Aᵀ ⊗ C_A"),
    ]


def _upper_triangular(phi: ModuleMorphism, chi: ModuleMorphism, psi: ModuleMorphism) -> ModuleMorphism:
    """[[φ, χ], [0, ψ]] on M ⊕ N, with χ: M → N."""
    m, n = phi.source, psi.source
    total = direct_sum(m, n)
    parts = (m, n)
    to_m, to_n = summand_projection(total, parts, 0), summand_projection(total, parts, 1)
    from_m, from_n = summand_inclusion(total, parts, 0), summand_inclusion(total, parts, 1)
    return (
        to_m.then(phi).then(from_m)
        + to_m.then(chi).then(from_n)
        + to_n.then(psi).then(from_n)
    )


def _column_vectorization(dm: IntMatrix) -> list[int]:
    return _row_vectorization(dm.T)


def _row_vectorization(dm: IntMatrix) -> list[int]:
    return [x for row in dm.to_ints() for x in row]


def verify_lemma_suite(a: Algebra, b: Algebra, samples: int, seed: int) -> list[VerificationReport]:
    """Cartan lemmas once, then each dimension/trace lemma on `samples` random instances."""
    reports = _cartan_lemmas(a, b)
    b_op = opposite_algebra(b)
    for k, s in enumerate(random_seeds(seed, samples)):
        tag = f"#{k + 1:03d}"
        s1, s2, s3, s4 = random_seeds(s, 4)
        rng = np.random.default_rng(s)

        bim = random_bimodule(b, a, s1, budget=1)
        phi = random_endomorphism(bim.module, s2)
        dual = dual_bimodule(bim)
        reports.append(compare(
            "lemma.dual_dims" + tag, dim_matrix(dual), dim_matrix(bim).T,
            "dm of the dual bimodule", "(dm M)ᵀ", digest(bim),
        ))
        reports.append(compare(
            "lemma.dual_traces" + tag,
            trace_matrix(dual, dual_bimodule_endomorphism(bim, dual, phi)),
            trace_matrix(bim, phi).T,
            "tm of the dual endomorphism", "(tm φ)ᵀ", digest(bim, phi),
        ))

        m, n_left = random_module(a, s3), random_module(b_op, s4)
        phi_m, psi_n = random_endomorphism(m, s3), random_endomorphism(n_left, s4)
        outer = outer_tensor(n_left, m)
        reports.append(compare(
            "lemma.outer_dims" + tag, dim_matrix(outer), dim_vector(m) @ dim_vector(n_left).T,
            "dm(N ⊗ M)", "dv M · (dv N)ᵀ", digest(m, n_left),
        ))
        reports.append(compare(
            "lemma.outer_traces" + tag,
            trace_matrix(outer, outer_tensor_endomorphism(outer, psi_n, phi_m)),
            trace_vector(phi_m) @ trace_vector(psi_n).T,
            "tm(ψ ⊗ φ)", "tv φ · (tv ψ)ᵀ", digest(m, n_left, phi_m, psi_n),
        ))

        x, y = random_module(a, s1), random_module(a, s2)
        f, g = random_morphism(x, y, rng), random_morphism(y, x, rng)
        reports.append(compare(
            "lemma.trace_symmetry" + tag, trace_vector(f.then(g)), trace_vector(g.then(f)),
            "tv(g∘f)", "tv(f∘g)", digest(x, y, f, g),
        ))
        reports.append(compare(
            "lemma.trace_identity" + tag, trace_vector(identity_morphism(x)), dim_vector(x).over(a.field),
            "tv(id)", "dv", digest(x),
        ))

        phi_x, psi_y = random_endomorphism(x, s3), random_endomorphism(y, s4)
        chi = random_morphism(x, y, rng)
        reports.append(compare(
            "lemma.trace_additivity" + tag,
            trace_vector(_upper_triangular(phi_x, chi, psi_y)),
            trace_vector(phi_x) + trace_vector(psi_y),
            "tv of [[φ, χ], [0, ψ]] on M ⊕ N", "tv φ + tv ψ", digest(x, y, phi_x, chi, psi_y),
        ))

        sq = random_bimodule(a, a, s2, budget=1)
        reports.append(compare(
            "lemma.column_vectorization" + tag, list(sq.module.dims), _column_vectorization(dim_matrix(sq)),
            "dimension vector over B^op ⊗ A", "column vectorization of dm", digest(sq),
        ))
        reports.append(compare(
            "lemma.row_vectorization" + tag, list(sq.left_module_form().dims), _row_vectorization(dim_matrix(sq)),
            "dimension vector of the left-module form", "row vectorization of dm", digest(sq),
        ))

        c = random_complex(a, s3)
        endo = random_chain_endomorphism(c, s4)
        rep = projective_replacement(c, endo)
        reports.append(compare(
            "lemma.quasi_iso_dims" + tag, complex_dim_vector(rep.complex), complex_dim_vector(c),
            "super dv of the projective replacement", "super dv of the complex", digest(c),
        ))
        reports.append(compare(
            "lemma.quasi_iso_traces" + tag, complex_trace_vector(rep.lift_map), complex_trace_vector(endo),
            "super tv of the lifted endomorphism", "super tv of the endomorphism", digest(c, endo),
        ))

        shifted = shift(c)
        reports.append(compare(
            "lemma.shift_dims" + tag, complex_dim_vector(shifted), -complex_dim_vector(c),
            "super dv of M[1]", "−(super dv of M)", digest(c),
        ))
        reports.append(compare(
            "lemma.shift_traces" + tag,
            complex_trace_vector(shift_endomorphism(endo, shifted)),
            -complex_trace_vector(endo),
            "super tv of φ[1]", "−(super tv of φ)", digest(c, endo),
        ))

        other = random_complex(a, s1)
        basis = chain_map_basis(c, other)
        coefficients = rng.integers(-2, 3, size=len(basis))
        maps = {}
        for l in range(min(c.lo, other.lo), max(c.hi, other.hi) + 1):
            total = None
            for h, t in zip(basis, coefficients):
                term = h.at(l).scale(a.field.coerce(int(t)))
                total = term if total is None else total + term
            if total is not None:
                maps[l] = total
        f_chain = ChainMap(c, other, maps)
        reports.append(compare(
            "lemma.cone_dims" + tag, complex_dim_vector(cone(f_chain)),
            complex_dim_vector(other) - complex_dim_vector(c),
            "super dv of cone(f)", "super dv of target − super dv of source", digest(c, other, f_chain),
        ))
    return reports


def verify_alternate_forms(a: Algebra, samples: int, seed: int) -> list[VerificationReport]:
    """Ext and Tor Euler characteristics against the pairings written the other way round."""
    ringel = ringel_data(a)
    a_op = opposite_algebra(a)
    reports = []
    for k, s in enumerate(random_seeds(seed, samples)):
        tag = f"#{k + 1:03d}"
        s1, s2, s3, s4 = random_seeds(s, 4)
        m, n = random_module(a, s1), random_module(a, s2)
        phi, psi = random_endomorphism(m, s3), random_endomorphism(n, s4)
        ext = ext_data(m, n, phi, psi)
        reports.append(compare(
            "alternate.ext_dims" + tag, ext.euler_dim, ringel.opposite_ringel_form(dim_vector(n), dim_vector(m)),
            "Σ(-1)^l dim Ext^l(M, N)", "⟨dv N, dv M⟩ over A^op", digest(m, n),
        ))
        reports.append(compare(
            "alternate.ext_traces" + tag,
            a.field.coerce(ext.euler_trace),
            ringel.opposite_ringel_form(trace_vector(psi), trace_vector(phi)),
            "Σ(-1)^l tr Ext^l(φ, ψ)", "⟨tv ψ, tv φ⟩ over A^op", digest(m, n, phi, psi),
        ))

        n_left = random_module(a_op, s2)
        psi_left = random_endomorphism(n_left, s4)
        tor = tor_data(m, n_left, phi, psi_left)
        reports.append(compare(
            "alternate.tor_dims" + tag, tor.euler_dim, ringel.ringel_form(dim_vector(m), dim_vector(n_left)),
            "Σ(-1)^l dim Tor_l(M, N)", "⟨dv M, dv N⟩ over A", digest(m, n_left),
        ))
        reports.append(compare(
            "alternate.tor_traces" + tag,
            a.field.coerce(tor.euler_trace),
            ringel.ringel_form(trace_vector(phi), trace_vector(psi_left)),
            "Σ(-1)^l tr Tor_l(φ, ψ)", "⟨tv φ, tv ψ⟩ over A", digest(m, n_left, phi, psi_left),
        ))
    return reports


def _trace_column(traces: dict, fld) -> Matrix:
    keys = sorted(traces)
    return Matrix.column([traces[k] for k in keys], fld)


def simple_multiplicity_table(a: Algebra, cap=None) -> tuple[IntMatrix, IntMatrix]:
    """(t_lij from the A^e-resolution of A, dim Ext^l(S_i, S_j) from module resolutions).

    Row l, column i·n + j.
    """
    n = a.n
    reg = resolution_of_regular_bimodule(a, cap)
    ext = [[ext_from_resolution(resolution_of_simple(a, i, cap), simple_module(a, j)) for j in range(n)] for i in range(n)]
    top = max([reg.length] + [l for row in ext for x in row for l, d in x.dims.items() if d])
    t = IntMatrix.from_rows([[reg.multiplicity(l, i * n + j) for i in range(n) for j in range(n)] for l in range(top + 1)])
    e = IntMatrix.from_rows([[ext[i][j].dim(l) for i in range(n) for j in range(n)] for l in range(top + 1)])
    return t, e


def verify_oracles(a: Algebra, samples: int, seed: int) -> list[VerificationReport]:
    """Engine-against-engine checks: Ext/Tor duality, lift independence, simple multiplicities, Hom."""
    t, e = simple_multiplicity_table(a)
    reports = [compare(
        "oracle.simple_multiplicities", t, e,
        "multiplicities t_lij in the minimal A^e-resolution of A", "dim Ext^l(S_i, S_j)",
    )]
    for k, s in enumerate(random_seeds(seed, samples)):
        tag = f"#{k + 1:03d}"
        s1, s2, s3, s4 = random_seeds(s, 4)
        m, n = random_module(a, s1), random_module(a, s2)
        phi, psi = random_endomorphism(m, s3), random_endomorphism(n, s4)
        dual = dual_module(n)
        reports.append(compare(
            "oracle.ext_tor_duality" + tag,
            ext_data(m, n).euler_dim,
            tor_data(m, dual).euler_dim,
            "Σ(-1)^l dim Ext^l(M, N)", "Σ(-1)^l dim Tor_l(M, N*)", digest(m, n),
        ))
        reports.append(compare(
            "oracle.ext_tor_duality_traces" + tag,
            a.field.coerce(ext_data(m, n, phi, psi).euler_trace),
            a.field.coerce(tor_data(m, dual, phi, dual_endomorphism(psi, dual)).euler_trace),
            "Σ(-1)^l tr Ext^l(φ, ψ)", "Σ(-1)^l tr Tor_l(φ, ψ*)", digest(m, n, phi, psi),
        ))

        res = minimal_projective_resolution(m)
        lifts = lift_module_map(phi, res, res)
        moved = perturbed_lift(res, lifts, s)
        first = ext_from_resolution(res, n, phi, psi, lifts)
        second = ext_from_resolution(res, n, phi, psi, moved)
        reports.append(compare(
            "oracle.lift_independence" + tag,
            _trace_column(first.traces, a.field),
            _trace_column(second.traces, a.field),
            "traces of Ext^l(φ, ψ) with the computed lift", "the same with a homotopic lift", digest(m, n, phi, psi),
        ))

        reports.append(compare(
            "oracle.hom_dimension" + tag,
            ext_data(m, n).dim(0),
            len(hom_basis(m, n)),
            "dim Ext^0(M, N) from the resolution", "dimension of the solved Hom system", digest(m, n),
        ))
    return reports
