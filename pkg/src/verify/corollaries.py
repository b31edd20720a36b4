"""Corollary checks and closed-form checks for a single algebra.

Corollaries: the Hochschild Euler characteristics of the regular bimodule
(−tr Φ_A and n) and the vanishing of HH_l(A) for l ≥ 1. Closed forms: the
Chern character and the Hattori–Stallings trace of projectives, and the
pairing on HH_0.
"""
import time
from typing import Optional

from src.algebra.algebra import Algebra
from src.algebra.cartan import ringel_data
from src.complexes.complex import identity_chain_map
from src.complexes.random import random_complex
from src.homology.functors import hochschild_data
from src.homology.resolution import resolution_of_regular_bimodule
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import regular_bimodule
from src.modules.operations import hom_basis
from src.modules.projective import indecomposable_projective
from src.modules.representation import identity_morphism
from src.verify.checks import compare
from src.verify.closed_forms import chern_character, hattori_stallings_trace, shklyarov_pairing_matrix
from src.verify.identities import VerificationReport


def verify_corollaries(a: Algebra, cap: Optional[int] = None) -> list[VerificationReport]:
    ringel = ringel_data(a)
    reg = regular_bimodule(a)
    reports = []

    started = time.perf_counter()
    hh_upper = hochschild_data(a, reg, None, "cohomology", cap)
    reports.append(compare(
        "corollary.hochschild_cohomology_euler",
        hh_upper.euler_dim,
        -ringel.coxeter_trace(),
        "Σ(-1)^l dim HH^l(A) from the A^e-resolution",
        "−tr Φ_A",
        started=started,
    ))

    started = time.perf_counter()
    hh_lower = hochschild_data(a, reg, None, "homology", cap)
    reports.append(compare(
        "corollary.hochschild_homology_euler",
        hh_lower.euler_dim,
        a.n,
        "Σ(-1)^l dim HH_l(A) from the A^e-resolution",
        "number of vertices",
        started=started,
    ))

    started = time.perf_counter()
    length = resolution_of_regular_bimodule(a, cap).length
    degrees = range(0, length + 1)
    reports.append(compare(
        "corollary.hochschild_homology_degrees",
        [hh_lower.dim(l) for l in degrees],
        [a.n] + [0] * length,
        f"dim HH_l(A) for l = 0..{length}; HH_l(A) vanishes above the length of the minimal "
        "A^e-resolution of A, so this covers every l ≤ gldim(A^e)",
        "HH_0(A) = k^n and HH_l(A) = 0 for l ≥ 1",
        started=started,
    ))
    return reports


def _unit(n: int, i: int, fld) -> Matrix:
    return Matrix.column([1 if k == i else 0 for k in range(n)], fld)


def verify_closed_forms(a: Algebra, seed: int = 0) -> list[VerificationReport]:
    fld = a.field
    reports = []
    projectives = [indecomposable_projective(a, i) for i in range(a.n)]
    for i, p in enumerate(projectives):
        reports.append(compare(
            f"closed.chern_character#{i + 1}",
            chern_character(p),
            _unit(a.n, i, fld),
            f"C^-1·dv(e_{i + 1}A)",
            f"unit vector e_{i + 1}",
        ))
        reports.append(compare(
            f"closed.hattori_stallings#{i + 1}",
            hattori_stallings_trace(identity_morphism(p)),
            _unit(a.n, i, fld),
            f"C^-1·tv(id on e_{i + 1}A)",
            f"unit vector e_{i + 1}",
        ))

    counted = IntMatrix.from_rows(
        [[len(hom_basis(projectives[j], projectives[i])) for j in range(a.n)] for i in range(a.n)]
    )
    reports.append(compare(
        "closed.pairing",
        shklyarov_pairing_matrix(a),
        counted,
        "C_Aᵀ",
        "entry (i, j) = dim Hom(e_jA, e_iA)",
    ))

    c = random_complex(a, seed)
    reports.append(compare(
        "closed.hattori_stallings.complex",
        hattori_stallings_trace(identity_chain_map(c)),
        chern_character(c),
        "C^-1·(super trace vector of the identity)",
        "Chern character of the complex",
    ))
    return reports
