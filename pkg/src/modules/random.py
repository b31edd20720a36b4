"""Seeded random modules and endomorphisms for the randomized checks."""
from typing import Optional, Sequence

import numpy as np

from src.algebra.algebra import Algebra
from src.algebra.constructions import opposite_algebra, tensor_algebra
from src.linalg.matrix import Matrix
from src.modules.bimodule import BimoduleHandle
from src.modules.operations import cokernel, hom_basis
from src.modules.projective import projective_sum
from src.modules.representation import ModuleMorphism, Representation, identity_morphism, zero_morphism

COEFFICIENT_RANGE = (-2, 3)


def _random_row(rng: np.random.Generator, length: int, a: Algebra) -> Matrix:
    values = rng.integers(*COEFFICIENT_RANGE, size=length)
    return Matrix.row_vector([int(v) for v in values], a.field) if length else Matrix.zeros(1, 0, a.field)


def random_module(a: Algebra, seed: int, budget: int = 2) -> Representation:
    """Cokernel of a random map between random sums of indecomposable projectives.

    `budget` bounds the number of summands of the projective being quotiented.
    """
    rng = np.random.default_rng(seed)
    budget = max(1, budget)
    tops = rng.integers(0, a.n, size=int(rng.integers(1, budget + 1)))
    p = projective_sum(a, [int(i) for i in tops])
    relations = rng.integers(0, a.n, size=int(rng.integers(0, budget + 1)))
    q = projective_sum(a, [int(i) for i in relations])
    images = [_random_row(rng, p.dims[i], a) for i in q.tops]
    module, _ = cokernel(q.map_to(p, images).morphism)
    return module


def random_combination(basis: Sequence[ModuleMorphism], rng: np.random.Generator) -> Optional[ModuleMorphism]:
    """Small-integer combination of `basis`, or None when the basis is empty."""
    if not basis:
        return None
    fld = basis[0].source.field
    coefficients = rng.integers(*COEFFICIENT_RANGE, size=len(basis))
    out = basis[0].scale(fld.coerce(int(coefficients[0])))
    for f, c in zip(basis[1:], coefficients[1:]):
        out = out + f.scale(fld.coerce(int(c)))
    return out


def random_morphism(m: Representation, n: Representation, rng: np.random.Generator) -> ModuleMorphism:
    f = random_combination(hom_basis(m, n), rng)
    return zero_morphism(m, n) if f is None else f


def random_endomorphism(m: Representation, seed: int) -> ModuleMorphism:
    """Random combination of a basis of End_A(M) with small integer coefficients."""
    f = random_combination(hom_basis(m, m), np.random.default_rng(seed))
    return identity_morphism(m) if f is None else f


def random_bimodule(left: Algebra, right: Algebra, seed: int, budget: int = 2) -> BimoduleHandle:
    """Random B-A-bimodule, built as a random module over B^op ⊗ A."""
    storage = tensor_algebra(opposite_algebra(left), right)
    return BimoduleHandle(left, right, random_module(storage, seed, budget))


def random_seeds(seed: int, count: int) -> list[int]:
    """Independent per-sample seeds derived from one run seed."""
    rng = np.random.default_rng(seed)
    return [int(s) for s in rng.integers(0, 2**31 - 1, size=count)]
