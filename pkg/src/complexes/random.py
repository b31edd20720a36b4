"""Seeded random complexes of length at most three and their chain endomorphisms."""
import numpy as np

from src.algebra.algebra import Algebra
from src.algebra.constructions import opposite_algebra, tensor_algebra
from src.complexes.complex import (
    BimoduleComplex,
    BoundedComplex,
    ChainEndomorphism,
    chain_map_basis,
    concentrated,
    identity_chain_map,
)
from src.modules.operations import cokernel
from src.modules.random import COEFFICIENT_RANGE, random_module, random_morphism, random_seeds


def random_complex(a: Algebra, seed: int, max_length: int = 3, budget: int = 2) -> BoundedComplex:
    """X → Y → Z with random maps; Y → Z factors through coker(X → Y) so d∘d = 0."""
    rng = np.random.default_rng(seed)
    s = random_seeds(seed, 3)
    length = int(rng.integers(1, max_length + 1))
    lo = int(rng.integers(-1, 2))
    x = random_module(a, s[0], budget)
    if length == 1:
        return concentrated(x, lo)
    y = random_module(a, s[1], budget)
    f = random_morphism(x, y, rng)
    if length == 2:
        return BoundedComplex(lo, (x, y), (f,))
    q, projection = cokernel(f)
    z = random_module(a, s[2], budget)
    g = projection.then(random_morphism(q, z, rng))
    return BoundedComplex(lo, (x, y, z), (f, g))


def random_chain_endomorphism(c: BoundedComplex, seed: int) -> ChainEndomorphism:
    basis = chain_map_basis(c, c)
    if not basis:
        return identity_chain_map(c)
    rng = np.random.default_rng(seed)
    coefficients = rng.integers(*COEFFICIENT_RANGE, size=len(basis))
    fld = c.algebra.field
    maps = {}
    for l in c.degrees():
        total = basis[0].at(l).scale(fld.coerce(int(coefficients[0])))
        for f, k in zip(basis[1:], coefficients[1:]):
            total = total + f.at(l).scale(fld.coerce(int(k)))
        maps[l] = total
    return ChainEndomorphism(c, c, maps)


def random_bimodule_complex(left: Algebra, right: Algebra, seed: int, max_length: int = 3) -> BimoduleComplex:
    storage = tensor_algebra(opposite_algebra(left), right)
    return BimoduleComplex(left, right, random_complex(storage, seed, max_length, budget=1))
