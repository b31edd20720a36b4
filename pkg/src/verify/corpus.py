"""Seeded random operands for every identity, and the corpora the suites run on."""
import hashlib
from typing import Iterator

from src.algebra.algebra import Algebra
from src.algebra.bundled import bundled_algebra
from src.algebra.constructions import opposite_algebra
from src.complexes.random import random_bimodule_complex, random_chain_endomorphism, random_complex
from src.modules.random import random_bimodule, random_endomorphism, random_module, random_seeds
from src.verify.closed_forms import CheckInputs
from src.verify.identities import HOCHSCHILD, Flavor, IdentityId, Level, Version

# levels other than module run samples // HEAVY_SAMPLE_DIVISOR instances per identity
HEAVY_SAMPLE_DIVISOR = 4
# bimodule operands over B ≠ A draw B from these
PARTNERS = ("K", "A2", "KR")


def identity_seed(identity: IdentityId, seed: int) -> int:
    """Run seed mixed with the identity key, stable across processes."""
    mixed = hashlib.sha256(f"{identity.key}:{seed}".encode()).hexdigest()
    return int(mixed[:8], 16)


def partner_algebra(a: Algebra, seed: int) -> Algebra:
    """The other side of a bimodule operand: `a` itself for half the seeds, else a small bundled algebra."""
    if seed % 2 == 0:
        return a
    name = PARTNERS[(seed // 2) % len(PARTNERS)]
    return bundled_algebra(name, a.field)


def build_inputs(identity: IdentityId, a: Algebra, seed: int) -> CheckInputs:
    s1, s2, s3, s4 = random_seeds(seed, 4)
    lefschetz = identity.flavor == Flavor.lefschetz
    homological = identity.version == Version.homological

    if identity.level == Level.module:
        if identity.version in HOCHSCHILD:
            m = random_bimodule(a, a, s1, budget=1)
            return CheckInputs(a, m, phi=random_endomorphism(m.module, s3) if lefschetz else None)
        m = random_module(a, s1)
        n = random_module(opposite_algebra(a) if homological else a, s2)
        if not lefschetz:
            return CheckInputs(a, m, n)
        return CheckInputs(a, m, n, random_endomorphism(m, s3), random_endomorphism(n, s4))

    if identity.level == Level.bimodule:
        b, c = partner_algebra(a, s1), partner_algebra(a, s2)
        m = random_bimodule(b, a, s1, budget=1)
        n = random_bimodule(a, c, s2, budget=1) if homological else random_bimodule(c, a, s2, budget=1)
        if not lefschetz:
            return CheckInputs(a, m, n)
        return CheckInputs(a, m, n, random_endomorphism(m.module, s3), random_endomorphism(n.module, s4))

    if identity.level == Level.complex:
        if identity.version in HOCHSCHILD:
            c = random_bimodule_complex(a, a, s1, max_length=2)
            return CheckInputs(a, c, phi=random_chain_endomorphism(c.complex, s3) if lefschetz else None)
        m = random_complex(a, s1)
        n = random_complex(opposite_algebra(a) if homological else a, s2)
        if not lefschetz:
            return CheckInputs(a, m, n)
        return CheckInputs(a, m, n, random_chain_endomorphism(m, s3), random_chain_endomorphism(n, s4))

    b, c = partner_algebra(a, s1), partner_algebra(a, s2)
    m = random_bimodule_complex(b, a, s1, max_length=2)
    if homological:
        n = random_bimodule_complex(a, c, s2, max_length=2)
    else:
        n = random_bimodule_complex(c, a, s2, max_length=2)
    if not lefschetz:
        return CheckInputs(a, m, n)
    return CheckInputs(
        a, m, n, random_chain_endomorphism(m.complex, s3), random_chain_endomorphism(n.complex, s4)
    )


def samples_for(identity: IdentityId, samples: int) -> int:
    if identity.level == Level.module:
        return samples
    return max(1, samples // HEAVY_SAMPLE_DIVISOR)


def identity_corpus(
    identities: list[IdentityId], samples: int, seed: int
) -> Iterator[tuple[str, IdentityId, int]]:
    """(check id, identity, instance seed) for each identity's share of the corpus.

    Operands are built lazily by the worker from the instance seed.
    """
    for identity in identities:
        count = samples_for(identity, samples)
        for k, s in enumerate(random_seeds(identity_seed(identity, seed), count)):
            yield f"{identity.key}#{k + 1:03d}", identity, s


def round_robin_corpus(
    identities: list[IdentityId], samples: int, seed: int
) -> Iterator[tuple[str, IdentityId, int]]:
    """Exactly `samples` instances, cycling through the identities."""
    for k, s in enumerate(random_seeds(seed, samples)):
        identity = identities[k % len(identities)]
        yield f"{identity.key}#{k + 1:03d}", identity, s
