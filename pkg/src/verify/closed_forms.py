"""Closed matrix forms: the right-hand sides, Chern character, Hattori–Stallings trace, pairing.

Nothing here touches the homological engine; every value is Cartan-matrix
arithmetic on dimension and trace data.
"""
from dataclasses import dataclass
from typing import Optional, Union

from src.algebra.algebra import Algebra
from src.algebra.cartan import RingelFormData, cartan_matrix, ringel_data
from src.complexes.complex import (
    BimoduleComplex,
    BoundedComplex,
    ChainEndomorphism,
    complex_dim_matrix,
    complex_dim_vector,
    complex_trace_matrix,
    complex_trace_vector,
    concentrated,
    chain_endomorphism,
    identity_chain_map,
)
from src.core.errors import DimensionMismatchError
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import BimoduleHandle, dim_matrix, trace_matrix
from src.modules.representation import (
    ModuleMorphism,
    Representation,
    dim_vector,
    identity_morphism,
    trace_vector,
)
from src.verify.identities import Flavor, IdentityId, Level, Version


@dataclass
class CheckInputs:
    """Operands of one identity.

    `m`/`n` are modules, bimodule handles, complexes or bimodule complexes as
    the level demands; for homological versions `n` is the left-hand partner
    (a left module, or an A-B-bimodule). `phi`/`psi` are their endomorphisms.
    """

    algebra: Algebra
    m: object
    n: object = None
    phi: object = None
    psi: object = None

    def with_identities(self) -> "CheckInputs":
        """Fill absent endomorphisms with identities (the Lefschetz flavor needs both)."""
        return CheckInputs(self.algebra, self.m, self.n, _identity_of(self.m, self.phi), _identity_of(self.n, self.psi))


def _identity_of(x, given):
    if given is not None or x is None:
        return given
    if isinstance(x, Representation):
        return identity_morphism(x)
    if isinstance(x, BimoduleHandle):
        return identity_morphism(x.module)
    if isinstance(x, BimoduleComplex):
        return identity_chain_map(x.complex)
    if isinstance(x, BoundedComplex):
        return identity_chain_map(x)
    raise DimensionMismatchError(f"no identity endomorphism for {type(x).__name__}")


def _module_data(x, endo, lefschetz: bool):
    if isinstance(x, BimoduleHandle):
        return trace_matrix(x, endo) if lefschetz else dim_matrix(x)
    if isinstance(x, BimoduleComplex):
        return complex_trace_matrix(x, endo) if lefschetz else complex_dim_matrix(x)
    if isinstance(x, BoundedComplex):
        return complex_trace_vector(endo) if lefschetz else complex_dim_vector(x)
    return trace_vector(endo) if lefschetz else dim_vector(x)


def invariant_data(identity: IdentityId, inputs: CheckInputs) -> tuple:
    """(x, y): dimension data for HRR, trace data for Lefschetz."""
    lefschetz = identity.flavor == Flavor.lefschetz
    if lefschetz:
        inputs = inputs.with_identities()
    x = _module_data(inputs.m, inputs.phi, lefschetz)
    y = None if inputs.n is None else _module_data(inputs.n, inputs.psi, lefschetz)
    return x, y


def _inverse(ringel: RingelFormData, transpose: bool, like):
    c = ringel.cartan_inverse.T if transpose else ringel.cartan_inverse
    return c.over(like.field) if isinstance(like, Matrix) else c


def rhs_value(identity: IdentityId, inputs: CheckInputs, ringel: Optional[RingelFormData] = None):
    """The closed form of the identity: Ringel pairings or Cartan-twisted traces."""
    ringel = ringel_data(inputs.algebra) if ringel is None else ringel
    x, y = invariant_data(identity, inputs)
    rectangular = identity.level in (Level.bimodule, Level.bimodule_complex)
    if identity.version == Version.cohomological:
        return ringel.ringel_form(x, y)
    if identity.version == Version.homological:
        return ringel.opposite_ringel_form(y.T if rectangular else y, x)
    transpose = identity.version == Version.hochschild_cohomological
    return (_inverse(ringel, transpose, x) @ x).trace()


RHS_PROVENANCE = {
    Version.cohomological: "Cartan inverse: xᵀ·C^-T·y on {data}",
    Version.homological: "Cartan inverse: yᵀ·C^-1·x on {data} (opposite Ringel form)",
    Version.hochschild_cohomological: "Cartan inverse: tr(C^-T·x) on {data}",
    Version.hochschild_homological: "Cartan inverse: tr(C^-1·x) on {data}",
}


def rhs_provenance(identity: IdentityId) -> str:
    data = "trace" if identity.flavor == Flavor.lefschetz else "dimension"
    if identity.level in (Level.bimodule, Level.bimodule_complex) or identity.version.value.startswith("hochschild"):
        data += " matrices"
    else:
        data += " vectors"
    if identity.level in (Level.complex, Level.bimodule_complex):
        data = "super " + data
    return RHS_PROVENANCE[identity.version].format(data=data)


def shklyarov_pairing_matrix(a: Algebra) -> IntMatrix:
    """Matrix of HH_0(A) ⊗ HH_0(A^op) → k in the bases e_1..e_n and e_1^∨..e_n^∨ (with e_i^∨ = e_i)."""
    ringel_data(a)
    return cartan_matrix(a).T


def chern_character(c: Union[Representation, BoundedComplex]) -> Matrix:
    """Coordinates C_A^{-1}·dv(c) of ch(c) in the basis e_1..e_n of HH_0(A)."""
    if isinstance(c, Representation):
        c = concentrated(c)
    a = c.algebra
    return ringel_data(a).cartan_inverse.over(a.field) @ complex_dim_vector(c).over(a.field)


def hattori_stallings_trace(phi: Union[ModuleMorphism, ChainEndomorphism]) -> Matrix:
    """Coordinates C_A^{-1}·tv(φ) of the Hattori–Stallings trace in HH_0(A)."""
    if isinstance(phi, ModuleMorphism):
        phi = chain_endomorphism(concentrated(phi.source), [phi])
    a = phi.complex.algebra
    return ringel_data(a).cartan_inverse.over(a.field) @ complex_trace_vector(phi)
