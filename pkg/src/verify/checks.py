"""Left-hand sides from the homological engine, and one report per check."""
import time
from typing import Optional

from src.algebra.cartan import ringel_data
from src.complexes.complex import slice_complex
from src.core.errors import AlgebraMismatchError
from src.core.logging import logger
from src.homology.functors import (
    DerivedTraceData,
    ext_from_resolution,
    hom_total_complex,
    hochschild_data,
    tensor_total_complex,
    tor_from_resolution,
)
from src.homology.replacement import derived_data_complex, hochschild_complex_data, projective_replacement
from src.homology.resolution import lift_module_map, minimal_projective_resolution, resolution_of_regular_bimodule
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import left_slice, left_slice_endomorphism, right_slice, right_slice_endomorphism
from src.verify.closed_forms import CheckInputs, rhs_provenance, rhs_value
from src.verify.identities import (
    Flavor,
    IdentityId,
    Level,
    Version,
    VerificationReport,
    digest,
    render_value,
)


def _euler(data: DerivedTraceData, lefschetz: bool):
    return data.euler_trace if lefschetz else data.euler_dim


def _support(data: DerivedTraceData) -> str:
    degrees = sorted(k for k, d in data.dims.items() if d)
    return ",".join(str(k) for k in degrees) or "none"


def _module_lhs(identity: IdentityId, inputs: CheckInputs, lefschetz: bool, cap: Optional[int]):
    a = inputs.algebra
    if identity.version == Version.cohomological:
        res = minimal_projective_resolution(inputs.m, cap)
        data = ext_from_resolution(res, inputs.n, inputs.phi, inputs.psi)
        return _euler(data, lefschetz), (
            f"minimal resolution of M (length {res.length}); Hom complex; Ext nonzero in degrees {_support(data)}"
        )
    if identity.version == Version.homological:
        res = minimal_projective_resolution(inputs.m, cap)
        data = tor_from_resolution(res, inputs.n, inputs.phi, inputs.psi)
        return _euler(data, lefschetz), (
            f"minimal resolution of M (length {res.length}); tensor complex; Tor nonzero in degrees {_support(data)}"
        )
    variant = "cohomology" if identity.version == Version.hochschild_cohomological else "homology"
    data = hochschild_data(a, inputs.m, inputs.phi, variant, cap)
    length = resolution_of_regular_bimodule(a, cap).length
    return _euler(data, lefschetz), (
        f"minimal A^e-resolution of A (length {length}); Hochschild {variant} nonzero in degrees {_support(data)}"
    )


def _entry_matrix(rows: list[list], lefschetz: bool, field):
    return Matrix.from_rows(rows, field) if lefschetz else IntMatrix.from_rows(rows)


def _bimodule_lhs(identity: IdentityId, inputs: CheckInputs, lefschetz: bool, cap: Optional[int]):
    """Entry-wise Euler characteristics of one-sided slices."""
    m, n = inputs.m, inputs.n
    homological = identity.version == Version.homological
    if homological and n.left != m.right:
        raise AlgebraMismatchError("Tor of bimodules needs M over A on the right and N over A on the left")
    if not homological and n.right != m.right:
        raise AlgebraMismatchError("Ext of bimodules needs both right algebras equal")
    resolved = []
    for i in range(m.left.n):
        piece = right_slice(m, i)
        phi_i = right_slice_endomorphism(m, i, inputs.phi, piece) if lefschetz else None
        res = minimal_projective_resolution(piece, cap)
        lifts = lift_module_map(phi_i, res, res) if phi_i is not None else None
        resolved.append((res, phi_i, lifts))
    longest = max(res.length for res, _, _ in resolved)
    if homological:
        rows = []
        for j in range(n.right.n):
            target = left_slice(n, j)
            psi_j = left_slice_endomorphism(n, j, inputs.psi, target) if lefschetz else None
            rows.append([
                _euler(tor_from_resolution(res, target, phi_i, psi_j, lifts), lefschetz)
                for res, phi_i, lifts in resolved
            ])
        how = "Tor(f_i M, N e_j)"
    else:
        targets = []
        for j in range(n.left.n):
            target = right_slice(n, j)
            targets.append((target, right_slice_endomorphism(n, j, inputs.psi, target) if lefschetz else None))
        rows = [
            [_euler(ext_from_resolution(res, t, phi_i, psi_j, lifts), lefschetz) for t, psi_j in targets]
            for res, phi_i, lifts in resolved
        ]
        how = "Ext(f_i M, f_j N)"
    value = _entry_matrix(rows, lefschetz, inputs.algebra.field)
    return value, f"entrywise {how} over minimal resolutions of the slices (longest {longest})"


def _complex_lhs(identity: IdentityId, inputs: CheckInputs, lefschetz: bool, cap: Optional[int]):
    a = inputs.algebra
    if identity.version in (Version.cohomological, Version.homological):
        functor = "ext" if identity.version == Version.cohomological else "tor"
        data = derived_data_complex(inputs.m, inputs.n, inputs.phi, inputs.psi, functor, cap)
        return _euler(data, lefschetz), (
            f"projective replacement of M; {'Hom' if functor == 'ext' else 'tensor'} total complex; "
            f"nonzero in degrees {_support(data)}"
        )
    variant = "cohomology" if identity.version == Version.hochschild_cohomological else "homology"
    data = hochschild_complex_data(a, inputs.m, inputs.phi, variant, cap)
    length = resolution_of_regular_bimodule(a, cap).length
    return _euler(data, lefschetz), (
        f"minimal A^e-resolution of A (length {length}); Hochschild hyper{variant} nonzero in degrees {_support(data)}"
    )


def _bimodule_complex_lhs(identity: IdentityId, inputs: CheckInputs, lefschetz: bool, cap: Optional[int]):
    m, n = inputs.m, inputs.n
    homological = identity.version == Version.homological
    replaced = []
    for i in range(m.left.n):
        piece, phi_i = slice_complex(m, i, "right", inputs.phi if lefschetz else None)
        replaced.append(projective_replacement(piece, phi_i, cap))
    if homological:
        rows = []
        for j in range(n.right.n):
            target, psi_j = slice_complex(n, j, "left", inputs.psi if lefschetz else None)
            row = []
            for rep in replaced:
                lin = tensor_total_complex(rep.projective, target, rep.lift, psi_j)
                row.append(_euler(DerivedTraceData(lin.cohomology_dims(), lin.cohomology_traces()), lefschetz))
            rows.append(row)
    else:
        targets = [slice_complex(n, j, "right", inputs.psi if lefschetz else None) for j in range(n.left.n)]
        rows = []
        for rep in replaced:
            row = []
            for target, psi_j in targets:
                lin = hom_total_complex(rep.projective, target, rep.lift, psi_j)
                row.append(_euler(DerivedTraceData(lin.cohomology_dims(), lin.cohomology_traces()), lefschetz))
            rows.append(row)
    value = _entry_matrix(rows, lefschetz, inputs.algebra.field)
    functor = "tensor" if homological else "Hom"
    return value, f"entrywise {functor} total complexes over projective replacements of the slices"


LHS = {
    Level.module: _module_lhs,
    Level.bimodule: _bimodule_lhs,
    Level.complex: _complex_lhs,
    Level.bimodule_complex: _bimodule_complex_lhs,
}


def lhs_value(identity: IdentityId, inputs: CheckInputs, cap: Optional[int] = None):
    """(value, provenance) of the homological side."""
    lefschetz = identity.flavor == Flavor.lefschetz
    if lefschetz:
        inputs = inputs.with_identities()
    value, provenance = LHS[identity.level](identity, inputs, lefschetz, cap)
    if lefschetz and not isinstance(value, Matrix):
        value = inputs.algebra.field.coerce(value)
    return value, provenance


def diagnose(lhs, rhs) -> str:
    """Where two values disagree; matrix entries are reported 1-based."""
    if isinstance(lhs, (IntMatrix, Matrix)) and isinstance(rhs, (IntMatrix, Matrix)):
        if lhs.shape != rhs.shape:
            return f"shapes differ: {lhs.shape} against {rhs.shape}"
        bad = [
            f"({i + 1},{j + 1}): {lhs[i, j]} vs {rhs[i, j]}"
            for i in range(lhs.rows)
            for j in range(lhs.cols)
            if lhs[i, j] != rhs[i, j]
        ]
        return "entries differ at " + "; ".join(bad)
    if isinstance(lhs, list):
        return f"{lhs} vs {rhs}"
    return f"{lhs} vs {rhs} (difference {lhs - rhs})"


def compare(
    check_id: str,
    lhs,
    rhs,
    lhs_provenance: str,
    rhs_provenance: str,
    inputs: str = "",
    identity: Optional[IdentityId] = None,
    started: Optional[float] = None,
) -> VerificationReport:
    passed = bool(lhs == rhs)
    if not passed:
        logger.warning(f"{check_id} failed: {diagnose(lhs, rhs)}")
    elapsed = 0.0 if started is None else (time.perf_counter() - started) * 1000
    return VerificationReport(
        check_id=check_id,
        identity=identity,
        inputs=inputs,
        lhs=render_value(lhs),
        rhs=render_value(rhs),
        passed=passed,
        lhs_provenance=lhs_provenance,
        rhs_provenance=rhs_provenance,
        diagnosis=None if passed else diagnose(lhs, rhs),
        elapsed_ms=elapsed,
    )


def verify(
    identity: IdentityId, inputs: CheckInputs, check_id: Optional[str] = None, cap: Optional[int] = None
) -> VerificationReport:
    """Evaluate both sides of one identity. Engine errors propagate to the caller."""
    started = time.perf_counter()
    ringel = ringel_data(inputs.algebra)
    if identity.flavor == Flavor.lefschetz:
        inputs = inputs.with_identities()
    lhs, lhs_provenance = lhs_value(identity, inputs, cap)
    rhs = rhs_value(identity, inputs, ringel)
    logger.debug(f"{check_id or identity.key}: lhs {lhs}, rhs {rhs}")
    return compare(
        check_id or identity.key,
        lhs,
        rhs,
        lhs_provenance,
        rhs_provenance(identity),
        digest(inputs.m, inputs.n, inputs.phi, inputs.psi),
        identity,
        started,
    )
