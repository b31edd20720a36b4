"""Problem-file schema, loading and canonical emission.

Vertices are 1-based in files. Matrices are row-major lists of exact scalars,
written as "p/q" strings (plain integers are accepted). A bimodule's "dims" is
its dimension matrix: row i, column j holds dim f_j M e_i.
"""
import json
from dataclasses import dataclass, field as dataclass_field
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as PydanticValidationError

from src.algebra.algebra import Algebra, build_algebra
from src.algebra.constructions import opposite_algebra, tensor_algebra
from src.algebra.quiver import Arrow, Presentation, Quiver
from src.complexes.complex import BimoduleComplex, BoundedComplex, ChainEndomorphism
from src.core.errors import DimensionMismatchError, HRRError, ValidationError
from src.linalg.field import FieldSpec, format_scalar
from src.linalg.matrix import Matrix
from src.modules.bimodule import BimoduleHandle
from src.modules.representation import ModuleMorphism, Representation, check_module

Scalar = Union[str, int]
MatrixRows = list[list[Scalar]]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ArrowSpec(_Strict):
    name: str
    source: int
    target: int


class TermSpec(_Strict):
    coeff: Scalar = "1"
    path: list[str]


class AlgebraSpec(_Strict):
    vertices: int
    arrows: list[ArrowSpec] = []
    relations: list[list[TermSpec]] = []


class ModuleSpec(_Strict):
    algebra: str
    side: Literal["right", "left"] = "right"
    dims: list[int]
    actions: dict[str, MatrixRows] = {}


class BimoduleSpec(_Strict):
    left_algebra: str
    right_algebra: str
    dims: list[list[int]]
    actions: dict[str, MatrixRows] = {}


class EndoSpec(_Strict):
    of: str
    maps: Optional[list[MatrixRows]] = None
    degrees: Optional[dict[str, list[MatrixRows]]] = None


class ComplexSpec(_Strict):
    kind: Literal["module", "bimodule"] = "module"
    lo: int = 0
    components: list[str]
    differentials: list[list[MatrixRows]] = []


class CheckSpec(_Strict):
    identity: Optional[str] = None
    suite: Optional[Literal["all", "hrr", "lefschetz", "corollaries", "lemmas"]] = None
    algebra: Optional[str] = None
    m: Optional[str] = None
    n: Optional[str] = None
    phi: Optional[str] = None
    psi: Optional[str] = None
    id: Optional[str] = None


class ProblemSchema(_Strict):
    field: Union[Literal["Q"], dict[Literal["Fp"], int]] = "Q"
    algebras: dict[str, AlgebraSpec]
    modules: dict[str, ModuleSpec] = {}
    bimodules: dict[str, BimoduleSpec] = {}
    endos: dict[str, EndoSpec] = {}
    complexes: dict[str, ComplexSpec] = {}
    checks: list[CheckSpec] = []


Operand = Union[Representation, BimoduleHandle, BoundedComplex, BimoduleComplex]


@dataclass
class ProblemFile:
    """The validated object graph of a problem file."""

    field: FieldSpec
    algebras: dict[str, Algebra]
    modules: dict[str, Representation] = dataclass_field(default_factory=dict)
    bimodules: dict[str, BimoduleHandle] = dataclass_field(default_factory=dict)
    endos: dict[str, Union[ModuleMorphism, ChainEndomorphism]] = dataclass_field(default_factory=dict)
    complexes: dict[str, Union[BoundedComplex, BimoduleComplex]] = dataclass_field(default_factory=dict)
    checks: list[CheckSpec] = dataclass_field(default_factory=list)
    source: Optional[ProblemSchema] = None

    def operand(self, name: str, location: str) -> Operand:
        for table in (self.modules, self.bimodules, self.complexes):
            if name in table:
                return table[name]
        raise ValidationError(location, f"unknown operand {name!r}")

    def endomorphism(self, name: str, location: str):
        if name not in self.endos:
            raise ValidationError(location, f"unknown endomorphism {name!r}")
        return self.endos[name]


def field_from_json(value) -> FieldSpec:
    if value == "Q":
        return FieldSpec.rationals()
    try:
        return FieldSpec.prime(int(value["Fp"]))
    except ValueError as e:
        raise ValidationError("field", str(e)) from e


def _matrix(rows: MatrixRows, shape: tuple[int, int], fld: FieldSpec, location: str) -> Matrix:
    if shape[0] == 0 or shape[1] == 0:
        if any(rows):
            raise ValidationError(location, f"expected an empty {shape} matrix")
        return Matrix.zeros(shape[0], shape[1], fld)
    try:
        m = Matrix.from_rows(rows, fld, cols=shape[1])
    except (DimensionMismatchError, ValidationError) as e:
        raise ValidationError(location, str(e)) from e
    if m.shape != shape:
        raise ValidationError(location, f"matrix has shape {m.shape}, expected {shape}")
    return m


def _presentation(name: str, spec: AlgebraSpec, fld: FieldSpec) -> Presentation:
    where = f"algebras.{name}"
    arrows = tuple(Arrow(a.name, a.source - 1, a.target - 1) for a in spec.arrows)
    try:
        quiver = Quiver(spec.vertices, arrows)
        bare = Presentation(quiver, (), fld)
        relations = []
        for k, rel in enumerate(spec.relations):
            for t in rel:
                unknown = [x for x in t.path if x not in quiver.arrow_index]
                if unknown:
                    raise ValidationError(f"{where}.relations[{k}]", f"unknown arrow {unknown[0]!r}")
            relations.append(bare.relation(*((t.coeff, t.path) for t in rel)))
        return Presentation(quiver, tuple(relations), fld)
    except ValidationError as e:
        if e.location.startswith(where):
            raise
        raise ValidationError(f"{where}.{e.location}", e.message) from e


def _actions(a: Algebra, dims: tuple[int, ...], actions: dict[str, MatrixRows], where: str) -> tuple[Matrix, ...]:
    known = {arrow.name for arrow in a.quiver.arrows}
    for name in actions:
        if name not in known:
            raise ValidationError(f"{where}.actions.{name}", "no such arrow")
    out = []
    for arrow in a.quiver.arrows:
        shape = (dims[arrow.source], dims[arrow.target])
        rows = actions.get(arrow.name)
        if rows is None:
            out.append(Matrix.zeros(shape[0], shape[1], a.field))
        else:
            out.append(_matrix(rows, shape, a.field, f"{where}.actions.{arrow.name}"))
    return tuple(out)


def _checked(m: Representation, where: str) -> Representation:
    try:
        check_module(m)
    except ValidationError as e:
        raise ValidationError(f"{where}.{e.location}", e.message) from e
    return m


def _algebra(problem: ProblemFile, name: str, where: str) -> Algebra:
    if name not in problem.algebras:
        raise ValidationError(where, f"unknown algebra {name!r}")
    return problem.algebras[name]


def _vertex_maps(source: Representation, target: Representation, maps: list[MatrixRows], where: str) -> ModuleMorphism:
    if len(maps) != source.n:
        raise ValidationError(where, f"{len(maps)} vertex maps for {source.n} vertices")
    fld = source.field
    return ModuleMorphism(source, target, tuple(
        _matrix(rows, (source.dims[i], target.dims[i]), fld, f"{where}[{i + 1}]") for i, rows in enumerate(maps)
    ))


def _intertwining(f: ModuleMorphism, where: str) -> ModuleMorphism:
    try:
        f.check()
    except ValidationError as e:
        raise ValidationError(f"{where}.{e.location}", e.message) from e
    return f


def _located(where: str, build):
    try:
        return build()
    except ValidationError as e:
        raise ValidationError(f"{where}.{e.location}", e.message) from e


def build_problem(schema: ProblemSchema, field_override: Optional[FieldSpec] = None) -> ProblemFile:
    fld = field_override or field_from_json(schema.field)
    problem = ProblemFile(fld, {}, checks=list(schema.checks), source=schema)
    for name, spec in schema.algebras.items():
        problem.algebras[name] = build_algebra(_presentation(name, spec, fld))

    for name, spec in schema.modules.items():
        where = f"modules.{name}"
        a = _algebra(problem, spec.algebra, f"{where}.algebra")
        if spec.side == "left":
            a = opposite_algebra(a)
        if len(spec.dims) != a.n:
            raise ValidationError(f"{where}.dims", f"{len(spec.dims)} dimensions for {a.n} vertices")
        dims = tuple(spec.dims)
        problem.modules[name] = _checked(Representation(a, dims, _actions(a, dims, spec.actions, where)), where)

    for name, spec in schema.bimodules.items():
        where = f"bimodules.{name}"
        b = _algebra(problem, spec.left_algebra, f"{where}.left_algebra")
        a = _algebra(problem, spec.right_algebra, f"{where}.right_algebra")
        if len(spec.dims) != a.n or any(len(row) != b.n for row in spec.dims):
            raise ValidationError(f"{where}.dims", f"expected a {a.n} × {b.n} dimension matrix")
        storage = tensor_algebra(opposite_algebra(b), a)
        dims = tuple(spec.dims[i][j] for j in range(b.n) for i in range(a.n))
        module = _checked(Representation(storage, dims, _actions(storage, dims, spec.actions, where)), where)
        problem.bimodules[name] = BimoduleHandle(b, a, module)

    for name, spec in schema.complexes.items():
        where = f"complexes.{name}"
        table = problem.modules if spec.kind == "module" else problem.bimodules
        comps = []
        for k, ref in enumerate(spec.components):
            if ref not in table:
                raise ValidationError(f"{where}.components[{k}]", f"unknown {spec.kind} {ref!r}")
            comps.append(table[ref])
        reps = [c.module if isinstance(c, BimoduleHandle) else c for c in comps]
        if len(spec.differentials) != len(reps) - 1:
            raise ValidationError(f"{where}.differentials", f"expected {len(reps) - 1} differentials")
        diffs = tuple(
            _vertex_maps(reps[k], reps[k + 1], maps, f"{where}.differentials[{k}]")
            for k, maps in enumerate(spec.differentials)
        )
        cx = _located(where, lambda: BoundedComplex(spec.lo, tuple(reps), diffs))
        if spec.kind == "bimodule":
            first = comps[0]
            problem.complexes[name] = BimoduleComplex(first.left, first.right, cx)
        else:
            problem.complexes[name] = cx

    for name, spec in schema.endos.items():
        where = f"endos.{name}"
        target = problem.operand(spec.of, f"{where}.of")
        if isinstance(target, (Representation, BimoduleHandle)):
            rep = target.module if isinstance(target, BimoduleHandle) else target
            if spec.maps is None:
                raise ValidationError(f"{where}.maps", "module endomorphisms list one map per vertex")
            problem.endos[name] = _intertwining(_vertex_maps(rep, rep, spec.maps, f"{where}.maps"), f"{where}.maps")
            continue
        cx = target.complex if isinstance(target, BimoduleComplex) else target
        if spec.degrees is None:
            raise ValidationError(f"{where}.degrees", "chain endomorphisms list maps per degree")
        maps = {}
        for key, vertex_maps in spec.degrees.items():
            l = int(key)
            if l not in cx.degrees():
                raise ValidationError(f"{where}.degrees.{key}", "degree outside the complex")
            m = cx.component(l)
            maps[l] = _intertwining(_vertex_maps(m, m, vertex_maps, f"{where}.degrees.{key}"), f"{where}.degrees.{key}")
        problem.endos[name] = _located(where, lambda: ChainEndomorphism(cx, cx, maps))
    return problem


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"]) or "<root>"


def parse(text: str, field_override: Optional[FieldSpec] = None) -> ProblemFile:
    """Validate a problem file; every failure is a ValidationError naming its location."""
    try:
        schema = ProblemSchema.model_validate_json(text)
    except PydanticValidationError as e:
        first = e.errors()[0]
        raise ValidationError(_location(first), first["msg"]) from e
    try:
        return build_problem(schema, field_override)
    except HRRError:
        raise
    except ValueError as e:
        raise ValidationError("problem", str(e)) from e


def _canonical_rows(rows: MatrixRows, fld: FieldSpec) -> list[list[str]]:
    return [[format_scalar(fld.coerce(x)) for x in row] for row in rows]


def canonical_schema(problem: ProblemFile) -> dict:
    """The source schema with every scalar in canonical "p/q" form."""
    fld = problem.field
    data = problem.source.model_dump(mode="json", exclude_none=True)
    data["field"] = fld.to_json()
    for alg in data["algebras"].values():
        for rel in alg.get("relations", []):
            for t in rel:
                t["coeff"] = format_scalar(fld.coerce(t["coeff"]))
    for spec in list(data.get("modules", {}).values()) + list(data.get("bimodules", {}).values()):
        spec["actions"] = {k: _canonical_rows(v, fld) for k, v in spec.get("actions", {}).items()}
    for endo in data.get("endos", {}).values():
        if "maps" in endo:
            endo["maps"] = [_canonical_rows(m, fld) for m in endo["maps"]]
        if "degrees" in endo:
            endo["degrees"] = {k: [_canonical_rows(m, fld) for m in v] for k, v in endo["degrees"].items()}
    for cx in data.get("complexes", {}).values():
        cx["differentials"] = [[_canonical_rows(m, fld) for m in d] for d in cx.get("differentials", [])]
    return data


def emit(problem: ProblemFile) -> str:
    """Canonical JSON text; parse(emit(p)) rebuilds the same object graph."""
    return json.dumps(canonical_schema(problem), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
