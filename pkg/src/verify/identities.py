"""Identity ids and the verification report model."""
import hashlib
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

from src.complexes.complex import BimoduleComplex, BoundedComplex, ChainMap
from src.linalg.field import format_scalar
from src.linalg.matrix import IntMatrix, Matrix
from src.modules.bimodule import BimoduleHandle
from src.modules.representation import ModuleMorphism, Representation


class Level(str, Enum):
    module = "module"
    bimodule = "bimodule"
    complex = "complex"
    bimodule_complex = "bimodule-complex"


class Version(str, Enum):
    cohomological = "cohomological"
    homological = "homological"
    hochschild_cohomological = "hochschild_cohomological"
    hochschild_homological = "hochschild_homological"


class Flavor(str, Enum):
    hrr = "HRR"
    lefschetz = "Lefschetz"


HOCHSCHILD = (Version.hochschild_cohomological, Version.hochschild_homological)


class IdentityId(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: Level
    version: Version
    flavor: Flavor

    @model_validator(mode="after")
    def _hochschild_levels(self):
        if self.version in HOCHSCHILD and self.level not in (Level.module, Level.complex):
            raise ValueError(f"{self.version.value} exists only at the module and complex levels")
        return self

    @property
    def key(self) -> str:
        return f"{self.level.value}.{self.version.value}.{self.flavor.value}"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        level, version, flavor = text.split(".")
        return cls(level=level, version=version, flavor=flavor)


def all_identities(levels: Optional[list[Level]] = None, flavors: Optional[list[Flavor]] = None) -> list[IdentityId]:
    out = []
    for level in levels or list(Level):
        for version in Version:
            if version in HOCHSCHILD and level not in (Level.module, Level.complex):
                continue
            for flavor in flavors or list(Flavor):
                out.append(IdentityId(level=level, version=version, flavor=flavor))
    return out


ReportValue = Union[int, str, list[int], list[list[str]]]


def render_value(value) -> ReportValue:
    if isinstance(value, IntMatrix):
        return [[str(x) for x in row] for row in value.to_ints()]
    if isinstance(value, Matrix):
        return value.to_strings()
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, list):
        return [int(v) for v in value]
    return format_scalar(value)


class VerificationReport(BaseModel):
    check_id: str
    identity: Optional[IdentityId] = None
    inputs: str = ""
    lhs: Optional[ReportValue] = None
    rhs: Optional[ReportValue] = None
    passed: bool
    lhs_provenance: str = ""
    rhs_provenance: str = ""
    diagnosis: Optional[str] = None
    elapsed_ms: float = 0.0

    def deterministic(self) -> dict:
        """The report without its timing, for reproducibility comparisons."""
        return self.model_dump(mode="json", exclude={"elapsed_ms"})


def digest(*parts) -> str:
    """Short content hash of the operands' canonical text."""
    text = "|".join(describe(p) for p in parts)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def describe(obj) -> str:
    if obj is None:
        return "-"
    if isinstance(obj, Representation):
        return f"{obj.dims}:" + ";".join(str(x.to_strings()) for x in obj.actions)
    if isinstance(obj, ModuleMorphism):
        return ";".join(str(f.to_strings()) for f in obj.maps)
    if isinstance(obj, BimoduleHandle):
        return describe(obj.module)
    if isinstance(obj, BimoduleComplex):
        return describe(obj.complex)
    if isinstance(obj, BoundedComplex):
        comps = ",".join(describe(m) for m in obj.components)
        diffs = ",".join(describe(d) for d in obj.differentials)
        return f"[{obj.lo}]{comps}/{diffs}"
    if isinstance(obj, ChainMap):
        return ",".join(describe(obj.at(l)) for l in obj.source.degrees())
    return str(obj)
