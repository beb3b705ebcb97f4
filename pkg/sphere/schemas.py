"""
JSON documents read and written by the command-line tools.

Rationals travel as canonical "p/q" or "p" strings so files round-trip
bit-exactly; dot labels in every document are 1-based.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import ConfigParseError, GeometryError
from .geom_core import DotConfig, PlanarPoint, format_rational, parse_rational


class DotModel(BaseModel):
    u: str = Field(..., description="Planar u coordinate as a canonical rational string, e.g. '3/7'.")
    v: str = Field(..., description="Planar v coordinate as a canonical rational string, e.g. '-1/2'.")

    @field_validator('u', 'v')
    def canonical_rational(cls, value):
        parse_rational(value)
        return value

    def to_planar(self) -> PlanarPoint:
        return PlanarPoint(parse_rational(self.u), parse_rational(self.v))


class ConfigurationFile(BaseModel):
    dots: List[DotModel] = Field(..., description="Planar provenance of the dots, lifted onto the sphere in order.", min_length=1)
    name: Optional[str] = Field(None, description="Optional label, e.g. the name a configuration is stored under.")
    description: Optional[str] = Field(None, description="Optional free text.")

    def to_config(self) -> DotConfig:
        return DotConfig.from_planar(d.to_planar() for d in self.dots)

    @classmethod
    def from_config(cls, config: DotConfig, name: Optional[str] = None) -> "ConfigurationFile":
        planar = config.planar_provenance
        if planar is None:
            planar = DotConfig.from_sphere(config.dots).planar_provenance
        return cls(dots=[DotModel(u=format_rational(p.u), v=format_rational(p.v)) for p in planar], name=name)


class HistogramEntry(BaseModel):
    k: int
    l: int
    count: int
    expected: Optional[int] = None


class InteriorEntry(BaseModel):
    interior: int = Field(..., description="Dots inside the planar image of the incident circle.")
    count: int


class CountsReport(BaseModel):
    n: int
    incident_histogram: List[HistogramEntry]
    avoidant: List[HistogramEntry]
    oriented_incident: Dict[str, int] = Field(default_factory=dict, description="Oriented incident circles keyed by left count.")
    hull_faces: Optional[int] = None
    hull_edges: Optional[int] = None
    planar_interior_histogram: List[InteriorEntry] = Field(default_factory=list)
    formula_match: bool


class StrataModel(BaseModel):
    whites: int
    blacks: int
    edges: int
    regions: int

    @classmethod
    def from_tuple(cls, counts) -> "StrataModel":
        whites, blacks, edges, regions = counts
        return cls(whites=whites, blacks=blacks, edges=edges, regions=regions)


class VertexModel(BaseModel):
    label: str
    triple: List[int] = Field(..., description="Dots on the incident circle, in the orientation whose left side is `near`.")
    color: str
    near: List[int]
    center: List[float] = Field(..., description="Floating left center, for layout only.")


class EdgeModel(BaseModel):
    label: str
    pair: List[int]
    near: List[int]
    endpoints: List[str]
    regions: List[List[int]]


class GraphReport(BaseModel):
    n: int
    k: int
    counts: StrataModel
    expected: StrataModel
    formula_match: bool
    euler_characteristic: int
    connected: bool
    antipodal: Optional[bool] = None
    gluing: Optional[bool] = None
    vertices: List[VertexModel]
    edges: List[EdgeModel]
    regions: List[List[int]]
    config: ConfigurationFile


class WallModel(BaseModel):
    quadruple: List[int]
    interval: List[str] = Field(..., description="Isolating interval (lo, hi) as rational strings.")
    crossing: bool
    direction: int


class MoveEventModel(BaseModel):
    quadruple: List[int]
    interval: List[str]
    kind: str
    antipodal_paired: bool
    second_kind: Optional[str] = None
    direction: int
    outside_left: List[int]
    removed: List[str]
    added: List[str]
    counts_before: StrataModel
    counts_after: StrataModel


class MoveLogReport(BaseModel):
    n: int
    k: int
    attempts: int
    perturbed: bool
    endpoint_match: bool
    events: List[MoveEventModel]
    touches: List[WallModel] = Field(default_factory=list)
    end_config: Optional[ConfigurationFile] = None


class CheckResult(BaseModel):
    name: str
    passed: bool
    cells: int = 0
    failures: List[str] = Field(default_factory=list)
    seconds: float = 0.0


class VerifySummary(BaseModel):
    n_range: List[int]
    k_range: Optional[List[int]] = Field(None, description="Orders k checked; every order when omitted.")
    seeds: int
    checks: List[CheckResult]
    passed: bool
    seconds: float


# --- Files ---

def read_configuration(path: str) -> DotConfig:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise ConfigParseError(f"Cannot read configuration '{path}': {e}")
    return parse_configuration(text, source=path)


def parse_configuration(text: str, source: str = "<input>") -> DotConfig:
    try:
        document = ConfigurationFile.model_validate_json(text)
    except ValidationError as e:
        raise ConfigParseError(f"Invalid configuration in {source}: {e.errors()[0]['msg']}")
    try:
        return document.to_config()
    except GeometryError:
        raise
    except ValueError as e:
        raise ConfigParseError(f"Invalid configuration in {source}: {e}")


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def write_model(model: BaseModel, path: str):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dump_model(model))
