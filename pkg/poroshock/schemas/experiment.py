try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from poroshock.core.exceptions import ConfigError
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import Frame

ExperimentKind = Literal["profile", "evolve", "decay", "semigroup", "inequalities", "regularized", "report"]


class SectionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FluxConfig(SectionModel):
    """[flux]: burgers f = u^2/2, quadratic f = c u^2, or a polynomial by ascending coefficients"""
    kind: Literal["burgers", "quadratic", "polynomial"] = "burgers"
    coefficient: float = Field(default=1.0, gt=0.0)
    coefficients: Optional[List[float]] = None

    @model_validator(mode="after")
    def polynomial_needs_coefficients(self) -> "FluxConfig":
        if self.kind == "polynomial" and not self.coefficients:
            raise ValueError("A polynomial flux needs its coefficients")
        return self

    def build(self) -> FluxSpec:
        if self.kind == "quadratic":
            return FluxSpec.quadratic(self.coefficient)
        if self.kind == "polynomial":
            return FluxSpec.from_polynomial(self.coefficients)
        return FluxSpec.burgers()


class GridConfig(SectionModel):
    """[grid]: spacing and optional minimal extent; the domain grows to fit the run"""
    dx: float = Field(default=0.05, gt=0.0)
    x_left: Optional[float] = None
    x_right: Optional[float] = None


class BumpConfig(SectionModel):
    shape: Literal["gaussian", "dipole", "cosine"] = "gaussian"
    center: float = -2.0
    width: float = Field(default=1.0, gt=0.0)
    amplitude: Optional[float] = None
    mass: Optional[float] = None

    @model_validator(mode="after")
    def amplitude_or_mass(self) -> "BumpConfig":
        if (self.amplitude is None) == (self.mass is None):
            raise ValueError("Give exactly one of amplitude and mass")
        if self.mass is not None and self.shape == "dipole":
            raise ValueError("A dipole has zero mass; give its amplitude")
        return self


class PerturbationConfig(SectionModel):
    bumps: List[BumpConfig] = []


class DecayConfig(SectionModel):
    """[decay]: fit window in t, traveling window in xi and diagnostic cadence"""
    window: Tuple[float, float] = (1.0, 200.0)
    xi_window: Optional[Tuple[float, float]] = None
    moments: Optional[List[int]] = None
    q: Optional[int] = Field(default=None, ge=4)
    region_every: int = Field(default=10, ge=1)
    interpolation_p: float = Field(default=4.0, gt=2.0)
    preshift: bool = True
    refine_regions: bool = False


class SemigroupConfig(SectionModel):
    seeds: int = Field(default=50, ge=1)
    t_end: float = Field(default=1.0, gt=0.0)
    cadence: float = Field(default=0.25, gt=0.0)
    exponents: List[float] = [1.1, 1.25, 4.0 / 3.0]
    spacings: List[float] = [0.05, 0.1]


class RegularizedConfig(SectionModel):
    indices: List[int] = [10, 40, 160]
    M: float = Field(default=1.2, gt=0.0)
    window: Tuple[float, float] = (-4.0, 4.0)


class ReportConfig(SectionModel):
    """[report]: run directories to collect; empty means the siblings of the output directory"""
    runs: List[Path] = []


class InequalityConfig(SectionModel):
    mus: List[float] = [1.0, 1.5, 2.0, 3.0]
    sample_counts: Tuple[int, int] = (10_000, 100_000)
    power_mus: List[float] = [0.25, 0.5, 0.75, 1.0]
    power_samples: int = Field(default=10_000, ge=1)
    generators: List[Literal["gaussian", "bump", "ramp", "random-spline"]] = ["gaussian", "bump", "random-spline"]
    family_count: int = Field(default=16, ge=1)
    moments: List[float] = [2.0, 4.0, 8.0]
    exponents: List[float] = [1.1, 1.25, 4.0 / 3.0]
    alphas: List[float] = [1.0, 1.5, 2.0]
    gauge_N: List[float] = [0.5, 1.0, 4.0]


class ExperimentConfig(SectionModel):
    """One experiment, read from a TOML file with sections.

    m lies in (1, 2); m = 1 is accepted only for oracle runs. Without a frame
    each pipeline uses its own default. Bump amplitudes must keep
    u0 = U + bumps non-negative, which is checked once the profile exists.
    """
    kind: ExperimentKind
    m: float = 1.25
    u_minus: float = Field(default=1.0, gt=0.0)
    t_end: float = Field(default=10.0, ge=0.0)
    cadence: Optional[float] = Field(default=1.0, gt=0.0)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    frame: Optional[Frame] = None
    reference: Literal["profile", "evolved"] = "evolved"
    oracle: bool = False
    out: Optional[Path] = None

    flux: FluxConfig = FluxConfig()
    grid: GridConfig = GridConfig()
    perturbation: PerturbationConfig = PerturbationConfig()
    decay: DecayConfig = DecayConfig()
    semigroup: SemigroupConfig = SemigroupConfig()
    regularized: RegularizedConfig = RegularizedConfig()
    inequalities: InequalityConfig = InequalityConfig()
    report: ReportConfig = ReportConfig()

    @model_validator(mode="after")
    def exponent_range(self) -> "ExperimentConfig":
        if self.oracle:
            if not 1.0 <= self.m < 2.0:
                raise ValueError(f"Oracle runs need 1 <= m < 2, got m={self.m}")
        elif not 1.0 < self.m < 2.0:
            raise ValueError(f"m must lie in (1, 2), got m={self.m}; m = 1 needs oracle = true")
        return self

    def bump_specs(self) -> List[Dict[str, Any]]:
        return [b.model_dump() for b in self.perturbation.bumps]


def _field_errors(error: ValidationError) -> Dict[str, str]:
    fields = {}
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        fields[location] = item["msg"]
    return fields


def parse_config(data: Dict[str, Any]) -> ExperimentConfig:
    """Validate a mapping; field problems surface as one ConfigError."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        fields = _field_errors(e)
        raise ConfigError(f"Invalid experiment configuration ({len(fields)} field errors)", fields) from e


def _set_path(data: Dict[str, Any], dotted: str, value: Any) -> None:
    node = data
    *parents, leaf = dotted.split(".")
    for key in parents:
        node = node.setdefault(key, {})
    node[leaf] = value


def load_config(
    path: Optional[Union[str, Path]] = None,
    kind: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> ExperimentConfig:
    """Read a TOML config and apply dotted overrides (``grid.dx``, ``seed``...).

    ``kind`` replaces the file's kind; None overrides are ignored.
    """
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            with open(Path(path), "rb") as handle:
                data = tomllib.load(handle)
        except FileNotFoundError as e:
            raise ConfigError(f"Config file {path} not found", {"config": str(path)}) from e
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"Config file {path} is not valid TOML: {e}", {"config": str(e)}) from e
    if kind is not None:
        data["kind"] = kind
    for dotted, value in (overrides or {}).items():
        if value is not None:
            _set_path(data, dotted, value)
    return parse_config(data)
