from typing import List, Tuple, Union

from pydantic import field_validator, model_validator

from .settings import BaseLabSettings
from .setting_registry import GroupMetadata, SettingMetadata, SettingType, settings_registry


class LabSettings(BaseLabSettings):
    APP_NAME: str = "poroshock"
    LOG_LEVEL: str = "INFO"

    # PROFILE SETTINGS
    PROFILE_TOL: float = 1e-10
    PROFILE_KNOT_SPACING: float = 0.01
    PROFILE_XI_SPAN: Tuple[float, float] = (-100.0, 100.0)
    PROFILE_RESIDUAL_TOL: float = 1e-6
    PROFILE_SLOPE_TOL: float = 1e-8

    # SOLVER SETTINGS
    CFL_SAFETY: float = 0.4
    MIN_CELLS: int = 8
    BOUNDARY_MARGIN_CELLS: int = 10
    BOUNDARY_ATOL: float = 1e-8

    # CHECK THRESHOLDS
    ROUNDOFF_TOL: float = 1e-12
    CONSERVATION_RTOL: float = 1e-10
    MASS_IDENTITY_TOL: float = 1e-8
    DELTA_TOL: float = 0.005
    ENERGY_SLACK: float = 0.05
    SMALL_DATA_EPS0: float = 0.05
    DECAY_NORM_FLOOR: float = 1e-13

    # REGION DECOMPOSITION
    REGION_C1: float = 0.05
    REGION_Q: int = 4
    PHI_MOMENTS: List[int] = [2, 4, 8]

    # HARNESS
    MAX_WORKERS: int = 1
    CSV_FLOAT_FORMAT: str = "%.17g"

    @field_validator("PHI_MOMENTS", mode="before")
    def assemble_moments(cls, v: Union[str, List[int]]) -> List[int]:
        if isinstance(v, str) and not v.startswith("["):
            return [int(i.strip()) for i in v.split(",")]
        return v

    @field_validator("PROFILE_XI_SPAN", mode="before")
    def assemble_span(cls, v: Union[str, Tuple[float, float]]) -> Tuple[float, float]:
        if isinstance(v, str) and not v.startswith("["):
            lo, hi = (float(i.strip()) for i in v.split(","))
            return (lo, hi)
        return v

    @field_validator("CFL_SAFETY")
    def safety_in_unit_interval(cls, v: float) -> float:
        if not 0.0 < v <= 1.0:
            raise ValueError("CFL_SAFETY must lie in (0, 1]")
        return v

    @field_validator("REGION_Q")
    def q_at_least_four(cls, v: int) -> int:
        if v < 4:
            raise ValueError("REGION_Q must be >= 4")
        return v

    @field_validator("MIN_CELLS", "MAX_WORKERS", "BOUNDARY_MARGIN_CELLS")
    def positive_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @model_validator(mode="after")
    def ordered_span(self) -> "LabSettings":
        lo, hi = self.PROFILE_XI_SPAN
        if not lo < 0.0 < hi:
            raise ValueError("PROFILE_XI_SPAN must bracket the pin at 0")
        return self


# Default settings instance
settings = LabSettings()

# Registry for the active settings instance
_active_settings = settings


def configure_settings(settings_instance):
    """
    Configure the lab to use a custom settings instance.
    The CLI calls this once after applying flag overrides; tests use it
    to tighten or relax thresholds.
    """
    global _active_settings
    _active_settings = settings_instance
    return _active_settings


def get_settings() -> LabSettings:
    """Get the active settings"""
    return _active_settings


# Register metadata for settings
settings_registry.register_group(
    GroupMetadata(id="general", label="General Settings", order=10)
)
settings_registry.register_group(
    GroupMetadata(id="profile", label="Shock Profile", order=20)
)
settings_registry.register_group(
    GroupMetadata(id="solver", label="Finite-Volume Solver", order=30)
)
settings_registry.register_group(
    GroupMetadata(id="checks", label="Acceptance Thresholds", order=40)
)
settings_registry.register_group(
    GroupMetadata(id="analysis", label="Perturbation Analysis", order=50)
)

_METADATA = [
    SettingMetadata(key="LOG_LEVEL", label="Log Level", group="general", type=SettingType.STRING, order=10,
                    description="Root level of the poroshock logger"),
    SettingMetadata(key="MAX_WORKERS", label="Worker Threads", group="general", order=20, min=1,
                    description="Thread fan-out for sweeps and cascades"),
    SettingMetadata(key="CSV_FLOAT_FORMAT", label="CSV Float Format", group="general", type=SettingType.STRING,
                    order=30, description="printf format of every float written to CSV"),
    SettingMetadata(key="PROFILE_TOL", label="Integrator Tolerance", group="profile", order=10,
                    description="Relative tolerance of the profile ODE integrator"),
    SettingMetadata(key="PROFILE_KNOT_SPACING", label="Knot Spacing", group="profile", order=20,
                    description="Spacing of stored profile knots in xi"),
    SettingMetadata(key="PROFILE_XI_SPAN", label="Integration Window", group="profile", type=SettingType.LIST,
                    order=30, description="Default xi window of the profile integration"),
    SettingMetadata(key="PROFILE_RESIDUAL_TOL", label="Residual Tolerance", group="profile", order=40,
                    description="Normalized ODE residual accepted by verify_profile"),
    SettingMetadata(key="PROFILE_SLOPE_TOL", label="Slope Tolerance", group="profile", order=50,
                    description="Tolerance of the monotonicity and derivative-bound checks"),
    SettingMetadata(key="CFL_SAFETY", label="CFL Safety Factor", group="solver", order=10, min=0.0, max=1.0,
                    description="Fraction of the monotonicity time-step bound"),
    SettingMetadata(key="MIN_CELLS", label="Minimum Cells", group="solver", order=20, min=1,
                    description="Lower bound on the number of grid cells"),
    SettingMetadata(key="BOUNDARY_MARGIN_CELLS", label="Boundary Margin", group="solver", order=30, min=1,
                    description="Cells next to each boundary that must stay at far-field values"),
    SettingMetadata(key="BOUNDARY_ATOL", label="Boundary Tolerance", group="solver", order=40,
                    description="Absolute agreement with far-field values in the margin cells"),
    SettingMetadata(key="ROUNDOFF_TOL", label="Roundoff Threshold", group="checks", order=10,
                    description="Translation and comparison discrepancy accepted as roundoff"),
    SettingMetadata(key="CONSERVATION_RTOL", label="Conservation Tolerance", group="checks", order=20,
                    description="Relative drift accepted by conservation and contraction checks"),
    SettingMetadata(key="MASS_IDENTITY_TOL", label="Mass Identity Tolerance", group="checks", order=30,
                    description="Drift accepted on the integral of the perturbation"),
    SettingMetadata(key="DELTA_TOL", label="Rate Slack", group="checks", order=40,
                    description="Slack subtracted from the theoretical decay rate"),
    SettingMetadata(key="ENERGY_SLACK", label="Energy Slack", group="checks", order=50,
                    description="Slack on the decay exponent of the antiderivative moments"),
    SettingMetadata(key="SMALL_DATA_EPS0", label="Small-Data Threshold", group="analysis", order=10,
                    description="H1 size of the initial antiderivative below which energy bounds are claimed"),
    SettingMetadata(key="DECAY_NORM_FLOOR", label="Decay Floor", group="analysis", order=20,
                    description="Norms at or below this value count as fully decayed"),
    SettingMetadata(key="REGION_C1", label="Region Constant C1", group="analysis", order=30,
                    description="Small threshold constant of the region decomposition"),
    SettingMetadata(key="REGION_Q", label="Moment Index q", group="analysis", order=40, min=4,
                    description="Default L^q index of the region diagnostics"),
    SettingMetadata(key="PHI_MOMENTS", label="Antiderivative Moments", group="analysis", type=SettingType.LIST,
                    order=50, description="p values of the recorded antiderivative moments"),
]

for _metadata in _METADATA:
    settings_registry.register_setting(_metadata)
