import logging
from functools import cached_property
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TypeVar

import pandas as pd

from poroshock.core.exceptions import ConfigError, InvalidFluxError, InvalidStateError, LabError
from poroshock.core.experiment_registry import BaseExperiment
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Frame, Grid1D
from poroshock.models.profile import ShockProfile
from poroshock.profile import solve_profile
from poroshock.schemas.report import CheckResult, ExperimentSummary, Manifest
from poroshock.solver.initial import InitialData, bumps_from_specs
from poroshock.utilities.artifacts import write_csv, write_json
from poroshock.utilities.manifest import build_manifest

logger = logging.getLogger(__name__)

T = TypeVar("T")


class LabExperiment(BaseExperiment):
    """Shared plumbing of the pipelines: flux, profiles, artifacts and checks.

    Artifacts are recorded by their path relative to the output directory so
    that summaries of identical runs are identical.
    """

    def __init__(self, config, out_dir: Path):
        super().__init__(config, out_dir)
        self.summary = ExperimentSummary(kind=self.kind)
        self._profiles: Dict[float, ShockProfile] = {}

    @cached_property
    def manifest(self) -> Manifest:
        return build_manifest(self.kind, self.config, self.config.seed)

    @cached_property
    def flux(self) -> FluxSpec:
        flux = self.config.flux.build()
        try:
            flux.validate(self.config.u_minus)
        except InvalidFluxError as e:
            raise ConfigError(str(e), {"flux": str(e)}) from e
        return flux

    def profile(self, m: Optional[float] = None) -> ShockProfile:
        m = self.config.m if m is None else m
        if m not in self._profiles:
            self._profiles[m] = solve_profile(self.flux, self.config.u_minus, m)
        return self._profiles[m]

    def initial_data(self, profile: ShockProfile) -> InitialData:
        return InitialData(profile, tuple(bumps_from_specs(self.config.bump_specs())))

    def initial_state(self, data: InitialData, grid: Grid1D, frame: Frame = Frame.LAB) -> FieldState:
        try:
            return data.state(grid, frame)
        except InvalidStateError as e:
            raise ConfigError(str(e), {"perturbation.bumps": str(e)}) from e

    def write_table(self, frame: pd.DataFrame, name: str) -> str:
        write_csv(frame, self.out_dir / name, self.manifest)
        self.summary.artifacts.append(name)
        return name

    def write_document(self, payload: Any, name: str) -> str:
        write_json(payload, self.out_dir / name, self.manifest)
        self.summary.artifacts.append(name)
        return name

    def check(
        self,
        name: str,
        passed: bool,
        value: Optional[float] = None,
        threshold: Optional[float] = None,
        detail: str = "",
    ) -> CheckResult:
        if not passed:
            logger.error(f"[{self.kind}] check {name} failed: value={value} threshold={threshold} {detail}")
        return self.summary.add(
            CheckResult(
                name=name,
                passed=bool(passed),
                value=None if value is None else float(value),
                threshold=threshold,
                detail=detail,
            )
        )

    def guarded(self, name: str, func: Callable[[], T]) -> Optional[T]:
        """Run one stage; a LabError becomes a failed check and the run goes on."""
        try:
            return func()
        except ConfigError:
            raise
        except LabError as e:
            self.check(name, False, detail=f"{type(e).__name__}: {e}")
            return None
