import logging

import numpy as np

from poroshock.core.config import get_settings
from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.models.grid import Frame
from poroshock.schemas.report import ExperimentSummary
from poroshock.solver import (
    create_observers,
    evolve,
    export_snapshots,
    front_margin,
    gradient_diagnostics,
    norms_table,
    profile_grid,
)

logger = logging.getLogger(__name__)

OBSERVERS = ("mass", "extrema", "gradients", "steps")


@register_experiment
class EvolveExperiment(LabExperiment):
    kind = "evolve"
    description = "Evolve a perturbed shock and record norms, snapshots and gradient bounds"

    def run(self) -> ExperimentSummary:
        config = self.config
        app_settings = get_settings()
        frame = config.frame or Frame.LAB
        profile = self.profile()
        data = self.initial_data(profile)
        travel = profile.gamma * config.t_end if frame == Frame.LAB else 0.0
        travel += front_margin(profile, config.grid.dx, config.t_end)
        grid = profile_grid(
            profile, config.grid.dx, travel=travel, x_left=config.grid.x_left, x_right=config.grid.x_right,
            bumps=data.bumps,
        )
        state = self.initial_state(data, grid, frame)

        trajectory = self.guarded(
            "evolution",
            lambda: evolve(
                state, grid, self.flux, config.m, config.t_end, cadence=config.cadence,
                observers=create_observers(OBSERVERS), gamma=profile.gamma,
            ),
        )
        if trajectory is None:
            return self.summary
        logger.info(f"Evolved {grid.n_cells} cells to t={config.t_end:g} in {trajectory.steps} steps")

        for path in export_snapshots(trajectory, self.out_dir, self.manifest):
            self.summary.artifacts.append(path.name)
        self.write_table(norms_table(trajectory), "norms.csv")

        series = trajectory.series()
        min_u = float(series["min_u"].min())
        self.check("nonnegative", min_u >= 0.0, value=min_u, threshold=0.0)

        ceiling = max(float(np.max(state.u)), grid.u_left, grid.u_right)
        max_u = float(series["max_u"].max())
        self.check("maximum_principle", max_u <= ceiling * (1.0 + app_settings.ROUNDOFF_TOL), value=max_u,
                   threshold=ceiling)

        scale = max(float(series["mass"].abs().max()), 1.0)
        drift = float(series["mass_drift"].abs().max()) / scale
        self.check("mass_balance", drift <= app_settings.CONSERVATION_RTOL, value=drift,
                   threshold=app_settings.CONSERVATION_RTOL)

        report = gradient_diagnostics(trajectory.snapshots, grid, config.m)
        self.write_document(report, "gradients.json")
        self.check("gradient_bound", report.bound_ok, value=report.max_bound_ratio, threshold=1.0)
        return self.summary
