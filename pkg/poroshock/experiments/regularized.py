import logging

import numpy as np
import pandas as pd

from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.models.grid import FieldState
from poroshock.schemas.report import ExperimentSummary
from poroshock.solver import cascade, evolve, front_margin, profile_grid

logger = logging.getLogger(__name__)


@register_experiment
class RegularizedExperiment(LabExperiment):
    kind = "regularized"
    description = "Uniformly parabolic cascade against the direct degenerate solver"

    def run(self) -> ExperimentSummary:
        config, settings = self.config, self.config.regularized
        profile = self.profile()
        data = self.initial_data(profile)

        def u0(x: np.ndarray) -> np.ndarray:
            values = profile.value(x)
            for bump in data.bumps:
                values = values + bump.value(x)
            return np.maximum(values, 0.0)

        travel = profile.gamma * config.t_end + front_margin(profile, config.grid.dx, config.t_end)
        grid = profile_grid(profile, config.grid.dx, travel=travel, bumps=data.bumps)
        direct = self.guarded(
            "direct_solver",
            lambda: evolve(
                FieldState(t=0.0, u=u0(grid.centers)), grid, self.flux, config.m, config.t_end,
                observers=[], keep_snapshots=False,
            ),
        )
        if direct is None:
            return self.summary

        indices = sorted(settings.indices)
        rows = self.guarded(
            "cascade",
            lambda: cascade(
                indices, settings.M, self.flux, config.m, config.t_end, u0, config.grid.dx,
                reference=(grid.centers, direct.final.u), window=settings.window,
            ),
        )
        if rows is None:
            return self.summary
        self.write_table(pd.DataFrame(rows), "cascade.csv")

        distances = [row["sup_distance"] for row in rows]
        decreasing = all(later < earlier for earlier, later in zip(distances, distances[1:]))
        self.check(
            "cascade_convergence",
            decreasing,
            value=distances[-1],
            detail=", ".join(f"n={row['n']}: {row['sup_distance']:.3e}" for row in rows),
        )
        return self.summary
