import logging
from typing import Callable, Optional

import numpy as np

from poroshock.core.config import get_settings
from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.models.flux import FluxSpec
from poroshock.profile import export_profile, free_boundary_slope, vacuum_slope, verify_profile
from poroshock.schemas.report import ExperimentSummary

logger = logging.getLogger(__name__)

ORACLE_WINDOW = (-30.0, 30.0)
ORACLE_TOL = 1e-6
VACUUM_SLOPE_RTOL = 0.02


def logistic_oracle(flux: FluxSpec, u_minus: float) -> Optional[Callable[[np.ndarray], np.ndarray]]:
    """Closed-form m = 1 wave u_-/(1 + exp(c u_- xi)) of f = c u^2; None for other fluxes."""
    if flux.polynomial is None:
        return None
    coef = np.trim_zeros(flux.polynomial.coef, "b")
    if len(coef) != 3 or coef[0] != 0.0 or coef[1] != 0.0:
        return None
    rate = float(coef[2]) * u_minus
    return lambda xi: u_minus / (1.0 + np.exp(rate * np.asarray(xi, dtype=float)))


@register_experiment
class ProfileExperiment(LabExperiment):
    kind = "profile"
    description = "Build and verify the viscous shock profile"

    def run(self) -> ExperimentSummary:
        config = self.config
        slope_tol = get_settings().PROFILE_SLOPE_TOL
        profile = self.profile()
        report = verify_profile(profile, self.flux)

        for path in export_profile(profile, self.out_dir, self.manifest):
            self.summary.artifacts.append(path.name)
        self.write_document(report, "profile_report.json")

        self.check("profile_valid", report.passed, value=report.max_residual)
        self.check(
            "derivative_bound",
            report.max_derivative_bound_violation <= slope_tol,
            value=report.max_derivative_bound_violation,
            threshold=slope_tol,
        )

        oracle = logistic_oracle(self.flux, config.u_minus) if config.m == 1.0 else None
        if oracle is not None:
            xi = np.linspace(*ORACLE_WINDOW, 6001)
            error = float(np.max(np.abs(profile.value(xi) - oracle(xi))))
            self.check("logistic_oracle", error < ORACLE_TOL, value=error, threshold=ORACLE_TOL)

        if config.m > 1.0:
            beyond = profile.value(profile.x_R + np.array([0.0, 1.0, 10.0, 100.0]))
            self.check(
                "free_boundary",
                profile.has_free_boundary and not np.any(beyond),
                value=profile.x_R,
            )
            measured = free_boundary_slope(profile)
            expected = vacuum_slope(self.flux, config.u_minus, config.m)
            gap = abs(measured - expected) / abs(expected) if measured is not None else float("inf")
            self.check("vacuum_slope", gap <= VACUUM_SLOPE_RTOL, value=gap, threshold=VACUUM_SLOPE_RTOL)
        return self.summary
