"""
Long-time decay of a shifted perturbation of the shock.

The run is pre-shifted so that the perturbation has zero mass, evolved
(by default in the traveling frame) and measured at every record: norms
of phi and of its antiderivative Phi, the perturbation mass, the sup-norm
interpolation ratio and, every ``region_every`` records, the B_1 region
integrals.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from poroshock.analysis import (
    b1_integrals,
    compute_shift,
    decay_fit,
    decay_record,
    interpolation_ratio,
    perturbation,
    perturbation_mass,
    phi_lp_energy_check,
    rate_chain,
    region_rows,
    sup_rate,
    theorem_rate,
)
from poroshock.core.config import get_settings
from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.models.grid import Frame, Grid1D, Trajectory
from poroshock.models.profile import ShockProfile
from poroshock.models.series import DecaySeries, optional_float
from poroshock.schemas.analysis import RegionDiagConfig
from poroshock.schemas.report import ExperimentSummary, RegionReport
from poroshock.solver import InitialData, evolve, evolve_pair, front_margin, profile_grid

logger = logging.getLogger(__name__)

REGION_COLUMNS = ["t", "region", "measure", "B1_integral", "flagged_measure"]


@dataclass
class DecayRun:
    """Everything measured along one decay run."""
    grid: Grid1D
    shift: float
    series: DecaySeries
    masses: List[float] = field(default_factory=list)
    ratios: List[Optional[float]] = field(default_factory=list)
    regions: List[RegionReport] = field(default_factory=list)

    @property
    def flagged_measure(self) -> float:
        return float(sum(sum(r.flagged_measure.values()) for r in self.regions))


@register_experiment
class DecayExperiment(LabExperiment):
    kind = "decay"
    description = "Decay rates of a zero-mass perturbation, energy moments and region diagnostics"

    @property
    def frame(self) -> Frame:
        return self.config.frame or Frame.TRAVELING

    def _grid(self, profile: ShockProfile, data: InitialData, dx: float, pad: float = 0.0) -> Grid1D:
        config = self.config
        travel = profile.gamma * config.t_end if self.frame == Frame.LAB else 0.0
        travel += front_margin(profile, dx, config.t_end)
        grid = profile_grid(
            profile, dx, travel=travel + pad, x_left=config.grid.x_left, x_right=config.grid.x_right, bumps=data.bumps
        )
        if pad > 0.0:
            grid = profile_grid(
                profile, dx, travel=travel + pad, x_left=grid.x_left - pad, x_right=config.grid.x_right,
                bumps=data.bumps,
            )
        return grid

    def _evolve(self, profile: ShockProfile, data: InitialData, grid: Grid1D) -> Tuple[Trajectory, Optional[Trajectory]]:
        config = self.config
        state = self.initial_state(data, grid, self.frame)
        if config.reference == "evolved":
            wave = InitialData(profile).state(grid, self.frame)
            return evolve_pair(
                state, wave, grid, self.flux, config.m, config.t_end, cadence=config.cadence,
                gamma=profile.gamma, monitor_boundary=True,
            )
        run = evolve(
            state, grid, self.flux, config.m, config.t_end, cadence=config.cadence, observers=[],
            gamma=profile.gamma,
        )
        return run, None

    def measure(self, profile: ShockProfile, dx: float) -> DecayRun:
        """Shift, evolve and measure one run at spacing ``dx``."""
        config, decay = self.config, self.config.decay
        app_settings = get_settings()
        moments = decay.moments or list(app_settings.PHI_MOMENTS)
        region_config = RegionDiagConfig(m=config.m, C1=app_settings.REGION_C1, q=decay.q or app_settings.REGION_Q)

        data = self.initial_data(profile)
        grid = self._grid(profile, data, dx)
        shift = 0.0
        if decay.preshift:
            shift = compute_shift(self.initial_state(data, grid), grid, profile)
            data = data.shifted(shift)
            grid = self._grid(profile, data, dx, pad=abs(shift) + dx)
            logger.info(f"Pre-shifted the data by x0={shift:.12g}")

        run, reference = self._evolve(profile, data, grid)
        measured = DecayRun(grid=grid, shift=shift, series=DecaySeries(moments=moments))
        last = len(run.snapshots) - 1
        for index, snapshot in enumerate(run.snapshots):
            wave = reference.snapshots[index] if reference is not None else None
            _, phi = perturbation(snapshot, grid, profile, window=decay.xi_window, reference=wave)
            measured.series.append(decay_record(snapshot.t, phi, grid.dx, moments))
            _, phi_all = perturbation(snapshot, grid, profile, reference=wave)
            measured.masses.append(perturbation_mass(phi_all, grid.dx))
            measured.ratios.append(interpolation_ratio(phi, grid.dx, decay.interpolation_p))
            if index % decay.region_every == 0 or index == last:
                measured.regions.append(b1_integrals(snapshot, grid, profile, region_config, decay.xi_window))
        return measured

    def run(self) -> ExperimentSummary:
        config, decay = self.config, self.config.decay
        app_settings = get_settings()
        m = config.m
        profile = self.profile()

        measured = self.guarded("evolution", lambda: self.measure(profile, config.grid.dx))
        if measured is None:
            return self.summary
        series = measured.series

        table = series.frame()
        table["mass_phi"] = measured.masses
        table["interp_ratio"] = [np.nan if r is None else r for r in measured.ratios]
        self.write_table(table, "decay_series.csv")
        rows = [row for report in measured.regions for row in region_rows(report)]
        self.write_table(pd.DataFrame(rows, columns=REGION_COLUMNS), "regions.csv")
        self.write_document({"reports": measured.regions}, "regions.json")

        masses = np.asarray(measured.masses)
        drift = float(np.max(np.abs(masses if decay.preshift else masses - masses[0])))
        self.check("mass_identity", drift <= app_settings.MASS_IDENTITY_TOL, value=drift,
                   threshold=app_settings.MASS_IDENTITY_TOL)

        fits = []
        for norm in ("l2_phi", "linf_phi"):
            fit = self.guarded(f"rate_{norm}", lambda: decay_fit(series, decay.window, m, norm=norm))
            if fit is not None:
                fits.append(fit)
                self.check(
                    f"rate_{norm}", fit.passed, value=-fit.exponent, threshold=fit.bound - app_settings.DELTA_TOL
                )

        energy = []
        for p in series.moments:
            report = phi_lp_energy_check(series, p, m, window=decay.window)
            energy.append(report)
            self.check(f"phi_moment_{p}", report.passed, value=report.exponent, threshold=report.exponent_bound,
                       detail=report.note)

        partition = all(r.partition_ok for r in measured.regions)
        self.check("region_partition", partition)
        d0_min = min(r.d0_min_integrand for r in measured.regions)
        self.check("d0_nonnegative", d0_min >= 0.0, value=d0_min, threshold=0.0)

        if decay.refine_regions:
            self._check_refinement(profile, measured)

        higher = [p for p in series.moments if p > 2]
        q = decay.q or app_settings.REGION_Q
        calibrated = next((r for r in measured.ratios if r is not None), None)
        finite = [r for r in measured.ratios if r is not None]
        self.write_document(
            {
                "shift": measured.shift,
                "initial_mass": measured.masses[0],
                "theorem_rate": theorem_rate(m),
                "sup_rate": sup_rate(m),
                "fits": fits,
                "energy": energy,
                "rate_chain": rate_chain(m, float(max(higher)), float(q)) if higher else None,
                "interpolation": {
                    "p": decay.interpolation_p,
                    "calibrated_constant": calibrated,
                    "max_ratio": max(finite) if finite else None,
                    "growth": optional_float(max(finite) / calibrated) if calibrated else None,
                },
            },
            "decay_fit.json",
        )
        return self.summary

    def _check_refinement(self, profile: ShockProfile, coarse: DecayRun) -> None:
        """Measure of the ruled-out regimes must at least halve when dx halves."""
        fine = self.guarded("region_refinement", lambda: self.measure(profile, 0.5 * self.config.grid.dx))
        if fine is None:
            return
        before, after = coarse.flagged_measure, fine.flagged_measure
        passed = before == 0.0 or after <= 0.5 * before
        ratio = after / before if before > 0.0 else 0.0
        self.check("region_refinement", passed, value=ratio, threshold=0.5,
                   detail=f"flagged measure {before:.3e} -> {after:.3e}")
