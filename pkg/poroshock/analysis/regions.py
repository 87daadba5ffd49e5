"""
Sign-based decomposition of the traveling line and the B_1 integrals of the
degenerate L^q energy estimate.

    D0 = {xi >= x_R}
    D1 = {xi < x_R, phi >= 0}
    D2 = {xi < x_R, phi < 0, phi_xi < 0}
    D3 = {xi < x_R, phi < 0, phi_xi >= 0}

Ties phi_xi == 0 go to D3. Everything is evaluated with point values of U at
cell centres, so u = U + phi holds cellwise.
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from poroshock.core.exceptions import InvalidStateError
from poroshock.models.grid import FieldState, Grid1D
from poroshock.models.profile import ShockProfile
from poroshock.models.series import REGIONS, PerturbationDiag, region_counts
from poroshock.analysis.perturbation import antiderivative, frame_offset, perturbation, traveling_window
from poroshock.schemas.analysis import RegionDiagConfig
from poroshock.schemas.report import RegionReport

logger = logging.getLogger(__name__)


def region_partition(xi, phi, phi_xi, x_R: float) -> Dict[str, np.ndarray]:
    xi = np.asarray(xi, dtype=float)
    phi = np.asarray(phi, dtype=float)
    phi_xi = np.asarray(phi_xi, dtype=float)
    left = xi < x_R
    negative = left & (phi < 0.0)
    return {
        "D0": ~left,
        "D1": left & (phi >= 0.0),
        "D2": negative & (phi_xi < 0.0),
        "D3": negative & (phi_xi >= 0.0),
    }


def b1_integrand(U, dU, phi, phi_xi, m: float, q: int) -> np.ndarray:
    """((U + phi)^{m-1} (U' + phi_xi) - U^{m-1} U') |phi|^{q-2} phi_xi."""
    u = np.maximum(U + phi, 0.0)
    flux_gap = u ** (m - 1.0) * (dU + phi_xi) - U ** (m - 1.0) * dU
    return flux_gap * np.abs(phi) ** (q - 2) * phi_xi


def b2_factor(U, dU, phi, phi_xi, m: float) -> np.ndarray:
    """B_2 with d = phi/U; NaN where U or phi_xi vanishes."""
    defined = (U > 0.0) & (phi_xi != 0.0)
    safe_U = np.where(defined, U, 1.0)
    safe_slope = np.where(defined, phi_xi, 1.0)
    d = phi / safe_U
    lifted = np.maximum(1.0 + d, 0.0) ** (m - 1.0)
    value = (lifted * safe_slope + (lifted - 1.0) * dU) / ((1.0 + np.abs(d) ** (m - 1.0)) * safe_slope)
    return np.where(defined, value, np.nan)


def _flags(U, dU, phi, phi_xi, masks, config: RegionDiagConfig) -> Dict[str, np.ndarray]:
    """Cells of the two regimes the estimate rules out.

    D2: C_2 < |d| <= 1 and |U'/phi_xi| <= C_1/2; D3: C_2 < |d| <= 1 and |U'/phi_xi| < C_1.
    """
    positive = U > 0.0
    d = np.where(positive, phi / np.where(positive, U, 1.0), 0.0)
    beyond = positive & (1.0 + d < config.one_minus_C2)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(phi_xi != 0.0, np.abs(dU / phi_xi), np.inf)
    return {
        "D0": np.zeros_like(masks["D0"]),
        "D1": np.zeros_like(masks["D1"]),
        "D2": masks["D2"] & beyond & (ratio <= 0.5 * config.C1),
        "D3": masks["D3"] & beyond & (ratio < config.C1),
    }


def _fields(
    state: FieldState, grid: Grid1D, profile: ShockProfile, window: Optional[Tuple[float, float]]
):
    offset = frame_offset(state, profile)
    inside = traveling_window(grid, offset, window)
    if np.any(state.u[inside] < 0.0):
        raise InvalidStateError(f"Negative cell in the diagnostic window at t={state.t}")
    xi, phi = perturbation(state, grid, profile, window=window, sampling="point")
    phi_xi = np.gradient(phi, grid.dx) if phi.size > 1 else np.zeros_like(phi)
    return xi, phi, phi_xi, profile.value(xi), profile.derivative(xi)


def b1_integrals(
    state: FieldState,
    grid: Grid1D,
    profile: ShockProfile,
    config: RegionDiagConfig,
    window: Optional[Tuple[float, float]] = None,
) -> RegionReport:
    """Integrals of B_1 per region with the lower-bound residuals of each region."""
    dx = grid.dx
    m, q = config.m, config.q
    xi, phi, phi_xi, U, dU = _fields(state, grid, profile, window)
    masks = region_partition(xi, phi, phi_xi, profile.x_R)
    integrand = b1_integrand(U, dU, phi, phi_xi, m, q)
    flags = _flags(U, dU, phi, phi_xi, masks, config)

    d0 = integrand[masks["D0"]]
    d0_min = float(np.min(d0)) if d0.size else 0.0

    d1 = masks["D1"]
    weight = np.abs(phi[d1]) ** (m + q - 3)
    dissipation = dx * float(np.sum(weight * phi_xi[d1] ** 2))
    mass_term = dx * float(np.sum(weight))
    d1_integral = dx * float(np.sum(integrand[d1]))
    d1_c = d1_integral / dissipation if dissipation > 0.0 else 0.0
    d1_C = max(0.0, (config.c0 * dissipation - d1_integral) / mass_term) if mass_term > 0.0 else 0.0

    b2 = b2_factor(U, dU, phi, phi_xi, m)
    b2_min = {}
    for name in ("D2", "D3"):
        values = b2[masks[name]]
        values = values[np.isfinite(values)]
        b2_min[name] = float(np.min(values)) if values.size else None

    report = RegionReport(
        t=state.t,
        q=q,
        n_cells=int(phi.size),
        counts=region_counts(masks),
        measure={name: dx * int(np.count_nonzero(masks[name])) for name in REGIONS},
        b1_integral={name: dx * float(np.sum(integrand[masks[name]])) for name in REGIONS},
        flagged_measure={name: dx * int(np.count_nonzero(flags[name])) for name in REGIONS},
        d0_min_integrand=d0_min,
        d1_c=d1_c,
        d1_C=d1_C,
        b2_min=b2_min,
    )
    if not report.partition_ok:
        logger.error(f"Region masks do not partition the grid at t={state.t}: {report.counts}")
    flagged = sum(report.flagged_measure.values())
    if flagged > 0.0:
        logger.warning(f"{flagged:.3e} of the line sits in a ruled-out regime at t={state.t:.6g}")
    return report


def region_diagnostics(
    state: FieldState,
    grid: Grid1D,
    profile: ShockProfile,
    config: RegionDiagConfig,
    window: Optional[Tuple[float, float]] = None,
) -> PerturbationDiag:
    """Perturbation, antiderivative and regions of one recorded state."""
    xi, phi, phi_xi, _, _ = _fields(state, grid, profile, window)
    report = b1_integrals(state, grid, profile, config, window)
    return PerturbationDiag(
        t=state.t,
        xi=xi,
        phi=phi,
        phi_xi=phi_xi,
        Phi=antiderivative(phi, grid.dx),
        masks=region_partition(xi, phi, phi_xi, profile.x_R),
        q=config.q,
        b1_by_region=dict(report.b1_integral),
    )


def region_rows(report: RegionReport) -> List[dict]:
    """Rows t,region,measure,B1_integral,flagged_measure of the region CSV."""
    return [
        {
            "t": report.t,
            "region": name,
            "measure": report.measure[name],
            "B1_integral": report.b1_integral[name],
            "flagged_measure": report.flagged_measure[name],
        }
        for name in REGIONS
    ]
