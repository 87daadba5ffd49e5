import logging
from typing import Optional

import numpy as np

from poroshock.core.config import get_settings
from poroshock.models.flux import FluxSpec
from poroshock.models.profile import ShockProfile
from poroshock.schemas.report import ProfileReport

logger = logging.getLogger(__name__)


def verify_profile(profile: ShockProfile, flux: FluxSpec) -> ProfileReport:
    """Measure how far a profile is from a valid viscous shock wave.

    Violations are reported, never raised:

    * ODE residual |m U^{m-1} U' - g(U)| at interval midpoints, relative to max|g|,
      where g(U) = f(U) - f(u_-) - gamma (U - u_-);
    * monotonicity, the largest increase between consecutive knots;
    * derivative bound f'(0) - gamma <= dU/dxi <= 0 on knot differences.
    """
    app_settings = get_settings()
    xi, U = profile.xi, profile.U
    m, gamma, u_minus = profile.m, profile.gamma, profile.u_minus

    def g(values):
        return flux.eval(values) - flux.eval(u_minus) - gamma * (values - u_minus)

    scale = float(np.max(np.abs(g(U)))) or 1.0
    mid = 0.5 * (xi[1:] + xi[:-1])
    U_mid = profile.value(mid)
    dU_mid = profile.derivative(mid)
    residual = np.abs(m * U_mid ** (m - 1.0) * dU_mid - g(U_mid)) / scale
    max_residual = float(np.max(residual))

    steps = np.diff(U)
    max_monotonicity = float(max(0.0, np.max(steps)))

    lower = float(flux.deriv(0.0)) - gamma
    quotients = steps / np.diff(xi)
    max_bound = float(max(0.0, np.max(quotients), np.max(lower - quotients)))

    far_field_gap = float(abs(U[0] - u_minus) / u_minus)
    pin_error = float(abs(profile.value(0.0) - 0.5 * u_minus))

    slope_tol = app_settings.PROFILE_SLOPE_TOL
    passed = (
        max_residual < app_settings.PROFILE_RESIDUAL_TOL
        and max_monotonicity <= slope_tol
        and max_bound <= slope_tol
        and far_field_gap <= 2.0 * profile.tol
    )
    if not passed:
        logger.warning(
            f"Profile check failed: residual={max_residual:.3e} monotonicity={max_monotonicity:.3e} "
            f"derivative_bound={max_bound:.3e} far_field_gap={far_field_gap:.3e}"
        )
    return ProfileReport(
        max_residual=max_residual,
        max_monotonicity_violation=max_monotonicity,
        max_derivative_bound_violation=max_bound,
        derivative_lower_bound=lower,
        far_field_gap=far_field_gap,
        pin_error=pin_error,
        knots=len(xi),
        passed=passed,
    )


def free_boundary_slope(profile: ShockProfile, reach: float = 0.05) -> Optional[float]:
    """Secant slope of U^{m-1} from the last knot at least ``reach`` left of x_R to x_R.

    Uses the stored knots, which carry U^{m-1} to full precision; the
    interpolant does not resolve the (x_R - xi)^{1/(m-1)} vanishing of U.
    None for waves without a free boundary.
    """
    if not profile.has_free_boundary:
        return None
    index = max(int(np.searchsorted(profile.xi, profile.x_R - reach, side="right")) - 1, 0)
    distance = profile.x_R - profile.xi[index]
    if distance <= 0.0:
        return None
    return float(-(profile.U[index] ** (profile.m - 1.0)) / distance)
