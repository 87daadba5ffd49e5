import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from poroshock.core.config import get_settings
from poroshock.core.exceptions import RangeError, SpanTooSmallError
from poroshock.models.flux import FluxSpec
from poroshock.models.profile import ShockProfile
from poroshock.profile.speed import rh_speed

logger = logging.getLogger(__name__)

_METHOD = "DOP853"


def _knots(start: float, stop: float, spacing: float) -> np.ndarray:
    """Uniform knots from start towards stop, excluding points too close to stop."""
    direction = 1.0 if stop > start else -1.0
    grid = start + direction * spacing * np.arange(int(abs(stop - start) / spacing) + 1)
    keep = np.abs(stop - grid) > 1e-3 * spacing
    return np.append(grid[keep], stop)


def solve_profile(
    flux: FluxSpec,
    u_minus: float,
    m: float,
    xi_span: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None,
    knot_spacing: Optional[float] = None,
) -> ShockProfile:
    """Integrate m U^{m-1} U' = f(U) - f(u_-) - gamma (U - u_-) pinned at U(0) = u_-/2.

    Left of the pin the ODE is integrated for z = u_- - U until z reaches
    tol * u_-. Right of the pin, for m > 1, it is integrated for w = U^{m-1},
    whose slope stays finite at U = 0; the free boundary x_R is the root of w.
    """
    app_settings = get_settings()
    tol = tol or app_settings.PROFILE_TOL
    spacing = knot_spacing or app_settings.PROFILE_KNOT_SPACING
    lo, hi = xi_span or app_settings.PROFILE_XI_SPAN

    if not 1.0 <= m < 2.0:
        raise RangeError(f"Diffusion exponent m={m} outside [1, 2)")
    if u_minus <= 0.0:
        raise RangeError(f"Left state u_minus={u_minus} must be positive")
    if not lo < 0.0 < hi:
        raise SpanTooSmallError(f"Window [{lo}, {hi}] does not contain the pin at 0")

    flux.validate(u_minus)
    gamma = rh_speed(flux, u_minus, 0.0)
    slope_at_vacuum = float(flux.deriv(0.0)) - gamma

    def reduced(U):
        # g(U)/U with g(U) = f(U) - gamma*U; equals f'(0) - gamma at U = 0
        return flux.quotient(np.maximum(U, 0.0)) - gamma

    def dU(U):
        U = np.maximum(U, 0.0)
        return reduced(U) * U ** (2.0 - m) / m

    # left branch in z = u_minus - U
    def left_rhs(xi, z):
        return -dU(u_minus - z)

    def far_field(xi, z):
        return z[0] - tol * u_minus

    far_field.terminal = True
    far_field.direction = -1

    left = solve_ivp(
        left_rhs,
        (0.0, lo),
        [0.5 * u_minus],
        method=_METHOD,
        rtol=tol,
        atol=1e-6 * tol * u_minus,
        dense_output=True,
        events=far_field,
    )
    if not left.success or len(left.t_events[0]) == 0:
        raise SpanTooSmallError(
            f"Profile did not reach u_minus within tol={tol:g} on [{lo}, 0]; widen the window"
        )
    xi_left = float(left.t_events[0][0])

    # right branch
    if m > 1.0:
        def right_rhs(xi, w):
            U = np.maximum(w, 0.0) ** (1.0 / (m - 1.0))
            return (m - 1.0) / m * reduced(U)

        def vacuum(xi, w):
            return w[0]

        y0 = (0.5 * u_minus) ** (m - 1.0)
        atol = 1e-6 * tol * y0
    else:
        def right_rhs(xi, U):
            return dU(U)

        def vacuum(xi, U):
            return U[0] - tol * u_minus

        y0 = 0.5 * u_minus
        atol = 1e-6 * tol * u_minus

    vacuum.terminal = True
    vacuum.direction = -1

    right = solve_ivp(
        right_rhs,
        (0.0, hi),
        [y0],
        method=_METHOD,
        rtol=tol,
        atol=atol,
        dense_output=True,
        events=vacuum,
    )
    reached = right.success and len(right.t_events[0]) > 0
    if m > 1.0 and not reached:
        raise SpanTooSmallError(f"Free boundary not found on [0, {hi}]; widen the window")
    xi_right = float(right.t_events[0][0]) if reached else float(right.t[-1])

    left_xi = _knots(0.0, xi_left, spacing)[::-1]
    left_U = u_minus - left.sol(left_xi)[0]
    left_U[-1] = 0.5 * u_minus

    right_xi = _knots(0.0, xi_right, spacing)
    if m > 1.0:
        right_U = np.maximum(right.sol(right_xi)[0], 0.0) ** (1.0 / (m - 1.0))
        right_U[-1] = 0.0
    else:
        right_U = right.sol(right_xi)[0]
    right_U[0] = 0.5 * u_minus

    xi = np.concatenate([left_xi, right_xi[1:]])
    U = np.minimum(np.concatenate([left_U, right_U[1:]]), u_minus)
    slopes = dU(U)

    x_R = xi_right if m > 1.0 else math.inf
    tail_rate = None if m > 1.0 else -slope_at_vacuum

    logger.info(
        f"Built profile m={m:g} u_minus={u_minus:g} gamma={gamma:.12g} "
        f"x_R={x_R:.12g} knots={len(xi)} xi_min={xi_left:.6g}"
    )
    return ShockProfile(
        gamma=gamma,
        u_minus=float(u_minus),
        m=float(m),
        x_R=x_R,
        xi=xi,
        U=U,
        dU=slopes,
        tol=tol,
        tail_rate=tail_rate,
    )


def vacuum_slope(flux: FluxSpec, u_minus: float, m: float) -> float:
    """Slope (m-1)(f'(0)-gamma)/m of w = U^{m-1} at the free boundary."""
    gamma = rh_speed(flux, u_minus, 0.0)
    return (m - 1.0) * (float(flux.deriv(0.0)) - gamma) / m
