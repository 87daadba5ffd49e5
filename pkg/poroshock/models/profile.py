from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
from scipy.interpolate import CubicHermiteSpline


def limit_slopes(xi: np.ndarray, values: np.ndarray, slopes: np.ndarray) -> np.ndarray:
    """Fritsch-Carlson limiter: scale Hermite slopes so each interval stays monotone."""
    secant = np.diff(values) / np.diff(xi)
    limited = np.array(slopes, dtype=float, copy=True)

    flat = secant == 0.0
    # slopes disagreeing with the secant sign are zeroed
    left_wrong = np.sign(limited[:-1]) * np.sign(secant) < 0.0
    right_wrong = np.sign(limited[1:]) * np.sign(secant) < 0.0
    kill = np.zeros_like(limited, dtype=bool)
    kill[:-1] |= flat | left_wrong
    kill[1:] |= flat | right_wrong
    limited[kill] = 0.0

    with np.errstate(divide="ignore", invalid="ignore"):
        alpha = np.where(flat, 0.0, limited[:-1] / secant)
        beta = np.where(flat, 0.0, limited[1:] / secant)
    radius = np.hypot(alpha, beta)
    tau = np.where(radius > 3.0, 3.0 / np.where(radius > 0.0, radius, 1.0), 1.0)

    scale = np.ones_like(limited)
    scale[:-1] = np.minimum(scale[:-1], tau)
    scale[1:] = np.minimum(scale[1:], tau)
    return limited * scale


@dataclass(frozen=True, eq=False)
class ShockProfile:
    """Viscous shock wave U(xi) connecting u_minus (left) to 0 (right).

    Knots are strictly increasing in ``xi``; ``U`` is non-increasing with
    ``U[-1] == 0`` at ``x_R`` when ``m > 1``. For ``m == 1`` the wave has no
    free boundary (``x_R == inf``) and decays beyond the last knot like
    ``U[-1] * exp(-tail_rate * (xi - xi[-1]))``.
    """

    gamma: float
    u_minus: float
    m: float
    x_R: float
    xi: np.ndarray
    U: np.ndarray
    dU: np.ndarray
    tol: float
    tail_rate: Optional[float] = None
    u_plus: float = 0.0

    @property
    def xi_min(self) -> float:
        return float(self.xi[0])

    @property
    def xi_end(self) -> float:
        return float(self.xi[-1])

    @property
    def has_free_boundary(self) -> bool:
        return math.isfinite(self.x_R)

    @cached_property
    def spline(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.xi, self.U, limit_slopes(self.xi, self.U, self.dU))

    @cached_property
    def _spline_derivative(self):
        return self.spline.derivative()

    @cached_property
    def _spline_antiderivative(self):
        return self.spline.antiderivative()

    @cached_property
    def _core_mass(self) -> float:
        return float(self._spline_antiderivative(self.xi_end))

    def _tail_value(self, xi: np.ndarray) -> np.ndarray:
        if self.has_free_boundary or not self.tail_rate:
            return np.zeros_like(xi)
        return self.U[-1] * np.exp(-self.tail_rate * (xi - self.xi_end))

    def value(self, xi) -> np.ndarray:
        """U(xi), total over the real line."""
        xi = np.asarray(xi, dtype=float)
        inner = np.clip(self.spline(np.clip(xi, self.xi_min, self.xi_end)), 0.0, self.u_minus)
        out = np.where(xi <= self.xi_min, self.u_minus, inner)
        out = np.where(xi > self.xi_end, self._tail_value(xi), out)
        if self.has_free_boundary:
            out = np.where(xi >= self.x_R, 0.0, out)
        return out

    def derivative(self, xi) -> np.ndarray:
        """U'(xi) of the interpolant; zero on both far fields."""
        xi = np.asarray(xi, dtype=float)
        inner = self._spline_derivative(np.clip(xi, self.xi_min, self.xi_end))
        out = np.where(xi <= self.xi_min, 0.0, inner)
        if self.has_free_boundary:
            out = np.where(xi >= self.x_R, 0.0, out)
        else:
            out = np.where(xi > self.xi_end, -(self.tail_rate or 0.0) * self._tail_value(xi), out)
        return out

    def antiderivative(self, xi) -> np.ndarray:
        """Exact antiderivative P of ``value`` with P(xi_min) = 0."""
        xi = np.asarray(xi, dtype=float)
        core = self._spline_antiderivative(np.clip(xi, self.xi_min, self.xi_end))
        left = self.u_minus * (xi - self.xi_min)
        out = np.where(xi <= self.xi_min, left, core)
        if not self.has_free_boundary and self.tail_rate:
            tail = self._core_mass + self.U[-1] / self.tail_rate * (
                1.0 - np.exp(-self.tail_rate * (xi - self.xi_end))
            )
            out = np.where(xi > self.xi_end, tail, out)
        else:
            out = np.where(xi > self.xi_end, self._core_mass, out)
        return out

    def cell_averages(self, edges: np.ndarray, shift: float = 0.0) -> np.ndarray:
        """Exact averages of U(x - shift) over the cells delimited by ``edges``."""
        edges = np.asarray(edges, dtype=float)
        local = edges - shift
        averages = np.diff(self.antiderivative(local)) / np.diff(edges)
        # far-field cells are exact constants
        averages[local[1:] <= self.xi_min] = self.u_minus
        if self.has_free_boundary:
            averages[local[:-1] >= self.x_R] = 0.0
        return averages
