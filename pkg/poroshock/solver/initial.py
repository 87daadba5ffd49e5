"""Initial data with exact cell averages: shock profile plus analytic bumps."""
import math
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Sequence

import numpy as np
from scipy.special import erf

from poroshock.core.config import get_settings
from poroshock.core.exceptions import InvalidStateError, RangeError
from poroshock.models.grid import FieldState, Frame, Grid1D
from poroshock.models.profile import ShockProfile

BumpShape = Literal["gaussian", "dipole", "cosine"]


# bumps with gaussian tails are cut at this many widths, where exp(-s^2) < 1e-18
TAIL_WIDTHS = 6.5

# cells the explicit scheme spreads the front ahead of the free boundary
FRONT_TAIL_CELLS = 50


@dataclass(frozen=True)
class Bump:
    """Analytic perturbation with a closed-form antiderivative.

    gaussian: A exp(-s^2), s = (x - c)/w
    dipole:   -2 A s exp(-s^2), the derivative of A w exp(-s^2); zero mass
    cosine:   A cos^2(pi (x - c) / (2 w)) on |x - c| <= w

    Gaussian and dipole bumps vanish for |s| > TAIL_WIDTHS, so every bump has
    compact support and leaves the vacuum ahead of the front untouched.
    """

    shape: BumpShape
    center: float
    width: float
    amplitude: float

    def __post_init__(self):
        if self.width <= 0.0:
            raise RangeError(f"Bump width must be positive, got {self.width}")

    @classmethod
    def with_mass(cls, shape: BumpShape, center: float, width: float, mass: float) -> "Bump":
        if shape == "gaussian":
            return cls(shape, center, width, mass / (width * math.sqrt(math.pi) * erf(TAIL_WIDTHS)))
        if shape == "cosine":
            return cls(shape, center, width, mass / width)
        raise RangeError(f"A {shape} bump has zero mass; give its amplitude instead")

    @property
    def mass(self) -> float:
        if self.shape == "gaussian":
            return self.amplitude * self.width * math.sqrt(math.pi) * float(erf(TAIL_WIDTHS))
        if self.shape == "cosine":
            return self.amplitude * self.width
        return 0.0

    @property
    def support_radius(self) -> float:
        """Distance from the centre beyond which the bump vanishes."""
        if self.shape == "cosine":
            return self.width
        return TAIL_WIDTHS * self.width

    def value(self, x) -> np.ndarray:
        s = (np.asarray(x, dtype=float) - self.center) / self.width
        if self.shape == "cosine":
            inside = np.abs(s) <= 1.0
            return np.where(inside, self.amplitude * np.cos(0.5 * math.pi * s) ** 2, 0.0)
        inside = np.abs(s) <= TAIL_WIDTHS
        if self.shape == "gaussian":
            return np.where(inside, self.amplitude * np.exp(-s * s), 0.0)
        return np.where(inside, -2.0 * self.amplitude * s * np.exp(-s * s), 0.0)

    def antiderivative(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.shape == "cosine":
            y = np.clip(x - self.center, -self.width, self.width)
            w = self.width
            return self.amplitude * (0.5 * y + w / (2.0 * math.pi) * np.sin(math.pi * y / w))
        s = np.clip((x - self.center) / self.width, -TAIL_WIDTHS, TAIL_WIDTHS)
        if self.shape == "gaussian":
            return self.amplitude * self.width * 0.5 * math.sqrt(math.pi) * erf(s)
        return self.amplitude * self.width * np.exp(-s * s)

    def cell_averages(self, edges: np.ndarray, shift: float = 0.0) -> np.ndarray:
        """Exact averages of bump(x - shift) over the cells delimited by ``edges``."""
        edges = np.asarray(edges, dtype=float)
        return np.diff(self.antiderivative(edges - shift)) / np.diff(edges)


@dataclass(frozen=True)
class InitialData:
    """u0(x) = U(x - shift) + sum of bumps(x - shift)."""

    profile: Optional[ShockProfile]
    bumps: Sequence[Bump] = field(default_factory=tuple)
    shift: float = 0.0

    def shifted(self, shift: float) -> "InitialData":
        return InitialData(self.profile, tuple(self.bumps), self.shift + shift)

    @property
    def perturbation_mass(self) -> float:
        return float(sum(b.mass for b in self.bumps))

    def perturbation_cells(self, grid: Grid1D) -> np.ndarray:
        cells = np.zeros(grid.n_cells)
        for bump in self.bumps:
            cells += bump.cell_averages(grid.edges, self.shift)
        return cells

    def profile_cells(self, grid: Grid1D) -> np.ndarray:
        if self.profile is None:
            return np.zeros(grid.n_cells)
        return self.profile.cell_averages(grid.edges, self.shift)

    def state(self, grid: Grid1D, frame: Frame = Frame.LAB, t: float = 0.0) -> FieldState:
        u = self.profile_cells(grid) + self.perturbation_cells(grid)
        if np.any(u < 0.0):
            worst = int(np.argmin(u))
            raise InvalidStateError(
                f"Perturbation drives u below zero at x={grid.centers[worst]:.4g} (u={u[worst]:.3e}); "
                "reduce the amplitude or move the bump left"
            )
        return FieldState(t=t, u=u, frame=frame)


def front_margin(profile: ShockProfile, dx: float, t_end: float) -> float:
    """Room ahead of the front for its discrete precursor and for transient front motion up to ``t_end``."""
    diffusivity = profile.m * profile.u_minus ** (profile.m - 1.0)
    return FRONT_TAIL_CELLS * dx + math.sqrt(diffusivity * max(t_end, 0.0))


def profile_grid(
    profile: ShockProfile,
    dx: float,
    travel: float = 0.0,
    x_left: Optional[float] = None,
    x_right: Optional[float] = None,
    bumps: Sequence[Bump] = (),
) -> Grid1D:
    """Grid whose margin cells hold exact far-field values for the whole run.

    ``travel`` is the largest distance the wave moves during the run.
    """
    margin = (get_settings().BOUNDARY_MARGIN_CELLS + 2) * dx
    left = profile.xi_min - margin
    if profile.has_free_boundary:
        right = profile.x_R + travel + margin
    else:
        right = profile.xi_end + travel + margin
    for bump in bumps:
        left = min(left, bump.center - bump.support_radius - margin)
        right = max(right, bump.center + bump.support_radius + travel + margin)
    if x_left is not None:
        left = min(left, x_left)
    if x_right is not None:
        right = max(right, x_right)
    left = math.floor(left / dx) * dx
    return Grid1D.from_spacing(left, right, dx, u_left=profile.u_minus, u_right=0.0)


def bumps_from_specs(specs: List[dict]) -> List[Bump]:
    """Build bumps from mappings with shape, center, width and amplitude or mass."""
    bumps = []
    for spec in specs:
        if spec.get("mass") is not None:
            bumps.append(Bump.with_mass(spec["shape"], spec["center"], spec["width"], spec["mass"]))
        else:
            bumps.append(Bump(spec["shape"], spec["center"], spec["width"], spec["amplitude"]))
    return bumps
