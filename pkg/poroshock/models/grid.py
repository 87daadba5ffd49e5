from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from poroshock.core.config import get_settings
from poroshock.core.exceptions import InvalidStateError


class Frame(str, Enum):
    LAB = "lab"
    TRAVELING = "traveling"


@dataclass(frozen=True)
class Grid1D:
    """Uniform cell-centred grid on [x_left, x_right] with Dirichlet far-field ghosts."""

    x_left: float
    x_right: float
    n_cells: int
    u_left: float = 0.0
    u_right: float = 0.0

    def __post_init__(self):
        min_cells = get_settings().MIN_CELLS
        if self.n_cells < min_cells:
            raise InvalidStateError(f"Grid needs at least {min_cells} cells, got {self.n_cells}")
        if not self.x_right > self.x_left:
            raise InvalidStateError(f"Empty domain [{self.x_left}, {self.x_right}]")

    @classmethod
    def from_spacing(cls, x_left: float, x_right: float, dx: float, u_left: float = 0.0, u_right: float = 0.0):
        """Grid with spacing dx; x_right is moved onto the lattice x_left + k*dx."""
        n_cells = int(round((x_right - x_left) / dx))
        return cls(x_left, x_left + n_cells * dx, n_cells, u_left, u_right)

    @property
    def dx(self) -> float:
        return (self.x_right - self.x_left) / self.n_cells

    @cached_property
    def edges(self) -> np.ndarray:
        return self.x_left + self.dx * np.arange(self.n_cells + 1)

    @cached_property
    def centers(self) -> np.ndarray:
        return self.x_left + self.dx * (np.arange(self.n_cells) + 0.5)


@dataclass(frozen=True, eq=False)
class FieldState:
    """Time-stamped non-negative cell averages."""

    t: float
    u: np.ndarray
    frame: Frame = Frame.LAB

    def __post_init__(self):
        u = np.array(self.u, dtype=float, copy=True)
        if u.ndim != 1:
            raise InvalidStateError(f"Field must be one-dimensional, got shape {u.shape}")
        if np.any(u < 0.0) or not np.all(np.isfinite(u)):
            raise InvalidStateError(f"Field at t={self.t} has negative or non-finite cells (min {np.min(u):.3e})")
        u.flags.writeable = False
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "frame", Frame(self.frame))

    def mass(self, dx: float) -> float:
        return float(dx * np.sum(self.u))


@dataclass
class Trajectory:
    """Result of an evolution: final state, recorded snapshots and observer rows."""

    final: FieldState
    snapshots: List[FieldState] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    steps: int = 0
    boundary_flux: float = 0.0
    dt_policy: str = "cfl"
    grid: Optional[Grid1D] = None

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.snapshots])

    def series(self) -> pd.DataFrame:
        """Observer rows as a table, one row per recorded time."""
        return pd.DataFrame(self.rows)


@dataclass(frozen=True)
class RegularizedRun:
    """Index n of the regularized cascade on [-n, n].

    ``v = u^m`` stays in [1/n, M^m]; data is clamped to M^m beyond radius n - 1.
    """

    n: int
    M: float
    m: float

    def __post_init__(self):
        if self.n < 1:
            raise InvalidStateError(f"Regularization index must be >= 1, got {self.n}")
        if self.M <= 0.0:
            raise InvalidStateError(f"Boundary value M must be positive, got {self.M}")
        if self.M ** self.m < 1.0 / self.n:
            raise InvalidStateError(f"M^m = {self.M ** self.m:.3e} lies below the floor 1/{self.n}")

    @property
    def floor(self) -> float:
        return 1.0 / self.n

    @property
    def v_max(self) -> float:
        return self.M ** self.m

    @property
    def radius(self) -> float:
        return float(self.n - 1)

    @property
    def u_floor(self) -> float:
        return self.floor ** (1.0 / self.m)
