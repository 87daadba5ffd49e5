from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from poroshock.models.grid import FieldState, Grid1D
from poroshock.models.profile import ShockProfile
from poroshock.schemas.report import Manifest
from poroshock.solver.initial import Bump, InitialData, profile_grid
from poroshock.utilities.artifacts import write_csv


def small_bump(center: float = -3.0, amplitude: float = 0.05, shape: str = "gaussian") -> Bump:
    return Bump(shape=shape, center=center, width=1.0, amplitude=amplitude)


def shock_state(
    profile: ShockProfile, dx: float = 0.05, bumps: Sequence[Bump] = (), travel: float = 1.0
) -> tuple[FieldState, Grid1D]:
    """Cell averages of the wave plus ``bumps`` on a grid with clean margins."""
    data = InitialData(profile, tuple(bumps))
    grid = profile_grid(profile, dx, travel=travel, bumps=bumps)
    return data.state(grid), grid


def random_table(rows: int = 20, seed: int = 0) -> pd.DataFrame:
    rng = np.random.default_rng(seed)
    return pd.DataFrame({"t": np.arange(rows, dtype=float), "l2_phi": rng.random(rows), "mass": rng.random(rows)})


def make_manifest(kind: str = "test", seed: int = 0, numpy_version: Optional[str] = None) -> Manifest:
    return Manifest(
        kind=kind,
        config_hash="0" * 64,
        seed=seed,
        versions={"numpy": numpy_version or np.__version__},
    )


def write_artifacts(root: Path, frame: pd.DataFrame, name: str = "series.csv") -> Path:
    return write_csv(frame, Path(root) / name, make_manifest())
