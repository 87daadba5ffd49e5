from pathlib import Path
from typing import List, Optional

import pandas as pd

from poroshock.models.grid import Trajectory
from poroshock.schemas.report import Manifest
from poroshock.utilities.artifacts import write_csv, write_json

SCHEME = "godunov-fv-explicit-euler"
NORM_COLUMNS = ["t", "mass", "min_u", "max_u", "sup_dux", "sup_dumx"]


def norms_table(trajectory: Trajectory) -> pd.DataFrame:
    """Trajectory norms t,mass,min_u,max_u,sup_dux,sup_dumx from the observer rows."""
    series = trajectory.series()
    missing = [c for c in NORM_COLUMNS if c not in series.columns]
    if missing:
        raise KeyError(f"Trajectory was recorded without {', '.join(missing)}")
    return series[NORM_COLUMNS]


def export_snapshots(
    trajectory: Trajectory,
    out_dir: Path,
    manifest: Optional[Manifest] = None,
    stem: str = "snapshot",
) -> List[Path]:
    """Write one ``x,u`` CSV per recorded time and an index JSON describing them."""
    out_dir = Path(out_dir)
    grid = trajectory.grid
    written, entries = [], []
    for index, snapshot in enumerate(trajectory.snapshots):
        name = f"{stem}_{index:04d}.csv"
        frame = pd.DataFrame({"x": grid.centers, "u": snapshot.u})
        written.append(write_csv(frame, out_dir / name, manifest))
        entries.append(
            {
                "file": name,
                "t": snapshot.t,
                "dx": grid.dx,
                "frame": snapshot.frame.value,
                "scheme": SCHEME,
                "dt_policy": trajectory.dt_policy,
            }
        )
    written.append(write_json({"snapshots": entries}, out_dir / f"{stem}s.json", manifest))
    return written


def export_norms(
    trajectory: Trajectory, out_dir: Path, manifest: Optional[Manifest] = None, name: str = "norms.csv"
) -> Path:
    return write_csv(norms_table(trajectory), Path(out_dir) / name, manifest)
