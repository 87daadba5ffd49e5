from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from poroshock.models.profile import ShockProfile
from poroshock.schemas.report import Manifest
from poroshock.utilities.artifacts import write_csv, write_json


def profile_table(profile: ShockProfile) -> pd.DataFrame:
    return pd.DataFrame({"xi": profile.xi, "U": profile.U, "dU": profile.dU})


def export_profile(
    profile: ShockProfile, out_dir: Path, manifest: Optional[Manifest] = None, stem: str = "profile"
) -> Tuple[Path, Path]:
    """Write ``<stem>.csv`` (xi,U,dU) and the ``<stem>.json`` sidecar."""
    out_dir = Path(out_dir)
    csv_path = write_csv(profile_table(profile), out_dir / f"{stem}.csv", manifest)
    sidecar = {
        "gamma": profile.gamma,
        "u_minus": profile.u_minus,
        "m": profile.m,
        "x_R": profile.x_R if profile.has_free_boundary else None,
        "tol": profile.tol,
    }
    json_path = write_json(sidecar, out_dir / f"{stem}.json", manifest)
    return csv_path, json_path
