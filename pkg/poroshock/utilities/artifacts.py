import json
import logging
import math
from pathlib import Path
from typing import Any, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from poroshock.core.config import get_settings
from poroshock.schemas.report import Manifest

logger = logging.getLogger(__name__)

MANIFEST_PREFIX = "# manifest: "


def _manifest_json(manifest: Optional[Manifest]) -> Optional[str]:
    if manifest is None:
        return None
    return json.dumps(manifest.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))


def write_csv(frame: pd.DataFrame, path: Union[str, Path], manifest: Optional[Manifest] = None) -> Path:
    """Write a table in full double precision with the manifest as first line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = frame.to_csv(
        index=False,
        float_format=get_settings().CSV_FLOAT_FORMAT,
        lineterminator="\n",
    )
    with open(path, "w", encoding="utf-8", newline="") as handle:
        header = _manifest_json(manifest)
        if header is not None:
            handle.write(f"{MANIFEST_PREFIX}{header}\n")
        handle.write(body)
    logger.debug(f"Wrote {len(frame)} rows to {path}")
    return path


def _jsonable(payload: Any) -> Any:
    """Plain JSON values; NaN and infinities become null."""
    if isinstance(payload, BaseModel):
        return _jsonable(payload.model_dump(mode="json", by_alias=True))
    if isinstance(payload, np.ndarray):
        return _jsonable(payload.tolist())
    if isinstance(payload, (list, tuple)):
        return [_jsonable(p) for p in payload]
    if isinstance(payload, dict):
        return {k: _jsonable(v) for k, v in payload.items()}
    if isinstance(payload, (bool, np.bool_)):
        return bool(payload)
    if isinstance(payload, np.integer):
        return int(payload)
    if isinstance(payload, (float, np.floating)):
        return float(payload) if math.isfinite(payload) else None
    return payload


def write_json(payload: Any, path: Union[str, Path], manifest: Optional[Manifest] = None) -> Path:
    """Write a JSON document; the manifest goes under the ``manifest`` key."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = _jsonable(payload)
    if manifest is not None:
        if not isinstance(data, dict):
            data = {"entries": data}
        data = {"manifest": manifest.model_dump(mode="json"), **data}
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(data, handle, indent=2, sort_keys=False, allow_nan=False)
        handle.write("\n")
    logger.debug(f"Wrote {path}")
    return path


def read_csv(path: Union[str, Path]) -> Tuple[pd.DataFrame, Optional[dict]]:
    """Read an artifact CSV and its manifest line."""
    path = Path(path)
    manifest = None
    with open(path, "r", encoding="utf-8") as handle:
        first = handle.readline()
    if first.startswith(MANIFEST_PREFIX):
        manifest = json.loads(first[len(MANIFEST_PREFIX):])
    frame = pd.read_csv(path, comment="#")
    return frame, manifest


def read_json(path: Union[str, Path]) -> dict:
    with open(Path(path), "r", encoding="utf-8") as handle:
        return json.load(handle)
