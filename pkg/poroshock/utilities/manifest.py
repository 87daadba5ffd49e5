import hashlib
import json
from importlib import metadata
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd
import scipy

from poroshock.__version__ import __version__
from poroshock.schemas.report import Manifest


def config_hash(config: Any) -> str:
    """sha256 of the canonical JSON form of a config, output directory excluded."""
    if hasattr(config, "model_dump"):
        payload = config.model_dump(mode="json", exclude={"out"})
    else:
        payload = {k: v for k, v in dict(config).items() if k != "out"}
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def module_versions() -> Dict[str, str]:
    try:
        pydantic_version = metadata.version("pydantic")
    except metadata.PackageNotFoundError:
        pydantic_version = "unknown"
    return {
        "poroshock": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
        "pydantic": pydantic_version,
    }


def build_manifest(kind: str, config: Optional[Any] = None, seed: int = 0) -> Manifest:
    return Manifest(
        kind=kind,
        config_hash=config_hash(config) if config is not None else "",
        seed=seed,
        versions=module_versions(),
    )
