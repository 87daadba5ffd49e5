import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from poroshock.core.exceptions import ConfigError, SchemaMismatchError
from poroshock.schemas.report import ColumnDrift, DiffReport
from poroshock.utilities.artifacts import read_csv, read_json

logger = logging.getLogger(__name__)

# key of the per-column tolerance map that applies to every other column
DEFAULT_KEY = "*"


def _tolerance(tolerances: Dict[str, float], column: str) -> float:
    return float(tolerances.get(column, tolerances.get(DEFAULT_KEY, 0.0)))


def _artifacts(root: Path) -> List[Path]:
    return sorted(p.relative_to(root) for p in root.rglob("*") if p.suffix in (".csv", ".json"))


def _numeric_gap(current: np.ndarray, baseline: np.ndarray) -> float:
    both_nan = np.isnan(current) & np.isnan(baseline)
    gap = np.abs(current - baseline)
    gap = np.where(both_nan, 0.0, gap)
    gap = np.where(np.isnan(gap), math.inf, gap)
    return float(np.max(gap)) if gap.size else 0.0


def _compare_frames(name: str, current: pd.DataFrame, baseline: pd.DataFrame, tolerances) -> List[ColumnDrift]:
    if list(current.columns) != list(baseline.columns):
        missing = sorted(set(baseline.columns) - set(current.columns))
        extra = sorted(set(current.columns) - set(baseline.columns))
        raise SchemaMismatchError(f"{name}: columns differ (missing {missing}, unexpected {extra})")
    if len(current) != len(baseline):
        raise SchemaMismatchError(f"{name}: {len(current)} rows against {len(baseline)} in the baseline")

    drifts = []
    for column in baseline.columns:
        tol = _tolerance(tolerances, column)
        ours, theirs = current[column], baseline[column]
        if pd.api.types.is_numeric_dtype(ours) and pd.api.types.is_numeric_dtype(theirs):
            gap = _numeric_gap(ours.to_numpy(dtype=float), theirs.to_numpy(dtype=float))
        else:
            gap = 0.0 if ours.astype(str).equals(theirs.astype(str)) else math.inf
        if gap > tol:
            drifts.append(ColumnDrift(file=name, column=str(column), max_abs_diff=gap, tolerance=tol))
    return drifts


def _leaves(node: Any, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    if isinstance(node, dict):
        for key, value in node.items():
            yield from _leaves(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(node, list):
        for i, value in enumerate(node):
            yield from _leaves(value, f"{prefix}.{i}" if prefix else str(i))
    else:
        yield prefix, node


def _compare_documents(name: str, current: dict, baseline: dict, tolerances) -> List[ColumnDrift]:
    # the manifest records package versions, which may legitimately differ
    ours = dict(_leaves({k: v for k, v in current.items() if k != "manifest"}))
    theirs = dict(_leaves({k: v for k, v in baseline.items() if k != "manifest"}))
    if ours.keys() != theirs.keys():
        missing = sorted(theirs.keys() - ours.keys())
        extra = sorted(ours.keys() - theirs.keys())
        raise SchemaMismatchError(f"{name}: fields differ (missing {missing[:5]}, unexpected {extra[:5]})")

    drifts = []
    for key, expected in theirs.items():
        actual = ours[key]
        numeric = all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (actual, expected))
        if numeric:
            gap = _numeric_gap(np.array([actual], dtype=float), np.array([expected], dtype=float))
        else:
            gap = 0.0 if actual == expected else math.inf
        tol = _tolerance(tolerances, key.rsplit(".", 1)[-1])
        if gap > tol:
            drifts.append(ColumnDrift(file=name, column=key, max_abs_diff=gap, tolerance=tol))
    return drifts


def compare_baseline(
    current: Union[str, Path],
    baseline: Union[str, Path],
    tolerances: Optional[Dict[str, float]] = None,
) -> DiffReport:
    """Field-by-field diff of every CSV and JSON artifact of ``baseline``.

    ``tolerances`` maps column (or JSON leaf) names to absolute tolerances;
    the ``"*"`` entry is the default, otherwise the default is exact equality.
    Column or field sets that differ raise SchemaMismatchError.
    """
    current, baseline = Path(current), Path(baseline)
    if not baseline.is_dir():
        raise ConfigError(f"Baseline directory {baseline} does not exist", {"baseline": str(baseline)})
    tolerances = tolerances or {}

    report = DiffReport(current=str(current), baseline=str(baseline))
    for relative in _artifacts(baseline):
        name = relative.as_posix()
        ours = current / relative
        if not ours.exists():
            report.missing_files.append(name)
            continue
        if relative.suffix == ".csv":
            frame_now, _ = read_csv(ours)
            frame_then, _ = read_csv(baseline / relative)
            report.drifts.extend(_compare_frames(name, frame_now, frame_then, tolerances))
        else:
            report.drifts.extend(_compare_documents(name, read_json(ours), read_json(baseline / relative), tolerances))
        report.compared_files.append(name)

    for drift in report.drifts:
        logger.warning(f"Drift in {drift.file}:{drift.column}: {drift.max_abs_diff:.3e} > {drift.tolerance:.1e}")
    if report.missing_files:
        logger.warning(f"Missing from {current}: {', '.join(report.missing_files)}")
    return report
