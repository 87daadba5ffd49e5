import json
from pathlib import Path

import numpy as np
import pytest

from poroshock.core.exceptions import ConfigError, SchemaMismatchError
from poroshock.utilities.artifacts import read_csv, write_json
from poroshock.utilities.baseline import compare_baseline
from tests.utils.utils import make_manifest, random_table, write_artifacts


@pytest.fixture
def dirs(tmp_path: Path):
    current, baseline = tmp_path / "current", tmp_path / "baseline"
    write_artifacts(baseline, random_table())
    return current, baseline


def test_identical_directories_are_clean(dirs) -> None:
    current, baseline = dirs
    write_artifacts(current, random_table())
    report = compare_baseline(current, baseline)
    assert report.clean
    assert report.compared_files == ["series.csv"]


def test_manifest_line_round_trips(dirs) -> None:
    _, baseline = dirs
    frame, manifest = read_csv(baseline / "series.csv")
    assert manifest["kind"] == "test"
    assert list(frame.columns) == ["t", "l2_phi", "mass"]


def test_drift_beyond_tolerance(dirs) -> None:
    current, baseline = dirs
    table = random_table()
    table["l2_phi"] += 1e-3
    write_artifacts(current, table)
    report = compare_baseline(current, baseline, {"*": 1e-6})
    assert not report.clean
    assert [(d.file, d.column) for d in report.drifts] == [("series.csv", "l2_phi")]
    assert report.drifts[0].max_abs_diff == pytest.approx(1e-3, rel=1e-6)
    assert compare_baseline(current, baseline, {"l2_phi": 1e-2}).clean


def test_missing_column(dirs) -> None:
    current, baseline = dirs
    write_artifacts(current, random_table().drop(columns=["mass"]))
    with pytest.raises(SchemaMismatchError):
        compare_baseline(current, baseline)


def test_missing_file(dirs) -> None:
    current, baseline = dirs
    current.mkdir()
    report = compare_baseline(current, baseline)
    assert report.missing_files == ["series.csv"]
    assert not report.clean


def test_documents_ignore_manifest(tmp_path: Path) -> None:
    current, baseline = tmp_path / "current", tmp_path / "baseline"
    write_json({"shift": -0.1, "fits": [{"exponent": -0.2}]}, baseline / "fit.json", make_manifest(numpy_version="1.0"))
    write_json({"shift": -0.1, "fits": [{"exponent": -0.2}]}, current / "fit.json", make_manifest(numpy_version="2.0"))
    assert compare_baseline(current, baseline).clean
    write_json({"shift": -0.1, "fits": [{"exponent": -0.3}]}, current / "fit.json", make_manifest())
    report = compare_baseline(current, baseline)
    assert [d.column for d in report.drifts] == ["fits.0.exponent"]


def test_missing_baseline_directory(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        compare_baseline(tmp_path, tmp_path / "absent")


def test_non_finite_values_are_written_as_null(tmp_path: Path) -> None:
    path = write_json(
        {"rate": float("nan"), "bound": np.inf, "ratios": np.array([1.0, np.nan]), "count": np.int64(3)},
        tmp_path / "fit.json",
    )
    text = path.read_text(encoding="utf-8")
    assert "NaN" not in text and "Infinity" not in text
    document = json.loads(text)
    assert document["rate"] is None
    assert document["bound"] is None
    assert document["ratios"] == [1.0, None]
    assert document["count"] == 3
