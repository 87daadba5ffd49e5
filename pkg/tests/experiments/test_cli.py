import logging
from pathlib import Path

import pytest

from poroshock.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main
from poroshock.core.config import get_settings
from poroshock.core.logging import configure_logging
from tests.utils.utils import random_table, write_artifacts


def test_profile_command(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main(["profile", "--m", "1.25", "--out", str(tmp_path)]) == EXIT_OK
    output = capsys.readouterr().out
    assert "PASS profile_valid" in output
    assert (tmp_path / "summary.json").exists()


def test_missing_config_is_usage_error(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main(["profile", "--config", str(tmp_path / "absent.toml")]) == EXIT_USAGE
    assert "config" in capsys.readouterr().err


def test_invalid_exponent_is_usage_error(tmp_path: Path) -> None:
    assert main(["profile", "--m", "2.5", "--out", str(tmp_path)]) == EXIT_USAGE


def test_seed_parsing() -> None:
    parser = build_parser()
    assert parser.parse_args(["semigroup", "--seed", "0xff"]).seed == 255
    with pytest.raises(SystemExit):
        parser.parse_args(["semigroup", "--seed", "-1"])


def test_diff_command(tmp_path: Path) -> None:
    write_artifacts(tmp_path / "baseline", random_table())
    write_artifacts(tmp_path / "same", random_table())
    table = random_table()
    table["mass"] += 1e-3
    write_artifacts(tmp_path / "drifted", table)

    assert main(["diff", str(tmp_path / "same"), str(tmp_path / "baseline")]) == EXIT_OK
    assert main(["diff", str(tmp_path / "drifted"), str(tmp_path / "baseline")]) == EXIT_FAILED
    assert main(["diff", str(tmp_path / "drifted"), str(tmp_path / "baseline"), "--tol", "mass=1e-2"]) == EXIT_OK
    report = tmp_path / "diff.json"
    main(["diff", str(tmp_path / "drifted"), str(tmp_path / "baseline"), "--out", str(report)])
    assert report.exists()


def test_diff_schema_mismatch(tmp_path: Path) -> None:
    write_artifacts(tmp_path / "baseline", random_table())
    write_artifacts(tmp_path / "current", random_table().drop(columns=["t"]))
    assert main(["diff", str(tmp_path / "current"), str(tmp_path / "baseline")]) == EXIT_FAILED


def test_unknown_tolerance_format() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["diff", "a", "b", "--tol", "mass"])


def test_global_flags_reach_lab_settings(tmp_path: Path) -> None:
    args = ["--log-level", "debug", "--workers", "2", "profile", "--m", "1.25", "--out", str(tmp_path)]
    assert main(args) == EXIT_OK
    assert get_settings().LOG_LEVEL == "DEBUG"
    assert get_settings().MAX_WORKERS == 2
    assert logging.getLogger("poroshock").level == logging.DEBUG
    configure_logging("INFO")


def test_workers_must_be_positive() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--workers", "0", "profile"])
