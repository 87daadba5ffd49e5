from pathlib import Path

import pytest
from pydantic import ValidationError

from poroshock.core.config import LabSettings, configure_settings, get_settings
from poroshock.core.exceptions import ConfigError
from poroshock.core.experiment_registry import experiment_kinds, get_experiment
from poroshock.core.setting_registry import settings_registry
from poroshock.schemas.experiment import load_config, parse_config

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def test_defaults() -> None:
    config = parse_config({"kind": "decay"})
    assert config.m == 1.25
    assert config.grid.dx == 0.05
    assert config.frame is None
    assert config.decay.window == (1.0, 200.0)
    assert config.reference == "evolved"


def test_m_one_needs_oracle() -> None:
    with pytest.raises(ConfigError) as info:
        parse_config({"kind": "profile", "m": 1.0})
    assert "<root>" in info.value.fields
    assert parse_config({"kind": "profile", "m": 1.0, "oracle": True}).oracle


def test_unknown_field_is_reported() -> None:
    with pytest.raises(ConfigError) as info:
        parse_config({"kind": "profile", "grid": {"dxx": 0.1}})
    assert "grid.dxx" in info.value.fields


def test_bump_needs_amplitude_or_mass() -> None:
    bump = {"shape": "gaussian", "center": 0.0, "width": 1.0, "amplitude": 0.1, "mass": 0.1}
    with pytest.raises(ConfigError):
        parse_config({"kind": "evolve", "perturbation": {"bumps": [bump]}})
    dipole = {"shape": "dipole", "mass": 0.1}
    with pytest.raises(ConfigError):
        parse_config({"kind": "evolve", "perturbation": {"bumps": [dipole]}})


def test_seed_range() -> None:
    with pytest.raises(ConfigError):
        parse_config({"kind": "semigroup", "seed": 2 ** 64})
    assert parse_config({"kind": "semigroup", "seed": 2 ** 64 - 1}).seed == 2 ** 64 - 1


def test_load_config_with_overrides() -> None:
    config = load_config(CONFIGS / "decay.toml", overrides={"grid.dx": 0.1, "seed": 5, "m": None})
    assert config.kind == "decay"
    assert config.grid.dx == 0.1
    assert config.seed == 5
    assert config.m == pytest.approx(4.0 / 3.0)
    assert config.bump_specs()[0]["amplitude"] == 0.005
    assert config.reference == "evolved"


def test_kind_override() -> None:
    assert load_config(kind="report").kind == "report"


@pytest.mark.parametrize("name", sorted(p.name for p in CONFIGS.glob("*.toml")))
def test_shipped_configs_parse(name: str) -> None:
    assert load_config(CONFIGS / name).kind in experiment_kinds()


def test_missing_config_file(tmp_path: Path) -> None:
    with pytest.raises(ConfigError) as info:
        load_config(tmp_path / "absent.toml")
    assert "config" in info.value.fields


def test_invalid_toml(tmp_path: Path) -> None:
    path = tmp_path / "broken.toml"
    path.write_text("kind = \n")
    with pytest.raises(ConfigError):
        load_config(path)


def test_settings_overrides() -> None:
    tightened = get_settings().overridden(CFL_SAFETY=0.2)
    configure_settings(tightened)
    assert get_settings().CFL_SAFETY == 0.2
    with pytest.raises(ValidationError):
        LabSettings(CFL_SAFETY=1.5)
    with pytest.raises(ValidationError):
        LabSettings(REGION_Q=3)


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("POROSHOCK_PHI_MOMENTS", "[2, 6]")
    monkeypatch.setenv("POROSHOCK_MAX_WORKERS", "4")
    settings = LabSettings()
    assert settings.PHI_MOMENTS == [2, 6]
    assert settings.MAX_WORKERS == 4


def test_settings_table() -> None:
    tables = settings_registry.table(get_settings())
    groups = [table.group.id for table in tables]
    assert groups == ["general", "profile", "solver", "checks", "analysis"]
    solver = next(table for table in tables if table.group.id == "solver")
    values = {row.key: row.value for row in solver.settings}
    assert values["CFL_SAFETY"] == get_settings().CFL_SAFETY


def test_experiment_registry() -> None:
    assert experiment_kinds() == sorted(
        ["profile", "evolve", "decay", "semigroup", "inequalities", "regularized", "report"]
    )
    assert get_experiment("spectral") is None
