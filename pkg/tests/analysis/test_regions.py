import numpy as np
import pytest

from poroshock.analysis import b1_integrals, rate_chain, region_diagnostics, region_partition, region_rows
from poroshock.core.exceptions import RangeError
from poroshock.models.grid import Frame
from poroshock.schemas import RegionDiagConfig
from poroshock.solver import Bump, InitialData, profile_grid


def test_region_partition() -> None:
    xi = np.array([-1.0, -1.0, -1.0, 2.0])
    phi = np.array([1.0, -1.0, -1.0, 0.0])
    phi_xi = np.array([0.0, -1.0, 1.0, 0.0])
    masks = region_partition(xi, phi, phi_xi, 1.0)
    assert masks["D0"].tolist() == [False, False, False, True]
    assert masks["D1"].tolist() == [True, False, False, False]
    assert masks["D2"].tolist() == [False, True, False, False]
    assert masks["D3"].tolist() == [False, False, True, False]


def test_flat_negative_cell_goes_to_d3() -> None:
    masks = region_partition(np.array([0.0]), np.array([-0.5]), np.array([0.0]), 1.0)
    assert masks["D3"].tolist() == [True]


@pytest.mark.parametrize("m", [1.01, 1.25, 1.9])
def test_region_constants(m: float) -> None:
    config = RegionDiagConfig(m=m)
    assert 0.0 < config.one_minus_C2 < 1.0
    assert config.relation_residual() < 1e-12


def test_region_config_validation() -> None:
    with pytest.raises(ValueError):
        RegionDiagConfig(m=1.0)
    with pytest.raises(ValueError):
        RegionDiagConfig(m=1.25, q=3)


def test_b1_integrals(profile) -> None:
    bump = Bump("dipole", -1.0, 1.0, 0.05)
    grid = profile_grid(profile, 0.05, bumps=[bump])
    state = InitialData(profile, (bump,)).state(grid, Frame.TRAVELING)
    config = RegionDiagConfig(m=1.25, q=4)
    report = b1_integrals(state, grid, profile, config)
    assert report.partition_ok
    assert sum(report.measure.values()) == pytest.approx(grid.n_cells * grid.dx)
    assert report.d0_min_integrand >= 0.0
    assert report.counts["D1"] > 0 and report.counts["D0"] > 0
    rows = region_rows(report)
    assert [row["region"] for row in rows] == ["D0", "D1", "D2", "D3"]

    diag = region_diagnostics(state, grid, profile, config)
    covered = sum(mask.astype(int) for mask in diag.masks.values())
    assert np.all(covered == 1)
    assert diag.b1_by_region == report.b1_integral


def test_rate_chain_limit_is_twice_the_stated_rate() -> None:
    chain = rate_chain(1.25, 1e6, 4.0)
    assert chain.q_supremum == pytest.approx(11.0 * 1.25 + 8.0)
    assert chain.limit_at_q_supremum == pytest.approx(1.0 / (2.0 * (11.0 * 1.25 + 7.0)))
    assert chain.ratio_to_stated == pytest.approx(2.0)


def test_rate_chain_admissibility() -> None:
    assert rate_chain(1.25, 1e6, 10.0).admissible
    assert not rate_chain(1.25, 1e6, 30.0).admissible


@pytest.mark.parametrize("p,q", [(2.0, 4.0), (4.0, 3.0)])
def test_rate_chain_ranges(p: float, q: float) -> None:
    with pytest.raises(RangeError):
        rate_chain(1.25, p, q)
