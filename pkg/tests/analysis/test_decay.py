from typing import Optional

import numpy as np
import pytest

from poroshock.analysis import decay_fit, decay_record, interpolation_ratio, phi_lp_energy_check, sup_rate, theorem_rate
from poroshock.core.exceptions import InsufficientDataError, InvalidStateError
from poroshock.models.series import DecaySeries


def power_series(exponent: float, moment_exponent: float = 0.5, h1: float = 0.01, t_end: float = 200.0) -> DecaySeries:
    """Synthetic records decaying like (1 + t)^exponent, h = ||Phi||_4^4 like (1 + t)^-moment_exponent."""
    series = DecaySeries(moments=(4,))
    for t in np.linspace(0.0, t_end, 201):
        level = (1.0 + t) ** exponent
        series.append(
            {
                "t": float(t),
                "l1_phi": level,
                "l2_phi": level,
                "linf_phi": level,
                "l2_Phi": level,
                "h1_Phi": h1,
                "lp_Phi_4": 0.1 * (1.0 + t) ** (-moment_exponent / 4.0),
            }
        )
    return series


def test_rates() -> None:
    assert theorem_rate(1.0) == pytest.approx(1.0 / 72.0)
    assert theorem_rate(1.25) == pytest.approx(1.0 / 83.0)
    assert sup_rate(1.25) == pytest.approx(2.0 / 3.0 * theorem_rate(1.25))


def test_fit_recovers_exponent() -> None:
    fit = decay_fit(power_series(-0.2), (1.0, 200.0), 1.25)
    assert fit.exponent == pytest.approx(-0.2, abs=1e-9)
    assert fit.bound == pytest.approx(theorem_rate(1.25))
    assert fit.samples == 200
    assert fit.passed


def test_fit_of_slow_decay_fails() -> None:
    fit = decay_fit(power_series(-0.001), (1.0, 200.0), 1.25, norm="linf_phi", bound=0.5)
    assert not fit.passed


def test_fit_needs_records() -> None:
    with pytest.raises(InsufficientDataError):
        decay_fit(power_series(-0.2, t_end=5.0), (1.0, 1.1), 1.25)


def test_fit_unknown_norm() -> None:
    with pytest.raises(KeyError):
        decay_fit(power_series(-0.2), (1.0, 200.0), 1.25, norm="lp_Phi_4")


def test_records_must_increase() -> None:
    series = power_series(-0.2, t_end=10.0)
    record = dict(series.records[-1])
    with pytest.raises(InvalidStateError):
        series.append(record)


def test_decay_record_columns() -> None:
    phi = np.exp(-np.linspace(-5.0, 5.0, 201) ** 2)
    record = decay_record(2.0, phi, 0.05, (2, 4))
    assert set(record) == {"t", "l1_phi", "l2_phi", "linf_phi", "l2_Phi", "h1_Phi", "lp_Phi_2", "lp_Phi_4"}
    assert record["linf_phi"] == pytest.approx(1.0)
    assert record["l1_phi"] == pytest.approx(np.sqrt(np.pi), rel=1e-3)


def test_energy_check_passes_for_fast_decay() -> None:
    report = phi_lp_energy_check(power_series(-0.2, moment_exponent=0.5), 4, 1.25, window=(1.0, 200.0))
    assert report.monotone
    assert report.bound_claimed
    assert report.exponent == pytest.approx(-0.5, abs=1e-9)
    assert report.exponent_bound == pytest.approx(2.0 / 4.75)
    assert report.passed


def test_energy_check_flags_slow_decay() -> None:
    report = phi_lp_energy_check(power_series(-0.2, moment_exponent=0.1), 4, 1.25, window=(1.0, 200.0))
    assert report.bound_claimed
    assert not report.passed


def test_energy_bound_not_claimed_for_large_data() -> None:
    report = phi_lp_energy_check(power_series(-0.2, moment_exponent=0.1, h1=1.0), 4, 1.25)
    assert not report.bound_claimed
    assert report.passed
    assert "not claimed" in report.note


def test_interpolation_ratio() -> None:
    x = np.linspace(-10.0, 10.0, 2001)
    phi = np.exp(-x * x)
    ratio: Optional[float] = interpolation_ratio(phi, 0.01, 4.0)
    assert ratio is not None and 0.0 < ratio < np.inf
    assert interpolation_ratio(np.zeros(10), 0.1, 4.0) is None
