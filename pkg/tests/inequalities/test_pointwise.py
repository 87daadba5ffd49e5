import numpy as np
import pytest

from poroshock.core.exceptions import RangeError
from poroshock.inequalities import g_gauge_check, prop_ab_report, prop_pow_report, verify_prop_ab, verify_prop_pow


def test_signed_power_is_exact_for_mu_one() -> None:
    rng = np.random.default_rng(0)
    a, b = rng.uniform(-1.0, 1.0, size=(2, 1000))
    assert verify_prop_ab(a, b, 1.0) == pytest.approx(1.0)


def test_signed_power_antipodal_pair() -> None:
    # a = -b attains 2^{mu-1}
    assert verify_prop_ab([1.0], [-1.0], 3.0) == pytest.approx(4.0)
    assert verify_prop_ab([0.5], [0.5], 2.0) == 0.0


def test_signed_power_range() -> None:
    with pytest.raises(RangeError):
        verify_prop_ab([1.0], [0.0], 0.5)


def test_signed_power_report() -> None:
    report = prop_ab_report(np.random.default_rng(3), 2.0, (1000, 10000))
    assert report.prop == "signed-power"
    assert report.empirical_constant <= 2.0 + 1e-12
    assert report.empirical_constant > 1.9
    constants = report.params["constants"]
    assert constants[0] <= constants[1]


def test_hoelder_power() -> None:
    assert verify_prop_pow([1.0], [0.0], 0.5) == pytest.approx(1.0)
    assert verify_prop_pow([0.3], [0.3], 0.5) == 0.0
    report = prop_pow_report(np.random.default_rng(1), 0.25, 1000)
    assert report.passed
    assert report.empirical_constant <= 1.0 + 1e-12
    assert report.samples == 1001


@pytest.mark.parametrize("mu", [0.0, 1.5])
def test_hoelder_power_range(mu: float) -> None:
    with pytest.raises(RangeError):
        verify_prop_pow([1.0], [0.0], mu)


def test_hoelder_power_needs_non_negative_samples() -> None:
    with pytest.raises(RangeError):
        verify_prop_pow([-1.0], [0.0], 0.5)


@pytest.mark.parametrize("N", [0.5, 1.0, 4.0])
def test_gauge(N: float) -> None:
    report = g_gauge_check(N)
    assert report.passed, report.detail
    assert report.params["G0"] == 0.0
    assert report.params["G1"] == pytest.approx(N)
    assert report.empirical_constant <= -0.25 + 1e-12


def test_gauge_needs_positive_scale() -> None:
    with pytest.raises(RangeError):
        g_gauge_check(0.0)
