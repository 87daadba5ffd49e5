import numpy as np
import pytest

from poroshock.core.exceptions import PreconditionError, RangeError
from poroshock.inequalities import bump_train, verify_decay_lemma


@pytest.mark.parametrize("alpha", [1.0, 1.5, 2.0])
def test_bump_train_attains_the_rate(alpha: float) -> None:
    times, values = bump_train(alpha)
    report = verify_decay_lemma(alpha, times, values)
    assert report.passed, report.detail
    assert report.scale_exponent == pytest.approx(-alpha / 2.0, rel=0.1)
    assert np.isfinite(report.empirical_constant)


def test_bump_train_overlap() -> None:
    with pytest.raises(RangeError):
        bump_train(2.0, first=2)


def test_decay_lemma_checks_slope() -> None:
    t = np.array([0.0, 1.0, 2.0])
    with pytest.raises(PreconditionError):
        verify_decay_lemma(1.0, t, 2.0 * t)


def test_decay_lemma_checks_sign_and_order() -> None:
    with pytest.raises(PreconditionError):
        verify_decay_lemma(1.0, [0.0, 1.0], [0.0, -0.1])
    with pytest.raises(PreconditionError):
        verify_decay_lemma(1.0, [1.0, 0.0], [0.0, 0.0])


def test_decay_lemma_alpha_range() -> None:
    with pytest.raises(RangeError):
        verify_decay_lemma(2.5, [0.0, 1.0], [0.0, 0.0])


def test_monotone_decay_without_peaks() -> None:
    t = np.linspace(0.0, 100.0, 1001)
    f = (1.0 + t) ** -0.5
    report = verify_decay_lemma(1.0, t, f)
    assert report.passed
    assert report.scale_exponent is None
    assert report.empirical_constant == pytest.approx(1.0)
