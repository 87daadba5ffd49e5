import math

import numpy as np
import pytest

from poroshock.analysis import antiderivative, h1_norm, lp_norm, perturbation_mass
from poroshock.core.exceptions import RangeError


def test_lp_norms_of_constant() -> None:
    values = np.ones(10)
    assert lp_norm(values, 0.1, 1.0) == pytest.approx(1.0)
    assert lp_norm(values, 0.1, 2.0) == pytest.approx(1.0)
    assert lp_norm(values, 0.1, 8.0) == pytest.approx(1.0)
    assert lp_norm(values, 0.1, math.inf) == 1.0


def test_lp_norm_of_large_values() -> None:
    values = np.full(4, 1e80)
    assert lp_norm(values, 0.25, 8.0) == pytest.approx(1e80)


def test_lp_norm_edge_cases() -> None:
    assert lp_norm(np.zeros(5), 0.1, 4.0) == 0.0
    assert lp_norm(np.array([]), 0.1, 2.0) == 0.0
    with pytest.raises(RangeError):
        lp_norm(np.ones(3), 0.1, 0.5)


def test_h1_norm() -> None:
    x = np.arange(11) * 0.1
    # slope 2 on every difference
    assert h1_norm(2.0 * x, 0.1) == pytest.approx(math.sqrt(0.1 * np.sum((2.0 * x) ** 2) + 0.1 * 10 * 4.0))


def test_antiderivative() -> None:
    Phi = antiderivative(np.ones(11), 0.1)
    assert Phi[0] == 0.0
    assert Phi[-1] == pytest.approx(1.0)
    assert antiderivative(np.array([]), 0.1).size == 0
    assert perturbation_mass(np.ones(10), 0.1) == pytest.approx(1.0)
