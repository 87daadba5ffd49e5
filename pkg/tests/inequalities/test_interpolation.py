import math

import numpy as np
import pytest
from pydantic import ValidationError

from poroshock.core.exceptions import PreconditionError, RangeError
from poroshock.inequalities import FunctionFamily, verify_interp_103a, verify_interp_402a
from poroshock.inequalities.exponents import nu_statement


def test_family_is_seeded() -> None:
    first = FunctionFamily(generator="random-spline", count=3, seed=11).members()
    second = FunctionFamily(generator="random-spline", count=3, seed=11).members()
    assert all(np.array_equal(a.w, b.w) for a, b in zip(first, second))


def test_family_same_functions_on_finer_grid() -> None:
    family = FunctionFamily(generator="gaussian", count=2, seed=5)
    coarse, fine = family.members(), family.members(0.5 * family.dx)
    assert np.allclose(coarse[0].w, fine[0].w[::2])


def test_family_normalization() -> None:
    family = FunctionFamily(generator="bump", count=4, seed=2, l2_norm=1.0)
    for member in family.members():
        assert member.l2() == pytest.approx(1.0)


def test_family_must_fit_its_window() -> None:
    with pytest.raises(ValidationError):
        FunctionFamily(generator="gaussian", half_length=5.0)


def test_103a_is_scale_invariant() -> None:
    family = FunctionFamily(generator="gaussian", count=4, seed=1)
    report = verify_interp_103a(family, 4.0, 1.25)
    assert report.prop == "interp-103a"
    assert report.passed
    assert math.isfinite(report.empirical_constant)
    assert abs(report.scale_exponent) < 1e-6


def test_103a_ranges() -> None:
    family = FunctionFamily(generator="gaussian", count=1)
    with pytest.raises(RangeError):
        verify_interp_103a(family, 1.5, 1.25)
    with pytest.raises(RangeError):
        verify_interp_103a(family, 4.0, 1.5)


def test_402a_needs_normalized_family() -> None:
    family = FunctionFamily(generator="gaussian", count=4, seed=1, amplitude=(1.5, 2.0), width=(1.0, 2.0))
    with pytest.raises(PreconditionError):
        verify_interp_402a(family, 4.0, 1.25)


def test_402a_scaling() -> None:
    family = FunctionFamily(generator="gaussian", count=4, seed=1, l2_norm=1.0)
    report = verify_interp_402a(family, 4.0, 1.25)
    predicted = 4.0 * nu_statement(4.0, 1.25) - (4.0 + 1.25 - 1.0)
    assert report.params["predicted_scale_exponent"] == pytest.approx(predicted)
    assert report.scale_exponent == pytest.approx(predicted, abs=1e-6)
    assert report.passed


def test_402a_ranges() -> None:
    family = FunctionFamily(generator="gaussian", count=1, l2_norm=1.0)
    with pytest.raises(RangeError):
        verify_interp_402a(family, 2.0, 1.25)
