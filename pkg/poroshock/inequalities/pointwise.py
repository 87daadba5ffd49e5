import logging
from typing import Sequence, Tuple

import numpy as np

from poroshock.core.config import get_settings
from poroshock.core.exceptions import RangeError
from poroshock.schemas.report import InequalityReport

logger = logging.getLogger(__name__)

# relative drift of the empirical constant accepted between sample sizes
CONVERGENCE_RTOL = 0.01


def _signed_power(x: np.ndarray, mu: float) -> np.ndarray:
    return np.abs(x) ** (mu - 1.0) * x


def prop_ab_ratios(a, b, mu: float) -> np.ndarray:
    """|a - b|^{mu+1} / ((|a|^{mu-1} a - |b|^{mu-1} b)(a - b)) for a != b."""
    if mu < 1.0:
        raise RangeError(f"The signed-power inequality needs mu >= 1, got {mu}")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    keep = a != b
    a, b = a[keep], b[keep]
    gap = a - b
    return np.abs(gap) ** (mu + 1.0) / ((_signed_power(a, mu) - _signed_power(b, mu)) * gap)


def verify_prop_ab(a, b, mu: float) -> float:
    """Empirical constant C_mu: the sup of the ratio over the samples (0 if none)."""
    ratios = prop_ab_ratios(a, b, mu)
    return float(np.max(ratios)) if ratios.size else 0.0


def verify_prop_pow(a, b, mu: float) -> float:
    """sup |a^mu - b^mu| / |a - b|^mu over non-negative samples; pairs a == b count as 0."""
    if not 0.0 < mu <= 1.0:
        raise RangeError(f"The Hoelder power inequality needs 0 < mu <= 1, got {mu}")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a < 0.0) or np.any(b < 0.0):
        raise RangeError("The Hoelder power inequality is stated for non-negative samples")
    keep = a != b
    if not np.any(keep):
        return 0.0
    a, b = a[keep], b[keep]
    return float(np.max(np.abs(a ** mu - b ** mu) / np.abs(a - b) ** mu))


def sample_pairs(rng: np.random.Generator, count: int, low: float = -1.0, high: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Uniform pairs on [low, high]^2. Both inequalities are homogeneous, so the unit box suffices."""
    pairs = rng.uniform(low, high, size=(count, 2))
    return pairs[:, 0], pairs[:, 1]


def prop_ab_report(rng: np.random.Generator, mu: float, counts: Sequence[int] = (10 ** 4, 10 ** 5)) -> InequalityReport:
    """Empirical C_mu on nested prefixes of one sample stream.

    Nested prefixes make the constant non-decreasing in the sample count; the
    drift between the last two counts must stay below one percent.
    """
    a, b = sample_pairs(rng, max(counts))
    constants = [verify_prop_ab(a[:n], b[:n], mu) for n in counts]
    drift = abs(constants[-1] - constants[-2]) / constants[-1] if len(constants) > 1 else 0.0
    non_decreasing = all(x <= y for x, y in zip(constants, constants[1:]))
    passed = bool(np.isfinite(constants[-1]) and non_decreasing and drift < CONVERGENCE_RTOL)
    return InequalityReport(
        prop="signed-power",
        params={"mu": mu, "counts": list(counts), "constants": constants, "supremum": 2.0 ** (mu - 1.0)},
        empirical_constant=constants[-1],
        samples=int(max(counts)),
        refinement_drift=drift,
        passed=passed,
    )


def prop_pow_report(rng: np.random.Generator, mu: float, count: int = 10 ** 5) -> InequalityReport:
    a, b = sample_pairs(rng, count, 0.0, 1.0)
    # the extremal configuration b = 0
    a = np.append(a, 1.0)
    b = np.append(b, 0.0)
    constant = verify_prop_pow(a, b, mu)
    passed = constant <= 1.0 + get_settings().ROUNDOFF_TOL
    if not passed:
        logger.error(f"Hoelder power constant {constant!r} exceeds 1 for mu={mu}")
    return InequalityReport(
        prop="hoelder-power",
        params={"mu": mu},
        empirical_constant=constant,
        samples=int(a.size),
        passed=bool(passed),
    )
