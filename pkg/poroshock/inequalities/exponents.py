"""
Exponent algebra of the two interpolation inequalities.

For p >= 2 and 1 < m <= 4/3:

    kappa1 = p - 1 + 2/(m-1)
    kappa2 (1/(m+1) - 1) + (1 - kappa2) A = B,
        A = (m-1)/(2-m) (m+p-1)/(m+1),  B = (m+p-1)/(2 kappa1 (m+1))
    kappa3 (m-1)/(2-m) + (kappa1 - kappa3)/(2 kappa1) = 1

with kappa1 > (2-m)/(m-1) >= 2, kappa2 in (0, 1) and kappa3 in (0, kappa1).
Range violations are reported on the ledger, never corrected.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Union

from poroshock.core.exceptions import RangeError
from poroshock.schemas.report import ExponentLedger

logger = logging.getLogger(__name__)

Number = Union[float, Fraction]

LEDGER_EXPONENTS = (1.05, 1.1, 1.15, 1.2, 1.25, 1.3, 4.0 / 3.0)
LEDGER_MOMENTS = tuple(range(2, 21))
RESIDUAL_TOL = 1e-12


def nu_statement(p: Number, m: Number) -> Optional[Number]:
    """nu = 1 + (3m+1)/(p-2); undefined for p = 2."""
    if p == 2:
        return None
    return 1 + (3 * m + 1) / (p - 2)


def nu_proof(p: Number, m: Number) -> Number:
    """nu' = (m+p-1)/(mp+m+p-1) of the sup-norm interpolation step."""
    return (m + p - 1) / (m * p + m + p - 1)


def nu_chained(p: Number, m: Number) -> Number:
    """Exponent produced by chaining the sup-norm step with ||w||_p^p <= C ||w||_inf^{p-2}.

    ||w||_p^p <= C D^{nu'(p-2)/(m+p-1)} ||w||_p^{(1-nu')(p-2)} solves to
    (||w||_p^p)^{nu} <= C D with nu = (p - (1-nu')(p-2)) (m+p-1) / (p nu' (p-2)).
    """
    nu = nu_proof(p, m)
    return (p - (1 - nu) * (p - 2)) * (m + p - 1) / (p * nu * (p - 2))


def exponent_audit(p: Number, m: Number) -> Number:
    """nu_chained - nu_statement, exact when p and m are Fractions."""
    if p <= 2:
        raise RangeError(f"The audit needs p > 2, got {p}")
    return nu_chained(p, m) - nu_statement(p, m)


def kappa1(p: float, m: float) -> float:
    return p - 1.0 + 2.0 / (m - 1.0)


def kappa2(p: float, m: float) -> float:
    k1 = kappa1(p, m)
    A = (m - 1.0) / (2.0 - m) * (m + p - 1.0) / (m + 1.0)
    B = (m + p - 1.0) / (2.0 * k1 * (m + 1.0))
    return (A - B) / (1.0 + A - 1.0 / (m + 1.0))


def kappa3(p: float, m: float) -> float:
    k1 = kappa1(p, m)
    return 0.5 / ((m - 1.0) / (2.0 - m) - 1.0 / (2.0 * k1))


def exponent_ledger(p: float, m: float) -> ExponentLedger:
    if p < 2.0:
        raise RangeError(f"The ledger needs p >= 2, got {p}")
    if not 1.0 < m <= 4.0 / 3.0 + 1e-15:
        raise RangeError(f"The ledger needs 1 < m <= 4/3, got {m}")

    k1, k2, k3 = kappa1(p, m), kappa2(p, m), kappa3(p, m)
    A = (m - 1.0) / (2.0 - m) * (m + p - 1.0) / (m + 1.0)
    B = (m + p - 1.0) / (2.0 * k1 * (m + 1.0))
    k2_residual = abs(k2 * (1.0 / (m + 1.0) - 1.0) + (1.0 - k2) * A - B)
    k3_residual = abs(k3 * (m - 1.0) / (2.0 - m) + (k1 - k3) / (2.0 * k1) - 1.0)

    floor = (2.0 - m) / (m - 1.0)
    violations = []
    if not k1 > floor:
        violations.append(f"kappa1 = {k1!r} is not above (2-m)/(m-1) = {floor!r}")
    if floor < 2.0 - 1e-12:
        violations.append(f"(2-m)/(m-1) = {floor!r} is below 2")
    if not 0.0 < k2 < 1.0:
        violations.append(f"kappa2 = {k2!r} lies outside (0, 1)")
    if not 0.0 < k3 < k1:
        violations.append(f"kappa3 = {k3!r} lies outside (0, kappa1 = {k1!r})")
    if k2_residual > RESIDUAL_TOL:
        violations.append(f"kappa2 residual {k2_residual:.3e}")
    if k3_residual > RESIDUAL_TOL:
        violations.append(f"kappa3 residual {k3_residual:.3e}")
    for violation in violations:
        logger.warning(f"Ledger p={p:g} m={m:g}: {violation}")

    nu = nu_statement(p, m)
    return ExponentLedger(
        p=p,
        m=m,
        kappa1=k1,
        kappa2=k2,
        kappa3=k3,
        nu_stmt=nu,
        nu_proof=nu_proof(p, m),
        kappa2_residual=k2_residual,
        kappa3_residual=k3_residual,
        violations=violations,
    )


def ledger_sweep(
    moments: Iterable[float] = LEDGER_MOMENTS, exponents: Iterable[float] = LEDGER_EXPONENTS
) -> List[ExponentLedger]:
    return [exponent_ledger(float(p), float(m)) for m in exponents for p in moments]


def audit_grid(moments: Iterable[int] = range(3, 21), exponents: Iterable[Fraction] = None) -> List[dict]:
    """Exact exponent audit over rational (p, m); every residual should be 0."""
    if exponents is None:
        exponents = [Fraction(21, 20), Fraction(11, 10), Fraction(6, 5), Fraction(5, 4), Fraction(4, 3), Fraction(3, 2)]
    rows = []
    for m in exponents:
        for p in moments:
            residual = exponent_audit(Fraction(p), Fraction(m))
            rows.append({"p": int(p), "m": str(m), "residual": str(residual), "exact": residual == 0})
    return rows

