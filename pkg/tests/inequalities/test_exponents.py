from fractions import Fraction

import pytest

from poroshock.core.exceptions import RangeError
from poroshock.inequalities import audit_grid, exponent_audit, exponent_ledger, ledger_sweep
from poroshock.inequalities.exponents import nu_proof, nu_statement


def test_ledger_entry() -> None:
    entry = exponent_ledger(4.0, 1.25)
    assert entry.kappa1 == pytest.approx(11.0)
    assert 0.0 < entry.kappa2 < 1.0
    assert 0.0 < entry.kappa3 < entry.kappa1
    assert entry.kappa2_residual < 1e-12
    assert entry.kappa3_residual < 1e-12
    assert entry.nu_stmt == pytest.approx(1.0 + 4.75 / 2.0)
    assert entry.consistent


def test_ledger_at_p_two() -> None:
    entry = exponent_ledger(2.0, 1.25)
    assert entry.nu_stmt is None
    assert entry.nu_proof == pytest.approx(nu_proof(2.0, 1.25))


def test_ledger_sweep_is_consistent() -> None:
    entries = ledger_sweep()
    assert entries
    assert all(entry.consistent for entry in entries), [e.violations for e in entries if e.violations]


@pytest.mark.parametrize("p,m", [(1.5, 1.25), (4.0, 1.5), (4.0, 1.0)])
def test_ledger_ranges(p: float, m: float) -> None:
    with pytest.raises(RangeError):
        exponent_ledger(p, m)


def test_exact_audit() -> None:
    assert exponent_audit(Fraction(5), Fraction(5, 4)) == 0
    rows = audit_grid()
    assert rows
    assert all(row["exact"] for row in rows)


def test_audit_needs_p_above_two() -> None:
    assert nu_statement(2, 1.25) is None
    with pytest.raises(RangeError):
        exponent_audit(Fraction(2), Fraction(5, 4))
