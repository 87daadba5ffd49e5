from poroshock.inequalities.pointwise import prop_ab_report, prop_pow_report, verify_prop_ab, verify_prop_pow
from poroshock.inequalities.families import FunctionFamily, Member
from poroshock.inequalities.interpolation import verify_interp_103a, verify_interp_402a
from poroshock.inequalities.exponents import audit_grid, exponent_audit, exponent_ledger, ledger_sweep
from poroshock.inequalities.decay_lemma import bump_train, verify_decay_lemma
from poroshock.inequalities.gauge import g_gauge_check
