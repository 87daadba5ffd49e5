import logging
from collections import defaultdict
from typing import Dict, List

import pandas as pd

from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.inequalities import (
    FunctionFamily,
    audit_grid,
    bump_train,
    g_gauge_check,
    ledger_sweep,
    prop_ab_report,
    prop_pow_report,
    verify_decay_lemma,
    verify_interp_103a,
    verify_interp_402a,
)
from poroshock.schemas.report import ExperimentSummary, InequalityReport
from poroshock.utilities.seeds import child_seed, spawn_generators

logger = logging.getLogger(__name__)


def _param_text(params: dict) -> str:
    """Scalar parameters as k=v pairs; lists and mappings stay in the JSON report."""
    return ";".join(f"{k}={v}" for k, v in sorted(params.items()) if not isinstance(v, (list, dict)))


@register_experiment
class InequalityExperiment(LabExperiment):
    kind = "inequalities"
    description = "Empirical constants of the functional inequalities and the exponent ledger"

    def pointwise_reports(self) -> List[InequalityReport]:
        lab = self.config.inequalities
        rngs = spawn_generators(self.config.seed, len(lab.mus) + len(lab.power_mus))
        reports = [prop_ab_report(rng, mu, lab.sample_counts) for rng, mu in zip(rngs, lab.mus)]
        reports += [
            prop_pow_report(rng, mu, lab.power_samples) for rng, mu in zip(rngs[len(lab.mus):], lab.power_mus)
        ]
        return reports

    def interpolation_reports(self) -> List[InequalityReport]:
        lab = self.config.inequalities
        reports = []
        for index, generator in enumerate(lab.generators):
            family = FunctionFamily(
                generator=generator,
                count=lab.family_count,
                seed=child_seed(self.config.seed, index),
                l2_norm=1.0,
            )
            for m in lab.exponents:
                for p in lab.moments:
                    if m <= 4.0 / 3.0:
                        reports.append(verify_interp_103a(family, p, m))
                    if p > 2.0:
                        reports.append(verify_interp_402a(family, p, m))
        return reports

    def run(self) -> ExperimentSummary:
        lab = self.config.inequalities
        reports = self.pointwise_reports()
        reports += self.interpolation_reports()
        for alpha in lab.alphas:
            times, values = bump_train(alpha)
            reports.append(verify_decay_lemma(alpha, times, values))
        reports += [g_gauge_check(N) for N in lab.gauge_N]

        ledger = ledger_sweep()
        audit = audit_grid()

        self.write_table(
            pd.DataFrame(
                [
                    {
                        "prop": r.prop,
                        "params": _param_text(r.params),
                        "empirical_constant": r.empirical_constant,
                        "samples": r.samples,
                        "refinement_drift": r.refinement_drift,
                        "scale_exponent": r.scale_exponent,
                        "pass": r.passed,
                    }
                    for r in reports
                ]
            ),
            "inequalities.csv",
        )
        self.write_table(pd.DataFrame([entry.model_dump(exclude={"violations"}) for entry in ledger]), "ledger.csv")
        self.write_document({"reports": reports, "ledger": ledger, "audit": audit}, "inequalities.json")

        grouped: Dict[str, List[InequalityReport]] = defaultdict(list)
        for report in reports:
            grouped[report.prop].append(report)
        for prop, entries in grouped.items():
            failed = [r for r in entries if not r.passed]
            self.check(
                prop,
                not failed,
                value=max(r.empirical_constant for r in entries),
                detail=f"{len(failed)} of {len(entries)} failed" if failed else "",
            )

        inconsistent = [entry for entry in ledger if not entry.consistent]
        self.check("exponent_ledger", not inconsistent, value=len(inconsistent), threshold=0.0)
        inexact = [row for row in audit if not row["exact"]]
        self.check("nu_audit", not inexact, value=len(inexact), threshold=0.0)
        logger.info(f"Inequality lab: {len(reports)} reports, {len(ledger)} ledger entries")
        return self.summary
