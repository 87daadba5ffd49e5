import logging

import pandas as pd

from poroshock.core.experiment_registry import register_experiment
from poroshock.experiments._base import LabExperiment
from poroshock.schemas.report import ExperimentSummary
from poroshock.semigroup import run_suite

logger = logging.getLogger(__name__)

CHECKS = ("translation", "monotone", "l1_contraction", "ordered_l1_constancy", "conservation")


@register_experiment
class SemigroupExperiment(LabExperiment):
    kind = "semigroup"
    description = "Randomized translation, comparison, contraction and conservation suite"

    def run(self) -> ExperimentSummary:
        config, suite = self.config, self.config.semigroup
        results = run_suite(
            self.flux,
            config.u_minus,
            config.seed,
            suite.seeds,
            suite.t_end,
            suite.cadence,
            exponents=suite.exponents,
            spacings=suite.spacings,
        )
        table = pd.DataFrame([r.model_dump(by_alias=True) for r in results])
        self.write_table(table, "semigroup.csv")
        self.write_document({"results": results}, "semigroup.json")

        for check in CHECKS:
            entries = [r for r in results if r.check == check]
            failed = [r for r in entries if not r.passed]
            worst = max((r.worst_violation for r in entries), default=0.0)
            self.check(
                check,
                not failed,
                value=worst,
                detail=f"{len(failed)} of {len(entries)} cases failed" if failed else "",
            )
        logger.info(f"Semigroup suite: {len(results)} checks over {len(results) // len(CHECKS)} cases")
        return self.summary
