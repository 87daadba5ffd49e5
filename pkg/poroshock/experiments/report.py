import logging
from pathlib import Path
from typing import List

import pandas as pd

from poroshock.core.config import get_settings
from poroshock.core.experiment_registry import register_experiment
from poroshock.core.runner import SUMMARY_FILE
from poroshock.core.setting_registry import settings_registry
from poroshock.experiments._base import LabExperiment
from poroshock.schemas.report import ExperimentSummary
from poroshock.utilities.artifacts import read_json

logger = logging.getLogger(__name__)

ACCEPTANCE_COLUMNS = ["run", "kind", "check", "passed", "value", "threshold", "detail"]


@register_experiment
class ReportExperiment(LabExperiment):
    kind = "report"
    description = "Settings table and acceptance table over finished runs"

    def run_directories(self) -> List[Path]:
        if self.config.report.runs:
            return [Path(p) for p in self.config.report.runs]
        parent = self.out_dir.resolve().parent
        own = self.out_dir.resolve()
        return sorted(p for p in parent.iterdir() if p.is_dir() and p != own and (p / SUMMARY_FILE).exists())

    def run(self) -> ExperimentSummary:
        tables = settings_registry.table(get_settings())
        self.write_document({"groups": tables}, "settings.json")

        rows = []
        for directory in self.run_directories():
            path = directory / SUMMARY_FILE
            if not path.exists():
                self.check(f"summary:{directory.name}", False, detail=f"{path} not found")
                continue
            summary = read_json(path)
            for check in summary.get("checks", []):
                rows.append(
                    {
                        "run": directory.name,
                        "kind": summary.get("kind"),
                        "check": check["name"],
                        "passed": check["passed"],
                        "value": check.get("value"),
                        "threshold": check.get("threshold"),
                        "detail": check.get("detail", ""),
                    }
                )
        self.write_table(pd.DataFrame(rows, columns=ACCEPTANCE_COLUMNS), "acceptance.csv")

        failed = [f"{row['run']}:{row['check']}" for row in rows if not row["passed"]]
        self.check(
            "acceptance",
            not failed,
            value=len(failed),
            threshold=0.0,
            detail=", ".join(failed),
        )
        logger.info(f"Collected {len(rows)} checks, {len(failed)} failed")
        return self.summary
