import logging
from pathlib import Path
from typing import Optional, Union

from poroshock.core.exceptions import ConfigError
from poroshock.core.experiment_registry import experiment_kinds, get_experiment
from poroshock.schemas.experiment import ExperimentConfig
from poroshock.schemas.report import ExperimentSummary
from poroshock.utilities.artifacts import write_json
from poroshock.utilities.manifest import build_manifest

logger = logging.getLogger(__name__)

DEFAULT_OUT = Path("runs")
SUMMARY_FILE = "summary.json"


def output_directory(config: ExperimentConfig, out: Optional[Union[str, Path]] = None) -> Path:
    """``out`` if given, else the config's ``out``, else ``runs/<kind>``."""
    if out is not None:
        return Path(out)
    if config.out is not None:
        return Path(config.out)
    return DEFAULT_OUT / config.kind


def run_experiment(config: ExperimentConfig, out: Optional[Union[str, Path]] = None) -> ExperimentSummary:
    """Run the pipeline named by ``config.kind`` and write its summary.

    Failed checks are recorded in ``summary.json`` and do not stop the run;
    configuration problems raise ConfigError before anything is written.
    """
    experiment_class = get_experiment(config.kind)
    if experiment_class is None:
        raise ConfigError(
            f"Unknown experiment kind {config.kind}",
            {"kind": f"expected one of {', '.join(experiment_kinds())}"},
        )
    out_dir = output_directory(config, out)
    out_dir.mkdir(parents=True, exist_ok=True)

    logger.info(f"Running {config.kind} experiment into {out_dir}")
    experiment = experiment_class(config, out_dir)
    summary = experiment.run()

    payload = {**summary.model_dump(mode="json"), "passed": summary.passed}
    write_json(payload, out_dir / SUMMARY_FILE, build_manifest(config.kind, config, config.seed))

    failed = [c.name for c in summary.checks if not c.passed]
    if failed:
        logger.error(f"{config.kind}: {len(failed)} of {len(summary.checks)} checks failed: {', '.join(failed)}")
    else:
        logger.info(f"{config.kind}: all {len(summary.checks)} checks passed")
    return summary
