import importlib
import logging
import pkgutil
from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING, ClassVar, Dict, List, Optional, Type

if TYPE_CHECKING:
    from poroshock.schemas.experiment import ExperimentConfig
    from poroshock.schemas.report import ExperimentSummary

logger = logging.getLogger(__name__)

# Registry for experiment pipelines
_EXPERIMENTS: Dict[str, Type["BaseExperiment"]] = {}


class BaseExperiment(ABC):
    """Base class for all experiment pipelines.

    A pipeline turns a validated ExperimentConfig into artifacts inside its
    output directory and returns a summary with one entry per acceptance check.
    Pipelines are registered with :func:`register_experiment`.
    """

    kind: ClassVar[str] = None
    description: ClassVar[str] = ""

    def __init__(self, config: "ExperimentConfig", out_dir: Path):
        self.config = config
        self.out_dir = Path(out_dir)

    @abstractmethod
    def run(self) -> "ExperimentSummary":
        """Execute the pipeline."""
        pass


def register_experiment(experiment_class: Type[BaseExperiment]) -> Type[BaseExperiment]:
    """Decorator to register an experiment pipeline class.

    Example:
        ```python
        @register_experiment
        class ProfileExperiment(BaseExperiment):
            kind = "profile"

            def run(self) -> ExperimentSummary:
                ...
        ```
    """
    kind = getattr(experiment_class, "kind", None)
    if not kind:
        raise ValueError(f"Experiment {experiment_class.__name__} has no kind attribute")

    if kind in _EXPERIMENTS:
        logger.warning(f"Overriding existing experiment for {kind}")

    _EXPERIMENTS[kind] = experiment_class
    logger.debug(f"Registered experiment: {kind}")
    return experiment_class


class ExperimentRegistry:
    """Discovers the pipelines shipped in ``poroshock.experiments``."""

    package = "poroshock.experiments"

    def __init__(self):
        self._discovered = False

    def discover(self) -> List[str]:
        """Import every pipeline module so its decorator runs."""
        if not self._discovered:
            package = importlib.import_module(self.package)
            for info in pkgutil.iter_modules([str(Path(package.__file__).parent)]):
                if info.name.startswith("_"):
                    continue
                try:
                    importlib.import_module(f"{self.package}.{info.name}")
                except Exception as e:
                    logger.error(f"Failed to import experiment module {info.name}: {e}", exc_info=True)
                    raise
            self._discovered = True
            logger.debug(f"Discovered experiments: {', '.join(sorted(_EXPERIMENTS))}")
        return sorted(_EXPERIMENTS)

    def get(self, kind: str) -> Optional[Type[BaseExperiment]]:
        self.discover()
        experiment_class = _EXPERIMENTS.get(kind)
        if experiment_class is None:
            logger.warning(f"Experiment {kind} not found in registry")
        return experiment_class


experiment_registry = ExperimentRegistry()


def get_experiment(kind: str) -> Optional[Type[BaseExperiment]]:
    """Get the registered pipeline class for an experiment kind."""
    return experiment_registry.get(kind)


def experiment_kinds() -> List[str]:
    return experiment_registry.discover()
