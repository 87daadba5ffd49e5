"""
Observers record scalar diagnostics of an evolution at its record times.

Observers are registered by name with :func:`register_observer` and created
per run, so they may keep state between records.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, ClassVar, Dict, Iterable, List, Type

import numpy as np

from poroshock.models.flux import FluxSpec
from poroshock.models.grid import FieldState, Grid1D

logger = logging.getLogger(__name__)

# Registry for observers
_OBSERVERS: Dict[str, Type["BaseObserver"]] = {}


@dataclass(frozen=True)
class ObservationContext:
    """What an observer sees at one record time."""

    state: FieldState
    grid: Grid1D
    flux: FluxSpec
    m: float
    steps: int
    initial_mass: float
    boundary_flux: float


class BaseObserver(ABC):
    """Base class for all observers."""

    observer_name: ClassVar[str] = None

    def __init__(self, **config):
        self.config = config

    @abstractmethod
    def observe(self, context: ObservationContext) -> Dict[str, Any]:
        """Return the columns this observer contributes at one record time."""
        pass


def register_observer(observer_class: Type[BaseObserver]) -> Type[BaseObserver]:
    """Decorator to register an observer class.

    Example:
        ```python
        @register_observer
        class PeakObserver(BaseObserver):
            observer_name = "peak"

            def observe(self, context):
                return {"peak": float(context.state.u.max())}
        ```
    """
    observer_name = getattr(observer_class, "observer_name", None)
    if not observer_name:
        raise ValueError(f"Observer {observer_class.__name__} has no observer_name attribute")

    if observer_name in _OBSERVERS:
        logger.warning(f"Overriding existing observer for {observer_name}")

    _OBSERVERS[observer_name] = observer_class
    logger.debug(f"Registered observer: {observer_name}")
    return observer_class


def create_observers(names: Iterable[str]) -> List[BaseObserver]:
    observers = []
    for name in names:
        observer_class = _OBSERVERS.get(name)
        if observer_class is None:
            raise KeyError(f"Unknown observer {name}; registered: {', '.join(sorted(_OBSERVERS))}")
        observers.append(observer_class())
    return observers


def registered_observers() -> List[str]:
    return sorted(_OBSERVERS)


@register_observer
class MassObserver(BaseObserver):
    """Mass, cumulative boundary inflow and their telescoping drift."""

    observer_name: ClassVar[str] = "mass"

    def observe(self, context: ObservationContext) -> Dict[str, Any]:
        mass = context.state.mass(context.grid.dx)
        return {
            "mass": mass,
            "boundary_flux": context.boundary_flux,
            "mass_drift": mass - context.initial_mass - context.boundary_flux,
        }


@register_observer
class ExtremaObserver(BaseObserver):
    observer_name: ClassVar[str] = "extrema"

    def observe(self, context: ObservationContext) -> Dict[str, Any]:
        u = context.state.u
        return {"min_u": float(np.min(u)), "max_u": float(np.max(u))}


@register_observer
class GradientObserver(BaseObserver):
    """sup|du/dx| and sup|d(u^m)/dx| on cell differences."""

    observer_name: ClassVar[str] = "gradients"

    def observe(self, context: ObservationContext) -> Dict[str, Any]:
        u = context.state.u
        dx = context.grid.dx
        return {
            "sup_dux": float(np.max(np.abs(np.diff(u)))) / dx,
            "sup_dumx": float(np.max(np.abs(np.diff(u ** context.m)))) / dx,
        }


@register_observer
class StepCountObserver(BaseObserver):
    observer_name: ClassVar[str] = "steps"

    def observe(self, context: ObservationContext) -> Dict[str, Any]:
        return {"steps": context.steps}
