from poroshock.models.flux import FluxSpec
from poroshock.models.profile import ShockProfile
from poroshock.models.grid import FieldState, Frame, Grid1D, RegularizedRun, Trajectory
from poroshock.models.series import DecaySeries, PerturbationDiag

__all__ = [
    "DecaySeries",
    "FieldState",
    "FluxSpec",
    "Frame",
    "Grid1D",
    "PerturbationDiag",
    "RegularizedRun",
    "ShockProfile",
    "Trajectory",
]
