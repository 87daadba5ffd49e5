from poroshock.solver.scheme import advance, cfl_dt, godunov_flux, step
from poroshock.solver.evolve import evolve, evolve_pair, pair_dt, record_times
from poroshock.solver.initial import Bump, InitialData, bumps_from_specs, front_margin, profile_grid
from poroshock.solver.regularized import cascade, regularized_solve
from poroshock.solver.diagnostics import gradient_diagnostics, holder_exponent
from poroshock.solver.export import export_norms, export_snapshots, norms_table
from poroshock.solver.observers import create_observers, registered_observers

__all__ = [
    "Bump",
    "InitialData",
    "advance",
    "bumps_from_specs",
    "cascade",
    "cfl_dt",
    "create_observers",
    "evolve",
    "evolve_pair",
    "export_norms",
    "export_snapshots",
    "front_margin",
    "godunov_flux",
    "gradient_diagnostics",
    "holder_exponent",
    "norms_table",
    "pair_dt",
    "profile_grid",
    "record_times",
    "registered_observers",
    "regularized_solve",
    "step",
]
