from poroshock.analysis.norms import h1_norm, lp_norm
from poroshock.analysis.shift import compute_shift, compute_shift_bisect
from poroshock.analysis.perturbation import antiderivative, perturbation, perturbation_mass
from poroshock.analysis.regions import b1_integrals, region_diagnostics, region_partition, region_rows
from poroshock.analysis.decay import decay_fit, decay_record, interpolation_ratio, sup_rate, theorem_rate
from poroshock.analysis.energy import phi_lp_energy_check
from poroshock.analysis.rates import rate_chain

__all__ = [
    "antiderivative",
    "b1_integrals",
    "compute_shift",
    "compute_shift_bisect",
    "decay_fit",
    "decay_record",
    "h1_norm",
    "interpolation_ratio",
    "lp_norm",
    "perturbation",
    "perturbation_mass",
    "phi_lp_energy_check",
    "rate_chain",
    "region_diagnostics",
    "region_partition",
    "region_rows",
    "sup_rate",
    "theorem_rate",
]
