from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    """One acceptance check of an experiment"""
    name: str
    passed: bool
    value: Optional[float] = None
    threshold: Optional[float] = None
    detail: str = ""


class ProfileReport(BaseModel):
    """Violations found on a constructed shock profile; zero means valid"""
    max_residual: float
    max_monotonicity_violation: float
    max_derivative_bound_violation: float
    derivative_lower_bound: float
    far_field_gap: float
    pin_error: float
    knots: int
    passed: bool


class GradientReport(BaseModel):
    """Gradient and time-regularity diagnostics of a recorded trajectory"""
    times: List[float]
    sup_dumx: List[float]
    sup_dum1x: List[float]
    sup_dux: List[float]
    near_vacuum_dux: List[float]
    lipschitz_bound: float
    max_bound_ratio: float
    bound_ok: bool
    holder_exponent: Optional[float] = None
    holder_stderr: Optional[float] = None


class SemigroupCheckResult(BaseModel):
    """One entry of the semigroup report"""
    model_config = ConfigDict(populate_by_name=True)

    check: str
    m: float
    dx: float
    seed: int
    worst_violation: float
    passed: bool = Field(serialization_alias="pass")


class DecayFit(BaseModel):
    """Least-squares exponent of log(norm) against log(1 + t)"""
    model_config = ConfigDict(populate_by_name=True)

    norm: str
    m: float
    p: Optional[float] = None
    q: Optional[int] = None
    exponent: Optional[float] = None
    stderr: Optional[float] = None
    bound: float
    samples: int
    passed: bool = Field(serialization_alias="pass")
    note: str = ""


class EnergyReport(BaseModel):
    """Monotonicity and decay of h(t) = ||Phi(t)||_p^p"""
    p: float
    m: float
    monotone: bool
    max_relative_increase: float
    exponent: Optional[float] = None
    exponent_bound: float
    constant_C: Optional[float] = None
    ode_constant_min: Optional[float] = None
    ode_constant_median: Optional[float] = None
    h1_Phi0: float
    bound_claimed: bool
    passed: bool
    note: str = ""


class RegionReport(BaseModel):
    """Integrals of B_1 over the four regions at one diagnostic time"""
    t: float
    q: int
    n_cells: int
    counts: Dict[str, int]
    measure: Dict[str, float]
    b1_integral: Dict[str, float]
    flagged_measure: Dict[str, float]
    d0_min_integrand: float
    d1_c: float
    d1_C: float
    b2_min: Dict[str, Optional[float]]

    @property
    def partition_ok(self) -> bool:
        return sum(self.counts.values()) == self.n_cells


class InequalityReport(BaseModel):
    """Report of one functional-inequality verifier"""
    model_config = ConfigDict(populate_by_name=True)

    prop: str
    params: Dict[str, Any] = {}
    empirical_constant: float
    samples: int
    refinement_drift: Optional[float] = None
    scale_exponent: Optional[float] = None
    passed: bool = Field(serialization_alias="pass")
    detail: str = ""


class ExponentLedger(BaseModel):
    """Exponent relations of the interpolation argument for one (p, m)"""
    p: float
    m: float
    kappa1: float
    kappa2: float
    kappa3: float
    nu_stmt: Optional[float] = None
    nu_proof: float
    kappa2_residual: float
    kappa3_residual: float
    violations: List[str] = []

    @property
    def consistent(self) -> bool:
        return not self.violations


class RateChain(BaseModel):
    """Exponent algebra from the moment decay to the stated L2 rate"""
    m: float
    p: float
    q: float
    exponent: float
    limit_p_infinity: float
    q_supremum: float
    limit_at_q_supremum: float
    admissible: bool
    stated_rate: float
    ratio_to_stated: float


class ColumnDrift(BaseModel):
    """Largest difference found in one column of one artifact"""
    file: str
    column: str
    max_abs_diff: float
    tolerance: float


class DiffReport(BaseModel):
    """Field-by-field comparison against a baseline directory"""
    current: str
    baseline: str
    compared_files: List[str] = []
    drifts: List[ColumnDrift] = []
    missing_files: List[str] = []

    @property
    def clean(self) -> bool:
        return not self.drifts and not self.missing_files


class Manifest(BaseModel):
    """Provenance written into every artifact"""
    kind: str
    config_hash: str
    seed: int
    versions: Dict[str, str]


class ExperimentSummary(BaseModel):
    """Outcome of one run_experiment call"""
    kind: str
    checks: List[CheckResult] = []
    artifacts: List[str] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check
