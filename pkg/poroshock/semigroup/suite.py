import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from poroshock.core.config import get_settings
from poroshock.models.flux import FluxSpec
from poroshock.models.grid import Grid1D
from poroshock.models.profile import ShockProfile
from poroshock.profile.solve import solve_profile
from poroshock.schemas.report import SemigroupCheckResult
from poroshock.semigroup.checks import (
    check_conservation,
    check_l1_contraction,
    check_monotone,
    check_translation,
    constancy_gap,
    conservation_scale,
    contraction_excess,
    translation_tolerance,
)
from poroshock.solver.initial import Bump, InitialData, profile_grid
from poroshock.utilities.pool import parallel_map
from poroshock.utilities.seeds import child_seed

logger = logging.getLogger(__name__)

SUITE_EXPONENTS = (1.1, 1.25, 4.0 / 3.0)
SUITE_SPACINGS = (0.05, 0.1)


@dataclass(frozen=True)
class SemigroupCase:
    """Randomized data of one suite entry: two positive bumps and a translation."""

    m: float
    dx: float
    seed: int
    first: Bump
    second: Bump
    shift_cells: int


def random_bump(rng: np.random.Generator, u_minus: float) -> Bump:
    shape = "gaussian" if rng.random() < 0.5 else "cosine"
    return Bump(
        shape=shape,
        center=float(rng.uniform(-3.0, 3.0)),
        width=float(rng.uniform(0.5, 1.5)),
        amplitude=float(rng.uniform(0.02, 0.1) * u_minus),
    )


def build_case(m: float, dx: float, seed: int, u_minus: float) -> SemigroupCase:
    rng = np.random.default_rng(seed)
    first = random_bump(rng, u_minus)
    second = random_bump(rng, u_minus)
    return SemigroupCase(m=m, dx=dx, seed=seed, first=first, second=second, shift_cells=int(rng.integers(1, 11)))


def case_grid(profile: ShockProfile, case: SemigroupCase, t_end: float) -> Grid1D:
    mass = case.first.mass + case.second.mass
    travel = profile.gamma * t_end + mass / profile.u_minus + 1.0 + case.shift_cells * case.dx
    return profile_grid(profile, case.dx, travel=travel, bumps=(case.first, case.second))


def run_case(
    profile: ShockProfile, flux: FluxSpec, case: SemigroupCase, t_end: float, cadence: float
) -> List[SemigroupCheckResult]:
    """All semigroup checks on one randomized case."""
    app_settings = get_settings()
    grid = case_grid(profile, case, t_end)
    m = case.m
    base = InitialData(profile).state(grid)
    u0 = InitialData(profile, (case.first,)).state(grid)
    v0 = InitialData(profile, (case.first, case.second)).state(grid)
    w0 = InitialData(profile, (case.second,)).state(grid)
    shift = case.shift_cells * grid.dx

    def entry(check: str, violation: float, threshold: float) -> SemigroupCheckResult:
        return SemigroupCheckResult(
            check=check,
            m=m,
            dx=case.dx,
            seed=case.seed,
            worst_violation=violation,
            passed=bool(violation <= threshold),
        )

    rtol = app_settings.CONSERVATION_RTOL
    results = [
        entry(
            "translation",
            check_translation(u0, grid, flux, m, shift, t_end),
            translation_tolerance(u0, grid, shift),
        ),
        entry("monotone", check_monotone(u0, v0, grid, flux, m, t_end, cadence), app_settings.ROUNDOFF_TOL),
        entry("l1_contraction", contraction_excess(check_l1_contraction(u0, w0, grid, flux, m, t_end, cadence)), rtol),
        entry("ordered_l1_constancy", constancy_gap(check_l1_contraction(u0, v0, grid, flux, m, t_end, cadence)), rtol),
        entry(
            "conservation",
            check_conservation(u0, base, grid, flux, m, t_end, cadence) / conservation_scale(u0, base, grid),
            rtol,
        ),
    ]
    failed = [r.check for r in results if not r.passed]
    if failed:
        logger.error(f"Semigroup case m={m:g} dx={case.dx:g} seed={case.seed} failed: {', '.join(failed)}")
    return results


def run_suite(
    flux: FluxSpec,
    u_minus: float,
    seed: int,
    seeds: int,
    t_end: float,
    cadence: float,
    exponents: Sequence[float] = SUITE_EXPONENTS,
    spacings: Sequence[float] = SUITE_SPACINGS,
) -> List[SemigroupCheckResult]:
    """Randomized suite over exponents, spacings and ``seeds`` cases each.

    Case seeds are split deterministically from ``seed``; cases are independent
    and fan out over the worker pool.
    """
    profiles: Dict[float, ShockProfile] = {m: solve_profile(flux, u_minus, m) for m in exponents}
    cases = []
    index = 0
    for m in exponents:
        for dx in spacings:
            for _ in range(seeds):
                cases.append(build_case(m, dx, child_seed(seed, index), u_minus))
                index += 1

    logger.info(f"Running {len(cases)} semigroup cases to t={t_end:g}")
    batches = parallel_map(lambda case: run_case(profiles[case.m], flux, case, t_end, cadence), cases)
    return [result for batch in batches for result in batch]
