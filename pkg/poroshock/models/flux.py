from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from poroshock.core.exceptions import InvalidFluxError

ArrayFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class FluxSpec:
    """Convex flux f with f(0) = 0 and f'' >= C_f > 0.

    ``eval``, ``deriv`` and ``deriv2`` accept scalars or arrays.
    """

    eval: ArrayFn
    deriv: ArrayFn
    deriv2: ArrayFn
    convexity_floor: float
    name: str = "custom"
    polynomial: Optional[Polynomial] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_polynomial(
        cls, coefficients: Sequence[float], convexity_floor: Optional[float] = None, name: str = "polynomial"
    ) -> "FluxSpec":
        """Build f(u) = c0 + c1 u + c2 u^2 + ... from ascending coefficients."""
        poly = Polynomial(np.asarray(coefficients, dtype=float))
        d1 = poly.deriv(1)
        d2 = poly.deriv(2) if poly.degree() >= 2 else Polynomial([0.0])
        if convexity_floor is None:
            # lower bound of f'' on [0, 1]; validate() rechecks on the working range
            convexity_floor = float(np.min(d2(np.linspace(0.0, 1.0, 101))))
        return cls(
            eval=poly, deriv=d1, deriv2=d2, convexity_floor=convexity_floor, name=name, polynomial=poly
        )

    @classmethod
    def burgers(cls) -> "FluxSpec":
        return cls.from_polynomial([0.0, 0.0, 0.5], convexity_floor=1.0, name="burgers")

    @classmethod
    def quadratic(cls, coefficient: float) -> "FluxSpec":
        """f(u) = coefficient * u^2."""
        return cls.from_polynomial([0.0, 0.0, coefficient], convexity_floor=2.0 * coefficient, name="quadratic")

    def validate(self, u_max: float, samples: int = 257) -> None:
        """Check f(0) = 0 exactly and f'' >= C_f on [0, u_max]."""
        if self.convexity_floor <= 0.0:
            raise InvalidFluxError(f"Convexity floor must be positive, got {self.convexity_floor}")
        f0 = float(self.eval(0.0))
        if f0 != 0.0:
            raise InvalidFluxError(f"Flux {self.name} has f(0) = {f0!r}, expected 0")
        grid = np.linspace(0.0, u_max, samples)
        curvature = np.asarray(self.deriv2(grid), dtype=float) * np.ones_like(grid)
        worst = int(np.argmin(curvature))
        if curvature[worst] < self.convexity_floor:
            raise InvalidFluxError(
                f"Flux {self.name} has f''({grid[worst]:.6g}) = {curvature[worst]:.6g} "
                f"below the convexity floor {self.convexity_floor:.6g}"
            )

    def shifted(self, gamma: float) -> "FluxSpec":
        """Flux f(u) - gamma*u of the frame moving with speed gamma."""
        if gamma == 0.0:
            return self
        if self.polynomial is not None:
            poly = self.polynomial - Polynomial([0.0, gamma])
            return FluxSpec(
                eval=poly,
                deriv=poly.deriv(1),
                deriv2=self.deriv2,
                convexity_floor=self.convexity_floor,
                name=f"{self.name}-shifted",
                polynomial=poly,
            )
        base_eval, base_deriv = self.eval, self.deriv
        return FluxSpec(
            eval=lambda u: base_eval(u) - gamma * u,
            deriv=lambda u: base_deriv(u) - gamma,
            deriv2=self.deriv2,
            convexity_floor=self.convexity_floor,
            name=f"{self.name}-shifted",
        )

    @cached_property
    def sonic_point(self) -> float:
        """Point u* >= 0 where f' vanishes; 0 when f'(0) >= 0."""
        if float(self.deriv(0.0)) >= 0.0:
            return 0.0
        hi = 1.0
        while float(self.deriv(hi)) <= 0.0:
            hi *= 2.0
            if hi > 1e12:
                raise InvalidFluxError(f"Flux {self.name} has no sonic point")
        return float(brentq(self.deriv, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps))

    @cached_property
    def _quotient_polynomial(self) -> Optional[Polynomial]:
        if self.polynomial is None:
            return None
        # f(0) = 0, so dropping the constant term divides exactly
        coef = self.polynomial.coef[1:]
        return Polynomial(coef if len(coef) else [0.0])

    def quotient(self, u: np.ndarray) -> np.ndarray:
        """f(u)/u with its limit f'(0) at u = 0."""
        u = np.asarray(u, dtype=float)
        if self._quotient_polynomial is not None:
            return self._quotient_polynomial(u)
        safe = np.where(u > 0.0, u, 1.0)
        return np.where(u > 0.0, self.eval(safe) / safe, self.deriv(0.0))
