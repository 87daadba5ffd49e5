from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator
from scipy.integrate import trapezoid
from scipy.interpolate import CubicSpline

FamilyKind = Literal["gaussian", "bump", "ramp", "random-spline"]


@dataclass(frozen=True, eq=False)
class Member:
    """One sampled test function w with its exact derivative on the grid x."""

    x: np.ndarray
    w: np.ndarray
    w_x: np.ndarray

    def scaled(self, factor: float) -> "Member":
        return Member(self.x, factor * self.w, factor * self.w_x)

    def l2(self) -> float:
        return float(np.sqrt(trapezoid(self.w * self.w, self.x)))


class FunctionFamily(BaseModel):
    """Seeded family of H^1 test functions on [-L, L].

    gaussian:      A exp(-((x - c)/s)^2)
    bump:          A (1 - r^2)^2 on |r| < 1, r = (x - c)/s
    ramp:          trapezoid rising over s, flat over s, falling over s
    random-spline: clamped cubic spline through random knots, zero at both ends

    With ``l2_norm`` every member is rescaled to that L2 norm.
    """

    generator: FamilyKind
    count: int = Field(default=16, ge=1)
    seed: int = 0
    amplitude: Tuple[float, float] = (0.2, 2.0)
    width: Tuple[float, float] = (0.5, 2.0)
    center: Tuple[float, float] = (-2.0, 2.0)
    half_length: float = Field(default=20.0, gt=0.0)
    dx: float = Field(default=0.01, gt=0.0)
    l2_norm: Optional[float] = Field(default=None, gt=0.0)

    @model_validator(mode="after")
    def fits_window(self) -> "FunctionFamily":
        reach = max(abs(self.center[0]), abs(self.center[1])) + 6.0 * self.width[1]
        if reach >= self.half_length:
            raise ValueError(f"Members reach |x| = {reach:g}; half_length must exceed it")
        return self

    def grid(self, dx: Optional[float] = None) -> np.ndarray:
        dx = dx or self.dx
        n = int(round(2.0 * self.half_length / dx))
        return np.linspace(-self.half_length, self.half_length, n + 1)

    def _parameters(self) -> List[Tuple[float, float, float, np.random.Generator]]:
        rng = np.random.default_rng(self.seed)
        params = []
        for child in rng.spawn(self.count):
            params.append(
                (
                    float(child.uniform(*self.amplitude)),
                    float(child.uniform(*self.width)),
                    float(child.uniform(*self.center)),
                    child,
                )
            )
        return params

    def members(self, dx: Optional[float] = None) -> List[Member]:
        """Members sampled on the grid of spacing ``dx``; the same functions at every dx."""
        x = self.grid(dx)
        out = []
        for amplitude, width, center, child in self._parameters():
            w, w_x = _evaluate(self.generator, x, amplitude, width, center, child)
            member = Member(x, w, w_x)
            if self.l2_norm is not None:
                norm = member.l2()
                if norm > 0.0:
                    member = member.scaled(self.l2_norm / norm)
            out.append(member)
        return out


def _evaluate(generator: FamilyKind, x, amplitude, width, center, rng: np.random.Generator):
    r = (x - center) / width
    if generator == "gaussian":
        w = amplitude * np.exp(-r * r)
        return w, -2.0 * r / width * w
    if generator == "bump":
        inside = np.abs(r) < 1.0
        w = np.where(inside, amplitude * (1.0 - r * r) ** 2, 0.0)
        w_x = np.where(inside, -4.0 * amplitude * r * (1.0 - r * r) / width, 0.0)
        return w, w_x
    if generator == "ramp":
        # rise on [c - 1.5s, c - 0.5s], plateau, fall on [c + 0.5s, c + 1.5s]
        rise = np.clip(r + 1.5, 0.0, 1.0)
        fall = np.clip(1.5 - r, 0.0, 1.0)
        w = amplitude * np.minimum(rise, fall)
        slope = np.where((r > -1.5) & (r < -0.5), amplitude / width, 0.0)
        slope = np.where((r > 0.5) & (r < 1.5), -amplitude / width, slope)
        return w, slope
    # random-spline on [c - 2s, c + 2s]
    knots = np.linspace(center - 2.0 * width, center + 2.0 * width, 9)
    values = np.concatenate(([0.0], amplitude * rng.normal(size=7), [0.0]))
    spline = CubicSpline(knots, values, bc_type="clamped")
    inside = (x > knots[0]) & (x < knots[-1])
    return np.where(inside, spline(x), 0.0), np.where(inside, spline(x, 1), 0.0)
