from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import ConstraintViolated
from src.funcalc.functions import RealArray
from src.utils.logging import get_logger

logger = get_logger(__name__)

Bump = Callable[[RealArray], RealArray]

CONSTRAINT_TOL = 1e-10
CHECK_GRID_SIZE = 4001


def _smooth_exponential(t: RealArray) -> RealArray:
    """e(t) = exp(−1/t) for t > 0, 0 otherwise."""
    positive = t > 0.0
    safe = np.where(positive, t, 1.0)
    return np.where(positive, np.exp(-1.0 / safe), 0.0)


def _rising_edge(s: RealArray) -> RealArray:
    """h(s) = e(s − ½) / (e(s − ½) + e(1 − s)); 0 at s = ½, 1 at s = 1."""
    clipped = np.clip(s, 0.5, 1.0)
    up = _smooth_exponential(clipped - 0.5)
    down = _smooth_exponential(1.0 - clipped)
    return up / (up + down)


def default_bump(s: ArrayLike) -> RealArray:
    """Smooth w supported on [½, 2] with w(s) = 1 − w(s/2) on [1, 2]."""
    points = np.asarray(s, dtype=np.float64)
    rising = (points >= 0.5) & (points <= 1.0)
    falling = (points > 1.0) & (points <= 2.0)
    values = np.zeros_like(points)
    values = np.where(rising, _rising_edge(points), values)
    return np.where(falling, 1.0 - _rising_edge(points / 2.0), values)


@dataclass(frozen=True, eq=False)
class LPFilterBank:
    """Dyadic Littlewood–Paley masks w(r / 2ⁿ) generated by one bump w."""

    bump: Bump
    name: str = "default"

    def __call__(self, s: ArrayLike) -> RealArray:
        return np.asarray(self.bump(np.asarray(s, dtype=np.float64)), dtype=np.float64)

    def mask(self, radius: ArrayLike, n: int) -> RealArray:
        return self(np.asarray(radius, dtype=np.float64) / 2.0**n)

    @staticmethod
    def levels(radius_min: float, radius_max: float) -> range:
        """Every n whose mask can be nonzero somewhere on [radius_min, radius_max], radius_min > 0."""
        if radius_min <= 0.0 or radius_max < radius_min:
            raise ValueError(f"invalid radius range [{radius_min}, {radius_max}]")
        low = math.floor(math.log2(radius_min)) - 1
        high = math.ceil(math.log2(radius_max)) + 1
        return range(low, high + 1)

    def partition(self, s: ArrayLike, levels: range) -> RealArray:
        """Σ_n w(s / 2ⁿ) over ``levels``."""
        points = np.asarray(s, dtype=np.float64)
        return np.sum([self.mask(points, n) for n in levels], axis=0)


def validate_bump(bump: Bump, tol: float = CONSTRAINT_TOL, grid_size: int = CHECK_GRID_SIZE) -> list[str]:
    """Return the violated filter constraints on a test grid (empty when w is admissible)."""
    grid = np.linspace(0.0, 4.0, grid_size)
    values = np.asarray(bump(grid), dtype=np.float64)
    reasons: list[str] = []

    if not np.all(np.isfinite(values)):
        reasons.append("non_finite_values")
        return reasons
    if np.min(values) < -tol:
        reasons.append("negative_values")
    outside = (grid < 0.5) | (grid > 2.0)
    if np.any(np.abs(values[outside]) > tol):
        reasons.append("support_outside_half_to_two")

    upper = grid[(grid >= 1.0) & (grid <= 2.0)]
    reflected = np.asarray(bump(upper), dtype=np.float64) + np.asarray(bump(upper / 2.0), dtype=np.float64)
    if np.any(np.abs(reflected - 1.0) > tol):
        reasons.append("reflection_identity_fails")
    return reasons


def make_filter(
    kind: Literal["default", "custom"] = "default",
    bump: Bump | None = None,
    tol: float = CONSTRAINT_TOL,
) -> LPFilterBank:
    if kind == "default":
        return LPFilterBank(bump=default_bump, name="default")
    if bump is None:
        raise ConstraintViolated("a custom filter needs a bump function")

    reasons = validate_bump(bump, tol)
    if reasons:
        raise ConstraintViolated(f"custom filter rejected: {', '.join(reasons)}")
    logger.debug("Accepted custom Littlewood-Paley bump")
    return LPFilterBank(bump=bump, name="custom")
