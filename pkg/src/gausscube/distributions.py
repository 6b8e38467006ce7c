"""Gaussian parameter model and the scaling maps between cube laws.

Four named cases cover everything the package computes: the base case with
variance 1/2, the standard normal, the centered case with free standard
deviation, and the general (mu, sigma) case.  Cubes of the centered cases
reduce to the base case by rescaling the evaluation point of the
characteristic function; the general case only has a numeric route.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

SQRT2 = math.sqrt(2.0)
TWO_SQRT2 = 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class GaussianSpec:
    """Mean and standard deviation of the Gaussian whose cube is studied."""

    mu: float
    sigma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise ValueError("mu and sigma must be finite")
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be > 0, got {self.sigma!r}")

    @classmethod
    def half(cls) -> "GaussianSpec":
        """Centered, variance 1/2 (the base case of every closed form)."""
        return cls(0.0, 1.0 / SQRT2)

    @classmethod
    def std(cls) -> "GaussianSpec":
        """Standard normal."""
        return cls(0.0, 1.0)

    @classmethod
    def scaled(cls, sigma: float) -> "GaussianSpec":
        """Centered with standard deviation sigma."""
        return cls(0.0, sigma)

    @classmethod
    def general(cls, mu: float, sigma: float) -> "GaussianSpec":
        return cls(mu, sigma)


class CubeLawKind(enum.Enum):
    CLOSED_FORM_CENTRAL = "closed_form_central"
    NUMERIC_GENERAL = "numeric_general"


def classify(spec: GaussianSpec) -> CubeLawKind:
    """Route a spec to the closed form (mu exactly 0) or the numeric path.

    The test is exact floating-point equality: the closed form is wrong for
    any nonzero mean, so "nearly centered" specs must pass mu = 0 themselves.
    """
    if spec.mu == 0.0:
        return CubeLawKind.CLOSED_FORM_CENTRAL
    return CubeLawKind.NUMERIC_GENERAL


def reduce_to_base_t(spec: GaussianSpec, t: float) -> float:
    """Argument t' with cube-CF(spec, t) = cube-CF(base, t').

    For centered sigma the cube scales by (sigma sqrt2)^3, so
    t' = 2 sqrt2 sigma^3 t.  Raises for mu != 0, where no reduction exists.
    """
    if spec.mu != 0.0:
        raise ValueError("reduction to the base law requires mu = 0")
    return TWO_SQRT2 * (spec.sigma**3 * t)
