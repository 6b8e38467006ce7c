"""Density and CDF of the cube of a centered Gaussian.

For centered X with variance 1/2 the cube Y = X^3 has density

    f(x) = (1/(3 sqrt(pi))) |x|^(-2/3) e^{-|x|^(2/3)},   x != 0,

with an integrable pole at the origin, and CDF F(x) = (1 + erf(cbrt x))/2.
The pole is a genuine singularity: f(0) is rejected rather than reported as
a large float.  Quadrature against f splits a ball [-delta, delta] off the
origin and integrates it under u = x^(1/3), where the integrand is smooth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import DEFAULT_CONFIG, QuadratureConfig, adaptive_gauss, refined_panels
from .special_functions import erf

_SQRT_PI = math.sqrt(math.pi)
_THIRD = 1.0 / 3.0

#: Radius of the ball around the pole that quadrature integrates in the
#: u = x^(1/3) substitution instead of x-space.
POLE_SPLIT_DELTA = 1e-3

#: x-space truncation for integrals against the density: the envelope
#: e^{-|x|^(2/3)} is below 1e-15 from here on.
DENSITY_TRUNCATION_X = 216.0


class DensityPoleError(ValueError):
    """The density was requested exactly at its (integrable) pole x = 0."""


@dataclass(frozen=True)
class DensityValue:
    """A density evaluation; f is +inf only as the x = 0 pole marker."""

    x: float
    f: float

    def __post_init__(self) -> None:
        if self.x == 0.0:
            if self.f != math.inf:
                raise ValueError("x = 0 must carry the +inf pole marker")
        elif not (math.isfinite(self.f) and self.f >= 0.0):
            raise ValueError(f"density must be finite and >= 0, got {self.f!r}")


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** _THIRD, x)


def density_cube_half(x: float) -> float:
    """Density of the cubed variance-1/2 centered Gaussian at x != 0."""
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    if x == 0.0:
        raise DensityPoleError("density has an integrable pole at x = 0")
    ax23 = abs(x) ** (2.0 * _THIRD)
    return math.exp(-ax23) / (3.0 * _SQRT_PI * ax23)


def cdf_cube_half(x: float) -> float:
    """CDF of the cubed variance-1/2 centered Gaussian: (1 + erf(cbrt x))/2."""
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    return 0.5 * (1.0 + erf(_cbrt(x)))


def density_cube_sigma(sigma: float, x: float) -> float:
    """Density of the cubed centered Gaussian with standard deviation sigma.

    The cube scales by c = (sigma sqrt2)^3 relative to the base case:
    f_sigma(x) = f(x/c)/c.
    """
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise ValueError(f"sigma must be finite and > 0, got {sigma!r}")
    c = (sigma * math.sqrt(2.0)) ** 3
    return density_cube_half(x / c) / c


def charfn_from_density(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Fourier transform of the density, 2 Int_0^inf cos(t x) f(x) dx.

    Evaluates the density pointwise in x-space (this is what makes it a check
    on f itself): [0, delta] goes through the u = x^(1/3) substitution where
    the pole disappears, the rest uses Gauss panels delimited by the zeros of
    cos(t x).  Must reproduce the closed-form characteristic function.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    if t == 0.0:
        return 1.0
    at = abs(t)
    delta = POLE_SPLIT_DELTA
    x_max = DENSITY_TRUNCATION_X

    # Pole ball under u = x^(1/3): 2 Int_0^{delta^(1/3)} cos(t u^3) e^{-u^2} / sqrt(pi) du.
    u_hi = delta**_THIRD
    ball = 2.0 * adaptive_gauss(
        lambda u: math.cos(at * u**3) * math.exp(-u * u) / _SQRT_PI, 0.0, u_hi, 1e-13
    )

    # Outer part on [delta, x_max], panels at the zeros of cos(t x) plus a unit lattice.
    k_lo = math.ceil(at * delta / math.pi - 0.5)
    k_hi = math.floor(at * x_max / math.pi - 0.5)
    zeros = (np.arange(k_lo, k_hi + 1, dtype=float) + 0.5) * math.pi / at
    zeros = zeros[(zeros > delta) & (zeros < x_max)]
    lattice = np.arange(math.ceil(delta), x_max, 1.0)
    breaks = np.unique(np.concatenate(([delta], zeros, lattice, [x_max])))

    def f(x: np.ndarray) -> np.ndarray:
        ax23 = x ** (2.0 * _THIRD)
        return 2.0 * np.cos(at * x) * np.exp(-ax23) / (3.0 * _SQRT_PI * ax23)

    outer, _ = refined_panels(f, breaks, cfg.panel_order)
    return ball + outer


def density_moment_quadrature(k: int, x_max: float | None = None) -> float:
    """Int x^(2k) f(x) dx by pole-aware quadrature (k <= 3 supported well).

    Same split as :func:`charfn_from_density`: the ball around the pole is
    integrated under u = x^(1/3), the rest directly against the density in
    x-space.  The truncation default grows with k so the tail of
    x^(2k) e^{-x^(2/3)} stays below 1e-12 of the moment.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    delta = POLE_SPLIT_DELTA
    if x_max is None:
        x_max = (40.0 + 12.0 * k) ** 1.5

    ball = 2.0 * adaptive_gauss(
        lambda u: u ** (6 * k) * math.exp(-u * u) / _SQRT_PI, 0.0, delta**_THIRD, 1e-13
    )
    outer = 2.0 * adaptive_gauss(
        lambda x: x ** (2 * k) * density_cube_half(x), delta, float(x_max), 1e-12
    )
    return ball + outer
