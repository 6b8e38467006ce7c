"""Closed-form characteristic functions: the Gaussian itself and its cube.

The cube of the centered variance-1/2 Gaussian has the real, even
characteristic function

    phi(t) = (2 / (3 |t| sqrt(3 pi))) e^{z} K_{1/3}(z),   z = 2 / (27 t^2),

with phi(0) = 1.  Written this way the formula overflows for small |t|
(e^{z} alone exceeds float range below |t| ~ 0.05), so the implementation
always evaluates the fused scaled product e^{z} K_{1/3}(z) and never forms
the two factors separately.  The other centered cases reduce to this one by
rescaling t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import TWO_SQRT2, GaussianSpec
from .special_functions import ORDER_THIRD, bessel_k

_PREFACTOR = 2.0 / (3.0 * math.sqrt(3.0 * math.pi))

SMALL_T_WINDOW = 0.5


@dataclass(frozen=True)
class CharFnValue:
    """One characteristic-function evaluation: value re + i*im at point t."""

    re: float
    im: float
    t: float

    def __post_init__(self) -> None:
        if self.modulus > 1.0 + 1e-9:
            raise ValueError(f"characteristic function modulus {self.modulus!r} exceeds 1 at t={self.t!r}")

    @property
    def modulus(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def charfn_gauss(spec: GaussianSpec, t: float) -> CharFnValue:
    """exp(i t mu - sigma^2 t^2 / 2)."""
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    amp = math.exp(-0.5 * (spec.sigma * t) ** 2)
    return CharFnValue(amp * math.cos(spec.mu * t), amp * math.sin(spec.mu * t), t)


def charfn_cube_half(t: float) -> CharFnValue:
    """Characteristic function of X^3 for centered X with variance 1/2.

    Real and even; exactly 1 at t = 0.  Finite for every representable t:
    when 2/(27 t^2) exceeds float range the value is 1 to double precision
    (the leading correction is -15/16 t^2 < 1e-300) and is returned as such.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    if t == 0.0:
        return CharFnValue(1.0, 0.0, 0.0)
    at = abs(t)
    denom = 27.0 * at * at
    if denom == 0.0 or not math.isfinite(z := 2.0 / denom):
        return CharFnValue(1.0, 0.0, t)
    scaled_k = bessel_k(ORDER_THIRD, z, scaled=True).scaled_value
    return CharFnValue(_PREFACTOR / at * scaled_k, 0.0, t)


def charfn_cube_std(t: float) -> CharFnValue:
    """Characteristic function of the cubed standard normal."""
    inner = charfn_cube_half(TWO_SQRT2 * t)
    return CharFnValue(inner.re, inner.im, t)


def charfn_cube_sigma(sigma: float, t: float) -> CharFnValue:
    """Characteristic function of S^3 for centered S with standard deviation sigma."""
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise ValueError(f"sigma must be finite and > 0, got {sigma!r}")
    inner = charfn_cube_std(sigma**3 * t)
    return CharFnValue(inner.re, inner.im, t)


def charfn_cube_limit_small_t(t: float) -> float:
    """Three-term small-t value 1 - 15/16 t^2 + 3465/512 t^4.

    Valid cross-check window 0 < |t| <= 0.5, where the first omitted term
    stays below 1e-3; outside the window the truncation is meaningless and
    the call is rejected.
    """
    if not (0.0 < abs(t) <= SMALL_T_WINDOW):
        raise ValueError(f"small-t expansion is only valid for 0 < |t| <= {SMALL_T_WINDOW}, got {t!r}")
    t2 = t * t
    return 1.0 - 0.9375 * t2 + (3465.0 / 512.0) * t2 * t2
