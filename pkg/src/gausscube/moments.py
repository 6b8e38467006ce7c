"""Exact moments of the cube law and its indeterminacy diagnostics.

The even moments of Y = X^3 (X centered, variance 1/2) are the exact
rationals m_{2k} = (6k-1)!! / 8^k; all odd moments vanish by symmetry.
Everything here that can be exact is exact: moments and power-series
coefficients are Fractions over big integers, so the recurrence

    8 m_{2k+2} = (6k+1)(6k+3)(6k+5) m_{2k}

holds bit-for-bit.  The formal expansion sum_k c_k t^{2k} with
c_k = (-1)^k (6k-1)!! / (8^k (2k)!) has zero radius of convergence
(|c_{k+1}/c_k| grows without bound), and the determinacy sum
sum_k m_{2k}^{-1/(2k)} converges (its terms decay like k^{-3/2}), so the
only sufficient condition for determinacy fails while the finite
log-density integral certifies indeterminacy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .special_functions import double_factorial

_HALF_LOG_PI = 0.5 * math.log(math.pi)


def moment(k: int) -> Fraction:
    """Even moment E[Y^(2k)] = (6k-1)!! / 8^k, exact."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return Fraction(double_factorial(6 * k - 1), 8**k)


def odd_moment(k: int) -> Fraction:
    """E[Y^(2k+1)] = 0 for every k: the law is symmetric."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return Fraction(0)


@dataclass(frozen=True)
class MomentSequence:
    """Even moments m_0 .. m_{2K} as exact rationals, with float views."""

    order_cap: int
    even_moments: tuple[Fraction, ...]

    @classmethod
    def build(cls, order_cap: int) -> "MomentSequence":
        if order_cap < 0:
            raise ValueError(f"order_cap must be >= 0, got {order_cap}")
        return cls(order_cap, tuple(moment(k) for k in range(order_cap + 1)))

    def as_floats(self) -> list[float]:
        return [float(m) for m in self.even_moments]


def series_coefficient(k: int) -> Fraction:
    """Formal expansion coefficient c_k = (-1)^k (6k-1)!! / (8^k (2k)!), exact."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    sign = -1 if k % 2 else 1
    return Fraction(sign * double_factorial(6 * k - 1), 8**k * math.factorial(2 * k))


def radius_of_convergence_witness(order_cap: int) -> list[float]:
    """Consecutive coefficient ratios |c_{k+1}/c_k| for k = 1..order_cap.

    Exactly (6k+1)(6k+3)(6k+5) / (8 (2k+1)(2k+2)), so the list grows like
    27k/4 without bound: the formal series has zero radius of convergence.
    """
    if order_cap < 2:
        raise ValueError(f"order_cap must be >= 2, got {order_cap}")
    ratios = []
    for k in range(1, order_cap + 1):
        r = Fraction((6 * k + 1) * (6 * k + 3) * (6 * k + 5), 8 * (2 * k + 1) * (2 * k + 2))
        ratios.append(float(r))
    return ratios


def carleman_term(k: int) -> float:
    """m_{2k}^{-1/(2k)}, via log-gamma so m_{2k} itself never overflows.

    m_{2k} = Gamma(3k + 1/2)/sqrt(pi), hence
    term = exp(-(lgamma(3k+1/2) - ln(pi)/2) / (2k)).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return math.exp(-(math.lgamma(3.0 * k + 0.5) - _HALF_LOG_PI) / (2.0 * k))


def carleman_partial_sums(order_cap: int) -> list[float]:
    """Partial sums of sum_k m_{2k}^{-1/(2k)} for k = 1..order_cap.

    The terms decay like k^{-3/2}, so the sums converge: the Carleman
    divergence test for determinacy is not met.  This is a numerical
    demonstration of the failure, not a proof.
    """
    if order_cap < 1:
        raise ValueError(f"order_cap must be >= 1, got {order_cap}")
    sums = []
    total = 0.0
    for k in range(1, order_cap + 1):
        total += carleman_term(k)
        sums.append(total)
    return sums


def krein_closed_constant() -> float:
    """-pi (ln3 + ln(pi)/2 + 2), the closed value of the log-density integral."""
    return -math.pi * (math.log(3.0) + _HALF_LOG_PI + 2.0)
