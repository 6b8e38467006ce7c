"""Small-t expansion machinery for the cube characteristic function.

The rescaled cosine transform

    A(t) = 3 sqrt3 t e^{-2/(27 t^2)} Int_0^inf cos(t x^3) e^{-x^2} dx

has the divergent small-t expansion

    A(t) ~ (3 sqrt(3 pi)/2) t e^{-2/(27 t^2)} (1 - 15/16 t^2 + 3465/512 t^4 - ...)

whose bracket coefficients are exactly the formal moment-series coefficients
(-1)^n (6n-1)!!/(8^n (2n)!).  A(t) coincides with K_{1/3}(2/(27 t^2)): the
growing solution of the underlying ODE is excluded because I_{1/3}/K_{1/3}
at argument 2/(27 t^2) blows up like e^{4/(27 t^2)}/pi as t -> 0.  All
coefficient arithmetic is exact; floats appear only at evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .moments import series_coefficient
from .special_functions import ORDER_THIRD, bessel_i, bessel_k

_SQRT_3PI = math.sqrt(3.0 * math.pi)
_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class ExpansionTerm:
    """One term coefficient * t^power of the small-t bracket series."""

    power: int
    coefficient: Fraction

    def __post_init__(self) -> None:
        if self.power < 0 or self.power % 2:
            raise ValueError(f"power must be even and >= 0, got {self.power}")


def small_t_expansion(order_cap: int) -> list[ExpansionTerm]:
    """Bracket-series terms up to t^(2*order_cap), coefficients exact.

    Term n is (-1)^n (6n-1)!!/(8^n (2n)!) t^(2n); the first three are
    1, -15/16 t^2, 3465/512 t^4.
    """
    if order_cap < 0:
        raise ValueError(f"order_cap must be >= 0, got {order_cap}")
    return [ExpansionTerm(2 * n, series_coefficient(n)) for n in range(order_cap + 1)]


def eval_truncated(t: float, order_cap: int, with_envelope: bool = True) -> float:
    """Truncated expansion of the rescaled transform at t > 0.

    With the envelope this approximates K_{1/3}(2/(27 t^2)); without it the
    e^{-2/(27 t^2)} factor is dropped, which is the form that stays
    representable for arbitrarily small t.
    """
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError(f"t must be finite and > 0, got {t!r}")
    bracket = 0.0
    t2 = t * t
    power = 1.0
    for term in small_t_expansion(order_cap):
        bracket += float(term.coefficient) * power
        power *= t2
    value = 1.5 * _SQRT_3PI * t * bracket
    if with_envelope:
        value *= math.exp(-2.0 / (27.0 * t2))
    return value


def next_term_bound(t: float, order_cap: int) -> float:
    """|first omitted term| of the bracket series, the truncation error bound."""
    return abs(float(series_coefficient(order_cap + 1))) * t ** (2 * (order_cap + 1))


def ik_ratio_log(t_values: list[float]) -> list[float]:
    """ln(I_{1/3}(z)/K_{1/3}(z)) at z = 2/(27 t^2) for each t, from scaled values.

    Equals ln(scaled_I/scaled_K) + 4/(27 t^2), finite for any t > 0 even
    where the plain ratio overflows; approaches 4/(27 t^2) - ln(pi) as
    t -> 0, which is the divergence that pins the decaying solution.
    """
    out = []
    for t in t_values:
        if not (math.isfinite(t) and t > 0.0):
            raise ValueError(f"t values must be finite and > 0, got {t!r}")
        z = 2.0 / (27.0 * t * t)
        si = bessel_i(ORDER_THIRD, z, scaled=True).scaled_value
        sk = bessel_k(ORDER_THIRD, z, scaled=True).scaled_value
        out.append(math.log(si / sk) + 2.0 * z)
    return out


def i_expansion_report(t: float, order_cap: int = 2) -> tuple[float, float]:
    """Bracket series of the large-z expansion of I_{1/3}, computed two ways.

    First entry: the all-positive-coefficient form 1 + 15/16 t^2 +
    3465/512 t^4 + ...  Second entry: the alternating template
    sum_k (-1)^k prod_j (4 nu^2 - (2j-1)^2) / (k! (8z)^k) with nu = 1/3 and
    z = 2/(27 t^2).  For this order every template factor is negative, so
    the two agree term by term; both are returned side by side so the
    agreement is observable rather than assumed.
    """
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError(f"t must be finite and > 0, got {t!r}")
    t2 = t * t

    positive_form = 0.0
    power = 1.0
    for n in range(order_cap + 1):
        positive_form += abs(float(series_coefficient(n))) * power
        power *= t2

    z = 2.0 / (27.0 * t2)
    four_nu2 = 4.0 / 9.0
    template = 1.0
    term = 1.0
    for k in range(order_cap):
        term *= -(four_nu2 - (2 * k + 1) ** 2) / (8.0 * z * (k + 1))
        template += term

    return positive_form, template
