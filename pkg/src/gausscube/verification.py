"""Cross-validation suites tying every closed form to an independent check.

Each suite returns a list of :class:`CheckResult`; a check compares one
closed-form quantity against its oracle (quadrature, exact arithmetic, or
sampling) at a fixed tolerance and records the measured error.  The CLI
``verify`` command prints these, and the acceptance test suite asserts them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import asymptotics, density, moments, montecarlo, quadrature, special_functions
from .charfn import charfn_cube_half, charfn_cube_sigma, charfn_cube_std
from .distributions import TWO_SQRT2, GaussianSpec

_EPS = 2.220446049250313e-16

THEOREM_GRID = (0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0)
ODE_GRID = (0.3, 0.5, 1.0, 2.0, 3.0)
DENSITY_TRANSFORM_GRID = (0.5, 1.0, 2.0)
ASYMPT_GRID = (0.1, 0.2, 0.3)
SIGMA_GRID = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    measured: float
    tol: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" {self.detail}" if self.detail else ""
        return f"{status} {self.name}: measured={self.measured:.3e} tol={self.tol:.3e}{extra}"


def _check(name: str, measured: float, tol: float, detail: str = "") -> CheckResult:
    return CheckResult(name, measured <= tol, measured, tol, detail)


# ----------------------------------------------------------------------
# charfn suite: closed forms vs quadrature, reductions, general case
# ----------------------------------------------------------------------


def verify_charfn(tol: float | None = None) -> list[CheckResult]:
    cfg = quadrature.DEFAULT_CONFIG
    results = []

    theorem_tol = tol if tol is not None else 1e-8
    worst = 0.0
    for t in THEOREM_GRID:
        closed = charfn_cube_half(t).re
        oracle = quadrature.oracle_charfn_cube_half(t, cfg).value
        worst = max(worst, abs(closed - oracle))
    results.append(_check("charfn.theorem_grid", worst, theorem_tol, f"grid={THEOREM_GRID}"))

    grid = np.linspace(0.05, 2.0, 50)
    worst = 0.0
    for t in grid:
        t = float(t)
        std = charfn_cube_std(t).re
        half = charfn_cube_half(TWO_SQRT2 * t).re
        worst = max(worst, abs(std - half) / max(abs(std), 1e-300))
        for sigma in SIGMA_GRID:
            sig = charfn_cube_sigma(sigma, t).re
            red = charfn_cube_std(sigma**3 * t).re
            worst = max(worst, abs(sig - red) / max(abs(sig), 1e-300))
    results.append(_check("charfn.corollary_chain", worst, 1e-12, "sigma in {0.5,1,2}"))

    worst = 0.0
    for t in grid:
        t = float(t)
        std = charfn_cube_std(t).re
        oracle = quadrature.oracle_charfn_cube_half(TWO_SQRT2 * t, cfg).value
        worst = max(worst, abs(std - oracle) / max(abs(std), 1e-300))
    results.append(_check("charfn.std_vs_oracle", worst, 1e-12, "50-point grid"))

    worst = 0.0
    for t in DENSITY_TRANSFORM_GRID:
        closed = charfn_cube_half(t).re
        via_density = density.charfn_from_density(t, cfg)
        worst = max(worst, abs(closed - via_density))
    results.append(_check("charfn.density_transform", worst, 1e-8, f"grid={DENSITY_TRANSFORM_GRID}"))

    spec = GaussianSpec(1.0, 1.0)
    worst = 0.0
    for t in (0.25, 0.5, 1.0):
        value = quadrature.oracle_charfn_general(spec, t, cfg).value
        worst = max(worst, abs(value) - 1.0)
    results.append(_check("charfn.general_modulus", worst, 1e-9, "mu=1 sigma=1"))

    worst = 0.0
    for sigma in (0.7, 1.0):
        centered = GaussianSpec(0.0, sigma)
        for t in (0.3, 0.8):
            value = quadrature.oracle_charfn_general(centered, t, cfg).value
            closed = charfn_cube_sigma(sigma, t).re
            worst = max(worst, abs(value - closed))
    results.append(_check("charfn.general_centered_reduction", worst, 1e-8, "mu=0 reduces to closed form"))

    return results


# ----------------------------------------------------------------------
# ode suite: the transform ODE and the Bessel kernel itself
# ----------------------------------------------------------------------


def _fd1(f, z: float) -> float:
    h = z * _EPS ** (1.0 / 3.0)
    return (f(z + h) - f(z - h)) / (2.0 * h)


def _fd2(f, z: float) -> float:
    h = z * _EPS**0.25
    return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h)


def verify_ode(tol: float | None = None) -> list[CheckResult]:
    cfg = quadrature.DEFAULT_CONFIG
    results = []

    residual_tol = tol if tol is not None else 1e-7
    worst = 0.0
    for t in ODE_GRID:
        residual = quadrature.ode_residual(t, cfg)
        j0 = quadrature.cosine_transform(t, 0, cfg).value
        a0 = 3.0 * math.sqrt(3.0) * t * math.exp(-2.0 / (27.0 * t * t)) * j0
        worst = max(worst, abs(residual) / (1.0 + abs(a0)))
    results.append(_check("ode.transform_residual", worst, residual_tol, f"grid={ODE_GRID}"))

    # Bessel ODE z^2 w'' + z w' - (z^2 + nu^2) w = 0 by finite differences,
    # residual relative to z^2 |w''|; grid keeps clear of regime boundaries.
    z_grid = [z for z in np.geomspace(0.05, 50.0, 25) if min(abs(z - 2.0), abs(z - 15.0), abs(z - 30.0)) > 0.05]
    worst = 0.0
    for nu in (1.0 / 3.0, 0.5):
        order = special_functions.BesselOrder(nu)
        for fn in (
            lambda z, o=order: special_functions.bessel_k(o, z).value,
            lambda z, o=order: special_functions.bessel_i(o, z).value,
        ):
            for z in z_grid:
                z = float(z)
                w = fn(z)
                w1 = _fd1(fn, z)
                w2 = _fd2(fn, z)
                residual = z * z * w2 + z * w1 - (z * z + nu * nu) * w
                worst = max(worst, abs(residual) / (z * z * abs(w2)))
    results.append(_check("ode.bessel_equation", worst, 1e-5, "nu in {1/3, 1/2}"))

    worst = 0.0
    for nu in (1.0 / 3.0, 0.5):
        order = special_functions.BesselOrder(nu)
        k_fn = lambda z, o=order: special_functions.bessel_k(o, z).value
        i_fn = lambda z, o=order: special_functions.bessel_i(o, z).value
        for z in z_grid:
            z = float(z)
            wron = i_fn(z) * _fd1(k_fn, z) - _fd1(i_fn, z) * k_fn(z)
            worst = max(worst, abs(wron + 1.0 / z) * z)
    results.append(_check("ode.wronskian", worst, 1e-8, "I K' - I' K = -1/z"))

    worst = 0.0
    for z in (0.5, 1.0, 2.5, 5.0, 20.0):
        k_half = special_functions.bessel_k(special_functions.ORDER_HALF, z).value
        exact_k = math.sqrt(0.5 * math.pi / z) * math.exp(-z)
        worst = max(worst, abs(k_half - exact_k) / exact_k)
        i_half = special_functions.bessel_i(special_functions.ORDER_HALF, z).value
        exact_i = math.sqrt(2.0 / (math.pi * z)) * math.sinh(z)
        worst = max(worst, abs(i_half - exact_i) / exact_i)
    results.append(_check("ode.half_order_anchors", worst, 1e-12, "closed half-order forms"))

    worst = 0.0
    third = 1.0 / 3.0
    pairs = [
        (special_functions._k_series(third, 2.0) * math.exp(2.0), special_functions._k_integral_scaled(third, 2.0)),
        (special_functions._k_integral_scaled(third, 15.0), special_functions._k_asymptotic_scaled(third, 15.0)),
        (
            special_functions._i_series(third, 30.0) * math.exp(-30.0),
            special_functions._i_asymptotic_scaled(third, 30.0),
        ),
    ]
    for a, b in pairs:
        worst = max(worst, abs(a - b) / abs(b))
    results.append(_check("ode.regime_continuity", worst, 1e-9, "dispatch boundaries"))

    return results


# ----------------------------------------------------------------------
# krein suite
# ----------------------------------------------------------------------


def verify_krein(tol: float | None = None) -> list[CheckResult]:
    cfg = quadrature.DEFAULT_CONFIG
    results = []

    constant_tol = tol if tol is not None else 1e-6
    numeric = quadrature.krein_integral(cfg)
    closed = moments.krein_closed_constant()
    results.append(
        _check("krein.constant", abs(numeric - closed), constant_tol, f"numeric={numeric!r} closed={closed!r}")
    )
    finite = math.isfinite(numeric)
    results.append(CheckResult("krein.finite", finite, 0.0 if finite else math.inf, math.inf, "integral > -inf"))

    c1, c2, c3 = quadrature.krein_component_integrals(cfg)
    worst = max(abs(c1 - 0.5 * math.pi), abs(c2), abs(c3 - math.pi))
    results.append(_check("krein.components", worst, 1e-9, "targets pi/2, 0, pi"))

    return results


# ----------------------------------------------------------------------
# moments suite
# ----------------------------------------------------------------------


def verify_moments(tol: float | None = None) -> list[CheckResult]:
    results = []

    exact = all(
        8 * moments.moment(k + 1) == (6 * k + 1) * (6 * k + 3) * (6 * k + 5) * moments.moment(k)
        for k in range(51)
    )
    results.append(CheckResult("moments.recurrence", exact, 0.0 if exact else 1.0, 0.0, "exact, k <= 50"))

    quad_tol = tol if tol is not None else 1e-6
    worst = 0.0
    for k in range(4):
        numeric = density.density_moment_quadrature(k)
        target = float(moments.moment(k))
        worst = max(worst, abs(numeric - target) / target)
    results.append(_check("moments.density_quadrature", worst, quad_tol, "k <= 3, relative"))

    ratios = moments.radius_of_convergence_witness(30)
    increasing = all(b > a for a, b in zip(ratios, ratios[1:]))
    results.append(
        CheckResult(
            "moments.coefficient_ratios_increasing",
            increasing and ratios[-1] > 100.0,
            -min((b - a) for a, b in zip(ratios, ratios[1:])),
            0.0,
            f"last ratio {ratios[-1]:.2f}, unbounded growth",
        )
    )

    worst = 0.0
    for k in (50, 100, 200):
        ratio = moments.carleman_term(2 * k) / moments.carleman_term(k)
        worst = max(worst, abs(ratio / 2.0**-1.5 - 1.0))
    results.append(_check("moments.carleman_decay", worst, 0.2, "term(2k)/term(k) vs 2^-3/2"))

    sums = moments.carleman_partial_sums(20000)
    spread = sums[-1] - sums[9999]
    # terms ~ e^{3/2} (3k)^{-3/2}: the 1e4..2e4 band adds ~5.1e-3 and the
    # total tail past 2e4 is bounded by 2 e^{3/2} 3^{-3/2} k^{-1/2} ~ 1.2e-2.
    tail_bound = 2.0 * math.exp(1.5) * 3.0**-1.5 / math.sqrt(20000.0)
    bounded = spread < 1e-2 and math.isfinite(sums[-1])
    results.append(
        CheckResult(
            "moments.carleman_bounded",
            bounded,
            spread,
            1e-2,
            f"sum(2e4)={sums[-1]:.6f}, tail past 2e4 < {tail_bound:.2e}",
        )
    )

    return results


# ----------------------------------------------------------------------
# asympt suite
# ----------------------------------------------------------------------


def verify_asympt(tol: float | None = None) -> list[CheckResult]:
    results = []

    terms = asymptotics.small_t_expansion(2)
    coeffs_ok = [term.coefficient for term in terms] == [Fraction(1), Fraction(-15, 16), Fraction(3465, 512)]
    results.append(
        CheckResult("asympt.coefficients_exact", coeffs_ok, 0.0 if coeffs_ok else 1.0, 0.0, "1, -15/16, 3465/512")
    )

    worst = 0.0
    detail = []
    for t in ASYMPT_GRID:
        closed = charfn_cube_half(t).re
        poly = 1.0 - 0.9375 * t * t + (3465.0 / 512.0) * t**4
        bound = asymptotics.next_term_bound(t, 2)
        err = abs(closed - poly)
        worst = max(worst, err / bound)
        detail.append(f"t={t}: err={err:.2e} bound={bound:.2e}")
    results.append(_check("asympt.truncation_bound", worst, 1.0, "; ".join(detail)))

    ratio_tol = tol if tol is not None else 0.01
    ts = [0.3, 0.2, 0.1]
    logs = asymptotics.ik_ratio_log(ts)
    worst = 0.0
    for t, value in zip(ts, logs):
        predicted = 4.0 / (27.0 * t * t) - math.log(math.pi)
        worst = max(worst, abs(value - predicted) / abs(predicted))
    increasing = all(b > a for a, b in zip(logs, logs[1:]))
    results.append(_check("asympt.ik_ratio_log", worst, ratio_tol, f"monotone={increasing}"))

    return results


# ----------------------------------------------------------------------
# mc suite
# ----------------------------------------------------------------------


def verify_mc(seed: int = 42, n_samples: int = 10**6) -> list[CheckResult]:
    results = []
    run = montecarlo.SampleRun(seed, n_samples, GaussianSpec.half())

    ecf_tol = 4.0 / math.sqrt(n_samples)
    worst = 0.0
    for t in (0.5, 1.0):
        emp = montecarlo.empirical_charfn(run, t)
        closed = charfn_cube_half(t).re
        worst = max(worst, abs(complex(emp.re, emp.im) - closed))
    results.append(_check("mc.empirical_charfn", worst, ecf_tol, f"seed={seed} n={n_samples}"))

    y = montecarlo.sample_cube(run)
    m2_hat = float(np.mean(y**2))
    se = float(np.std(y**2, ddof=1)) / math.sqrt(n_samples)
    results.append(_check("mc.second_moment", abs(m2_hat - 1.875), 4.0 * se, f"estimate={m2_hat:.6f}"))

    again = montecarlo.sample_cube(montecarlo.SampleRun(seed, 10, GaussianSpec.half()))
    same = bool(np.array_equal(y[:10], again))
    results.append(CheckResult("mc.determinism", same, 0.0 if same else 1.0, 0.0, "first 10 samples repeat"))

    return results


SUITES = {
    "charfn": verify_charfn,
    "ode": verify_ode,
    "krein": verify_krein,
    "moments": verify_moments,
    "asympt": verify_asympt,
    "mc": verify_mc,
}


def run_suite(name: str, tol: float | None = None, seed: int | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if name == "mc":
        return verify_mc(seed if seed is not None else 42)
    return SUITES[name](tol)
