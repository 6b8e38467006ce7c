"""Cube-of-a-Gaussian toolkit.

Closed forms (characteristic function, density, CDF, exact moments) for the
cube of a Gaussian random variable, an independent quadrature oracle for
every one of them, moment-indeterminacy diagnostics, and seeded Monte Carlo
cross-checks.  See the ``gausscube`` CLI for tabulation and verification.
"""

from .asymptotics import ExpansionTerm, eval_truncated, ik_ratio_log, small_t_expansion
from .charfn import (
    CharFnValue,
    charfn_cube_half,
    charfn_cube_limit_small_t,
    charfn_cube_sigma,
    charfn_cube_std,
    charfn_gauss,
)
from .density import (
    DensityPoleError,
    DensityValue,
    cdf_cube_half,
    charfn_from_density,
    density_cube_half,
    density_cube_sigma,
)
from .distributions import CubeLawKind, GaussianSpec, classify, reduce_to_base_t
from .moments import (
    MomentSequence,
    carleman_partial_sums,
    krein_closed_constant,
    moment,
    odd_moment,
    radius_of_convergence_witness,
    series_coefficient,
)
from .montecarlo import SampleRun, empirical_charfn, sample_cube
from .quadrature import (
    DEFAULT_CONFIG,
    OracleResult,
    QuadratureConfig,
    QuadratureToleranceError,
    krein_integral,
    ode_residual,
    oracle_charfn_cube_half,
    oracle_charfn_general,
)
from .special_functions import (
    BesselOrder,
    BesselResult,
    Regime,
    bessel_i,
    bessel_k,
    double_factorial,
    erf,
    gamma_fn,
)

__version__ = "0.1.0"

__all__ = [
    "BesselOrder",
    "BesselResult",
    "CharFnValue",
    "CubeLawKind",
    "DEFAULT_CONFIG",
    "DensityPoleError",
    "DensityValue",
    "ExpansionTerm",
    "GaussianSpec",
    "MomentSequence",
    "OracleResult",
    "QuadratureConfig",
    "QuadratureToleranceError",
    "Regime",
    "SampleRun",
    "bessel_i",
    "bessel_k",
    "carleman_partial_sums",
    "cdf_cube_half",
    "charfn_cube_half",
    "charfn_cube_limit_small_t",
    "charfn_cube_sigma",
    "charfn_cube_std",
    "charfn_from_density",
    "charfn_gauss",
    "classify",
    "density_cube_half",
    "density_cube_sigma",
    "double_factorial",
    "empirical_charfn",
    "erf",
    "eval_truncated",
    "gamma_fn",
    "ik_ratio_log",
    "krein_closed_constant",
    "krein_integral",
    "moment",
    "odd_moment",
    "ode_residual",
    "oracle_charfn_cube_half",
    "oracle_charfn_general",
    "radius_of_convergence_witness",
    "reduce_to_base_t",
    "sample_cube",
    "series_coefficient",
    "small_t_expansion",
    "__version__",
]
