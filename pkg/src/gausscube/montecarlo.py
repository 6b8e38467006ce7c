"""Seeded Monte Carlo cross-validation of the cube law.

Sampling is fully specified so any implementation, in any language, can
reproduce the stream bit for bit:

* uniform source: SplitMix64 in counter mode.  Output i (0-based) is
  mix64(seed + (i+1) * 0x9E3779B97F4A7C15) with the standard finalizer
  z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27; z *= 0x94D049BB133111EB;
  z ^= z>>31, all on 64-bit words;
* unit interval: u_i = ((word_i >> 11) + 0.5) * 2^-53, in (0, 1);
* normals: Box-Muller on consecutive pairs, both values used:
  n_{2j}   = sqrt(-2 ln u_{2j}) cos(2 pi u_{2j+1}),
  n_{2j+1} = sqrt(-2 ln u_{2j}) sin(2 pi u_{2j+1}).

Counter mode makes sharding trivial: a shard covering samples [a, b) (a, b
even) draws words 2a..2b-1 and produces exactly the same values as the
corresponding slice of a single full run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charfn import CharFnValue
from .distributions import GaussianSpec

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SampleRun:
    """A reproducible sampling job: (seed, n_samples, spec) fixes the output."""

    seed: int
    n_samples: int
    spec: GaussianSpec

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _U64_MASK:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed!r}")
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples!r}")


def _mix64(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * _MIX1
    z = z ^ (z >> np.uint64(27))
    z = z * _MIX2
    return z ^ (z >> np.uint64(31))


def unit_stream(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Uniforms in (0, 1): outputs offset..offset+count-1 of the seeded stream."""
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    words = _mix64(np.uint64(seed) + idx * _GAMMA)
    return ((words >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def standard_normals(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Box-Muller normals; ``offset`` (even, in sample units) selects a shard."""
    if offset % 2:
        raise ValueError("shard offsets must be even (Box-Muller pairs)")
    pairs = (count + 1) // 2
    u = unit_stream(seed, 2 * pairs, offset)
    r = np.sqrt(-2.0 * np.log(u[0::2]))
    theta = (2.0 * math.pi) * u[1::2]
    out = np.empty(2 * pairs)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out[:count]


def sample_cube(run: SampleRun) -> np.ndarray:
    """Draw n_samples of (mu + sigma Z)^3 for the run's Gaussian."""
    z = standard_normals(run.seed, run.n_samples)
    return (run.spec.mu + run.spec.sigma * z) ** 3


def empirical_charfn(run: SampleRun, t: float) -> CharFnValue:
    """Sample average of e^{i t Y}; modulus never exceeds 1 (up to rounding)."""
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    y = sample_cube(run)
    arg = t * y
    return CharFnValue(float(np.mean(np.cos(arg))), float(np.mean(np.sin(arg))), t)
