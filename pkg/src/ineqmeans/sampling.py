"""Seeded random sampling used by every randomized check.

The generator is numpy's PCG64 (O'Neill's permuted congruential generator,
128-bit state, 64-bit output).  The algorithm is fixed and documented, so a
witness ``(seed, index)`` reproduces the exact sample on any platform.
Sampling of positive magnitudes is log-uniform over ``[1e-3, 1e3]`` unless a
caller overrides the range.
"""

from __future__ import annotations

import numpy as np

SAMPLE_LO = 1e-3
SAMPLE_HI = 1e3


def make_rng(seed: int) -> np.random.Generator:
    """Build the package's reference generator for a 64-bit seed."""
    return np.random.Generator(np.random.PCG64(seed))


def spawn_rng(seed: int, index: int) -> np.random.Generator:
    """Deterministic per-trial child generator (independent of scheduling)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def log_uniform(rng: np.random.Generator, lo: float = SAMPLE_LO, hi: float = SAMPLE_HI,
                size=None) -> np.ndarray:
    """Log-uniform samples in [lo, hi]; scale-free coverage of magnitudes."""
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size=size))
