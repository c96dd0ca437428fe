"""Seed handling.

Every random choice in the package draws from ``numpy.random.default_rng``
(PCG64). Child seeds are derived from a parent seed and an integer path with
``numpy.random.SeedSequence`` spawn keys, so a trial's seed depends only on
the master seed and the trial index, never on execution order.
"""

from __future__ import annotations

import numpy as np


def derive_seed(seed: int, *path: int) -> int:
    """A 63-bit child seed of ``seed`` at position ``path``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed))
