"""Deterministic derivation of per-task random seeds.

Every randomized operation in the package is a pure function of its inputs
and an explicit integer seed.  Child seeds for resampling rounds, fold
assignments, repetitions etc. are derived from a master seed keyed on
(domain, index), so results are identical no matter in which order or on
how many workers the tasks run.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF

# Domain tags: streams for different purposes never collide even when they
# share an index.
DOMAIN_ROUND = 1
DOMAIN_FOLDS = 2
DOMAIN_SPLIT = 3
DOMAIN_PIPELINE = 4
DOMAIN_SYNTH = 5


def derive_seed(master_seed: int, *key: int) -> int:
    """Derive an independent 64-bit child seed from (master_seed, key)."""
    ss = np.random.SeedSequence(master_seed & _MASK64, spawn_key=tuple(key))
    return int(ss.generate_state(1, np.uint64)[0])


def rng_from(seed: int) -> np.random.Generator:
    """A fresh generator for the given seed."""
    return np.random.default_rng(seed & _MASK64)
