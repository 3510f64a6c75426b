"""Seeded randomness.

Every experiment draws from its own PCG64 stream, keyed by the master seed and
a SHA-256 hash of the experiment name, so results do not depend on the order
in which experiments run.
"""
from __future__ import annotations

import hashlib
import os

import numpy as np

SEED_ENV = "YOUNGCURV_SEED"
DEFAULT_SEED = 42


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, DEFAULT_SEED))


def derive_rng(seed: int, name: str) -> np.random.Generator:
    key = int.from_bytes(hashlib.sha256(name.encode()).digest()[:8], "little")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & (2**64 - 1), key])))
