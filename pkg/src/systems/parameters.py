"""
Seeded random parameters for homotopy construction
"""

import numpy as np

from src.utils.errors import InputError

# independent generator streams per construction
STREAM_HYPERPLANE = 1
STREAM_START = 2
STREAM_GAMMA = 3
STREAM_NULL_DIRECTIONS = 4
STREAM_REAL = 5


def seeded_rng(seed: int, stream: int, *extra: int) -> np.random.Generator:
    """Deterministic generator for (seed, stream, extra...)"""
    if seed < 0:
        raise InputError(f"Seed must be non-negative, got {seed}")
    return np.random.default_rng([int(seed), int(stream), *[int(e) for e in extra]])


def unit_complex(rng: np.random.Generator, size=None):
    """Unit-modulus complex numbers with uniform angle"""
    angles = rng.random(size)
    return np.exp(2j * np.pi * angles)
