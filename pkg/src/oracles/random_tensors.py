"""
Seeded random tensors for property tests and count experiments
"""

from itertools import permutations
from typing import Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.tensors.dense import DenseTensor


class RandomSpec(BaseModel):
    """Shape, field and seed of a random instance"""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=2)
    mprime: int = Field(default=2, ge=2)
    n: int = Field(ge=1)
    seed: int = Field(default=0, ge=0)
    field: Literal["real", "complex"] = "complex"
    symmetric: bool = False


def _draw(rng: np.random.Generator, order: int, spec: RandomSpec) -> DenseTensor:
    shape = (spec.n,) * order
    entries = rng.standard_normal(shape)
    if spec.field == "complex":
        entries = entries + 1j * rng.standard_normal(shape)
    if spec.symmetric:
        perms = list(permutations(range(order)))
        entries = sum(np.transpose(entries, p) for p in perms) / len(perms)
    return DenseTensor(entries)


def random_tensor(spec: RandomSpec) -> DenseTensor:
    """Order-m tensor with (complex) standard normal entries, deterministic in the seed"""
    return _draw(np.random.default_rng(spec.seed), spec.m, spec)


def random_tensor_pair(spec: RandomSpec) -> Tuple[DenseTensor, DenseTensor]:
    """Order-m A and order-m' B drawn from one seeded generator"""
    rng = np.random.default_rng(spec.seed)
    return _draw(rng, spec.m, spec), _draw(rng, spec.mprime, spec)
