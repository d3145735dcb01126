"""
Oracles Package
Independent ground truth for small instances
"""

from .matrix import matrix_eig_oracle
from .random_tensors import RandomSpec, random_tensor, random_tensor_pair
from .residual import contract_by_loops, residual_check
from .two_var import two_var_oracle

__all__ = [
    "RandomSpec",
    "contract_by_loops",
    "matrix_eig_oracle",
    "random_tensor",
    "random_tensor_pair",
    "residual_check",
    "two_var_oracle",
]
