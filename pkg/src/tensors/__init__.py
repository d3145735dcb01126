"""
Tensors Package
"""

from .dense import (
    DenseTensor,
    ModeContraction,
    identity_tensor,
    is_symmetric,
    mode_k_apply,
    mode_k_jacobian,
    multilinear_form,
    transpose_kl,
)
from .monomials import MonomialForm, from_monomials

__all__ = [
    "DenseTensor",
    "ModeContraction",
    "MonomialForm",
    "from_monomials",
    "identity_tensor",
    "is_symmetric",
    "mode_k_apply",
    "mode_k_jacobian",
    "multilinear_form",
    "transpose_kl",
]
