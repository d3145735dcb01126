"""
Systems Package
"""

from .eigen_system import EigenSystem, Hyperplane, build_eigen_system, check_b_form, eval_G, jac_G
from .homotopy import (
    LinearHomotopy,
    ProjectiveHomotopy,
    build_linear_homotopy,
    eval_H,
    homogenize,
    jac_H_s,
    jac_H_u,
)
from .newton_homotopy import NewtonHomotopySystem, build_newton_homotopy, eval_newton_homotopy
from .start_system import StartSystem, build_start_system, enumerate_start_solutions

__all__ = [
    "EigenSystem",
    "Hyperplane",
    "LinearHomotopy",
    "NewtonHomotopySystem",
    "ProjectiveHomotopy",
    "StartSystem",
    "build_eigen_system",
    "build_linear_homotopy",
    "build_newton_homotopy",
    "build_start_system",
    "check_b_form",
    "enumerate_start_solutions",
    "eval_G",
    "eval_H",
    "eval_newton_homotopy",
    "homogenize",
    "jac_G",
    "jac_H_s",
    "jac_H_u",
]
