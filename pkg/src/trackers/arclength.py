"""
Arclength Tracker Module
Pseudo-arclength continuation of the real Newton homotopy from t = 0 to t = 1
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.systems.newton_homotopy import NewtonHomotopySystem
from src.trackers.config import TrackerConfig
from src.utils.logger import get_logger

logger = get_logger("arclength")

CORRECTOR_ITERS = 6
FINAL_NEWTON_ITERS = 30


@dataclass
class ArclengthResult:
    """Real endpoint of the Newton homotopy at t = 1"""

    success: bool
    lam: float = float("nan")
    x: Optional[np.ndarray] = None
    residual: float = float("inf")
    steps: int = 0
    message: str = ""


def _tangent(jac: np.ndarray, previous: Optional[np.ndarray]) -> np.ndarray:
    """Unit null vector of the (n+1) x (n+2) Jacobian, oriented by continuity"""
    _, _, vt = np.linalg.svd(jac)
    tau = vt[-1]
    if previous is None:
        if tau[-1] < 0:
            tau = -tau
    elif tau @ previous < 0:
        tau = -tau
    return tau


def _bordered_correct(
    nh: NewtonHomotopySystem, y_hat: np.ndarray, tau: np.ndarray, tol: float
) -> Tuple[bool, np.ndarray]:
    y = y_hat.copy()
    for _ in range(CORRECTOR_ITERS):
        value = np.append(nh.evaluate_y(y), tau @ (y - y_hat))
        jac = np.vstack((nh.jacobian_y(y), tau))
        try:
            delta = np.linalg.solve(jac, -value)
        except np.linalg.LinAlgError:
            return False, y
        y = y + delta
        if not np.all(np.isfinite(y)):
            return False, y
        if np.max(np.abs(delta)) <= tol * max(1.0, np.max(np.abs(y))):
            return True, y
    return False, y


def _finish(nh: NewtonHomotopySystem, y: np.ndarray, tol: float) -> Tuple[bool, np.ndarray, float]:
    """Newton on the target system at t = 1"""
    z = y[:-1].copy()
    for _ in range(FINAL_NEWTON_ITERS):
        value = nh.evaluate(z[0], z[1:], 1.0)
        try:
            delta = np.linalg.solve(nh.base_jacobian(z[0], z[1:]), -value)
        except np.linalg.LinAlgError:
            break
        z = z + delta
        if not np.all(np.isfinite(z)):
            break
        if np.max(np.abs(delta)) <= tol * max(1.0, np.max(np.abs(z))):
            residual = float(np.max(np.abs(nh.evaluate(z[0], z[1:], 1.0))))
            return True, z, residual
    residual = float(np.max(np.abs(nh.evaluate(z[0], z[1:], 1.0)))) if np.all(np.isfinite(z)) else float("inf")
    return False, z, residual


def track_arclength(nh: NewtonHomotopySystem, cfg: Optional[TrackerConfig] = None) -> ArclengthResult:
    """
    Follow the real solution curve through the anchor until it reaches t = 1

    Args:
        nh: Newton homotopy anchored at a real point
        cfg: Step and tolerance parameters

    Returns:
        ArclengthResult; success is False when the step collapses, the step budget
        runs out or the final Newton solve does not converge
    """
    cfg = cfg or TrackerConfig()
    y = nh.start_point()
    h = cfg.arclength_initial_step
    tau = None
    easy = 0

    for step in range(cfg.arclength_max_steps):
        tau = _tangent(nh.jacobian_y(y), tau)
        ok, y_new = _bordered_correct(nh, y + h * tau, tau, cfg.arclength_tol)
        if not ok:
            h *= 0.5
            easy = 0
            if h < cfg.min_step:
                return ArclengthResult(False, steps=step, message="arclength step collapsed")
            continue

        if y_new[-1] >= 1.0:
            # interpolate to t = 1 and polish there
            frac = (1.0 - y[-1]) / (y_new[-1] - y[-1])
            y_star = y + frac * (y_new - y)
            converged, z, residual = _finish(nh, y_star, cfg.newton_tol)
            if not converged:
                return ArclengthResult(False, steps=step + 1, residual=residual, message="final Newton solve failed")
            return ArclengthResult(True, float(z[0]), z[1:], residual, step + 1)

        y = y_new
        easy += 1
        if easy >= cfg.expand_after:
            h = min(2.0 * h, cfg.arclength_max_step)
            easy = 0

    logger.debug(f"Arclength tracking exhausted {cfg.arclength_max_steps} steps at t={y[-1]:.4f}")
    return ArclengthResult(False, steps=cfg.arclength_max_steps, message="arclength step budget exhausted")
