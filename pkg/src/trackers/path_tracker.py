"""
Path Tracker Module
Adaptive Euler-Newton tracking of log-time homotopy paths, endgame refinement
and classification, and projective retracing of troublesome paths
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from src.systems.homotopy import LinearHomotopy, ProjectiveHomotopy, homogenize
from src.systems.parameters import STREAM_NULL_DIRECTIONS, seeded_rng, unit_complex
from src.trackers.config import TrackerConfig
from src.trackers.results import EndpointKind, PathResult, PathStatus
from src.utils.errors import TrackingError
from src.utils.logger import path_logger

ENDGAME_RCOND = 1e-12
NULL_SPACE_RATIO = 1e-6


def _inf_norm(v: np.ndarray) -> float:
    return float(np.max(np.abs(v)))


def _scaled_norm(value: np.ndarray, scale) -> float:
    return float(np.max(np.abs(value) / scale))


def _solve(jac: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    try:
        sol = np.linalg.solve(jac, rhs)
    except np.linalg.LinAlgError as e:
        raise TrackingError(f"Singular linear solve: {e}") from e
    if not np.all(np.isfinite(sol)):
        raise TrackingError("Linear solve produced non-finite values")
    return sol


def _lstsq(jac: np.ndarray, rhs: np.ndarray, rcond: float) -> np.ndarray:
    sol = np.linalg.lstsq(jac, rhs, rcond=rcond)[0]
    if not np.all(np.isfinite(sol)):
        raise TrackingError("Least-squares solve produced non-finite values")
    return sol


def condition_estimate(jac: np.ndarray) -> float:
    """Infinity-norm condition number; inf when the matrix is singular"""
    try:
        value = float(np.real(np.linalg.cond(jac, np.inf)))
    except np.linalg.LinAlgError:
        return float("inf")
    return value if np.isfinite(value) else float("inf")


class _AffineChart:
    """Tracks u = (lambda, x) directly"""

    projective = False

    def __init__(self, h: LinearHomotopy):
        self.h = h

    def parts(self, u: np.ndarray, s: float):
        return self.h.evaluate_all(u, s)

    def scale(self, u: np.ndarray) -> np.ndarray:
        return self.h.G.row_scales(u)

    def normalize(self, u: np.ndarray) -> np.ndarray:
        return u


class _ProjectiveChart:
    """
    Tracks v = (lambda, x0, x) on the patch v[index] = 1.

    After every accepted step v is divided by its largest coordinate, which
    keeps all coordinates in the unit disc and moves the patch to that coordinate.
    """

    projective = True

    def __init__(self, ph: ProjectiveHomotopy):
        self.ph = ph
        self.index = 1

    def parts(self, v: np.ndarray, s: float):
        value, jac, ds = self.ph.evaluate_all(v, s)
        patch = np.zeros(v.size, dtype=complex)
        patch[self.index] = 1.0
        value = np.append(value, v[self.index] - 1.0)
        jac = np.vstack((jac, patch))
        ds = np.append(ds, 0.0)
        return value, jac, ds

    def scale(self, v: np.ndarray) -> float:
        return self.ph.h.G.coef_scale

    def normalize(self, v: np.ndarray) -> np.ndarray:
        j = int(np.argmax(np.abs(v)))
        self.index = j
        return v / v[j]


@dataclass
class _Trace:
    status: PathStatus
    point: np.ndarray
    s: float
    steps: int
    message: str = ""
    step: float = 0.0


@dataclass
class EndgameOutcome:
    """Refined endpoint and its classification"""

    point: np.ndarray
    status: PathStatus
    kind: Optional[EndpointKind]
    residual: float
    cond: float
    iterations: int
    message: str = ""


class PathTracker:
    """Tracks start roots of one linear homotopy"""

    def __init__(self, h: LinearHomotopy, cfg: Optional[TrackerConfig] = None, seed: int = 0):
        """
        Initialize Path Tracker

        Args:
            h: Linear homotopy from the start system to the eigen-system
            cfg: Tracker parameters
            seed: Seed for the random null-space directions of the local dimension test
        """
        self.h = h
        self.cfg = cfg or TrackerConfig()
        self.seed = seed
        self.G = h.G
        self.s0 = self.cfg.resolved_s0(h.n)
        self.projective: ProjectiveHomotopy = homogenize(h)

    # ------------------------------------------------------------------
    # Predictor-corrector core
    # ------------------------------------------------------------------

    def _correct(self, chart, v: np.ndarray, s: float, max_iters: int) -> Tuple[bool, np.ndarray, int]:
        """Newton at fixed s; converged when the residual meets newton_tol"""
        tol = self.cfg.newton_tol
        previous = float("inf")
        for iteration in range(max_iters + 1):
            value, jac, _ = chart.parts(v, s)
            if _scaled_norm(value, chart.scale(v)) <= tol:
                return True, v, iteration
            if iteration == max_iters:
                break
            try:
                delta = _solve(jac, -value)
            except TrackingError:
                return False, v, iteration
            size = _inf_norm(delta)
            v = v + delta
            if size <= tol * max(1.0, _inf_norm(v)):
                return True, v, iteration + 1
            # no contraction: likely heading for another path
            if size > 0.5 * previous:
                return False, v, iteration + 1
            previous = size
        return False, v, max_iters

    def _follow(self, chart, u: np.ndarray, step: float, max_corr: int) -> _Trace:
        cfg = self.cfg
        s = self.s0
        steps = uncut = halvings = 0
        while s < -cfg.end_s:
            step = min(step, -s / 3.0)
            try:
                _, jac, ds = chart.parts(u, s)
                tangent = _solve(jac, -ds)
            except TrackingError:
                tangent = None
            if tangent is None:
                # one retry at half step without the tangent
                step *= 0.5
                ok, u_new, _ = self._correct(chart, u, s + step, max_corr)
                if not ok:
                    return _Trace(PathStatus.FAILED, u, s, steps, "singular tangent solve", step)
            else:
                ok, u_new, _ = self._correct(chart, u + step * tangent, s + step, max_corr)

            if ok:
                u = chart.normalize(u_new)
                s += step
                steps += 1
                halvings = 0
                uncut += 1
                if not chart.projective and _inf_norm(u) > cfg.blowup_norm:
                    return _Trace(PathStatus.AT_INFINITY, u, s, steps, "iterate exceeded blowup norm", step)
                if uncut >= cfg.expand_after:
                    step *= 2.0
                    uncut = 0
            else:
                step *= 0.5
                uncut = 0
                halvings += 1
                if step < cfg.min_step or halvings > cfg.max_halvings_per_step:
                    return _Trace(PathStatus.FAILED, u, s, steps, "step size collapsed", step)
        return _Trace(PathStatus.CONVERGED, u, s, steps, step=step)

    def warm_start(self, w0: np.ndarray, chart=None) -> np.ndarray:
        """
        Newton iterations on H(., s0) from a start root

        Raises:
            TrackingError: no convergence within warm_start_max_iters
        """
        chart = chart or _AffineChart(self.h)
        ok, u, _ = self._correct(chart, np.asarray(w0, dtype=complex), self.s0, self.cfg.warm_start_max_iters)
        if not ok:
            raise TrackingError("Warm start did not converge")
        return u

    # ------------------------------------------------------------------
    # Endgame
    # ------------------------------------------------------------------

    def _refine(
        self,
        fun: Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]],
        u: np.ndarray,
        max_iters: int,
        rcond: float,
    ) -> Tuple[np.ndarray, bool, int]:
        """Newton with a truncated least-squares step; converged on a tiny step"""
        tol = self.cfg.newton_tol
        for iteration in range(max_iters):
            value, jac = fun(u)
            if not np.any(value):
                return u, True, iteration
            try:
                delta = _lstsq(jac, -value, rcond)
            except (TrackingError, np.linalg.LinAlgError):
                return u, False, iteration
            u = u + delta
            if not np.all(np.isfinite(u)) or _inf_norm(u) > self.cfg.blowup_norm:
                return u, False, iteration + 1
            if _inf_norm(delta) <= tol * max(1.0, _inf_norm(u)):
                return u, True, iteration + 1
        return u, False, max_iters

    def endgame(self, u_near: np.ndarray, path_id: int = 0) -> EndgameOutcome:
        """
        Refine a path endpoint on G = 0 and classify it

        Residuals are measured row by row against G.row_scales. Regular endpoints
        have condition estimate at most cond_threshold. Ill-conditioned endpoints
        beyond far_norm are reported at infinity; the rest are accepted with the
        looser singular_residual_tol and put through a local dimension test.
        """
        cfg = self.cfg
        G = self.G
        u_near = np.asarray(u_near, dtype=complex)
        u, converged, iterations = self._refine(G.evaluate_with_jacobian, u_near, cfg.endgame_max_iters, ENDGAME_RCOND)
        if not converged and np.all(np.isfinite(u)) and _inf_norm(u) <= cfg.blowup_norm:
            u, converged, extra = self._refine(G.evaluate_with_jacobian, u, cfg.singular_max_iters, ENDGAME_RCOND)
            iterations += extra

        if not np.all(np.isfinite(u)) or _inf_norm(u) > cfg.blowup_norm:
            return EndgameOutcome(u, PathStatus.FAILED, None, float("inf"), float("inf"), iterations, "endgame diverged")
        if _inf_norm(u - u_near) > 0.5 * max(1.0, _inf_norm(u_near)):
            return EndgameOutcome(u, PathStatus.FAILED, None, float("inf"), float("inf"), iterations, "endgame drifted away")

        value, jac = G.evaluate_with_jacobian(u)
        residual = _inf_norm(value)
        scaled = G.scaled_residual(u, value)
        cond = condition_estimate(jac)

        if cond <= cfg.cond_threshold and scaled <= 10 * cfg.newton_tol:
            return EndgameOutcome(u, PathStatus.CONVERGED, EndpointKind.REGULAR, residual, cond, iterations)
        if _inf_norm(u) > cfg.far_norm:
            return EndgameOutcome(
                u, PathStatus.AT_INFINITY, None, residual, cond, iterations, "ill-conditioned endpoint beyond far_norm"
            )
        if scaled <= cfg.singular_residual_tol:
            kind = self._classify_singular(u, jac, path_id)
            return EndgameOutcome(u, PathStatus.CONVERGED, kind, residual, cond, iterations)
        return EndgameOutcome(u, PathStatus.FAILED, None, residual, cond, iterations, "endgame residual too large")

    def _classify_singular(self, u: np.ndarray, jac: np.ndarray, path_id: int) -> EndpointKind:
        """
        Local dimension test at a singular endpoint

        Points pushed off u along random null directions are projected back onto
        G = 0 at radii local_dim_eps * 10^j. On a positive-dimensional component
        every radius lands on a singular solution at about the pushed distance;
        near an isolated multiple root Newton pulls the point back toward u.
        """
        cfg = self.cfg
        _, sv, vh = np.linalg.svd(jac)
        mask = sv <= NULL_SPACE_RATIO * sv[0]
        if not np.any(mask):
            mask[-1] = True
        basis = vh[mask].conj()
        rng = seeded_rng(self.seed, STREAM_NULL_DIRECTIONS, path_id)
        base = cfg.local_dim_eps * max(1.0, _inf_norm(u))
        radii = [base * 10.0**j for j in range(cfg.local_dim_radii)]
        for _ in range(cfg.local_dim_directions):
            direction = unit_complex(rng, basis.shape[0]) @ basis
            direction /= _inf_norm(direction)
            if all(self._stays_on_solutions(u, direction, r) for r in radii):
                return EndpointKind.POSITIVE_DIMENSIONAL
        return EndpointKind.SINGULAR_ISOLATED

    def _stays_on_solutions(self, u: np.ndarray, direction: np.ndarray, radius: float) -> bool:
        """Whether u + radius * direction projects onto a singular solution about radius away from u"""
        G = self.G
        point, converged, _ = self._refine(
            G.evaluate_with_jacobian, u + radius * direction, self.cfg.local_dim_max_iters, ENDGAME_RCOND
        )
        if not converged:
            return False
        if not 0.1 * radius <= _inf_norm(point - u) <= 2.0 * radius:
            return False
        value, jac = G.evaluate_with_jacobian(point)
        if G.scaled_residual(point, value) > 10 * self.cfg.newton_tol:
            return False
        sv = np.linalg.svd(jac, compute_uv=False)
        return bool(sv[-1] <= NULL_SPACE_RATIO * sv[0])

    # ------------------------------------------------------------------
    # Whole paths
    # ------------------------------------------------------------------

    def track(self, w0: np.ndarray, path_id: int = 0) -> PathResult:
        """Warm start, follow and endgame one start root in the affine chart"""
        w0 = np.asarray(w0, dtype=complex)
        try:
            u0 = self.warm_start(w0)
        except TrackingError as e:
            return PathResult(path_id, w0, PathStatus.FAILED, message=str(e), start=w0)
        return self.track_from(u0, path_id, start=w0)

    def track_from(self, u0: np.ndarray, path_id: int = 0, start: Optional[np.ndarray] = None) -> PathResult:
        chart = _AffineChart(self.h)
        trace = self._follow(chart, np.asarray(u0, dtype=complex), -self.s0 / 3.0, self.cfg.max_corrector_iters)
        log = path_logger("path_tracker", path_id, trace.s, trace.step)
        if trace.status != PathStatus.CONVERGED:
            log.debug(f"{trace.status.value} after {trace.steps} steps ({trace.message})")
            return PathResult(path_id, trace.point, trace.status, steps_taken=trace.steps, message=trace.message, start=start)
        outcome = self.endgame(trace.point, path_id)
        log.debug(f"endgame {outcome.status.value} {outcome.kind} cond={outcome.cond:.2e} {outcome.message}".rstrip())
        return PathResult(
            path_id,
            outcome.point,
            outcome.status,
            residual=outcome.residual,
            cond_estimate=outcome.cond,
            steps_taken=trace.steps,
            kind=outcome.kind,
            message=outcome.message,
            start=start,
        )

    def retrace_projective(self, w0: np.ndarray, path_id: int = 0) -> PathResult:
        """
        Retrace a path on the homogenized homotopy with tighter stepping.

        The endpoint is dehomogenized when |x0| > 1e-8 and refined on G;
        otherwise, when a stalled non-regular endpoint still has a tiny x0, or
        when the endgame puts it beyond far_norm, the path is reported at infinity.
        """
        cfg = self.cfg
        w0 = np.asarray(w0, dtype=complex)
        chart = _ProjectiveChart(self.projective)
        v = chart.normalize(self.projective.embed(w0))
        try:
            v = chart.normalize(self.warm_start(v, chart))
        except TrackingError as e:
            return PathResult(path_id, w0, PathStatus.FAILED, retraced_projective=True, message=str(e), start=w0)

        step = -self.s0 / 3.0 * cfg.retrace_step_factor
        trace = self._follow(chart, v, step, cfg.retrace_corrector_iters)
        v = trace.point
        if trace.status == PathStatus.CONVERGED:
            v, _, _ = self._refine(lambda p: chart.parts(p, 0.0)[:2], v, cfg.endgame_max_iters, ENDGAME_RCOND)
            if np.all(np.isfinite(v)):
                v = chart.normalize(v)
        x0 = abs(v[1]) if np.all(np.isfinite(v)) else 0.0

        def _result(status, point, **extra) -> PathResult:
            return PathResult(
                path_id, point, status, steps_taken=trace.steps, retraced_projective=True, start=w0, **extra
            )

        if x0 <= 1e-8:
            return _result(PathStatus.AT_INFINITY, v, message="x0 vanished at the endpoint")
        if trace.status != PathStatus.CONVERGED:
            status = PathStatus.AT_INFINITY if x0 < cfg.stall_x0_tol else PathStatus.FAILED
            return _result(status, v, message=trace.message)

        u = self.projective.dehomogenize(v)
        outcome = self.endgame(u, path_id)
        if outcome.status == PathStatus.AT_INFINITY:
            return _result(PathStatus.AT_INFINITY, outcome.point, message=outcome.message)
        if outcome.status != PathStatus.CONVERGED or (
            outcome.kind != EndpointKind.REGULAR and x0 < cfg.stall_x0_tol
        ):
            status = PathStatus.AT_INFINITY if x0 < cfg.stall_x0_tol else PathStatus.FAILED
            return _result(status, outcome.point, message=outcome.message or "stalled near infinity")
        return _result(
            PathStatus.CONVERGED,
            outcome.point,
            residual=outcome.residual,
            cond_estimate=outcome.cond,
            kind=outcome.kind,
        )


def warm_start(h: LinearHomotopy, w0: np.ndarray, cfg: Optional[TrackerConfig] = None) -> np.ndarray:
    return PathTracker(h, cfg).warm_start(w0)


def track_path(h: LinearHomotopy, u0: np.ndarray, cfg: Optional[TrackerConfig] = None, path_id: int = 0) -> PathResult:
    return PathTracker(h, cfg).track_from(u0, path_id)


def endgame(h: LinearHomotopy, u_near: np.ndarray, cfg: Optional[TrackerConfig] = None) -> EndgameOutcome:
    return PathTracker(h, cfg).endgame(u_near)


def retrace_projective(h: LinearHomotopy, w0: np.ndarray, cfg: Optional[TrackerConfig] = None, path_id: int = 0) -> PathResult:
    return PathTracker(h, cfg).retrace_projective(w0, path_id)
