"""
Real Eigen Solver Module
Real eigenpairs from complex class representatives, and the Z-/H-eigenpair drivers
"""

from typing import Iterable, List, Optional, Sequence

import numpy as np

from src.solvers.complex_solver import solve_eigenproblem
from src.solvers.results import EigenPair, SolveReport, residual_bound
from src.systems.eigen_system import EigenSystem, build_eigen_system
from src.systems.newton_homotopy import build_newton_homotopy
from src.tensors.dense import DenseTensor, identity_tensor
from src.trackers.arclength import track_arclength
from src.trackers.config import TrackerConfig
from src.trackers.results import EndpointKind
from src.utils.logger import get_logger

logger = get_logger("real_solver")

ZERO_TOL = 1e-8
MERGE_TOL = 1e-6


def rotation_applies(m: int, mprime: int) -> bool:
    """True when m'/(m-m') is a nonzero integer multiple of 4"""
    d = m - mprime
    return d != 0 and mprime % d == 0 and (mprime // d) % 4 == 0


def rotate_imaginary_pair(pair: EigenPair, m: int, mprime: int) -> List[EigenPair]:
    """
    (b*i, x) -> (b, (-i)^(1/d) x) and (-b, i^(1/d) x), d = m - m', principal roots

    Both are members of the class of (b*i, x); B x^(m') is unchanged because
    t^(m') = 1 for both multipliers.
    """
    d = m - mprime
    b = pair.lam.imag
    down = (-1j) ** (1.0 / d)
    up = (1j) ** (1.0 / d)
    return [
        pair.with_updates(lam=complex(b), x=down * pair.x),
        pair.with_updates(lam=complex(-b), x=up * pair.x),
    ]


def real_eigenvalues(
    pairs: Iterable[EigenPair],
    delta0: float = 1e-8,
    m: Optional[int] = None,
    mprime: Optional[int] = None,
) -> List[float]:
    """
    Real parts of eigenvalues whose imaginary part is below delta0

    With m and m' given and the rotation rule applicable, purely imaginary
    eigenvalues b*i contribute b and -b.
    """
    rotate = m is not None and mprime is not None and rotation_applies(m, mprime)
    out: List[float] = []
    for pair in pairs:
        if abs(pair.lam.imag) < delta0:
            out.append(pair.lam.real)
        elif rotate and abs(pair.lam.real) < delta0:
            out.extend((pair.lam.imag, -pair.lam.imag))
    return sorted(out)


def _imag_tol(pair: EigenPair, cfg: TrackerConfig) -> float:
    return cfg.imag_tol if pair.classification == EndpointKind.REGULAR else cfg.singular_imag_tol


def _real_normalize(system: EigenSystem, lam: float, x: np.ndarray):
    """Scale a real x so that B x^(m') = 1 when a real root allows it"""
    m, mprime = system.m, system.mprime
    if m == mprime:
        return lam, x, True
    beta = system.b_form(x.astype(complex)).real
    if abs(beta) <= 1e-12 * max(1.0, float(np.max(np.abs(x)))) ** mprime:
        return lam, x, False
    if beta > 0:
        r = beta ** (1.0 / mprime)
    elif mprime % 2 == 1:
        r = -abs(beta) ** (1.0 / mprime)
    else:
        return lam, x, False
    return lam / r ** (m - mprime), x / r, True


def _accept(
    system: EigenSystem, source: EigenPair, lam: float, x: np.ndarray, scale_lambda: bool = False
) -> Optional[EigenPair]:
    """Normalize a real candidate and keep it when its residual is within bound"""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.max(np.abs(x)) <= ZERO_TOL:
        return None
    scaled_lam, x, normalized = _real_normalize(system, float(lam), x)
    if scale_lambda:
        lam = scaled_lam
    residual = system.eigen_residual(complex(lam), x.astype(complex))
    if residual > residual_bound(lam, x, system.degree):
        return None
    return source.with_updates(lam=complex(lam), x=x, residual=residual, is_real=True, normalized=normalized)


def _heuristic(system: EigenSystem, pair: EigenPair) -> Optional[EigenPair]:
    """Try the real and the imaginary part of x as eigenvectors for Re(lambda)"""
    for candidate in (pair.x.real, pair.x.imag):
        found = _accept(system, pair, pair.lam.real, candidate)
        if found is not None:
            return found
    return None


def extract_real_pair(
    pair: EigenPair,
    system: EigenSystem,
    cfg: Optional[TrackerConfig] = None,
    seed: int = 0,
    salt: int = 0,
) -> Optional[EigenPair]:
    """
    Real eigenpair from a representative with nearly real eigenvalue

    Order: already-real shortcut for isolated pairs, the real/imaginary-part
    heuristic for positive-dimensional ones, then the Newton homotopy tracked
    by pseudo-arclength from (Re lambda, Re x).

    Returns:
        Real EigenPair, or None when no real pair could be certified
    """
    cfg = cfg or TrackerConfig()
    delta = _imag_tol(pair, cfg)
    if abs(pair.lam.imag) >= delta:
        return None

    if pair.classification != EndpointKind.POSITIVE_DIMENSIONAL:
        if float(np.linalg.norm(pair.x.imag)) < delta:
            found = _accept(system, pair, pair.lam.real, pair.x.real)
            if found is not None:
                return found
    else:
        found = _heuristic(system, pair)
        if found is not None:
            return found

    anchor = pair.x.real if np.max(np.abs(pair.x.real)) > ZERO_TOL else pair.x.imag
    nh = build_newton_homotopy(system.A, system.B, system.k, pair.lam.real, anchor, seed, salt)
    arc = track_arclength(nh, cfg)
    if not arc.success:
        logger.debug(f"Newton homotopy from lambda={pair.lam.real:.6g} failed: {arc.message}")
        return None
    return _accept(system, pair, arc.lam, arc.x, scale_lambda=True)


def extract_real_pairs(
    report: SolveReport,
    system: EigenSystem,
    cfg: Optional[TrackerConfig] = None,
    seed: int = 0,
) -> List[EigenPair]:
    """Real pairs of every class in a report, including rotated imaginary classes"""
    cfg = cfg or TrackerConfig()
    rotate = rotation_applies(report.m, report.mprime)
    out: List[EigenPair] = []
    for salt, pair in enumerate(report.pairs):
        delta = _imag_tol(pair, cfg)
        candidates = [pair]
        if abs(pair.lam.imag) >= delta:
            if not (rotate and abs(pair.lam.real) < delta):
                continue
            candidates = rotate_imaginary_pair(pair, report.m, report.mprime)
        for candidate in candidates:
            found = extract_real_pair(candidate, system, cfg, seed, salt)
            if found is not None:
                out.append(found)
    logger.info(f"Extracted {len(out)} real pairs from {len(report.pairs)} classes")
    return out


def canonical_sign(pair: EigenPair, m: int) -> EigenPair:
    """Make the first entry with |x_i| > 1e-8 positive, using t = -1 on the class"""
    for value in pair.x.real:
        if abs(value) > ZERO_TOL:
            if value < 0:
                return pair.with_updates(lam=(-1) ** (m - 2) * pair.lam, x=-pair.x)
            return pair
    return pair


def merge_real_pairs(pairs: Sequence[EigenPair]) -> List[EigenPair]:
    """
    Drop pairs equal within 1e-6 to an earlier one and sort the rest

    A duplicate comes from the same class or from a cluster that split; the
    survivor keeps its own class multiplicity, the larger of the two.
    """
    merged: List[EigenPair] = []
    for pair in pairs:
        for i, other in enumerate(merged):
            if abs(other.lam - pair.lam) <= MERGE_TOL and np.max(np.abs(other.x - pair.x)) <= MERGE_TOL:
                if pair.multiplicity > other.multiplicity:
                    merged[i] = pair
                break
        else:
            merged.append(pair)
    merged.sort(key=EigenPair.sort_key)
    return merged


def zeig(
    A: DenseTensor,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
    report: Optional[SolveReport] = None,
) -> List[EigenPair]:
    """
    Real Z-eigenpairs with x^T x = 1, one per +/- class

    Args:
        A: Real tensor
        seed: Seed for the complex solve and the Newton homotopies
        cfg: Tracker parameters
        report: Precomputed E-eigenpair report to extract from
    """
    B = identity_tensor(2, A.dim)
    if report is None:
        report = solve_eigenproblem(A, B, 1, seed, cfg)
    system = build_eigen_system(A, B, report.k, seed)
    out = []
    for pair in extract_real_pairs(report, system, cfg, seed):
        x = pair.x.real
        norm = float(np.linalg.norm(x))
        lam = pair.lam.real / norm ** (A.order - 2)
        pair = pair.with_updates(lam=complex(lam), x=x / norm, normalized=True)
        out.append(canonical_sign(pair, A.order))
    return merge_real_pairs(out)


def heig(
    A: DenseTensor,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
    report: Optional[SolveReport] = None,
) -> List[EigenPair]:
    """Real H-eigenpairs with x scaled so that its largest-modulus entry is 1"""
    B = identity_tensor(A.order, A.dim)
    if report is None:
        report = solve_eigenproblem(A, B, 1, seed, cfg)
    system = build_eigen_system(A, B, report.k, seed)
    out = []
    for pair in extract_real_pairs(report, system, cfg, seed):
        x = pair.x.real
        i0 = int(np.argmax(np.abs(x)))
        out.append(pair.with_updates(x=x / x[i0]))
    return merge_real_pairs(out)
