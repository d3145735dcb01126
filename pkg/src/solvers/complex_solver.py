"""
Complex Eigen Solver Module
Orchestrates path tracking, retracing, clustering and normalization for one eigenproblem
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from src.config import settings
from src.solvers.counts import path_count, start_path_count
from src.solvers.results import EigenPair, EquivalenceClass, SolveReport
from src.systems.eigen_system import EigenSystem, build_eigen_system
from src.systems.homotopy import build_linear_homotopy
from src.systems.start_system import enumerate_start_solutions
from src.tensors.dense import DenseTensor, identity_tensor
from src.trackers.config import TrackerConfig
from src.trackers.path_tracker import PathTracker
from src.trackers.results import EndpointKind, PathResult, PathStatus
from src.trackers.solution_store import SolutionStore, check_duplicate
from src.utils.errors import InputError
from src.utils.logger import get_logger

logger = get_logger("complex_solver")

COMPONENT_TOL = 1e-6
UNNORMALIZED_TOL = 1e-10


class EigenSolver:
    """Computes all mode-k B-eigenpair classes of one tensor pair"""

    def __init__(
        self,
        A: DenseTensor,
        B: DenseTensor,
        k: int = 1,
        seed: int = 0,
        cfg: Optional[TrackerConfig] = None,
        threads: Optional[int] = None,
    ):
        """
        Initialize Eigen Solver

        Args:
            A: Tensor of order m
            B: Tensor of order m'
            k: 1-based mode of A
            seed: Non-negative seed for every random construction
            cfg: Tracker parameters
            threads: Worker count; defaults to the TENEIG_THREADS setting
        """
        self.A = A
        self.B = B
        self.k = k
        self.seed = seed
        self.cfg = cfg or TrackerConfig()
        self.threads = threads or settings.threads
        self.system: EigenSystem = build_eigen_system(A, B, k, seed)
        self.homotopy = build_linear_homotopy(self.system, seed)
        self.tracker = PathTracker(self.homotopy, self.cfg, seed)

    @property
    def m(self) -> int:
        return self.A.order

    @property
    def mprime(self) -> int:
        return self.B.order

    def solve(self) -> SolveReport:
        """Run the whole pipeline and return the sorted report"""
        n, m, mprime = self.A.dim, self.m, self.mprime
        logger.info(f"Solving mode-{self.k} eigenproblem (m={m}, m'={mprime}, n={n}, seed={self.seed})")

        # Step 1: Start roots
        starts = enumerate_start_solutions(self.homotopy.Q)
        logger.info(f"Step 1: {len(starts)} start roots")

        # Step 2: Track every path
        results = self._track_all(starts)

        # Step 3: Retrace paths that did not converge in the affine chart
        retraced = set()
        for pid, result in enumerate(results):
            if not result.converged:
                results[pid] = self._retrace(result, starts[pid])
                retraced.add(pid)
        if retraced:
            logger.info(f"Step 3: retraced {len(retraced)} non-converged paths projectively")

        # Step 4: Duplicates and curve-jump suspicion
        suspects = self._duplicate_suspects(results) - retraced
        for pid in sorted(suspects):
            results[pid] = self._retrace(results[pid], starts[pid])
            retraced.add(pid)
        if suspects:
            logger.info(f"Step 4: retraced {len(suspects)} paths with suspicious duplicate endpoints")

        warnings: List[str] = []
        jumps = self._duplicate_suspects(results)
        for pid in jumps:
            results[pid] = results[pid].with_updates(curve_jump=True)
        if jumps:
            warnings.append(f"{len(jumps)} paths still share endpoints after projective retracing")

        # Step 5: Cluster, normalize, sort
        classes = self._build_classes(results)
        status_counts = {status: sum(r.status == status for r in results) for status in PathStatus}
        failed = status_counts[PathStatus.FAILED]
        if failed:
            warnings.append(f"{failed} paths failed; result may be incomplete")
        for message in warnings:
            logger.warning(message)

        report = SolveReport(
            classes=classes,
            m=m,
            mprime=mprime,
            n=n,
            k=self.k,
            seed=self.seed,
            path_count=len(starts),
            optimal_count=path_count(m, mprime, n),
            paths_converged=status_counts[PathStatus.CONVERGED],
            paths_at_infinity=status_counts[PathStatus.AT_INFINITY],
            paths_failed=failed,
            retraced=len(retraced),
            warnings=warnings,
        )
        if not report.count_law_holds():
            message = f"{report.paths_converged} converged paths exceed the generic count {report.optimal_count}"
            report.warnings.append(message)
            logger.warning(message)
        logger.info(
            f"Solve finished: {len(classes)} classes, {report.paths_converged} converged, "
            f"{report.paths_at_infinity} at infinity, {failed} failed"
        )
        return report

    # ------------------------------------------------------------------
    # Tracking
    # ------------------------------------------------------------------

    def _track_one(self, item) -> PathResult:
        pid, w0 = item
        try:
            return self.tracker.track(w0, pid)
        except Exception as e:
            logger.error(f"Path {pid} raised {type(e).__name__}: {e}")
            return PathResult(pid, w0, PathStatus.FAILED, message=str(e), start=w0)

    def _track_all(self, starts: Sequence[np.ndarray]) -> List[PathResult]:
        items = list(enumerate(starts))
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            results = list(
                tqdm(
                    pool.map(self._track_one, items),
                    total=len(items),
                    desc="paths",
                    disable=not settings.show_progress,
                )
            )
        logger.info(f"Step 2: tracked {len(results)} paths with {self.threads} workers")
        return results

    def _retrace(self, result: PathResult, w0: np.ndarray) -> PathResult:
        try:
            retraced = self.tracker.retrace_projective(w0, result.path_id)
        except Exception as e:
            logger.error(f"Projective retrace of path {result.path_id} raised {type(e).__name__}: {e}")
            return result.with_updates(retraced_projective=True)
        if retraced.converged or result.status != PathStatus.AT_INFINITY:
            if result.converged and not retraced.converged:
                return result.with_updates(retraced_projective=True)
            return retraced
        return result.with_updates(retraced_projective=True)

    def _duplicate_suspects(self, results: Sequence[PathResult]) -> set:
        """Paths whose endpoints coincide with an earlier one while both look regular or both ill-conditioned"""
        store = SolutionStore()
        by_id: Dict[int, PathResult] = {}
        suspects = set()
        for result in results:
            if not result.converged or result.kind == EndpointKind.POSITIVE_DIMENSIONAL:
                continue
            check = check_duplicate(store, result, self.cfg)
            if check.is_new:
                by_id[result.path_id] = result
                continue
            first = by_id[check.duplicate_of]
            both_regular = result.kind == EndpointKind.REGULAR and first.kind == EndpointKind.REGULAR
            if check.curve_jump or both_regular:
                suspects.update((result.path_id, first.path_id))
        return suspects

    # ------------------------------------------------------------------
    # Classes
    # ------------------------------------------------------------------

    def _build_classes(self, results: Sequence[PathResult]) -> List[EquivalenceClass]:
        store = SolutionStore()
        clusters: Dict[int, List[PathResult]] = {}
        for result in results:
            if not result.converged:
                continue
            tol = self.cfg.duplicate_tol if result.kind == EndpointKind.REGULAR else self.cfg.singular_cluster_tol
            hit = store.nearest(result.endpoint, tol)
            if hit is None:
                store.insert(result.path_id, result.endpoint, result.cond_estimate)
                clusters[result.path_id] = [result]
            else:
                clusters[hit.solution_id].append(result)

        pairs = [self._cluster_pair(members) for members in clusters.values()]
        pairs.sort(key=EigenPair.sort_key)
        pairs = self._assign_components(pairs)
        return [EquivalenceClass(pair, self.m, self.mprime) for pair in pairs]

    def _cluster_pair(self, members: List[PathResult]) -> EigenPair:
        rep = members[0]
        kinds = {r.kind for r in members}
        if EndpointKind.POSITIVE_DIMENSIONAL in kinds:
            kind = EndpointKind.POSITIVE_DIMENSIONAL
        elif len(members) > 1 or EndpointKind.SINGULAR_ISOLATED in kinds:
            kind = EndpointKind.SINGULAR_ISOLATED
        else:
            kind = EndpointKind.REGULAR
        lam, x, normalized = normalize_pair(self.system, rep.lam, rep.x)
        return EigenPair(
            lam=lam,
            x=x,
            multiplicity=len(members),
            residual=self.system.eigen_residual(lam, x),
            classification=kind,
            normalized=normalized,
            cond=rep.cond_estimate,
            path_ids=tuple(r.path_id for r in members),
        )

    def _assign_components(self, pairs: List[EigenPair]) -> List[EigenPair]:
        keys: List[complex] = []
        out = []
        for pair in pairs:
            if pair.classification != EndpointKind.POSITIVE_DIMENSIONAL:
                out.append(pair)
                continue
            key = component_key(pair.lam, self.m, self.mprime)
            match = next((i for i, other in enumerate(keys) if abs(other - key) <= COMPONENT_TOL * max(1.0, abs(key))), None)
            if match is None:
                keys.append(key)
                match = len(keys) - 1
            out.append(pair.with_updates(component_id=match))
        return out


def component_key(lam: complex, m: int, mprime: int) -> complex:
    """Class invariant of lambda: itself when m = m', lambda^(m') otherwise"""
    return lam if m == mprime else lam ** mprime


def normalize_pair(system: EigenSystem, lam: complex, x: np.ndarray):
    """
    Representative of the class of (lam, x)

    Returns:
        (lambda, x, normalized); for m = m' x is divided by its largest-modulus
        entry, otherwise B x^(m') is scaled to 1 with principal roots. The flag is
        False when B x^(m') vanishes and x is left as tracked.
    """
    x = np.asarray(x, dtype=complex)
    m, mprime = system.m, system.mprime
    if m == mprime:
        i0 = int(np.argmax(np.abs(x)))
        return complex(lam), x / x[i0], True
    beta = system.b_form(x)
    scale = max(1.0, system.B.max_abs()) * max(1.0, float(np.max(np.abs(x)))) ** mprime
    if abs(beta) <= UNNORMALIZED_TOL * scale:
        return complex(lam), x, False
    r = beta ** (1.0 / mprime)
    lam, x = canonical_member(complex(lam / r ** (m - mprime)), x / r, m, mprime)
    return lam, x, True


def canonical_member(lam: complex, x: np.ndarray, m: int, mprime: int):
    """Member (t^(m-m') lambda, t x), t^(m') = 1, with the largest (Re lambda, Im lambda, Re x_i0)"""
    i0 = int(np.argmax(np.abs(x) > 1e-8))
    best = None
    for j in range(mprime):
        t = np.exp(2j * np.pi * j / mprime)
        lam_t, x_t = t ** (m - mprime) * lam, t * x
        key = (round(lam_t.real, 9), round(lam_t.imag, 9), round(x_t[i0].real, 9))
        if best is None or key > best[0]:
            best = (key, lam_t, x_t)
    return complex(best[1]), best[2]


def solve_eigenproblem(
    A: DenseTensor,
    B: DenseTensor,
    k: int = 1,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
    threads: Optional[int] = None,
) -> SolveReport:
    """Mode-k B-eigenpairs of A, one representative per equivalence class"""
    if A.dim != B.dim:
        raise InputError(f"Dimension mismatch: A.dim={A.dim}, B.dim={B.dim}")
    return EigenSolver(A, B, k, seed, cfg, threads).solve()


def teig(
    A: DenseTensor,
    B: Optional[DenseTensor] = None,
    k: int = 1,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
) -> List[EigenPair]:
    """Eigenpairs for B of the same order as A; B defaults to the identity tensor"""
    if B is None:
        B = identity_tensor(A.order, A.dim)
    if A.order != B.order:
        raise InputError(f"teig needs equal orders, got m={A.order}, m'={B.order}")
    return solve_eigenproblem(A, B, k, seed, cfg).pairs


def teneig(
    A: DenseTensor,
    B: DenseTensor,
    k: int = 1,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
) -> List[EquivalenceClass]:
    """Equivalence classes for B of a different order than A"""
    if A.order == B.order:
        raise InputError(f"teneig needs different orders, got m=m'={A.order}")
    return solve_eigenproblem(A, B, k, seed, cfg).classes


def eeig(
    A: DenseTensor,
    seed: int = 0,
    cfg: Optional[TrackerConfig] = None,
    k: int = 1,
) -> List[EquivalenceClass]:
    """E-eigenpair classes: B is the identity matrix"""
    return solve_eigenproblem(A, identity_tensor(2, A.dim), k, seed, cfg).classes
