"""
Trackers Package
"""

from .arclength import ArclengthResult, track_arclength
from .config import TrackerConfig
from .path_tracker import EndgameOutcome, PathTracker, condition_estimate, endgame, retrace_projective, track_path, warm_start
from .results import EndpointKind, PathResult, PathStatus
from .solution_store import DuplicateCheck, SolutionStore, StoredSolution, check_duplicate

__all__ = [
    "ArclengthResult",
    "DuplicateCheck",
    "EndgameOutcome",
    "EndpointKind",
    "PathResult",
    "PathStatus",
    "PathTracker",
    "SolutionStore",
    "StoredSolution",
    "TrackerConfig",
    "check_duplicate",
    "condition_estimate",
    "endgame",
    "retrace_projective",
    "track_arclength",
    "track_path",
    "warm_start",
]
