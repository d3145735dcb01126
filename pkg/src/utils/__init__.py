"""
Utils Package
"""

from .logger import setup_logger, get_logger
from .errors import TenEigError, InputError, ConstructionError, TrackingError

__all__ = [
    "setup_logger",
    "get_logger",
    "TenEigError",
    "InputError",
    "ConstructionError",
    "TrackingError",
]
