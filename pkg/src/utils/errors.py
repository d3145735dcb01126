"""
Error hierarchy for TenEig
"""


class TenEigError(Exception):
    """Base class for all solver errors"""


class InputError(TenEigError, ValueError):
    """Malformed input: dimension, mode or order mismatch, bad tensor file, unknown fixture"""


class ConstructionError(TenEigError):
    """An internal construction that cannot be carried out with the drawn parameters"""


class TrackingError(TenEigError):
    """Singular linear solve during path tracking; converted into a path status"""
