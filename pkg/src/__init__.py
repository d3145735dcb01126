"""
TenEig - Main Package
Homotopy continuation solver for mode-k generalized tensor eigenpairs
"""

__version__ = "1.1.0"
__author__ = "TenEig Team"
