"""
Pytest configuration and fixtures
"""

import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.fixtures import fixture_tensor
from src.tensors.dense import DenseTensor
from src.tensors.monomials import MonomialForm, from_monomials
from src.trackers.config import TrackerConfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long reference reproductions (deselect with -m 'not slow')")


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def tracker_config():
    return TrackerConfig()


@pytest.fixture
def example_21():
    """The 3 x 2 x 2 nonsymmetric tensor with three distinct mode spectra"""
    return fixture_tensor("example-2.1")


@pytest.fixture
def quartic_two_var():
    """x1^4 + x2^4"""
    return from_monomials(MonomialForm.from_terms(4, 2, [(1, (4, 0)), (1, (0, 4))]))


@pytest.fixture
def diagonal_quartic():
    """Order-4 diagonal tensor with diagonal (1, 2, 3)"""
    arr = np.zeros((3, 3, 3, 3))
    for i, d in enumerate((1.0, 2.0, 3.0)):
        arr[i, i, i, i] = d
    return DenseTensor(arr)


@pytest.fixture
def motzkin():
    """x3^6 + x1^4 x2^2 + x1^2 x2^4 - 3 x1^2 x2^2 x3^2"""
    return fixture_tensor("motzkin")
