"""
CLI Package
"""

from .fixtures import FIXTURES, Fixture, fixture_names, fixture_tensor, get_fixture, materialize
from .io import EigenPairRecord, ResultFile, ResultMetadata, TensorFile, read_result_file, read_tensor_file, write_model
from .main import build_parser, run_cli

__all__ = [
    "EigenPairRecord",
    "FIXTURES",
    "Fixture",
    "ResultFile",
    "ResultMetadata",
    "TensorFile",
    "build_parser",
    "fixture_names",
    "fixture_tensor",
    "get_fixture",
    "materialize",
    "read_result_file",
    "read_tensor_file",
    "run_cli",
    "write_model",
]
