"""
Command Line Interface
teig / teneig / eeig / zeig / heig solves and the fixtures corpus
"""

import argparse
import sys
from typing import List, Optional

from src.cli.fixtures import FIXTURES, fixture_tensor, materialize
from src.cli.io import ResultFile, read_tensor_file, write_model
from src.config import settings
from src.solvers.complex_solver import solve_eigenproblem
from src.solvers.real_solver import heig, zeig
from src.tensors.dense import DenseTensor, identity_tensor
from src.trackers.config import TrackerConfig
from src.utils.errors import InputError, TenEigError
from src.utils.logger import get_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCOMPLETE = 2


class _Parser(argparse.ArgumentParser):
    """Usage errors raise InputError (exit 1)"""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _add_tensor_source(p: argparse.ArgumentParser):
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Tensor file (JSON)")
    source.add_argument("--fixture", choices=sorted(FIXTURES), help="Bundled problem")
    p.add_argument("--a", type=float, default=None, help="Fixture parameter a")
    p.add_argument("--n", type=int, default=None, help="Fixture dimension n")


def _add_solver_options(p: argparse.ArgumentParser, with_mode: bool = True):
    if with_mode:
        p.add_argument("--mode", type=int, default=1, help="Mode k (default 1)")
    p.add_argument("--seed", type=int, default=None, help="Random seed (default TENEIG_DEFAULT_SEED)")
    p.add_argument("--out", default=None, help="Result file; stdout when omitted")
    p.add_argument("--tol", type=float, default=None, help="Newton residual tolerance")
    p.add_argument("--imag-tol", type=float, default=None, help="Imaginary-part threshold for real eigenvalues")
    p.add_argument("--threads", type=int, default=None, help="Worker threads (default TENEIG_THREADS)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teneig", description="Tensor eigenpairs by homotopy continuation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("teig", help="Mode-k B-eigenpairs with B of the same order (identity tensor by default)")
    _add_tensor_source(p)
    p.add_argument("--B", dest="b_file", default=None, help="B tensor file")
    _add_solver_options(p)

    p = sub.add_parser("teneig", help="Mode-k B-eigenpairs with B of a different order")
    _add_tensor_source(p)
    p.add_argument("--B", dest="b_file", required=True, help="B tensor file")
    _add_solver_options(p)

    p = sub.add_parser("eeig", help="E-eigenpairs (B = identity matrix)")
    _add_tensor_source(p)
    _add_solver_options(p)

    for name, text in (("zeig", "Real Z-eigenpairs"), ("heig", "Real H-eigenpairs")):
        p = sub.add_parser(name, help=text)
        _add_tensor_source(p)
        _add_solver_options(p, with_mode=False)
        p.add_argument("--all", action="store_true", help="Also report the complex classes")

    p = sub.add_parser("fixtures", help="List bundled problems or write one as a tensor file")
    p.add_argument("name", nargs="?", default=None, help="Fixture name")
    p.add_argument("--a", type=float, default=None, help="Parameter a")
    p.add_argument("--n", type=int, default=None, help="Dimension n")
    p.add_argument("--out", default=None, help="Tensor file; stdout when omitted")
    return parser


def _load_a(args) -> DenseTensor:
    if args.input:
        return read_tensor_file(args.input)
    return fixture_tensor(args.fixture, args.a, args.n)


def _tracker_config(args) -> TrackerConfig:
    return TrackerConfig().with_overrides(newton_tol=args.tol, imag_tol=args.imag_tol)


def _solve(args) -> ResultFile:
    A = _load_a(args)
    cfg = _tracker_config(args)
    seed = settings.default_seed if args.seed is None else args.seed
    threads = args.threads
    if threads is not None and threads < 1:
        raise InputError(f"--threads must be at least 1, got {threads}")
    command = args.command

    if command in ("teig", "teneig"):
        B = read_tensor_file(args.b_file) if args.b_file else identity_tensor(A.order, A.dim)
        if command == "teig" and B.order != A.order:
            raise InputError(f"teig needs B of order {A.order}, got {B.order}")
        if command == "teneig" and B.order == A.order:
            raise InputError("teneig needs B of a different order than A; use teig")
        report = solve_eigenproblem(A, B, args.mode, seed, cfg, threads)
        return ResultFile.from_report(command, report)

    if command == "eeig":
        report = solve_eigenproblem(A, identity_tensor(2, A.dim), args.mode, seed, cfg, threads)
        return ResultFile.from_report(command, report)

    if not A.is_real(1e-15):
        raise InputError(f"{command} needs a real tensor")
    if command == "zeig":
        report = solve_eigenproblem(A, identity_tensor(2, A.dim), 1, seed, cfg, threads)
        pairs = zeig(A, seed, cfg, report=report)
    else:
        report = solve_eigenproblem(A, identity_tensor(A.order, A.dim), 1, seed, cfg, threads)
        pairs = heig(A, seed, cfg, report=report)
    return ResultFile.from_report(command, report, pairs, include_complex=args.all)


def _fixtures(args) -> int:
    if args.name is None:
        for name, fixture in FIXTURES.items():
            print(f"{name:20s} {fixture.description}")
        return EXIT_OK
    if args.name not in FIXTURES:
        raise InputError(f"Unknown fixture '{args.name}'")
    text = write_model(materialize(args.name, args.a, args.n), args.out)
    if args.out is None:
        print(text)
    return EXIT_OK


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 on success, 1 on input or usage errors, 2 when some path failed
    """
    try:
        settings.validate_required_settings()
        args = build_parser().parse_args(argv)
        if args.command == "fixtures":
            return _fixtures(args)
        result = _solve(args)
    except (TenEigError, ValueError, OSError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    text = write_model(result, args.out)
    if args.out is None:
        print(text)
    if result.metadata.paths_failed:
        logger.warning(f"{result.metadata.paths_failed} paths failed")
        return EXIT_INCOMPLETE
    return EXIT_OK


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
