"""
Bundled test problems
Each fixture rebuilds its tensor exactly from a fixed definition, optionally
parameterized by a scalar a or a dimension n.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Dict, List, Optional

import numpy as np

from src.cli.io import TensorFile
from src.tensors.dense import DenseTensor
from src.tensors.monomials import MonomialForm
from src.utils.errors import InputError

# Householder vectors for appendix-02 come from this generator seed
APPENDIX_02_SEED = 20140101


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: Callable[[Optional[float], Optional[int]], TensorFile]
    default_a: Optional[float] = None
    default_n: Optional[int] = None

    def materialize(self, a: Optional[float] = None, n: Optional[int] = None) -> TensorFile:
        return self.build(self.default_a if a is None else a, self.default_n if n is None else n)


def _monomials(degree: int, dim: int, terms) -> TensorFile:
    return TensorFile.from_form(MonomialForm.from_terms(degree, dim, terms))


def _rank_one_sum(order: int, vectors: List[np.ndarray], weights: List[float]) -> DenseTensor:
    """Sum of w * v (x) v (x) ... (x) v"""
    dim = vectors[0].size
    arr = np.zeros((dim,) * order)
    for w, v in zip(weights, vectors):
        outer = v
        for _ in range(order - 1):
            outer = np.multiply.outer(outer, v)
        arr = arr + w * outer
    return DenseTensor(arr)


def _symmetric_from_sorted(order: int, dim: int, values: Dict[tuple, float]) -> DenseTensor:
    """Fill every permutation of each sorted 1-based index with its value"""
    arr = np.zeros((dim,) * order)
    for index, value in values.items():
        for perm in set(permutations(index)):
            arr[tuple(i - 1 for i in perm)] = value
    return DenseTensor(arr)


def _from_index_function(order: int, dim: int, fn: Callable[[tuple], float]) -> DenseTensor:
    arr = np.zeros((dim,) * order)
    for index in product(range(dim), repeat=order):
        arr[index] = fn(tuple(i + 1 for i in index))
    return DenseTensor(arr)


def _example_21(a, n) -> TensorFile:
    entries = {
        (1, 1, 1): 1, (1, 2, 1): 2, (2, 1, 1): 3, (2, 2, 1): 4,
        (1, 1, 2): 5, (1, 2, 2): 6, (2, 1, 2): 7, (2, 2, 2): 0,
    }
    return TensorFile.from_tensor(DenseTensor.from_entries(3, 2, entries))


def _motzkin(a, n) -> TensorFile:
    return _monomials(6, 3, [(1, (0, 0, 6)), (1, (4, 2, 0)), (1, (2, 4, 0)), (-3, (2, 2, 2))])


def _appendix_01(a, n) -> TensorFile:
    return _monomials(4, 3, [(1, (4, 0, 0)), (2, (0, 4, 0)), (3, (0, 0, 4))])


def _householder(w: np.ndarray) -> np.ndarray:
    return np.eye(w.size) - 2.0 * np.outer(w, w) / (w @ w)


def _appendix_02(a, n) -> TensorFile:
    rng = np.random.default_rng(APPENDIX_02_SEED)
    Q = np.eye(4)
    for _ in range(3):
        Q = Q @ _householder(rng.standard_normal(4))
    d = [1.0, 2.0, -3.0, -4.0]
    return TensorFile.from_tensor(_rank_one_sum(5, [Q[j] for j in range(4)], d))


def _appendix_03(a, n) -> TensorFile:
    return _monomials(
        4, 3, [(2, (4, 0, 0)), (3, (0, 4, 0)), (5, (0, 0, 4)), (4 * a, (2, 1, 1))]
    )


def _appendix_04(a, n) -> TensorFile:
    return _monomials(4, 2, [(3, (4, 0)), (1, (0, 4)), (6 * a, (2, 2))])


APPENDIX_05_VALUES = {
    (1, 1, 1, 1): 0.2883, (1, 1, 1, 2): -0.0031, (1, 1, 1, 3): 0.1973,
    (1, 1, 2, 2): -0.2485, (1, 1, 2, 3): -0.2939, (1, 1, 3, 3): 0.3847,
    (1, 2, 2, 2): 0.2972, (1, 2, 2, 3): 0.1862, (1, 2, 3, 3): 0.0919,
    (1, 3, 3, 3): -0.3619, (2, 2, 2, 2): 0.1241, (2, 2, 2, 3): -0.3420,
    (2, 2, 3, 3): 0.2127, (2, 3, 3, 3): 0.2727, (3, 3, 3, 3): -0.3054,
}


def _appendix_05(a, n) -> TensorFile:
    return TensorFile.from_tensor(_symmetric_from_sorted(4, 3, APPENDIX_05_VALUES))


def _appendix_06(a, n) -> TensorFile:
    values = {(i, i, i): float(i) for i in range(1, 7)}
    values.update({(i, i, i + 1): 10.0 for i in range(1, 6)})
    return TensorFile.from_tensor(_symmetric_from_sorted(3, 6, values))


def _difference_quartic(n: int, sign: float) -> TensorFile:
    vectors = []
    for i, j in combinations(range(n), 2):
        v = np.zeros(n)
        v[i], v[j] = 1.0, -1.0
        vectors.append(v)
    return TensorFile.from_tensor(_rank_one_sum(4, vectors, [sign] * len(vectors)))


def _appendix_07(a, n) -> TensorFile:
    return _difference_quartic(n, -1.0)


def _appendix_08(a, n) -> TensorFile:
    u = np.array([1.0, 1.0, 1.0, 1.0, 0.0])
    v = np.array([0.0, 1.0, 1.0, 1.0, 1.0])
    return TensorFile.from_tensor(_rank_one_sum(4, [u, v], [1.0, 1.0]))


def _appendix_09(a, n) -> TensorFile:
    return _monomials(3, 3, [(2, (3, 0, 0)), (3, (1, 2, 0)), (3, (1, 0, 2))])


def _appendix_10(a, n) -> TensorFile:
    return TensorFile.from_tensor(_from_index_function(4, n, lambda idx: np.sin(sum(idx))))


def _appendix_11(a, n) -> TensorFile:
    return TensorFile.from_tensor(_from_index_function(4, n, lambda idx: sum(np.tan(i) for i in idx)))


def _appendix_12(a, n) -> TensorFile:
    return TensorFile.from_tensor(_from_index_function(5, n, lambda idx: sum(np.log(i) for i in idx)))


FIXTURES: Dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture("example-2.1", "order-3, dimension-2 nonsymmetric tensor with distinct mode spectra", _example_21),
        Fixture("motzkin", "Motzkin polynomial x3^6 + x1^4x2^2 + x1^2x2^4 - 3x1^2x2^2x3^2", _motzkin),
        Fixture("appendix-01", "x1^4 + 2x2^4 + 3x3^4", _appendix_01),
        Fixture("appendix-02", "x1^5 + 2x2^5 - 3x3^5 - 4x4^5 under three Householder reflections", _appendix_02),
        Fixture("appendix-03", "2x1^4 + 3x2^4 + 5x3^4 + 4a x1^2x2x3", _appendix_03, default_a=0.0),
        Fixture("appendix-04", "3x1^4 + x2^4 + 6a x1^2x2^2", _appendix_04, default_a=0.0),
        Fixture("appendix-05", "symmetric order-4, dimension-3 tensor with tabulated entries", _appendix_05),
        Fixture("appendix-06", "order-3, dimension-6 with A_iii = i and A_i,i,i+1 = 10", _appendix_06),
        Fixture("appendix-07", "-sum over i<j of (x_i - x_j)^4", _appendix_07, default_n=6),
        Fixture("appendix-08", "(x1+x2+x3+x4)^4 + (x2+x3+x4+x5)^4", _appendix_08),
        Fixture("appendix-09", "2x1^3 + 3x1x2^2 + 3x1x3^2", _appendix_09),
        Fixture("appendix-10", "A = sin(i1+i2+i3+i4)", _appendix_10, default_n=5),
        Fixture("appendix-11", "A = tan(i1)+...+tan(i4)", _appendix_11, default_n=6),
        Fixture("appendix-12", "A = ln(i1)+...+ln(i5)", _appendix_12, default_n=4),
        Fixture("difference-quartic", "sum over i<j of (x_i - x_j)^4", lambda a, n: _difference_quartic(n, 1.0), default_n=4),
    ]
}


def fixture_names() -> List[str]:
    return list(FIXTURES)


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise InputError(f"Unknown fixture '{name}'; available: {', '.join(FIXTURES)}") from None


def materialize(name: str, a: Optional[float] = None, n: Optional[int] = None) -> TensorFile:
    """Tensor file of a fixture; n must be at least 2 where it applies"""
    fixture = get_fixture(name)
    if n is not None and fixture.default_n is not None and n < 2:
        raise InputError(f"Fixture '{name}' needs n >= 2, got {n}")
    return fixture.materialize(a, n)


def fixture_tensor(name: str, a: Optional[float] = None, n: Optional[int] = None) -> DenseTensor:
    return materialize(name, a, n).to_tensor()
