"""
Closed-form eigenpair and path counts
"""

from src.utils.errors import InputError


def _check(m: int, mprime: int, n: int):
    if m < 2 or mprime < 2 or n < 1:
        raise InputError(f"Counts need m, m' >= 2 and n >= 1, got ({m}, {mprime}, {n})")


def t_count(m: int, n: int) -> int:
    """n(m-1)^(n-1): equivalence classes when m = m'"""
    _check(m, m, n)
    return n * (m - 1) ** (n - 1)


def g_count(m: int, mprime: int, n: int) -> int:
    """((m-1)^n - (m'-1)^n) / (m - m'): equivalence classes when m != m'"""
    _check(m, mprime, n)
    if m == mprime:
        return t_count(m, n)
    return ((m - 1) ** n - (mprime - 1) ** n) // (m - mprime)


def e_count(m: int, n: int) -> int:
    """E-eigenpair classes, g_count with m' = 2"""
    return g_count(m, 2, n)


def path_count(m: int, mprime: int, n: int) -> int:
    """Generic number of equivalence classes of mode-k B-eigenpairs"""
    return g_count(m, mprime, n)


def start_path_count(m: int, mprime: int, n: int) -> int:
    """Paths tracked by the linear homotopy: n * (max(m, m') - 1)^(n-1)"""
    _check(m, mprime, n)
    return n * (max(m, mprime) - 1) ** (n - 1)
