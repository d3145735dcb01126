"""
Tests for closed-form eigenpair counts
"""

import pytest

from src.solvers.counts import e_count, g_count, path_count, start_path_count, t_count
from src.utils.errors import InputError


@pytest.mark.parametrize(
    "m,n,expected",
    [(3, 5, 80), (4, 3, 27), (2, 4, 4), (5, 1, 1)],
)
def test_t_count(m, n, expected):
    assert t_count(m, n) == expected


@pytest.mark.parametrize("m,n,expected", [(3, 5, 31), (4, 3, 13), (3, 2, 3), (4, 2, 4)])
def test_e_count(m, n, expected):
    assert e_count(m, n) == expected


@pytest.mark.parametrize(
    "m,mprime,n,expected",
    [(5, 6, 3, 61), (7, 8, 3, 127), (3, 2, 5, 31), (6, 4, 2, 8)],
)
def test_g_count(m, mprime, n, expected):
    assert g_count(m, mprime, n) == expected
    assert g_count(mprime, m, n) == expected


def test_equal_orders_fall_back_to_t_count():
    assert g_count(4, 4, 5) == t_count(4, 5) == 405
    assert path_count(4, 4, 5) == 405


def test_start_path_count_uses_larger_order():
    assert start_path_count(3, 2, 5) == 80
    assert start_path_count(5, 6, 3) == 75
    assert start_path_count(2, 2, 3) == 3


def test_start_paths_bound_class_count():
    for m, mprime, n in [(3, 2, 4), (5, 6, 3), (4, 2, 3)]:
        assert start_path_count(m, mprime, n) >= path_count(m, mprime, n)


@pytest.mark.parametrize("args", [(1, 2, 3), (3, 1, 3), (3, 2, 0)])
def test_invalid_arguments(args):
    with pytest.raises(InputError):
        g_count(*args)
