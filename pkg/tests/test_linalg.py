from fractions import Fraction

import pytest

from engine.errors import ConsistencyError, GradingError
from engine.math import linalg
from engine.math.scalar import ExactScalar


def rows(data):
    return [[ExactScalar(x) if not isinstance(x, ExactScalar) else x for x in row] for row in data]


def test_rank_and_nullspace():
    m = rows([[1, 2, 3], [2, 4, 6]])
    assert linalg.rank(m, 3) == 1
    kernel = linalg.nullspace(m, 3)
    assert len(kernel) == 2
    for v in kernel:
        assert linalg.is_zero_vector(linalg.mat_vec(m, v))
    assert kernel[0] == rows([[-2, 1, 0]])[0]


def test_rank_over_gaussian_rationals():
    i = ExactScalar(0, 1)
    m = rows([[1, i], [i, -1]])
    assert linalg.rank(m, 2) == 1


def test_solve_and_inconsistent_system():
    m = rows([[1, 1], [1, -1]])
    assert linalg.solve(m, rows([[3, 1]])[0], 2) == rows([[2, 1]])[0]
    singular = rows([[1, 1], [2, 2]])
    assert linalg.solve(singular, rows([[1, 3]])[0], 2) is None


def test_coordinates_many():
    basis = rows([[1, 0, 1], [0, 1, 1]])
    coords = linalg.coordinates_many(basis, rows([[2, 3, 5], [0, 0, 0]]), 3)
    assert coords == rows([[2, 3], [0, 0]])
    assert linalg.coordinates_many(basis, rows([[1, 0, 0]]), 3) is None
    with pytest.raises(ConsistencyError):
        linalg.coordinates_many(rows([[1, 0], [2, 0]]), rows([[1, 0]]), 2)


def test_inverse_and_det():
    m = rows([[2, 1], [1, 1]])
    assert linalg.det(m) == 1
    assert linalg.inverse(m) == rows([[1, -1], [-1, 2]])


def test_integer_eigenspaces():
    m = rows([[2, 0, 0], [0, -1, 0], [0, 0, 2]])
    spaces = linalg.integer_eigenspaces(m)
    assert sorted(spaces) == [-1, 2]
    assert len(spaces[2]) == 2


def test_non_diagonalizable_raises():
    with pytest.raises(GradingError):
        linalg.integer_eigenspaces(rows([[0, 1], [0, 0]]))


def test_non_integer_spectrum_raises():
    with pytest.raises(GradingError):
        linalg.integer_eigenspaces(rows([[Fraction(1, 2)]]))


def test_positive_definite():
    assert linalg.is_positive_definite(rows([[2, 1], [1, 2]]))
    assert not linalg.is_positive_definite(rows([[1, 2], [2, 1]]))
    i = ExactScalar(0, 1)
    assert linalg.is_positive_definite(rows([[2, i], [-i, 2]]))
