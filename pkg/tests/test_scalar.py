from fractions import Fraction

import pytest

from engine.errors import InputError
from engine.math.frame import BasisFrame
from engine.math.mat import ExactMatrix
from engine.math.scalar import I, ExactScalar


def test_gaussian_arithmetic():
    a = ExactScalar(1, 2)
    b = ExactScalar(Fraction(1, 2), -1)
    assert a + b == ExactScalar(Fraction(3, 2), 1)
    assert a * b == ExactScalar(Fraction(5, 2), 0)
    assert (a / a) == 1
    assert I * I == -1
    assert a.conjugate() == ExactScalar(1, -2)
    assert a.abs2() == 5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ExactScalar(1) / ExactScalar(0)


def test_integer_and_real_flags():
    assert ExactScalar(3).is_integer()
    assert not ExactScalar(Fraction(1, 2)).is_integer()
    assert not ExactScalar(1, 1).is_real()
    assert ExactScalar(2, -1) ** 2 == ExactScalar(3, -4)
    assert ExactScalar(2) ** -1 == ExactScalar(Fraction(1, 2))


def test_json_format():
    z = ExactScalar(Fraction(-3, 4), Fraction(1, 3))
    assert z.to_json() == {"re": "-3/4", "im": "1/3"}
    assert ExactScalar.from_json(z.to_json()) == z
    assert ExactScalar.from_json("5/2") == ExactScalar(Fraction(5, 2))
    with pytest.raises(InputError):
        ExactScalar.from_json("x")
    with pytest.raises(InputError):
        ExactScalar.from_json(True)


def test_sparse_matrix_drops_zeros():
    m = ExactMatrix(2, {(0, 0): ExactScalar(0), (0, 1): ExactScalar(2)})
    assert list(m.entries) == [(0, 1)]
    assert m.is_nilpotent()
    assert not ExactMatrix.identity(2).is_nilpotent()


def test_matrix_bracket_and_trace():
    e = ExactMatrix.unit(2, 0, 1)
    f = ExactMatrix.unit(2, 1, 0)
    h = ExactMatrix.diagonal([1, -1])
    assert e.bracket(f) == h
    assert h.bracket(e) == e.scale(2)
    assert (e @ f).trace() == 1
    assert ExactMatrix.from_rows([[1, I], [0, 1]]).adjoint() == ExactMatrix.from_rows([[1, 0], [-I, 1]])


def test_matrix_json_rejects_non_square():
    with pytest.raises(InputError):
        ExactMatrix.from_json([[1, 2]])


def test_basis_frame_conjugation():
    p = ExactMatrix.from_rows([[1, 1], [0, 1]])
    frame = BasisFrame(p)
    z = ExactMatrix.diagonal([2, 3])
    assert frame.to_frame(frame.from_frame(z)) == z
    assert frame.from_frame(ExactMatrix.identity(2)) == ExactMatrix.identity(2)
