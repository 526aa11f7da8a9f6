from __future__ import annotations

from engine.errors import ConsistencyError
from engine.math import linalg
from engine.math.mat import ExactMatrix


class BasisFrame:
    """
    A change of basis of C^n given by an invertible matrix P whose
    columns are the new basis vectors.

    Matrices are carried between the standard frame and this one by
    conjugation: from_frame(Z) = P Z P^-1, to_frame(Z) = P^-1 Z P.
    """

    __slots__ = ("_matrix", "_inverse")

    _matrix: ExactMatrix
    _inverse: ExactMatrix

    def __init__(self, matrix: ExactMatrix) -> None:
        rows = matrix.to_rows()
        if linalg.det(rows).is_zero():
            raise ConsistencyError("frame matrix is singular")
        self._matrix = matrix

        # cached inverse
        self._inverse = ExactMatrix.from_rows(linalg.inverse(rows))

    @property
    def matrix(self) -> ExactMatrix:
        return self._matrix

    @property
    def inverse(self) -> ExactMatrix:
        return self._inverse

    @property
    def n(self) -> int:
        return self._matrix.n

    # conjugations between the standard frame and this frame
    def from_frame(self, z: ExactMatrix) -> ExactMatrix:
        """
        Converts a matrix written in this frame to the standard frame.
        """
        return self._matrix.mul_mat(z).mul_mat(self._inverse)

    def to_frame(self, z: ExactMatrix) -> ExactMatrix:
        """
        Converts a matrix in the standard frame to this frame.
        """
        return self._inverse.mul_mat(z).mul_mat(self._matrix)

    def gram(self) -> ExactMatrix:
        """P P^T, the matrix of the bilinear form the frame is adapted to."""
        return self._matrix.mul_mat(self._matrix.transpose())

    @staticmethod
    def identity(n: int) -> BasisFrame:
        return BasisFrame(ExactMatrix.identity(n))
