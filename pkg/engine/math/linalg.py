"""
Exact linear algebra over the Gaussian rationals.

Vectors are sequences of ExactScalar and matrices are lists of rows.
The heavy lifting (row reduction, determinants, inverses) is done by
sympy's DomainMatrix over QQ_I; this module only converts in and out and
builds the derived operations the rest of the engine needs.
"""

from __future__ import annotations
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from engine.errors import ConsistencyError, GradingError
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)

Vector = Sequence[ExactScalar]
Rows = Sequence[Sequence[ExactScalar]]


def to_domain_matrix(rows: Rows, ncols: int) -> DomainMatrix:
    data = [[v.value for v in row] for row in rows]
    # most of our systems are sparse (matrix units, root vectors)
    return DomainMatrix(data, (len(data), ncols), QQ_I).to_sparse()


def from_domain_matrix(m: DomainMatrix) -> List[List[ExactScalar]]:
    return [[ExactScalar.from_domain(v) for v in row] for row in m.to_list()]


def zero_vector(n: int) -> List[ExactScalar]:
    return [ExactScalar(0) for _ in range(n)]


def unit_vector(n: int, i: int) -> List[ExactScalar]:
    v = zero_vector(n)
    v[i] = ExactScalar(1)
    return v


def is_zero_vector(v: Vector) -> bool:
    return all(x.is_zero() for x in v)


def add(u: Vector, v: Vector) -> List[ExactScalar]:
    return [a + b for a, b in zip(u, v)]


def scale(c: ExactScalar, v: Vector) -> List[ExactScalar]:
    return [c * a for a in v]


def combine(coefficients: Vector, vectors: Sequence[Vector], length: int) -> List[ExactScalar]:
    """Sum of coefficients[i] * vectors[i]."""
    out = zero_vector(length)
    for c, vec in zip(coefficients, vectors):
        if c.is_zero():
            continue
        for k, entry in enumerate(vec):
            if not entry.is_zero():
                out[k] = out[k] + c * entry
    return out


def mat_vec(rows: Rows, v: Vector) -> List[ExactScalar]:
    out = []
    for row in rows:
        total = ExactScalar(0)
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                total = total + a * b
        out.append(total)
    return out


def transpose(rows: Rows, ncols: int) -> List[List[ExactScalar]]:
    return [[row[j] for row in rows] for j in range(ncols)]


def rref(rows: Rows, ncols: int) -> Tuple[List[List[ExactScalar]], Tuple[int, ...]]:
    """
    Reduced row echelon form and pivot columns.
    """
    if not rows or ncols == 0:
        return [list(r) for r in rows], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced), tuple(pivots)


def rank(rows: Rows, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Rows, ncols: int) -> List[List[ExactScalar]]:
    """
    Basis of {v : rows * v = 0}, one vector per free column.

    Each basis vector has a 1 in its free column, so the basis is
    deterministic for a given matrix.
    """
    if ncols == 0:
        return []
    if not rows:
        return [unit_vector(ncols, j) for j in range(ncols)]

    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zero_vector(ncols)
        v[free] = ExactScalar(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][free]
        basis.append(v)
    return basis


def solve(rows: Rows, rhs: Vector, ncols: int) -> Optional[List[ExactScalar]]:
    """
    A particular solution of rows * v = rhs with free variables set to
    zero, or None when the system is inconsistent.
    """
    if not rows:
        return zero_vector(ncols)
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    v = zero_vector(ncols)
    for r, pc in enumerate(pivots):
        v[pc] = reduced[r][ncols]
    return v


def independent_subset(vectors: Sequence[Vector], length: int) -> List[int]:
    """Indices of a maximal linearly independent subset, greedily from the left."""
    if not vectors or length == 0:
        return []
    _, pivots = rref(transpose(vectors, length), len(vectors))
    return list(pivots)


def coordinates_in(basis: Sequence[Vector], v: Vector, length: int) -> Optional[List[ExactScalar]]:
    """
    Coefficients c with sum c_i basis[i] = v, or None when v is outside
    the span. The basis must be linearly independent.
    """
    if not basis:
        return [] if is_zero_vector(v) else None
    return solve(transpose(basis, length), v, len(basis))


def coordinates_many(
    basis: Sequence[Vector], vectors: Sequence[Vector], length: int
) -> Optional[List[List[ExactScalar]]]:
    """
    Coordinates of several vectors in one independent basis, using a
    single row reduction. None when any vector leaves the span.
    """
    m = len(basis)
    if not vectors:
        return []
    if m == 0:
        return [[] for _ in vectors] if all(is_zero_vector(v) for v in vectors) else None

    augmented = [
        [b[i] for b in basis] + [v[i] for v in vectors] for i in range(length)
    ]
    reduced, pivots = rref(augmented, m + len(vectors))
    if any(pc >= m for pc in pivots):
        return None
    if len(pivots) != m:
        raise ConsistencyError("basis is not linearly independent")
    return [[reduced[r][m + k] for r in range(m)] for k in range(len(vectors))]


def in_span(basis: Sequence[Vector], v: Vector, length: int) -> bool:
    return coordinates_in(basis, v, length) is not None


def inverse(rows: Rows) -> List[List[ExactScalar]]:
    n = len(rows)
    if n == 0:
        return []
    return from_domain_matrix(to_domain_matrix(rows, n).inv())


def det(rows: Rows) -> ExactScalar:
    n = len(rows)
    if n == 0:
        return ExactScalar(1)
    return ExactScalar.from_domain(to_domain_matrix(rows, n).det())


def restrict(operator: Rows, basis: Sequence[Vector], length: int) -> List[List[ExactScalar]]:
    """
    Matrix of an operator on an invariant subspace, in the given basis.

    Column i holds the coordinates of operator(basis[i]).
    """
    m = len(basis)
    images = [mat_vec(operator, b) for b in basis]
    columns = coordinates_many(basis, images, length)
    if columns is None:
        raise ConsistencyError("subspace is not invariant under the operator")
    return [[columns[j][i] for j in range(m)] for i in range(m)]


def spectral_bound(rows: Rows) -> int:
    """
    Upper bound on the modulus of every eigenvalue (max absolute row sum,
    with |a+bi| bounded by |a|+|b|).
    """
    best = Fraction(0)
    for row in rows:
        total = sum((x.modulus_bound() for x in row), Fraction(0))
        best = max(best, total)
    return math.ceil(best)


def integer_eigenspaces(rows: Rows) -> Dict[int, List[List[ExactScalar]]]:
    """
    Decomposes a square matrix into eigenspaces for integer eigenvalues.

    Raises GradingError unless the eigenspaces fill the whole space,
    i.e. unless the matrix is diagonalizable with integer spectrum.
    """
    n = len(rows)
    spaces: Dict[int, List[List[ExactScalar]]] = {}
    if n == 0:
        return spaces

    bound = spectral_bound(rows)
    found = 0
    for value in range(-bound, bound + 1):
        shifted = [
            [entry - value if i == j else entry for j, entry in enumerate(row)]
            for i, row in enumerate(rows)
        ]
        kernel = nullspace(shifted, n)
        if kernel:
            spaces[value] = kernel
            found += len(kernel)
            if found == n:
                break

    if found != n:
        raise GradingError(
            f"operator is not diagonalizable with integer eigenvalues "
            f"({found} of {n} dimensions accounted for)"
        )
    logger.debug("eigenspaces %s", {k: len(v) for k, v in spaces.items()})
    return spaces


def leading_minors(rows: Rows) -> List[ExactScalar]:
    return [det([row[:k] for row in rows[:k]]) for k in range(1, len(rows) + 1)]


def is_hermitian(rows: Rows) -> bool:
    n = len(rows)
    return all(rows[i][j] == rows[j][i].conjugate() for i in range(n) for j in range(n))


def is_positive_definite(rows: Rows) -> bool:
    """
    Exact test for a Hermitian matrix: every leading principal minor is
    real and strictly positive.
    """
    if not is_hermitian(rows):
        return False
    for minor in leading_minors(rows):
        if not minor.is_real() or minor.re <= 0:
            return False
    return True
