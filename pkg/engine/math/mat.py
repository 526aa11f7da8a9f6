from __future__ import annotations
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from engine.errors import InputError
from engine.math.scalar import ExactScalar, ScalarLike

Entry = Tuple[int, int]


class ExactMatrix:
    """
    Square n x n matrix over the Gaussian rationals.

    The data lives in a sparse sympy DomainMatrix over QQ_I; `entries`
    exposes the non-zero positions as ExactScalars and is built on first
    use. Instances are never mutated.
    """

    __slots__ = ("n", "rep", "_entries")

    n: int
    rep: DomainMatrix

    def __init__(self, n: int, entries: Dict[Entry, ScalarLike] | None = None) -> None:
        rows: Dict[int, Dict[int, Any]] = {}
        for (i, j), value in (entries or {}).items():
            g = ExactScalar.coerce(value).value
            if g:
                rows.setdefault(i, {})[j] = g
        self.n = n
        self.rep = DomainMatrix(rows, (n, n), QQ_I)
        self._entries = None

    @staticmethod
    def from_domain(rep: DomainMatrix) -> ExactMatrix:
        m = object.__new__(ExactMatrix)
        m.n = rep.shape[0]
        m.rep = rep.to_sparse()
        m._entries = None
        return m

    def __repr__(self) -> str:
        rows = ", ".join(str([self.get(i, j) for j in range(self.n)]) for i in range(self.n))
        return f"ExactMatrix([{rows}])"

    @property
    def entries(self) -> Dict[Entry, ExactScalar]:
        if self._entries is None:
            self._entries = {
                key: ExactScalar.from_domain(g) for key, g in sorted(self._dok().items())
            }
        return self._entries

    def _dok(self) -> Dict[Entry, Any]:
        return {key: g for key, g in self.rep.to_dok().items() if g}

    def get(self, i: int, j: int) -> ExactScalar:
        return self.entries.get((i, j), ExactScalar(0))

    def to_rows(self) -> List[List[ExactScalar]]:
        return [[self.get(i, j) for j in range(self.n)] for i in range(self.n)]

    # arithmetic, all done by the DomainMatrix
    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix.from_domain(self.rep + other.rep)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix.from_domain(self.rep - other.rep)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix.from_domain(-self.rep)

    def scale(self, scalar: ScalarLike) -> ExactMatrix:
        return ExactMatrix.from_domain(self.rep.scalarmul(ExactScalar.coerce(scalar).value))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.n == other.n and self._dok() == other._dok()

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._dok().items())))

    def mul_mat(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix.from_domain(self.rep.matmul(other.rep))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return self.mul_mat(other)

    def bracket(self, other: ExactMatrix) -> ExactMatrix:
        """Commutator self*other - other*self."""
        return ExactMatrix.from_domain(self.rep.matmul(other.rep) - other.rep.matmul(self.rep))

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_domain(self.rep.transpose())

    def conjugate(self) -> ExactMatrix:
        """Entrywise complex conjugate."""
        return ExactMatrix(self.n, {k: v.conjugate() for k, v in self.entries.items()})

    def adjoint(self) -> ExactMatrix:
        """Conjugate transpose Z*."""
        return self.conjugate().transpose()

    def trace(self) -> ExactScalar:
        total = ExactScalar(0)
        for (i, j), value in self.entries.items():
            if i == j:
                total = total + value
        return total

    def is_zero(self) -> bool:
        return self.rep.is_zero_matrix

    def is_nilpotent(self) -> bool:
        power = self.rep
        for _ in range(self.n):
            if power.is_zero_matrix:
                return True
            power = power.matmul(self.rep)
        return power.is_zero_matrix

    # serialization
    def to_json(self) -> List[List[Dict[str, str]]]:
        return [[self.get(i, j).to_json() for j in range(self.n)] for i in range(self.n)]

    @staticmethod
    def from_json(rows: Any) -> ExactMatrix:
        if not isinstance(rows, list) or not rows:
            raise InputError("matrix must be a non-empty list of rows")
        n = len(rows)
        if any(not isinstance(r, list) or len(r) != n for r in rows):
            raise InputError("matrix must be square")
        return ExactMatrix.from_rows([[ExactScalar.from_json(x) for x in r] for r in rows])

    # constructors
    @staticmethod
    def from_rows(rows: Iterable[Iterable[ScalarLike]]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        entries = {(i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)}
        return ExactMatrix(len(rows), entries)

    @staticmethod
    def identity(n: int) -> ExactMatrix:
        return ExactMatrix.from_domain(DomainMatrix.eye(n, QQ_I))

    @staticmethod
    def unit(n: int, i: int, j: int, value: ScalarLike = 1) -> ExactMatrix:
        """Matrix unit E_ij (0-based), optionally scaled."""
        return ExactMatrix(n, {(i, j): value})

    @staticmethod
    def diagonal(values: Sequence[ScalarLike]) -> ExactMatrix:
        return ExactMatrix(len(values), {(i, i): v for i, v in enumerate(values)})
