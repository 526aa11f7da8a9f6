"""
Matrix realizations of the complexified classical real forms sl(n,R)
and su(p,q), with Cartan decomposition g_C = k_C + p_C, the Killing form,
the three conjugations and the invariant Hermitian form.

Algebra elements are coordinate tuples over the realization basis; the
basis is ordered k_C first, then p_C.
"""

from __future__ import annotations
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from engine.errors import ConsistencyError, DescriptorError
from engine.math import linalg
from engine.math.frame import BasisFrame
from engine.math.mat import Entry, ExactMatrix
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)

Element = Tuple[ExactScalar, ...]
Weight = Tuple[int, ...]
Sparse = Dict[int, ExactScalar]

SL_R = "sl_R"
SU = "su"

_SL_PATTERN = re.compile(r"^\s*sl(?:_R)?\s*\(\s*(\d+)\s*(?:,\s*R\s*)?\)\s*$")
_SU_PATTERN = re.compile(r"^\s*su\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class RealFormDescriptor:
    """
    Names a real form: sl_R(n) with n >= 2, or su(p,q) with p >= q >= 1.
    """

    family: str
    n: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if self.family == SL_R:
            if self.n < 2:
                raise DescriptorError(f"sl_R(n) needs n >= 2, got n={self.n}")
        elif self.family == SU:
            if self.q < 1 or self.p < self.q:
                raise DescriptorError(
                    f"su(p,q) needs p >= q >= 1, got p={self.p}, q={self.q}"
                )
        else:
            raise DescriptorError(f"unknown real form family '{self.family}'")

    @property
    def matrix_size(self) -> int:
        return self.n if self.family == SL_R else self.p + self.q

    @property
    def name(self) -> str:
        if self.family == SL_R:
            return f"sl_R({self.n})"
        return f"su({self.p},{self.q})"

    def to_json(self) -> str:
        return self.name

    @staticmethod
    def sl(n: int) -> RealFormDescriptor:
        return RealFormDescriptor(SL_R, n=n)

    @staticmethod
    def su(p: int, q: int) -> RealFormDescriptor:
        return RealFormDescriptor(SU, p=p, q=q)

    @staticmethod
    def parse(data: Any) -> RealFormDescriptor:
        """
        Accepts "sl_R(4)", "sl(4,R)", "su(6,3)", or a table such as
        {"family": "sl_R", "n": 4} / {"family": "su", "p": 6, "q": 3}.
        """
        if isinstance(data, RealFormDescriptor):
            return data
        if isinstance(data, str):
            match = _SL_PATTERN.match(data)
            if match:
                return RealFormDescriptor.sl(int(match.group(1)))
            match = _SU_PATTERN.match(data)
            if match:
                return RealFormDescriptor.su(int(match.group(1)), int(match.group(2)))
            raise DescriptorError(f"cannot parse real form '{data}'")
        if isinstance(data, dict):
            family = data.get("family")
            try:
                if family in (SL_R, "sl"):
                    return RealFormDescriptor.sl(int(data["n"]))
                if family == SU:
                    return RealFormDescriptor.su(int(data["p"]), int(data["q"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise DescriptorError(f"invalid real form table {data!r}") from exc
            raise DescriptorError(f"unknown real form family {family!r}")
        raise DescriptorError(f"cannot parse real form {data!r}")


class AlgebraRealization(ABC):
    """
    Base class for a complexified real form realized inside sl(n, C).

    Subclasses provide the basis of k_C and p_C, the Cartan elements used
    for weight coordinates, the Weyl frame and the three conjugations.
    Everything else (coordinates, structure constants, Killing form,
    Hermitian form) is shared.
    """

    def __init__(
        self,
        descriptor: RealFormDescriptor,
        k_basis: List[ExactMatrix],
        p_basis: List[ExactMatrix],
        cartan_elements: List[ExactMatrix],
        frame: BasisFrame,
    ) -> None:
        self.descriptor = descriptor
        self.n = descriptor.matrix_size
        self.basis: Tuple[ExactMatrix, ...] = tuple(k_basis) + tuple(p_basis)
        self.dim = len(self.basis)
        self.dim_k = len(k_basis)
        self.dim_p = len(p_basis)
        self.k_indices = tuple(range(self.dim_k))
        self.p_indices = tuple(range(self.dim_k, self.dim))

        # Cartan elements; weight coordinates are ad-eigenvalues of these
        self.cartan_elements: Tuple[ExactMatrix, ...] = tuple(cartan_elements)
        self.frame = frame
        self._weyl_form = frame.gram()
        self._weyl_form_inverse = ExactMatrix.from_rows(
            linalg.inverse(self._weyl_form.to_rows())
        )

        self._build_coordinate_map()
        self._table: Dict[Tuple[int, int], Sparse] = {}
        self._build_structure_constants()
        self._cartan_operators: Dict[int, List[List[ExactScalar]]] = {}

        logger.debug(
            "built %s: dim g=%d, dim k=%d, dim p=%d",
            descriptor.name, self.dim, self.dim_k, self.dim_p,
        )

    # conjugations, defined on matrices by each real form
    @abstractmethod
    def theta_matrix(self, z: ExactMatrix) -> ExactMatrix:
        """Cartan involution."""
        pass

    @abstractmethod
    def sigma_matrix(self, z: ExactMatrix) -> ExactMatrix:
        """Conjugation with respect to the real form."""
        pass

    @abstractmethod
    def tau_matrix(self, z: ExactMatrix) -> ExactMatrix:
        """Conjugation with respect to the compact form k + i p."""
        pass

    @property
    def name(self) -> str:
        return self.descriptor.name

    @property
    def weight_rank(self) -> int:
        return len(self.cartan_elements)

    # coordinates
    def _build_coordinate_map(self) -> None:
        """
        Picks dim g matrix positions on which the basis is independent and
        inverts the basis restricted to them once.
        """
        positions = sorted({pos for b in self.basis for pos in b.entries})
        rows = [[b.get(*pos) for b in self.basis] for pos in positions]
        chosen = linalg.independent_subset(rows, self.dim)
        if len(chosen) != self.dim:
            raise ConsistencyError(f"{self.name} basis is linearly dependent")

        self._positions: List[Entry] = [positions[i] for i in chosen]
        self._position_index: Dict[Entry, int] = {
            pos: k for k, pos in enumerate(self._positions)
        }
        inverse = linalg.inverse([rows[i] for i in chosen])
        self._inverse_columns: List[List[Tuple[int, ExactScalar]]] = [
            [(i, inverse[i][k]) for i in range(self.dim) if not inverse[i][k].is_zero()]
            for k in range(self.dim)
        ]

    def sparse_coordinates(self, z: ExactMatrix) -> Sparse:
        """
        Coordinates of a matrix as a sparse map, checked by reconstruction.
        """
        coords: Sparse = {}
        for pos, value in z.entries.items():
            k = self._position_index.get(pos)
            if k is None:
                continue
            for i, a in self._inverse_columns[k]:
                term = a * value
                coords[i] = coords[i] + term if i in coords else term
        coords = {i: c for i, c in coords.items() if not c.is_zero()}

        if self._sparse_to_matrix(coords) != z:
            raise ConsistencyError(f"matrix is not in the span of the {self.name} basis")
        return coords

    def coordinates(self, z: ExactMatrix) -> Element:
        return self.densify(self.sparse_coordinates(z))

    def densify(self, coords: Sparse) -> Element:
        out = [ExactScalar(0)] * self.dim
        for i, c in coords.items():
            out[i] = c
        return tuple(out)

    @staticmethod
    def sparsify(z: Sequence[ExactScalar]) -> Sparse:
        return {i: c for i, c in enumerate(z) if not c.is_zero()}

    def _sparse_to_matrix(self, coords: Sparse) -> ExactMatrix:
        result: Dict[Entry, ExactScalar] = {}
        for i, c in coords.items():
            for pos, value in self.basis[i].entries.items():
                term = c * value
                result[pos] = result[pos] + term if pos in result else term
        return ExactMatrix(self.n, result)

    def to_matrix(self, z: Sequence[ExactScalar]) -> ExactMatrix:
        return self._sparse_to_matrix(self.sparsify(z))

    def zero(self) -> Element:
        return tuple(ExactScalar(0) for _ in range(self.dim))

    def basis_element(self, i: int) -> Element:
        return tuple(linalg.unit_vector(self.dim, i))

    def contains(self, z: ExactMatrix) -> bool:
        try:
            self.sparse_coordinates(z)
        except ConsistencyError:
            return False
        return True

    # structure constants
    def _build_structure_constants(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                product = self.basis[i].bracket(self.basis[j])
                if not product.is_zero():
                    self._table[(i, j)] = self.sparse_coordinates(product)

    def structure_constants(self, i: int, j: int) -> Sparse:
        """[b_i, b_j] as a sparse coordinate map."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def sparse_bracket(self, z: Sparse, w: Sparse) -> Sparse:
        result: Sparse = {}
        for i, a in z.items():
            for j, b in w.items():
                if i == j:
                    continue
                ab = a * b
                for k, c in self.structure_constants(i, j).items():
                    term = ab * c
                    result[k] = result[k] + term if k in result else term
        return {k: c for k, c in result.items() if not c.is_zero()}

    def bracket(self, z: Sequence[ExactScalar], w: Sequence[ExactScalar]) -> Element:
        return self.densify(self.sparse_bracket(self.sparsify(z), self.sparsify(w)))

    def bracket_matrices(self, z: ExactMatrix, w: ExactMatrix) -> Element:
        """ZW - WZ re-expressed in the basis."""
        return self.coordinates(z.bracket(w))

    def ad_columns(self, z: Sequence[ExactScalar]) -> List[Sparse]:
        zs = self.sparsify(z)
        return [self.sparse_bracket(zs, {j: ExactScalar(1)}) for j in range(self.dim)]

    def ad(self, z: Sequence[ExactScalar]) -> List[List[ExactScalar]]:
        """Matrix of ad(z) in the realization basis."""
        columns = self.ad_columns(z)
        rows = [[ExactScalar(0)] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def cartan_operator(self, k: int) -> List[List[ExactScalar]]:
        """Matrix of ad(h_k) on g_C; h_k may lie outside the basis span."""
        if k not in self._cartan_operators:
            h = self.cartan_elements[k]
            rows = [[ExactScalar(0)] * self.dim for _ in range(self.dim)]
            for j, b in enumerate(self.basis):
                for i, c in self.sparse_coordinates(h.bracket(b)).items():
                    rows[i][j] = c
            self._cartan_operators[k] = rows
        return self._cartan_operators[k]

    # invariant forms
    def killing_form(self, z: Sequence[ExactScalar], w: Sequence[ExactScalar]) -> ExactScalar:
        """trace(ad z o ad w)."""
        ad_z = self.ad_columns(z)
        ad_w = self.ad_columns(w)
        total = ExactScalar(0)
        for j, column in enumerate(ad_w):
            for k, c in column.items():
                entry = ad_z[k].get(j)
                if entry is not None:
                    total = total + entry * c
        return total

    def hermitian_form(self, z: Sequence[ExactScalar], w: Sequence[ExactScalar]) -> ExactScalar:
        """<z, w> = -B(z, tau(w)); linear in z, conjugate-linear in w."""
        return -self.killing_form(z, self.tau(w))

    # conjugations on coordinates
    def theta(self, z: Sequence[ExactScalar]) -> Element:
        return self.coordinates(self.theta_matrix(self.to_matrix(z)))

    def sigma(self, z: Sequence[ExactScalar]) -> Element:
        return self.coordinates(self.sigma_matrix(self.to_matrix(z)))

    def tau(self, z: Sequence[ExactScalar]) -> Element:
        return self.coordinates(self.tau_matrix(self.to_matrix(z)))

    def in_k(self, z: Sequence[ExactScalar]) -> bool:
        return all(z[i].is_zero() for i in self.p_indices)

    def in_p(self, z: Sequence[ExactScalar]) -> bool:
        return all(z[i].is_zero() for i in self.k_indices)

    # Weyl frame data
    def nu_matrix(self, z: ExactMatrix) -> ExactMatrix:
        """Weyl involution nu(Z) = -M Z^T M^-1."""
        return -(self._weyl_form.mul_mat(z.transpose()).mul_mat(self._weyl_form_inverse))

    def nu(self, z: Sequence[ExactScalar]) -> Element:
        return self.coordinates(self.nu_matrix(self.to_matrix(z)))

    def chevalley_matrices(self) -> List[Tuple[int, int, ExactMatrix]]:
        """X_ab = P E_ab P^-1 for every a != b of the Weyl frame."""
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if a != b:
                    out.append((a, b, self.frame.from_frame(ExactMatrix.unit(self.n, a, b))))
        return out

    def chevalley_cartan(self, a: int, b: int) -> ExactMatrix:
        """H_ab = P (E_aa - E_bb) P^-1."""
        diag = ExactMatrix(self.n, {(a, a): ExactScalar(1), (b, b): ExactScalar(-1)})
        return self.frame.from_frame(diag)

    # weights
    def weight_decomposition(
        self, vectors: Sequence[Sequence[ExactScalar]]
    ) -> Dict[Weight, List[Element]]:
        """
        Splits a Cartan-invariant subspace into joint eigenspaces of the
        Cartan elements. Keys are integer weight coordinates.
        """
        if not vectors:
            return {}
        pieces: List[Tuple[Weight, List[Element]]] = [((), [tuple(v) for v in vectors])]
        for k in range(self.weight_rank):
            operator = self.cartan_operator(k)
            refined: List[Tuple[Weight, List[Element]]] = []
            for weight, basis in pieces:
                local = linalg.restrict(operator, basis, self.dim)
                for value, eigvecs in sorted(linalg.integer_eigenspaces(local).items()):
                    vecs = [tuple(linalg.combine(c, basis, self.dim)) for c in eigvecs]
                    refined.append((weight + (value,), vecs))
            pieces = refined
        return dict(pieces)

    def weight_of(self, z: Sequence[ExactScalar]) -> Optional[Weight]:
        """Weight of a joint eigenvector of the Cartan elements, or None if it is not one."""
        zs = self.sparsify(z)
        if not zs:
            return None
        pivot, value = next(iter(zs.items()))
        weight = []
        for k in range(self.weight_rank):
            image = linalg.mat_vec(self.cartan_operator(k), z)
            eigen = image[pivot] / value
            if not eigen.is_integer():
                return None
            if any(image[i] != eigen * z[i] for i in range(self.dim)):
                return None
            weight.append(int(eigen.re))
        return tuple(weight)


class SplitLinearRealization(AlgebraRealization):
    """
    sl(n, R) complexified: k_C = so(n, C), p_C = symmetric traceless.

    theta(Z) = -Z^T, sigma(Z) = conj(Z), tau(Z) = -conj(Z)^T.
    """

    def __init__(self, descriptor: RealFormDescriptor) -> None:
        n = descriptor.n
        k_basis = []
        p_basis = []
        for a in range(n):
            for b in range(a + 1, n):
                k_basis.append(ExactMatrix(n, {(a, b): ExactScalar(1), (b, a): ExactScalar(-1)}))
                p_basis.append(ExactMatrix(n, {(a, b): ExactScalar(1), (b, a): ExactScalar(1)}))
        for a in range(n - 1):
            p_basis.append(ExactMatrix(n, {(a, a): ExactScalar(1), (a + 1, a + 1): ExactScalar(-1)}))

        # T_k = i(E_{2k-1,2k} - E_{2k,2k-1}) spans the standard Cartan of k_C
        i = ExactScalar(0, 1)
        cartan_elements = [
            ExactMatrix(n, {(2 * k, 2 * k + 1): i, (2 * k + 1, 2 * k): -i})
            for k in range(n // 2)
        ]
        super().__init__(descriptor, k_basis, p_basis, cartan_elements, _split_weyl_frame(n))

    def theta_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return -z.transpose()

    def sigma_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return z.conjugate()

    def tau_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return -z.adjoint()


def _split_weyl_frame(n: int) -> BasisFrame:
    """
    Columns u_k = e_{2k-1} - i e_{2k} (T_k-eigenvalue +1) and
    v_k = (e_{2k-1} + i e_{2k}) / 2 (eigenvalue -1), then e_n for odd n.
    With this scaling M = P P^T squares to the identity, so nu commutes
    with theta.
    """
    half = ExactScalar(1, 0) / 2
    i = ExactScalar(0, 1)
    entries: Dict[Entry, ExactScalar] = {}
    col = 0
    for k in range(n // 2):
        s, t = 2 * k, 2 * k + 1
        entries[(s, col)] = ExactScalar(1)
        entries[(t, col)] = -i
        entries[(s, col + 1)] = half
        entries[(t, col + 1)] = i * half
        col += 2
    if n % 2:
        entries[(n - 1, col)] = ExactScalar(1)
    return BasisFrame(ExactMatrix(n, entries))


class SpecialUnitaryRealization(AlgebraRealization):
    """
    su(p, q) complexified inside sl(p+q, C): k_C = s(gl_p + gl_q) and p_C is
    the pair of off-diagonal blocks.

    theta(Z) = I_pq Z I_pq, sigma(Z) = -I_pq Z* I_pq, tau(Z) = -Z*.
    """

    def __init__(self, descriptor: RealFormDescriptor) -> None:
        p, n = descriptor.p, descriptor.matrix_size
        self.signature = ExactMatrix.diagonal([1] * p + [-1] * descriptor.q)

        def same_block(a: int, b: int) -> bool:
            return (a < p) == (b < p)

        k_basis = [
            ExactMatrix.unit(n, a, b)
            for a in range(n)
            for b in range(n)
            if a != b and same_block(a, b)
        ]
        k_basis += [
            ExactMatrix(n, {(a, a): ExactScalar(1), (a + 1, a + 1): ExactScalar(-1)})
            for a in range(n - 1)
        ]
        p_basis = [
            ExactMatrix.unit(n, a, b)
            for a in range(n)
            for b in range(n)
            if not same_block(a, b)
        ]
        cartan_elements = [ExactMatrix.unit(n, a, a) for a in range(n)]
        super().__init__(descriptor, k_basis, p_basis, cartan_elements, BasisFrame.identity(n))

    def theta_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return self.signature.mul_mat(z).mul_mat(self.signature)

    def sigma_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return -(self.signature.mul_mat(z.adjoint()).mul_mat(self.signature))

    def tau_matrix(self, z: ExactMatrix) -> ExactMatrix:
        return -z.adjoint()


@lru_cache(maxsize=None)
def build_real_form(descriptor: RealFormDescriptor) -> AlgebraRealization:
    """
    Builds (once per descriptor) the realization of a real form.
    """
    if descriptor.family == SL_R:
        return SplitLinearRealization(descriptor)
    if descriptor.family == SU:
        return SpecialUnitaryRealization(descriptor)
    raise DescriptorError(f"unknown real form family '{descriptor.family}'")


def killing_gram(
    realization: AlgebraRealization,
    vectors: Optional[Sequence[Sequence[ExactScalar]]] = None,
) -> List[List[ExactScalar]]:
    """Gram matrix of the Killing form on the given vectors (default: the basis)."""
    if vectors is None:
        vectors = [realization.basis_element(i) for i in range(realization.dim)]
    return [[realization.killing_form(z, w) for w in vectors] for z in vectors]


def hermitian_gram(
    realization: AlgebraRealization,
    vectors: Optional[Sequence[Sequence[ExactScalar]]] = None,
) -> List[List[ExactScalar]]:
    """Gram matrix G[i][j] = <v_i, v_j> of the invariant Hermitian form."""
    if vectors is None:
        vectors = [realization.basis_element(i) for i in range(realization.dim)]
    return [[realization.hermitian_form(z, w) for w in vectors] for z in vectors]


def is_positive_definite(gram: Sequence[Sequence[ExactScalar]]) -> bool:
    return linalg.is_positive_definite(gram)
