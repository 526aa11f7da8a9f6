"""
Highest-weight vectors of S[V~] for the Levi nilradical u(l_k).

The variables are a weight basis v_1..v_d of V~ = p_C(x;2) on a small
orbit. Each root vector X of u(l_k) acts on polynomials in the v_i as the
derivation extending v_i -> [X, v_i]; the kernel of the simple-root
derivations is computed one weight block at a time.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from engine.errors import ConsistencyError
from engine.lie.realization import AlgebraRealization, Element, Weight
from engine.lie.roots import RootDatum
from engine.math import linalg
from engine.math.mat import ExactMatrix
from engine.math.scalar import ExactScalar
from engine.invariants.polynomial import (
    Monomial,
    WeightedPolynomial,
    symmetric_power_basis,
)
from engine.orbits.grading import AdGrading

logger = logging.getLogger(__name__)

Derivation = List[List[ExactScalar]]


@dataclass(frozen=True)
class VariableBasis:
    """
    Weight basis v_i of V~ with Killing-dual partners w_i in p_C(x;-2),
    B(v_i, w_j) = delta_ij.
    """

    vectors: Tuple[Element, ...]
    matrices: Tuple[ExactMatrix, ...]
    weights: Tuple[Weight, ...]
    duals: Tuple[Element, ...]
    rank: int

    @property
    def nvars(self) -> int:
        return len(self.vectors)


def _canonical_basis(r: AlgebraRealization, vectors: Sequence[Element]) -> List[Element]:
    """
    Row-reduces the matrices of a subspace basis, so every vector has a
    1 as its first non-zero entry (row-major) and the basis is canonical.
    """
    positions = sorted({pos for v in vectors for pos in r.to_matrix(v).entries})
    rows = []
    for v in vectors:
        m = r.to_matrix(v)
        rows.append([m.get(*pos) for pos in positions])
    reduced, pivots = linalg.rref(rows, len(positions))
    out = []
    for row in reduced[: len(pivots)]:
        entries = {pos: value for pos, value in zip(positions, row) if not value.is_zero()}
        out.append(r.coordinates(ExactMatrix(r.n, entries)))
    return out


def variable_basis(grading: AdGrading, rd: RootDatum) -> VariableBasis:
    r = grading.realization
    spaces = r.weight_decomposition(grading.V_tilde)
    vectors: List[Element] = []
    weights: List[Weight] = []
    for weight in sorted(spaces, reverse=True):
        for v in _canonical_basis(r, spaces[weight]):
            vectors.append(v)
            weights.append(weight)

    duals = _killing_duals(r, vectors, grading.p(-2))
    for v, w, weight in zip(vectors, duals, weights):
        image = r.nu(w)
        if not linalg.in_span(grading.V_tilde, image, r.dim) or r.weight_of(image) != weight:
            raise ConsistencyError(
                f"Weyl involution does not carry the dual of weight {weight} back into V~"
            )

    return VariableBasis(
        vectors=tuple(vectors),
        matrices=tuple(r.to_matrix(v) for v in vectors),
        weights=tuple(weights),
        duals=tuple(duals),
        rank=rd.rank,
    )


def _killing_duals(
    r: AlgebraRealization, vectors: List[Element], opposite: List[Element]
) -> List[Element]:
    if len(vectors) != len(opposite):
        raise ConsistencyError(
            f"dim V~ = {len(vectors)} but dim p(x;-2) = {len(opposite)}"
        )
    if not vectors:
        return []
    gram = [[r.killing_form(v, b) for b in opposite] for v in vectors]
    if linalg.det(gram).is_zero():
        raise ConsistencyError("Killing form does not pair p(x;2) with p(x;-2)")
    inverse = linalg.inverse(gram)
    d = len(vectors)
    return [
        tuple(linalg.combine([inverse[k][j] for k in range(d)], opposite, r.dim))
        for j in range(d)
    ]


def evaluate_as_function(
    poly: WeightedPolynomial, variables: VariableBasis, z: ExactMatrix
) -> ExactScalar:
    """Evaluates a polynomial on p_C through v -> (Z -> trace(v Z))."""
    point = [m.mul_mat(z).trace() for m in variables.matrices]
    return poly.evaluate(point)


def derivations(grading: AdGrading, rd: RootDatum, variables: VariableBasis) -> List[Tuple[Weight, Derivation]]:
    """
    One matrix per simple root of u(l_k): column i holds [X_alpha, v_i] in
    the variable basis.
    """
    r = grading.realization
    out = []
    for alpha in rd.levi_simple_roots():
        x_alpha = rd.roots[alpha]
        images = [r.bracket(x_alpha, v) for v in variables.vectors]
        columns = linalg.coordinates_many(list(variables.vectors), images, r.dim)
        if columns is None:
            raise ConsistencyError(f"u(l_k) root vector {alpha} does not preserve V~")
        d = variables.nvars
        out.append((alpha, [[columns[j][i] for j in range(d)] for i in range(d)]))
    return out


def apply_derivation(matrix: Derivation, poly: WeightedPolynomial) -> WeightedPolynomial:
    """
    Leibniz extension of v_i -> sum_j matrix[j][i] v_j:
    D(p) = sum_i D(v_i) dp/dv_i.
    """
    ring = poly.ring
    result = ring.zero
    for i, v in enumerate(ring.gens):
        image = ring.from_dict(
            {
                tuple(int(k == j) for k in range(ring.ngens)): row[i].value
                for j, row in enumerate(matrix)
                if not row[i].is_zero()
            }
        )
        if image:
            result += poly.element.diff(v) * image
    return WeightedPolynomial.from_element(result, poly.degree)


def _group_by_weight(monomials: List[Monomial]) -> Dict[Weight, List[Monomial]]:
    blocks: Dict[Weight, List[Monomial]] = {}
    for m in monomials:
        blocks.setdefault(m.weight, []).append(m)
    return blocks


def _block_kernel(
    block: List[Monomial], ders: List[Tuple[Weight, Derivation]], nvars: int
) -> List[List[ExactScalar]]:
    if not ders:
        return [linalg.unit_vector(len(block), i) for i in range(len(block))]
    images = [
        [apply_derivation(matrix, WeightedPolynomial.monomial(nvars, m.exponents)) for _, matrix in ders]
        for m in block
    ]
    targets = sorted(
        {(k, exps) for per_monomial in images for k, img in enumerate(per_monomial) for exps in img.terms}
    )
    index = {t: row for row, t in enumerate(targets)}
    rows = [[ExactScalar(0)] * len(block) for _ in targets]
    for col, per_monomial in enumerate(images):
        for k, img in enumerate(per_monomial):
            for exps, c in img.terms.items():
                rows[index[(k, exps)]][col] = c
    if not rows:
        return [linalg.unit_vector(len(block), i) for i in range(len(block))]
    return linalg.nullspace(rows, len(block))


def nilradical_kernel(
    grading: AdGrading,
    rd: RootDatum,
    n: int,
    variables: Optional[VariableBasis] = None,
) -> List[WeightedPolynomial]:
    """
    Basis of the joint kernel in S^n(V~) of the simple-root derivations of
    u(l_k), weight block by weight block (weights descending).
    """
    variables = variables or variable_basis(grading, rd)
    ders = derivations(grading, rd, variables)
    monomials = symmetric_power_basis(variables.weights, n, rd.rank)
    out = []
    for weight, block in sorted(_group_by_weight(monomials).items(), reverse=True):
        for vector in _block_kernel(block, ders, variables.nvars):
            terms = {m.exponents: c for m, c in zip(block, vector)}
            out.append(WeightedPolynomial(variables.nvars, terms, n, weight).normalized())
    logger.debug(
        "degree %d: %d monomials, kernel dimension %d", n, len(monomials), len(out)
    )
    return out


def kernel_dimensions(
    grading: AdGrading, rd: RootDatum, n: int, variables: Optional[VariableBasis] = None
) -> Dict[Weight, int]:
    counts: Dict[Weight, int] = {}
    for poly in nilradical_kernel(grading, rd, n, variables):
        counts[poly.weight] = counts.get(poly.weight, 0) + 1
    return counts


def is_annihilated(poly: WeightedPolynomial, ders: List[Tuple[Weight, Derivation]]) -> bool:
    return all(apply_derivation(matrix, poly).is_zero() for _, matrix in ders)
