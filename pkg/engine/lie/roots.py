"""
Root data of (k_C, t_C) with a positive system making the grading
element dominant, the Chevalley basis of g_C relative to the Weyl frame,
the longest Weyl group element and the Weyl involution.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from engine.errors import CartanError, ConsistencyError, GradingError, InputError
from engine.lie.realization import AlgebraRealization, Element, Weight
from engine.math import linalg
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)

Rational = Fraction
WeylMatrix = List[List[int]]


def pairing(a: Sequence, b: Sequence) -> Fraction:
    """Standard dot product on weight coordinates."""
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def reflect(weight: Sequence, root: Sequence) -> Tuple[Fraction, ...]:
    """s_alpha(lambda) = lambda - 2 <lambda, alpha> / <alpha, alpha> alpha."""
    factor = 2 * pairing(weight, root) / pairing(root, root)
    return tuple(Fraction(w) - factor * r for w, r in zip(weight, root))


@dataclass(frozen=True)
class ChevalleyElement:
    """
    X_ab, X_ba and H_ab for a < b in the Weyl frame; the root is
    e_a - e_b on the frame diagonal.
    """

    a: int
    b: int
    x_positive: Element
    x_negative: Element
    h: Element


class RootDatum:
    """
    Root system of (k_C, t_C) with the positive system fixed by x.

    A root is positive when (alpha(x), alpha(v_reg)) is lexicographically
    positive, v_reg = (r, r-1, ..., 1).
    """

    def __init__(self, realization: AlgebraRealization, x: Element) -> None:
        self.realization = realization
        self.x = tuple(x)
        self.rank = realization.weight_rank
        self.xi = self._weight_coordinates_of_x()
        self.regular: Tuple[int, ...] = tuple(range(self.rank, 0, -1))

        decomposition = realization.weight_decomposition(
            [realization.basis_element(i) for i in realization.k_indices]
        )
        zero = tuple([0] * self.rank)
        self.cartan: List[Element] = decomposition.get(zero, [])
        self.roots: Dict[Weight, Element] = {}
        for weight, vectors in decomposition.items():
            if weight == zero:
                continue
            if len(vectors) != 1:
                raise ConsistencyError(f"root space {weight} has dimension {len(vectors)}")
            self.roots[weight] = vectors[0]

        for root in self.roots:
            value = self.x_value(root)
            if value.denominator != 1:
                raise GradingError(f"root {root} takes non-integer value {value} on x")

        self.positive_roots: List[Weight] = sorted(
            (r for r in self.roots if self._is_positive(r)), reverse=True
        )
        self.negative_roots: List[Weight] = sorted(
            (r for r in self.roots if not self._is_positive(r)), reverse=True
        )
        positive = set(self.positive_roots)
        self.simple_roots: List[Weight] = [
            r
            for r in self.positive_roots
            if not any(
                tuple(a - b for a, b in zip(r, s)) in positive for s in self.positive_roots
            )
        ]
        self.chevalley: List[ChevalleyElement] = self._chevalley_basis()

        logger.debug(
            "root datum for %s: %d roots, simple %s",
            realization.name, len(self.roots), self.simple_roots,
        )

    def _weight_coordinates_of_x(self) -> Tuple[Fraction, ...]:
        r = self.realization
        if not r.in_k(self.x):
            raise CartanError("grading element is not in k_C")
        positions = sorted({pos for h in r.cartan_elements for pos in h.entries})
        xm = r.to_matrix(self.x)
        if any(pos not in positions for pos in xm.entries):
            raise CartanError(
                "grading element is not in the standard Cartan of k_C; "
                "use catalog constructions, which produce x in the standard Cartan"
            )
        cartan_vectors = [[h.get(*pos) for pos in positions] for h in r.cartan_elements]
        target = [xm.get(*pos) for pos in positions]
        coords = linalg.coordinates_in(cartan_vectors, target, len(positions))
        if coords is None:
            raise CartanError(
                "grading element is not in the standard Cartan of k_C; "
                "use catalog constructions, which produce x in the standard Cartan"
            )
        if any(not c.is_real() for c in coords):
            raise GradingError("grading element has non-real weight coordinates")
        return tuple(c.re for c in coords)

    # queries
    def x_value(self, weight: Sequence) -> Fraction:
        """<weight, x>, the eigenvalue of ad(x) on that weight."""
        return pairing(weight, self.xi)

    def _is_positive(self, root: Weight) -> bool:
        return (self.x_value(root), pairing(root, self.regular)) > (0, 0)

    def root_vector(self, root: Weight) -> Element:
        return self.roots[root]

    @property
    def n_k(self) -> List[Element]:
        return [self.roots[r] for r in self.positive_roots]

    @property
    def borel(self) -> List[Element]:
        return list(self.cartan) + self.n_k

    @property
    def dim_borel(self) -> int:
        return len(self.cartan) + len(self.positive_roots)

    def levi_positive_roots(self) -> List[Weight]:
        """Positive roots vanishing on x: the nilradical u(l_k) of l_C cap k_C."""
        return [r for r in self.positive_roots if self.x_value(r) == 0]

    def levi_simple_roots(self) -> List[Weight]:
        levi = self.levi_positive_roots()
        levi_set = set(levi)
        return [
            r
            for r in levi
            if not any(tuple(a - b for a, b in zip(r, s)) in levi_set for s in levi)
        ]

    @property
    def u_lk(self) -> List[Element]:
        return [self.roots[r] for r in self.levi_positive_roots()]

    def _chevalley_basis(self) -> List[ChevalleyElement]:
        r = self.realization
        out = []
        n = r.n
        matrices = {(a, b): m for a, b, m in r.chevalley_matrices()}
        for a in range(n):
            for b in range(a + 1, n):
                out.append(
                    ChevalleyElement(
                        a=a,
                        b=b,
                        x_positive=r.coordinates(matrices[(a, b)]),
                        x_negative=r.coordinates(matrices[(b, a)]),
                        h=r.coordinates(r.chevalley_cartan(a, b)),
                    )
                )
        return out


def build_root_datum(realization: AlgebraRealization, x: Sequence[ExactScalar]) -> RootDatum:
    """
    Root datum of (k_C, t_C) with the positive system chosen so x is
    dominant. x must lie in the span of the realization's Cartan elements.
    """
    return RootDatum(realization, tuple(x))


def is_dominant(rd: RootDatum, weight: Sequence) -> bool:
    if len(weight) != rd.rank:
        raise InputError(f"weight {tuple(weight)} has length {len(weight)}, expected {rd.rank}")
    return all(pairing(weight, alpha) >= 0 for alpha in rd.simple_roots)


def _longest_word(rd: RootDatum) -> List[Weight]:
    """
    Reduces 2 rho to its antidominant image by simple reflections.
    """
    rho2: Tuple[Fraction, ...] = tuple(
        sum((Fraction(r[i]) for r in rd.positive_roots), Fraction(0)) for i in range(rd.rank)
    )
    word: List[Weight] = []
    current = rho2
    limit = len(rd.positive_roots) + 1
    while True:
        step = next((a for a in rd.simple_roots if pairing(current, a) > 0), None)
        if step is None:
            break
        current = reflect(current, step)
        word.append(step)
        if len(word) > limit:
            raise ConsistencyError("longest element reduction did not terminate")
    if any(c != -v for c, v in zip(current, rho2)):
        raise ConsistencyError("longest element does not send the positive system to its negative")
    return word


def longest_weyl_element(rd: RootDatum) -> WeylMatrix:
    """
    w0 as an integer matrix acting on weight coordinates (a signed
    permutation for the classical types shipped here).
    """
    word = _longest_word(rd)
    columns = []
    for i in range(rd.rank):
        v: Tuple[Fraction, ...] = tuple(Fraction(int(i == j)) for j in range(rd.rank))
        for alpha in word:
            v = reflect(v, alpha)
        if any(c.denominator != 1 for c in v):
            raise ConsistencyError("w0 is not integral")
        columns.append([int(c) for c in v])
    return [[columns[j][i] for j in range(rd.rank)] for i in range(rd.rank)]


def apply_weyl(matrix: WeylMatrix, weight: Sequence[int]) -> Weight:
    return tuple(sum(row[j] * weight[j] for j in range(len(weight))) for row in matrix)


def dual_ktype(rd: RootDatum, weight: Sequence[int]) -> Weight:
    """lambda* = -w0 lambda for a dominant lambda."""
    if not is_dominant(rd, weight):
        raise InputError(f"weight {tuple(weight)} is not dominant")
    return tuple(-c for c in apply_weyl(longest_weyl_element(rd), weight))


def all_ktypes_self_dual(rd: RootDatum) -> bool:
    """True when -w0 is the identity, so every k-representation is self dual."""
    w0 = longest_weyl_element(rd)
    return all(w0[i][j] == (-1 if i == j else 0) for i in range(rd.rank) for j in range(rd.rank))


class WeylInvolution:
    """
    nu(H_alpha) = -H_alpha, nu(X_alpha) = -X_-alpha on the Chevalley basis,
    i.e. nu(Z) = -M Z^T M^-1 for the Weyl frame form M.
    """

    __slots__ = ("realization",)

    def __init__(self, realization: AlgebraRealization) -> None:
        self.realization = realization

    def __call__(self, z: Sequence[ExactScalar]) -> Element:
        return self.realization.nu(z)


def weyl_involution(rd: RootDatum) -> WeylInvolution:
    return WeylInvolution(rd.realization)
