"""
The K-type lattice of a small spherical orbit closure: the monoid of
dominant weights sum m_i gamma_i, with multiplicity equal to the number
of generator monomials of each weight.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from engine.errors import ConsistencyError, InputError
from engine.lie.realization import Weight
from engine.lie.roots import RootDatum, all_ktypes_self_dual, dual_ktype, is_dominant
from engine.math import linalg
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)


def max_norm(weight: Sequence[int]) -> int:
    return max((abs(c) for c in weight), default=0)


@dataclass(frozen=True)
class KTypeLattice:
    """
    Generator weights gamma_1..gamma_r living in weight coordinates of
    length `dimension`.
    """

    generators: Tuple[Weight, ...]
    dimension: int

    def __post_init__(self) -> None:
        for g in self.generators:
            if len(g) != self.dimension:
                raise InputError(f"generator {g} has length {len(g)}, expected {self.dimension}")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def zero(self) -> Weight:
        return tuple([0] * self.dimension)

    @staticmethod
    def from_weights(weights: Sequence[Sequence[int]], dimension: int) -> KTypeLattice:
        return KTypeLattice(tuple(tuple(int(c) for c in w) for w in weights), dimension)

    def to_json(self) -> Dict[str, Any]:
        return {"generators": [list(g) for g in self.generators]}

    # positive functional
    def _functional(self) -> List[Fraction]:
        """
        A linear form phi with phi(gamma_i) > 0 for every generator; it
        bounds the exponents of any monomial of a given weight.
        """
        if any(all(c == 0 for c in g) for g in self.generators):
            raise ConsistencyError("degenerate lattice: a generator weight is zero")
        if not self.generators:
            return [Fraction(0)] * self.dimension

        rows = [[ExactScalar(c) for c in g] for g in self.generators]
        phi = linalg.solve(rows, [ExactScalar(1)] * self.rank, self.dimension)
        if phi is not None:
            return [c.re for c in phi]

        candidates = [[Fraction(sum(g[k] for g in self.generators)) for k in range(self.dimension)]]
        for k in range(self.dimension):
            for sign in (1, -1):
                candidates.append([Fraction(sign * int(j == k)) for j in range(self.dimension)])
        for phi in candidates:
            if all(_dot(phi, g) > 0 for g in self.generators):
                return phi
        raise ConsistencyError("degenerate lattice: no positive functional on the generators")

    def _exponents_up_to(self, budget: Fraction) -> List[Tuple[int, ...]]:
        phi = self._functional()
        values = [_dot(phi, g) for g in self.generators]
        out: List[Tuple[int, ...]] = []

        def extend(i: int, prefix: List[int], used: Fraction) -> None:
            if i == self.rank:
                out.append(tuple(prefix))
                return
            m = 0
            while used + m * values[i] <= budget:
                extend(i + 1, prefix + [m], used + m * values[i])
                m += 1

        extend(0, [], Fraction(0))
        return out

    def point(self, exponents: Sequence[int]) -> Weight:
        return tuple(
            sum(m * g[k] for m, g in zip(exponents, self.generators)) for k in range(self.dimension)
        )

    def _norm_budget(self, bound: int) -> Fraction:
        phi = self._functional()
        return bound * sum(abs(c) for c in phi)


def _dot(phi: Sequence[Fraction], weight: Sequence[int]) -> Fraction:
    return sum((c * w for c, w in zip(phi, weight)), Fraction(0))


def multiplicity(lattice: KTypeLattice, weight: Sequence[int]) -> int:
    """#{m in N^r : sum m_i gamma_i = weight}."""
    weight = tuple(int(c) for c in weight)
    if len(weight) != lattice.dimension:
        raise InputError(f"weight {weight} has length {len(weight)}, expected {lattice.dimension}")
    if lattice.rank == 0:
        return int(weight == lattice.zero)
    phi = lattice._functional()
    budget = _dot(phi, weight)
    if budget < 0:
        return 0
    return sum(1 for m in lattice._exponents_up_to(budget) if lattice.point(m) == weight)


def enumerate_ktypes(lattice: KTypeLattice, bound: int) -> List[Tuple[Weight, int]]:
    """
    All lattice points with max-norm <= bound and their multiplicities,
    sorted by weight.
    """
    if bound < 0:
        raise InputError("enumeration bound must be non-negative")
    if lattice.rank == 0:
        return [(lattice.zero, 1)]
    counts: Dict[Weight, int] = {}
    for m in lattice._exponents_up_to(lattice._norm_budget(bound)):
        p = lattice.point(m)
        if max_norm(p) <= bound:
            counts[p] = counts.get(p, 0) + 1
    return sorted(counts.items())


def self_dual_check(lattice: KTypeLattice, rd: RootDatum, bound: int) -> bool:
    """
    m(lambda) = m(-w0 lambda) for every lattice point up to the bound,
    cross-checked against stability of the generator multiset under -w0.
    """
    duals = [dual_ktype(rd, g) for g in lattice.generators]
    needed = max([max_norm(g) for g in lattice.generators] + [max_norm(d) for d in duals], default=0)
    if bound < needed:
        raise InputError(f"bound {bound} does not reach every generator and its dual (need {needed})")

    stable = sorted(duals) == sorted(lattice.generators)
    matches = True
    for weight, count in enumerate_ktypes(lattice, bound):
        if multiplicity(lattice, dual_ktype(rd, weight)) != count:
            matches = False
            break

    if stable != matches:
        raise ConsistencyError(
            f"generator duality ({stable}) and multiplicity duality ({matches}) disagree"
        )
    if all_ktypes_self_dual(rd) and not matches:
        raise ConsistencyError("-w0 is the identity but the multiplicities are not self dual")
    logger.debug("self duality up to norm %d: %s", bound, matches)
    return matches


def shifted_lattice(
    lattice: KTypeLattice, mu: Sequence[int], bound: int, rd: Optional[RootDatum] = None
) -> List[Weight]:
    """
    mu + sum m_i gamma_i with max-norm <= bound: the K-types forced into a
    module containing the K-type mu whose associated variety is the orbit
    closure.
    """
    mu = tuple(int(c) for c in mu)
    if len(mu) != lattice.dimension:
        raise InputError(f"weight {mu} has length {len(mu)}, expected {lattice.dimension}")
    if rd is not None and not is_dominant(rd, mu):
        raise InputError(f"lowest K-type {mu} is not dominant")
    if bound < 0:
        raise InputError("enumeration bound must be non-negative")
    reach = bound + max_norm(mu)
    out = set()
    for weight, _ in enumerate_ktypes(lattice, reach):
        shifted = tuple(a + b for a, b in zip(mu, weight))
        if max_norm(shifted) <= bound:
            out.add(shifted)
    return sorted(out)
