"""
The ad(x)-eigenspace grading of g_C = k_C + p_C and the subspaces built
from it: V, V~ = V cap p_C, q_C, l_C, u_C and u(l_k).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from engine.errors import GradingError
from engine.lie.realization import AlgebraRealization, Element
from engine.lie.roots import RootDatum
from engine.math import linalg
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdGrading:
    realization: AlgebraRealization
    x: Element
    k_spaces: Dict[int, List[Element]]
    p_spaces: Dict[int, List[Element]]
    u_lk: List[Element] = field(default_factory=list)

    def k(self, j: int) -> List[Element]:
        return self.k_spaces.get(j, [])

    def p(self, j: int) -> List[Element]:
        return self.p_spaces.get(j, [])

    def g(self, j: int) -> List[Element]:
        return self.k(j) + self.p(j)

    @property
    def degrees(self) -> List[int]:
        return sorted(set(self.k_spaces) | set(self.p_spaces))

    def _collect(self, spaces: Dict[int, List[Element]], keep) -> List[Element]:
        return [v for j in sorted(spaces) if keep(j) for v in spaces[j]]

    # derived subspaces
    @property
    def V(self) -> List[Element]:
        return self._collect(self.k_spaces, lambda j: j >= 2) + self.V_tilde

    @property
    def V_tilde(self) -> List[Element]:
        return self._collect(self.p_spaces, lambda j: j >= 2)

    @property
    def q(self) -> List[Element]:
        return self.q_k + self._collect(self.p_spaces, lambda j: j >= 0)

    @property
    def q_k(self) -> List[Element]:
        return self._collect(self.k_spaces, lambda j: j >= 0)

    @property
    def l(self) -> List[Element]:
        return self.g(0)

    @property
    def l_k(self) -> List[Element]:
        return self.k(0)

    @property
    def u(self) -> List[Element]:
        return self.u_k + self._collect(self.p_spaces, lambda j: j > 0)

    @property
    def u_k(self) -> List[Element]:
        return self._collect(self.k_spaces, lambda j: j > 0)

    def dimensions(self) -> Dict[str, Dict[str, int]]:
        """dim g/k/p(x;j) keyed by j as a string."""
        return {
            str(j): {
                "g": len(self.g(j)),
                "k": len(self.k(j)),
                "p": len(self.p(j)),
            }
            for j in self.degrees
        }


def _eigenspaces(
    realization: AlgebraRealization, ad_x: List[List[ExactScalar]], indices: Sequence[int]
) -> Dict[int, List[Element]]:
    block = [[ad_x[i][j] for j in indices] for i in indices]
    spaces = linalg.integer_eigenspaces(block)
    out: Dict[int, List[Element]] = {}
    for value, vectors in sorted(spaces.items()):
        embedded = []
        for v in vectors:
            full = [ExactScalar(0)] * realization.dim
            for local, i in enumerate(indices):
                full[i] = v[local]
            embedded.append(tuple(full))
        out[value] = embedded
    return out


def grade(
    realization: AlgebraRealization, x: Sequence[ExactScalar], rd: Optional[RootDatum] = None
) -> AdGrading:
    """
    Eigenspace decomposition of ad(x) on k_C and on p_C separately.
    With a root datum, u(l_k) is filled in from its positive system.
    """
    x = tuple(x)
    if not realization.in_k(x):
        raise GradingError("grading element must lie in k_C")
    ad_x = realization.ad(x)
    k_spaces = _eigenspaces(realization, ad_x, realization.k_indices)
    p_spaces = _eigenspaces(realization, ad_x, realization.p_indices)
    grading = AdGrading(
        realization=realization,
        x=x,
        k_spaces=k_spaces,
        p_spaces=p_spaces,
        u_lk=rd.u_lk if rd is not None else [],
    )
    logger.debug("grading dimensions %s", grading.dimensions())
    return grading


def height(g: AdGrading) -> int:
    """Largest j with g_C(x;j) != 0."""
    return max((j for j in g.degrees if g.g(j)), default=0)


def is_small(g: AdGrading) -> bool:
    return all(not g.p(j) for j in g.degrees if j > 2)


def bracket_compatible(g: AdGrading) -> bool:
    """[g(x;i), g(x;j)] lies in g(x;i+j) for every populated pair."""
    r = g.realization
    for i in g.degrees:
        for j in g.degrees:
            for a in g.g(i):
                for b in g.g(j):
                    product = r.bracket(a, b)
                    # membership in g(x;i+j) is the eigen-equation for ad(x)
                    expected = tuple(c * (i + j) for c in product)
                    if r.bracket(g.x, product) != expected:
                        return False
    return True
