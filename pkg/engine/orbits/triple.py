from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from engine.errors import ConsistencyError, InputError
from engine.lie.realization import AlgebraRealization, Element
from engine.math import linalg
from engine.math.mat import Entry, ExactMatrix
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalTriple:
    """
    {x, e, f} with x in k_C, e and f in p_C, [x,e] = 2e, [x,f] = -2f and
    [e,f] = x. Stored as basis coordinates.
    """

    x: Element
    e: Element
    f: Element

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.e)

    def check(self, realization: AlgebraRealization) -> bool:
        r = realization
        two = ExactScalar(2)
        return (
            r.bracket(self.x, self.e) == tuple(two * c for c in self.e)
            and r.bracket(self.x, self.f) == tuple(-two * c for c in self.f)
            and r.bracket(self.e, self.f) == tuple(self.x)
            and r.in_k(self.x)
            and r.in_p(self.e)
            and r.in_p(self.f)
        )

    def to_json(self, realization: AlgebraRealization) -> Dict[str, list]:
        return {
            name: realization.to_matrix(value).to_json()
            for name, value in (("x", self.x), ("e", self.e), ("f", self.f))
        }


def _solve_blocks(
    columns: List[Tuple[ExactMatrix, ...]], rhs: Tuple[ExactMatrix, ...]
) -> Optional[List[ExactScalar]]:
    """
    Solves sum_u c_u columns[u][b] = rhs[b] for every block b of matrix
    equations, one linear equation per matrix entry.
    """
    rows: List[List[ExactScalar]] = []
    values: List[ExactScalar] = []
    for b, target in enumerate(rhs):
        positions: set[Entry] = set(target.entries)
        for col in columns:
            positions.update(col[b].entries)
        for pos in sorted(positions):
            rows.append([col[b].get(*pos) for col in columns])
            values.append(target.get(*pos))
    return linalg.solve(rows, values, len(columns))


def _neutral_in_cartan(r: AlgebraRealization, e: ExactMatrix) -> Optional[ExactMatrix]:
    """
    x = sum c_k h_k with [x, e] = 2e and x = [e, z] for some z in p_C.
    """
    n = r.n
    zero = ExactMatrix(n)
    p_basis = [r.basis[i] for i in r.p_indices]
    columns = [(h.bracket(e), h) for h in r.cartan_elements]
    columns += [(zero, -e.bracket(b)) for b in p_basis]
    solution = _solve_blocks(columns, (e.scale(2), zero))
    if solution is None:
        return None
    x = zero
    for c, h in zip(solution, r.cartan_elements):
        x = x + h.scale(c)
    return x


def _neutral_in_k(r: AlgebraRealization, e: ExactMatrix) -> Optional[ExactMatrix]:
    """General fallback: x in k_C cap [e, p_C] with [x, e] = 2e."""
    n = r.n
    zero = ExactMatrix(n)
    k_basis = [r.basis[i] for i in r.k_indices]
    p_basis = [r.basis[i] for i in r.p_indices]
    columns = [(b.bracket(e), b) for b in k_basis]
    columns += [(zero, -e.bracket(b)) for b in p_basis]
    solution = _solve_blocks(columns, (e.scale(2), zero))
    if solution is None:
        return None
    x = zero
    for c, b in zip(solution, k_basis):
        x = x + b.scale(c)
    return x


def _nilnegative(r: AlgebraRealization, e: ExactMatrix, x: ExactMatrix) -> Optional[ExactMatrix]:
    """f in p_C with [e, f] = x and [x, f] = -2f."""
    n = r.n
    p_basis = [r.basis[i] for i in r.p_indices]
    columns = [(e.bracket(b), x.bracket(b) + b.scale(2)) for b in p_basis]
    solution = _solve_blocks(columns, (x, ExactMatrix(n)))
    if solution is None:
        return None
    f = ExactMatrix(n)
    for c, b in zip(solution, p_basis):
        f = f + b.scale(c)
    return f


def complete_to_normal_triple(realization: AlgebraRealization, e: Sequence[ExactScalar]) -> NormalTriple:
    """
    Completes a nilpotent e in p_C to a normal triple.

    Steps:
    1. look for x in the standard Cartan t_C (unique when it exists)
    2. otherwise fall back to a general x in k_C cap [e, p_C]
    3. solve for f; check every triple relation exactly
    """
    r = realization
    e = tuple(e)
    if not r.in_p(e):
        raise InputError("e is not in p_C")
    if all(c.is_zero() for c in e):
        return NormalTriple(r.zero(), r.zero(), r.zero())

    em = r.to_matrix(e)
    x = _neutral_in_cartan(r, em)
    if x is None:
        logger.info("no neutral element in the standard Cartan; using a general x in k_C")
        x = _neutral_in_k(r, em)
    if x is None:
        raise InputError("e is not a nilpotent element of p_C: no normal triple exists")

    f = _nilnegative(r, em, x)
    if f is None:
        raise InputError("e is not a nilpotent element of p_C: no f completes the triple")

    triple = NormalTriple(r.coordinates(x), e, r.coordinates(f))
    if not triple.check(r):
        raise ConsistencyError("computed triple violates the normal triple relations")
    return triple
