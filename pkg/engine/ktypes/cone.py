"""
The asymptotic K-support of a small spherical orbit closure, the cone
R+ spanned by the lattice generators, handled exactly by Fourier-Motzkin
elimination.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, List, Sequence, Tuple

from engine.errors import InputError
from engine.lie.realization import Weight
from engine.ktypes.lattice import KTypeLattice

logger = logging.getLogger(__name__)

# coefficients . y <= rhs
Row = Tuple[Tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class Cone:
    rays: Tuple[Weight, ...]
    dimension: int

    def __post_init__(self) -> None:
        for ray in self.rays:
            if len(ray) != self.dimension:
                raise InputError(f"ray {ray} has length {len(ray)}, expected {self.dimension}")

    def contains(self, v: Sequence) -> bool:
        return cone_contains(self, v)

    def to_json(self) -> Dict[str, Any]:
        return {
            "generators": [list(r) for r in self.rays],
            "cone_inequalities": inequalities(self),
        }


def asymptotic_cone(lattice: KTypeLattice) -> Cone:
    return Cone(tuple(lattice.generators), lattice.dimension)


# elimination helpers
def _scaled(row: Row, factor: Fraction) -> Row:
    coeffs, rhs = row
    return tuple(c * factor for c in coeffs), rhs * factor


def _sum(a: Row, b: Row) -> Row:
    return tuple(x + y for x, y in zip(a[0], b[0])), a[1] + b[1]


def _primitive(row: Row) -> Row:
    """Positive rescaling to coprime integers; keeps the inequality direction."""
    coeffs, rhs = row
    values = list(coeffs) + [rhs]
    denominator = lcm(*(v.denominator for v in values))
    ints = [int(v * denominator) for v in values]
    divisor = gcd(*ints) or 1
    ints = [x // divisor for x in ints]
    return tuple(Fraction(x) for x in ints[:-1]), Fraction(ints[-1])


def _substitute_equalities(
    equalities: List[Row], inequalities: List[Row], variables: Sequence[int]
) -> Tuple[List[Row], List[Row]]:
    """
    Uses each equality with a non-zero coefficient on one of `variables`
    to eliminate that variable from every other row.
    """
    equalities = list(equalities)
    inequalities = list(inequalities)
    for j in variables:
        pivot = next((e for e in equalities if e[0][j] != 0), None)
        if pivot is None:
            continue
        equalities.remove(pivot)

        def eliminate(row: Row) -> Row:
            if row[0][j] == 0:
                return row
            return _sum(row, _scaled(pivot, -row[0][j] / pivot[0][j]))

        equalities = [eliminate(e) for e in equalities]
        inequalities = [eliminate(r) for r in inequalities]
    return equalities, inequalities


def _fourier_motzkin(rows: List[Row], j: int) -> List[Row]:
    upper = [r for r in rows if r[0][j] > 0]
    lower = [r for r in rows if r[0][j] < 0]
    out = {_primitive(r) for r in rows if r[0][j] == 0}
    for u in upper:
        for l in lower:
            combined = _sum(_scaled(u, 1 / u[0][j]), _scaled(l, -1 / l[0][j]))
            out.add(_primitive(combined))
    return sorted(out)


def _system(cone: Cone, v: Sequence[Fraction]) -> Tuple[List[Row], List[Row]]:
    """
    c >= 0 and sum c_i ray_i = v, over the variables c_1..c_r.
    """
    r = len(cone.rays)
    equalities = [
        (tuple(Fraction(ray[k]) for ray in cone.rays), Fraction(v[k])) for k in range(cone.dimension)
    ]
    inequalities = [
        (tuple(Fraction(-int(i == j)) for j in range(r)), Fraction(0)) for i in range(r)
    ]
    return equalities, inequalities


def cone_contains(cone: Cone, v: Sequence) -> bool:
    """
    True iff v = sum c_i ray_i for some rationals c_i >= 0.
    """
    if len(v) != cone.dimension:
        raise InputError(f"vector of length {len(v)} tested against a cone in dimension {cone.dimension}")
    target = [Fraction(c) for c in v]
    r = len(cone.rays)
    equalities, rows = _system(cone, target)
    equalities, rows = _substitute_equalities(equalities, rows, range(r))
    if any(rhs != 0 for _, rhs in equalities):
        return False
    for j in range(r):
        rows = _fourier_motzkin(rows, j)
    return all(rhs >= 0 for _, rhs in rows)


def inequalities(cone: Cone) -> List[List[int]]:
    """
    Minimal description {v : n . v >= 0 for every normal n} with primitive
    integer normals, sorted descending.

    Steps:
    1. write c >= 0, sum c_i ray_i - v = 0 over the variables (c, v)
    2. substitute the equalities into the c variables
    3. eliminate the remaining c by Fourier-Motzkin
    4. drop normals that lie in the cone of the others
    """
    r, d = len(cone.rays), cone.dimension
    equalities = [
        (
            tuple(Fraction(ray[k]) for ray in cone.rays) + tuple(Fraction(-int(j == k)) for j in range(d)),
            Fraction(0),
        )
        for k in range(d)
    ]
    rows = [
        (tuple(Fraction(-int(i == j)) for j in range(r)) + tuple([Fraction(0)] * d), Fraction(0))
        for i in range(r)
    ]
    equalities, rows = _substitute_equalities(equalities, rows, range(r))
    for e in equalities:
        rows.append(e)
        rows.append(_scaled(e, Fraction(-1)))
    for j in range(r):
        rows = _fourier_motzkin(rows, j)

    normals = set()
    for coeffs, _ in rows:
        normal = tuple(-int(c) for c in _primitive((coeffs, Fraction(0)))[0][r:])
        if any(normal):
            normals.add(normal)

    kept = sorted(normals, reverse=True)
    for normal in list(kept):
        others = [n for n in kept if n != normal]
        if others and cone_contains(Cone(tuple(others), d), normal):
            kept.remove(normal)
    logger.debug("cone with %d rays has %d facets", r, len(kept))
    return [list(n) for n in kept]
