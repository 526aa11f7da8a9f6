"""
Orbit dimensions and the sphericity test.

The test first compares dim O with the dimension of a Borel subalgebra
of k_C (a certified negative when the Borel is too small). Otherwise it
samples points g.e, with g a product of root-group elements exp(t X_alpha)
for small random integers t, and compares dim [b, g.e] with dim O.
"""

from __future__ import annotations
import logging
import random
from dataclasses import dataclass
from typing import List, Sequence

from engine.errors import ConsistencyError
from engine.lie.realization import AlgebraRealization, Element, Sparse
from engine.lie.roots import RootDatum
from engine.math import linalg
from engine.math.scalar import ExactScalar
from engine.orbits.grading import AdGrading

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True)
class SphericityResult:
    spherical: bool
    certainty: str
    dim_orbit: int
    dim_borel: int


def _images(r: AlgebraRealization, sources: Sequence[Element], target: Element) -> List[Element]:
    return [r.bracket(z, target) for z in sources]


def orbit_dimension(realization: AlgebraRealization, e: Sequence[ExactScalar]) -> int:
    """
    dim K_C.e = dim k_C - dim k_C^e, cross-checked against the rank of
    z -> [z, e] on k_C.
    """
    r = realization
    k_basis = [r.basis_element(i) for i in r.k_indices]
    images = _images(r, k_basis, tuple(e))
    columns = linalg.transpose(images, r.dim)
    centralizer = len(linalg.nullspace(columns, len(k_basis)))
    rank = linalg.rank(images, r.dim)
    if r.dim_k - centralizer != rank:
        raise ConsistencyError(
            f"orbit dimension disagrees: {r.dim_k} - {centralizer} != rank {rank}"
        )
    return rank


def exp_ad(
    realization: AlgebraRealization, root_vector: Element, t: int, z: Sparse
) -> Sparse:
    """exp(t ad X) z for an ad-nilpotent X; the series is finite."""
    xs = realization.sparsify(root_vector)
    total = dict(z)
    term = dict(z)
    for j in range(1, realization.dim + 2):
        term = realization.sparse_bracket(xs, term)
        if not term:
            return {k: v for k, v in total.items() if not v.is_zero()}
        factor = ExactScalar(t) / j
        term = {k: v * factor for k, v in term.items()}
        for k, v in term.items():
            total[k] = total[k] + v if k in total else v
    raise ConsistencyError("root vector is not ad-nilpotent")


def _random_conjugate(
    realization: AlgebraRealization, rd: RootDatum, e: Element, rng: random.Random, spread: int
) -> Element:
    point = realization.sparsify(e)
    for root in sorted(rd.roots, reverse=True):
        t = rng.randint(-spread, spread)
        if t:
            point = exp_ad(realization, rd.roots[root], t, point)
    return realization.densify(point)


def borel_orbit_dimension(realization: AlgebraRealization, rd: RootDatum, point: Element) -> int:
    return linalg.rank(_images(realization, rd.borel, point), realization.dim)


def is_spherical(
    realization: AlgebraRealization,
    rd: RootDatum,
    e: Sequence[ExactScalar],
    rng: random.Random,
    samples: int = 8,
    spread: int = 3,
) -> SphericityResult:
    """
    Decides whether the Borel subgroup of K_C has an open orbit in K_C.e.
    """
    e = tuple(e)
    dim_borel = rd.dim_borel
    if linalg.is_zero_vector(e):
        return SphericityResult(True, CERTIFIED, 0, dim_borel)

    dim_orbit = orbit_dimension(realization, e)
    if dim_borel < dim_orbit:
        logger.info("Borel dimension %d < orbit dimension %d", dim_borel, dim_orbit)
        return SphericityResult(False, CERTIFIED, dim_orbit, dim_borel)

    best = 0
    for _ in range(samples):
        point = _random_conjugate(realization, rd, e, rng, spread)
        best = max(best, borel_orbit_dimension(realization, rd, point))
        if best == dim_orbit:
            break
    logger.debug("sampled Borel orbit dimension %d of %d", best, dim_orbit)
    return SphericityResult(best == dim_orbit, MONTE_CARLO, dim_orbit, dim_borel)


def generic_orbit_dimension(
    grading: AdGrading, rng: random.Random, samples: int = 8, spread: int = 3
) -> int:
    """
    Largest rank of {[X, v] : X in u(l_k)} over random points v of V~.
    """
    r = grading.realization
    basis = grading.V_tilde
    if not basis or not grading.u_lk:
        return 0
    best = 0
    for _ in range(samples):
        coefficients = [ExactScalar(rng.randint(-spread, spread)) for _ in basis]
        v = tuple(linalg.combine(coefficients, basis, r.dim))
        best = max(best, linalg.rank(_images(r, grading.u_lk, v), r.dim))
    return best


def orbit_rank(grading: AdGrading, rng: random.Random, samples: int = 8, spread: int = 3) -> int:
    """
    rank_r = dim V~ - generic dimension of a u(l_k)-orbit in V~, the
    transcendence degree of S[V~]^{u(l_k)}.
    """
    return len(grading.V_tilde) - generic_orbit_dimension(grading, rng, samples, spread)
