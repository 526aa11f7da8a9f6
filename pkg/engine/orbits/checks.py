"""
Structural checks on a graded orbit: the surjectivity condition at e,
the exact sequence of small orbits, commutativity of V~, the dimension
of the resolution and the bundled orbit flags.
"""

from __future__ import annotations
import logging
import random
from dataclasses import asdict, dataclass
from typing import Any, Dict

from engine.errors import PreconditionError
from engine.lie.realization import AlgebraRealization
from engine.lie.roots import RootDatum
from engine.math import linalg
from engine.orbits.grading import AdGrading, height, is_small
from engine.orbits.sphericity import is_spherical, orbit_rank
from engine.orbits.triple import NormalTriple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitFlags:
    height: int
    small: bool
    spherical: bool
    certainty: str
    dim_orbit: int
    dim_borel_k: int
    rank_r: int

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


def gy_condition_check(g: AdGrading, e) -> bool:
    """z -> [z, e] maps q_C cap k_C onto V~."""
    r = g.realization
    target = g.V_tilde
    if not target:
        return True
    images = [r.bracket(z, e) for z in g.q_k]
    return linalg.rank(images, r.dim) == len(target)


def small_exact_sequence_check(g: AdGrading, triple: NormalTriple) -> bool:
    """
    0 -> k^{x,e,f} -> k^x --ad e--> p(x;2) -> 0 is exact on a small orbit.
    """
    if not is_small(g):
        raise PreconditionError("the exact sequence only holds for small orbits")
    r = g.realization
    k0 = g.k(0)
    p2 = g.p(2)

    image_rank = linalg.rank([r.bracket(triple.e, z) for z in k0], r.dim)
    surjective = image_rank == len(p2)
    kernel = len(k0) - image_rank

    rows = []
    for w in (triple.x, triple.e, triple.f):
        rows.extend(linalg.transpose([r.bracket(z, w) for z in k0], r.dim))
    triple_centralizer = len(linalg.nullspace(rows, len(k0)))

    logger.debug(
        "exact sequence: dim k^x=%d, dim k^(x,e,f)=%d, dim p(x;2)=%d",
        len(k0), triple_centralizer, len(p2),
    )
    return surjective and kernel == triple_centralizer and len(k0) == triple_centralizer + len(p2)


def commutativity_check(g: AdGrading) -> bool:
    """[V~, V~] = 0."""
    r = g.realization
    basis = g.V_tilde
    return all(
        linalg.is_zero_vector(r.bracket(basis[i], basis[j]))
        for i in range(len(basis))
        for j in range(i + 1, len(basis))
    )


def desingularization_data(g: AdGrading) -> Dict[str, int]:
    return {
        "dim_V": len(g.V),
        "dim_V_tilde": len(g.V_tilde),
        "dim_q_k": len(g.q_k),
        "dim_l_k": len(g.l_k),
        "dim_u_k": len(g.u_k),
    }


def resolution_dimension_check(g: AdGrading, dim_orbit: int) -> bool:
    """K_C x_{Q_C cap K_C} V~ -> closure(O) is birational, so the dimensions agree."""
    r = g.realization
    return r.dim_k - len(g.q_k) + len(g.V_tilde) == dim_orbit


def orbit_flags(
    realization: AlgebraRealization,
    rd: RootDatum,
    g: AdGrading,
    triple: NormalTriple,
    rng: random.Random,
    samples: int = 8,
    spread: int = 3,
) -> OrbitFlags:
    sph = is_spherical(realization, rd, triple.e, rng, samples, spread)
    flags = OrbitFlags(
        height=height(g),
        small=is_small(g),
        spherical=sph.spherical,
        certainty=sph.certainty,
        dim_orbit=sph.dim_orbit,
        dim_borel_k=sph.dim_borel,
        rank_r=orbit_rank(g, rng, samples, spread),
    )
    logger.info("orbit flags %s", flags)
    return flags
