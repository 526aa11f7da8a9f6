"""
Generators of the invariant ring, extracted degree by degree, and the
weight bookkeeping that turns them into K-type lattice generators.
"""

from __future__ import annotations
import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I

from engine.errors import ConsistencyError, DegreeBoundError, InputError
from engine.lie.realization import Weight
from engine.lie.roots import RootDatum, dual_ktype, is_dominant
from engine.math import linalg
from engine.math.scalar import ExactScalar
from engine.invariants.kernel import (
    VariableBasis,
    derivations,
    is_annihilated,
    nilradical_kernel,
    variable_basis,
)
from engine.invariants.polynomial import WeightedPolynomial, variable_ring
from engine.orbits.grading import AdGrading

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    poly: WeightedPolynomial
    degree: int
    weight: Weight

    def to_json(self) -> Dict[str, Any]:
        return {"degree": self.degree, "weight": list(self.weight), "poly": self.poly.to_json()}


@dataclass
class GeneratorSet:
    """
    Generators f_i of S[V~]^{u(l_k)} with degrees d_i and weights mu_i.
    The dual weights -w0 mu_i and the self-duality flag are filled in
    once self-duality is known.
    """

    generators: List[Generator]
    variables: VariableBasis
    self_dual: Optional[bool] = None
    dual_weights: List[Weight] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> List[int]:
        return [g.degree for g in self.generators]

    @property
    def mu_weights(self) -> List[Weight]:
        return [g.weight for g in self.generators]

    def to_json(self) -> List[Dict[str, Any]]:
        return [g.to_json() for g in self.generators]


@dataclass(frozen=True)
class GammaWeights:
    """
    Lattice generator weights. gamma is mu in both cases; in the
    non-self-dual case the alternative labelling -w0 mu is carried along.
    """

    gamma: Tuple[Weight, ...]
    mu: Tuple[Weight, ...]
    dual: Tuple[Weight, ...]
    self_dual: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "gamma": [list(w) for w in self.gamma],
            "mu": [list(w) for w in self.mu],
            "dual": [list(w) for w in self.dual],
            "self_dual": self.self_dual,
        }


def generator_monomials(
    generators: Sequence[Generator], degree: int, nvars: int, rank: int
) -> List[WeightedPolynomial]:
    """All products of generators of total degree `degree`."""
    if not generators:
        return [WeightedPolynomial.one(nvars, rank)] if degree == 0 else []
    bounds = [range(degree // g.degree + 1) for g in generators]
    out = []
    for exps in product(*bounds):
        if sum(a * g.degree for a, g in zip(exps, generators)) != degree:
            continue
        term = WeightedPolynomial.one(nvars, rank)
        for a, g in zip(exps, generators):
            if a:
                term = term * g.poly ** a
        out.append(term)
    return out


def _coefficient_rows(polys: Sequence[WeightedPolynomial]) -> Tuple[List[List[ExactScalar]], int]:
    monomials = sorted({e for p in polys for e in p.terms}, reverse=True)
    rows = [[p.coefficient(m) for m in monomials] for p in polys]
    return rows, len(monomials)


def _group(polys: Sequence[WeightedPolynomial]) -> Dict[Weight, List[WeightedPolynomial]]:
    out: Dict[Weight, List[WeightedPolynomial]] = {}
    for p in polys:
        out.setdefault(p.weight, []).append(p)
    return out


def algebraically_independent(
    polys: Sequence[WeightedPolynomial], nvars: int, rng: random.Random, retries: int = 3, spread: int = 3
) -> bool:
    """Jacobian rank at random integer points; up to `retries` fresh points."""
    if not polys:
        return True
    if not nvars:
        return False
    ring = variable_ring(nvars)
    partials = [[p.element.diff(v) for v in ring.gens] for p in polys]
    for _ in range(retries):
        point = [QQ_I(rng.randint(-spread, spread)) for _ in range(nvars)]
        jacobian = [[ExactScalar.from_domain(d(*point)) for d in row] for row in partials]
        if linalg.rank(jacobian, nvars) == len(polys):
            return True
    return False


def extract_generators(
    grading: AdGrading,
    rd: RootDatum,
    max_degree: int,
    rank_r: int,
    rng: random.Random,
    retries: int = 3,
    variables: Optional[VariableBasis] = None,
) -> GeneratorSet:
    """
    Steps:
    1. at each degree n, split the kernel by weight
    2. new generators span a complement of the products of older ones
    3. check per weight that kernel dimension = generator-monomial count
    4. check independence, dominance and annihilation of the result
    """
    if max_degree < 1:
        raise InputError("max_degree must be at least 1")
    variables = variables or variable_basis(grading, rd)
    nvars, rank = variables.nvars, rd.rank
    found: List[Generator] = []

    for n in range(1, max_degree + 1):
        kernel = _group(nilradical_kernel(grading, rd, n, variables))
        products = _group(generator_monomials(found, n, nvars, rank))

        for weight in sorted(set(kernel) | set(products), reverse=True):
            ker = kernel.get(weight, [])
            prods = products.get(weight, [])
            rows, width = _coefficient_rows(prods + ker)
            if linalg.rank(rows, width) != len(ker):
                raise ConsistencyError(
                    f"products of generators leave the kernel at degree {n}, weight {weight}"
                )
            if linalg.rank(rows[: len(prods)], width) != len(prods):
                raise ConsistencyError(
                    f"generator monomials are dependent at degree {n}, weight {weight}: "
                    "the invariant ring is not polynomial"
                )
            chosen = linalg.independent_subset(rows, width)
            for index in chosen:
                if index >= len(prods):
                    poly = ker[index - len(prods)].normalized()
                    found.append(Generator(poly, n, weight))
                    logger.info("generator of degree %d and weight %s", n, weight)

        if len(found) > rank_r:
            raise ConsistencyError(
                f"found {len(found)} generators but the orbit rank is {rank_r}; "
                "the orbit may be misclassified as small or spherical"
            )

    if len(found) < rank_r:
        raise DegreeBoundError(
            f"found {len(found)} of {rank_r} generators up to degree {max_degree}; "
            "increase degree bound"
        )

    ders = derivations(grading, rd, variables)
    for g in found:
        if not is_annihilated(g.poly, ders):
            raise ConsistencyError(f"generator of weight {g.weight} is not u(l_k)-invariant")
        if not is_dominant(rd, g.weight):
            raise ConsistencyError(f"generator weight {g.weight} is not dominant")
    if not algebraically_independent([g.poly for g in found], nvars, rng, retries):
        raise ConsistencyError("generators are not algebraically independent")

    return GeneratorSet(generators=found, variables=variables)


def resolve_gamma_weights(gs: GeneratorSet, rd: RootDatum, self_dual: bool) -> GammaWeights:
    """
    Self-dual: gamma = mu. Otherwise both mu and -w0 mu are reported and
    mu stays the primary labelling.
    """
    mu = tuple(gs.mu_weights)
    dual = tuple(dual_ktype(rd, w) for w in mu)
    gs.self_dual = self_dual
    gs.dual_weights = list(dual)
    if self_dual and sorted(mu) != sorted(dual):
        raise ConsistencyError("self-dual ring with generator weights not closed under -w0")
    if not self_dual:
        logger.warning(
            "ring is not self dual: reporting weights %s and their duals %s", list(mu), list(dual)
        )
    return GammaWeights(gamma=mu, mu=mu, dual=dual, self_dual=self_dual)
