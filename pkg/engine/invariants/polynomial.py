"""
Polynomials over the Gaussian rationals in a fixed weight basis of variables.

The arithmetic is sympy's sparse PolyRing over QQ_I. WeightedPolynomial
keeps a ring element together with its degree and weight.
"""

from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ_I
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from engine.errors import ConsistencyError, InputError
from engine.math.scalar import ExactScalar

Exponents = Tuple[int, ...]
Weight = Tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents
    weight: Weight

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@lru_cache(maxsize=None)
def variable_ring(nvars: int) -> PolyRing:
    """QQ_I[v1, ..., v_nvars] with lex order, so the leading term is the lex-largest monomial."""
    return PolyRing(tuple(Symbol(f"v{i + 1}") for i in range(nvars)), QQ_I, lex)


def monomial_weight(exponents: Sequence[int], weights: Sequence[Weight]) -> Weight:
    rank = len(weights[0]) if weights else 0
    return tuple(
        sum(e * w[k] for e, w in zip(exponents, weights)) for k in range(rank)
    )


def symmetric_power_basis(weights: Sequence[Weight], n: int, rank: Optional[int] = None) -> List[Monomial]:
    """
    All degree-n monomials in len(weights) variables, each tagged with its
    weight, in descending lexicographic order of exponents.
    """
    if n < 0:
        raise InputError("degree must be non-negative")
    count = len(weights)
    zero = tuple([0] * (rank if rank is not None else (len(weights[0]) if weights else 0)))
    if n == 0:
        return [Monomial(tuple([0] * count), zero)]
    if count == 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(count), n):
        exps = [0] * count
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps), monomial_weight(exps, weights)))
    out.sort(key=lambda m: m.exponents, reverse=True)
    return out


class WeightedPolynomial:
    """
    Homogeneous element of variable_ring(nvars), tagged with its degree
    and (when known) its weight.
    """

    __slots__ = ("element", "degree", "weight")

    element: PolyElement
    degree: int
    weight: Optional[Weight]

    def __init__(
        self,
        nvars: int,
        terms: Dict[Exponents, Any],
        degree: Optional[int] = None,
        weight: Optional[Weight] = None,
    ) -> None:
        ring = variable_ring(nvars)
        element = ring.from_dict(
            {tuple(e): ExactScalar.coerce(c).value for e, c in terms.items()}
        )
        self._attach(element, degree, weight)

    def _attach(self, element: PolyElement, degree: Optional[int], weight: Optional[Weight]) -> None:
        degrees = {sum(m) for m in element.itermonoms()}
        if len(degrees) > 1:
            raise ConsistencyError(f"polynomial is not homogeneous: degrees {sorted(degrees)}")
        self.element = element
        self.degree = degree if degree is not None else (degrees.pop() if degrees else 0)
        self.weight = weight

    @staticmethod
    def from_element(
        element: PolyElement, degree: Optional[int] = None, weight: Optional[Weight] = None
    ) -> WeightedPolynomial:
        p = object.__new__(WeightedPolynomial)
        p._attach(element, degree, weight)
        return p

    @property
    def ring(self) -> PolyRing:
        return self.element.ring

    @property
    def nvars(self) -> int:
        return self.element.ring.ngens

    @property
    def terms(self) -> Dict[Exponents, ExactScalar]:
        return {m: ExactScalar.from_domain(c) for m, c in self.element.items()}

    def __repr__(self) -> str:
        return str(self.element)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.element == other.element

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.element.items())))

    def is_zero(self) -> bool:
        return not self.element

    def coefficient(self, exponents: Sequence[int]) -> ExactScalar:
        c = self.element.get(tuple(exponents))
        return ExactScalar.from_domain(c) if c is not None else ExactScalar(0)

    # arithmetic
    def __add__(self, other: WeightedPolynomial) -> WeightedPolynomial:
        return WeightedPolynomial.from_element(
            self.element + other.element, weight=self.weight or other.weight
        )

    def scale(self, c: ExactScalar) -> WeightedPolynomial:
        return WeightedPolynomial.from_element(
            self.element.mul_ground(c.value), self.degree, self.weight
        )

    def __mul__(self, other: WeightedPolynomial) -> WeightedPolynomial:
        weight = None
        if self.weight is not None and other.weight is not None:
            weight = tuple(a + b for a, b in zip(self.weight, other.weight))
        return WeightedPolynomial.from_element(
            self.element * other.element, self.degree + other.degree, weight
        )

    def __pow__(self, k: int) -> WeightedPolynomial:
        weight = tuple(k * w for w in self.weight) if self.weight is not None else None
        return WeightedPolynomial.from_element(self.element ** k, k * self.degree, weight)

    def normalized(self) -> WeightedPolynomial:
        """Scaled so the coefficient of the lexicographically largest monomial is 1."""
        return WeightedPolynomial.from_element(self.element.monic(), self.degree, self.weight)

    def derivative(self, i: int) -> WeightedPolynomial:
        return WeightedPolynomial.from_element(
            self.element.diff(self.ring.gens[i]), max(self.degree - 1, 0)
        )

    def evaluate(self, point: Sequence[ExactScalar]) -> ExactScalar:
        if not self.nvars:
            return self.coefficient(())
        return ExactScalar.from_domain(self.element(*[x.value for x in point]))

    # serialization
    def to_json(self) -> Dict[str, Any]:
        return {
            ",".join(str(e) for e in exps): c.to_json()
            for exps, c in sorted(self.terms.items(), reverse=True)
        }

    @staticmethod
    def from_json(data: Dict[str, Any], weight: Optional[Sequence[int]] = None) -> WeightedPolynomial:
        terms = {}
        nvars = 0
        for key, value in data.items():
            exps = tuple(int(x) for x in key.split(",")) if key else ()
            nvars = len(exps)
            terms[exps] = ExactScalar.from_json(value)
        return WeightedPolynomial(nvars, terms, weight=tuple(weight) if weight is not None else None)

    @staticmethod
    def monomial(nvars: int, exponents: Sequence[int], weight: Optional[Weight] = None) -> WeightedPolynomial:
        return WeightedPolynomial(nvars, {tuple(exponents): 1}, weight=weight)

    @staticmethod
    def one(nvars: int, rank: int) -> WeightedPolynomial:
        return WeightedPolynomial.from_element(variable_ring(nvars).one, 0, tuple([0] * rank))
