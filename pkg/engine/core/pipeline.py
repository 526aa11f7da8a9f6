"""
Runs one orbit analysis stage by stage and assembles the report.
"""

from __future__ import annotations
import logging
import random
import time
from typing import Any, Callable, Dict, Optional

from engine.core.cache import ReportCache, cache_key
from engine.core.config_manager import AnalysisConfig
from engine.core.report import COMPLETE, NOT_SMALL, NOT_SPHERICAL, OrbitReport
from engine.errors import EngineError, StageError
from engine.invariants.generators import GeneratorSet, extract_generators, resolve_gamma_weights
from engine.ktypes.cone import asymptotic_cone, inequalities
from engine.ktypes.lattice import KTypeLattice, enumerate_ktypes, max_norm, self_dual_check
from engine.lie.realization import AlgebraRealization, Element, build_real_form
from engine.lie.roots import RootDatum, build_root_datum, dual_ktype
from engine.orbits.checks import (
    OrbitFlags,
    commutativity_check,
    desingularization_data,
    gy_condition_check,
    orbit_flags,
    resolution_dimension_check,
    small_exact_sequence_check,
)
from engine.orbits.descriptor import representative
from engine.orbits.grading import AdGrading, grade
from engine.orbits.triple import NormalTriple, complete_to_normal_triple

logger = logging.getLogger(__name__)

STAGES = (
    "build",
    "representative",
    "triple",
    "root_datum",
    "grading",
    "flags",
    "invariants",
    "self_duality",
    "lattice",
    "cone",
)


class AnalysisPipeline:
    """
    Controls execution of the analysis stages for one config.

    Each stage stores its result on the pipeline; a failing stage is
    re-raised as a StageError carrying its name.
    """

    __slots__ = (
        "config",
        "rng",
        "timings",
        "fields",
        "realization",
        "e",
        "triple",
        "rd",
        "grading",
        "flags",
        "generators",
        "lattice",
    )

    def __init__(self, config: AnalysisConfig) -> None:
        self.config = config
        self.rng = random.Random(config.seed)
        self.timings: Dict[str, float] = {}
        self.fields: Dict[str, Any] = {}
        self.realization: Optional[AlgebraRealization] = None
        self.e: Optional[Element] = None
        self.triple: Optional[NormalTriple] = None
        self.rd: Optional[RootDatum] = None
        self.grading: Optional[AdGrading] = None
        self.flags: Optional[OrbitFlags] = None
        self.generators: Optional[GeneratorSet] = None
        self.lattice: Optional[KTypeLattice] = None

    def _stage(self, name: str, step: Callable[[], Any]) -> Any:
        logger.info("stage %s started", name)
        start = time.perf_counter()
        try:
            result = step()
        except StageError:
            raise
        except EngineError as exc:
            logger.info("stage %s failed: %s", name, exc)
            raise StageError(name, exc) from exc
        self.timings[name] = round(time.perf_counter() - start, 6)
        logger.info("stage %s finished in %.3fs", name, self.timings[name])
        return result

    # stages
    def build(self) -> None:
        self.realization = build_real_form(self.config.algebra)

    def find_representative(self) -> None:
        self.e = representative(self.realization, self.config.orbit)

    def complete_triple(self) -> None:
        self.triple = complete_to_normal_triple(self.realization, self.e)
        self.fields["triple"] = self.triple.to_json(self.realization)

    def build_root_datum(self) -> None:
        self.rd = build_root_datum(self.realization, self.triple.x)

    def build_grading(self) -> None:
        self.grading = grade(self.realization, self.triple.x, self.rd)
        self.fields["grading"] = self.grading.dimensions()

    def compute_flags(self) -> None:
        c = self.config
        g = self.grading
        self.flags = orbit_flags(
            self.realization, self.rd, g, self.triple, self.rng, c.samples, c.spread
        )
        self.fields["flags"] = self.flags.to_json()
        desing = desingularization_data(g)
        desing["resolution_check"] = resolution_dimension_check(g, self.flags.dim_orbit)
        self.fields["desingularization"] = desing
        self.fields["commutative"] = commutativity_check(g)
        if self.flags.small:
            self.fields["exact_sequence"] = small_exact_sequence_check(g, self.triple)
        if self.flags.small and self.flags.spherical:
            self.fields["gy_condition"] = gy_condition_check(g, self.triple.e)

    def extract_invariants(self) -> None:
        c = self.config
        self.generators = extract_generators(
            self.grading, self.rd, c.max_degree, self.flags.rank_r, self.rng, c.retries
        )
        self.fields["generators"] = self.generators.to_json()

    def check_self_duality(self) -> None:
        self.lattice = KTypeLattice.from_weights(self.generators.mu_weights, self.rd.rank)
        reach = max(
            [max_norm(g) for g in self.lattice.generators]
            + [max_norm(dual_ktype(self.rd, g)) for g in self.lattice.generators]
            + [self.config.bound]
        )
        self_dual = self_dual_check(self.lattice, self.rd, reach)
        gamma = resolve_gamma_weights(self.generators, self.rd, self_dual)
        self.fields["self_dual"] = self_dual
        self.fields["gamma"] = {**gamma.to_json(), "dimension": self.lattice.dimension}

    def sample_lattice(self) -> None:
        self.fields["lattice_sample"] = [
            {"weight": list(w), "multiplicity": m}
            for w, m in enumerate_ktypes(self.lattice, self.config.bound)
        ]

    def describe_cone(self) -> None:
        self.fields["cone_inequalities"] = inequalities(asymptotic_cone(self.lattice))

    # driving the stages
    def _report(self, status: str, message: str = "") -> OrbitReport:
        return OrbitReport(
            algebra=self.config.algebra.name,
            orbit=self.config.orbit.to_json(),
            status=status,
            message=message,
            parameters=self.config.parameters(),
            timings=dict(self.timings),
            **self.fields,
        )

    def run(self) -> OrbitReport:
        """
        Steps:
        1. build the realization, the representative, its triple and grading
        2. compute the orbit flags; stop with a partial report unless the
           orbit is small and spherical
        3. invariants, self-duality, lattice sample and cone
        """
        self._stage("build", self.build)
        self._stage("representative", self.find_representative)
        self._stage("triple", self.complete_triple)
        self._stage("root_datum", self.build_root_datum)
        self._stage("grading", self.build_grading)
        self._stage("flags", self.compute_flags)

        if not self.flags.small:
            return self._report(NOT_SMALL, "p_C(x;j) != 0 for some j > 2; invariants skipped")
        if not self.flags.spherical:
            return self._report(
                NOT_SPHERICAL,
                f"no open Borel orbit: dim b_k = {self.flags.dim_borel_k}, "
                f"dim O = {self.flags.dim_orbit} ({self.flags.certainty}); invariants skipped",
            )

        self._stage("invariants", self.extract_invariants)
        self._stage("self_duality", self.check_self_duality)
        self._stage("lattice", self.sample_lattice)
        self._stage("cone", self.describe_cone)
        return self._report(COMPLETE)


def analyze(config: AnalysisConfig, cache: Optional[ReportCache] = None) -> OrbitReport:
    """Runs the pipeline, reusing and filling the report cache when given."""
    key = cache_key(config.cache_data())
    if cache is not None:
        cached = cache.load(key)
        if cached is not None:
            return cached
    report = AnalysisPipeline(config).run()
    if cache is not None:
        cache.store(key, report)
    return report
