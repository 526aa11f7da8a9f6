"""
Reproduces the K-type decomposition of the Speh representation from the
orbit of Y1 + Y2 in sl(4,R).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from engine.core.config_manager import config_manager
from engine.core.pipeline import AnalysisPipeline
from engine.core.report import OrbitReport
from engine.errors import StageError
from engine.fixtures import speh_config
from engine.ktypes.lattice import shifted_lattice
from engine.lie.realization import Weight
from engine.lie.roots import RootDatum, is_dominant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SpehVerification:
    checks: List[Check] = field(default_factory=list)
    report: Optional[OrbitReport] = None
    discrepancy: List[Weight] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "discrepancy": [list(w) for w in self.discrepancy],
        }


def expected_shifted(bound: int) -> List[Weight]:
    """(2m+1, 2n+1) with m >= n >= 0 inside the norm bound."""
    odd = range(1, bound + 1, 2)
    return sorted((a, b) for a in odd for b in odd if a >= b)


def speh_discrepancy(rd: RootDatum, bound: int) -> List[Weight]:
    """
    Terms V(2m+1, 2n+1) of the published sum with n > m; none of them is
    dominant, so the shifted lattice cannot contain them.
    """
    odd = range(1, bound + 1, 2)
    return sorted((a, b) for a in odd for b in odd if b > a and not is_dominant(rd, (a, b)))


def verify_speh(
    max_degree: Optional[int] = None,
    bound: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
) -> SpehVerification:
    bound = bound if bound is not None else config_manager.get("speh_bound")
    config = config_manager.from_fixture(
        speh_config.FIXTURE, max_degree=max_degree, bound=bound, seed=seed, samples=samples
    )
    result = SpehVerification()
    pipeline = AnalysisPipeline(config)
    try:
        report = pipeline.run()
    except StageError as exc:
        result.add(f"stage:{exc.stage}", False, str(exc.cause))
        return result
    result.report = report

    flags = report.flags
    result.add("height", flags["height"] == speh_config.HEIGHT, f"height {flags['height']}")
    result.add("small", flags["small"])
    result.add("spherical", flags["spherical"], flags["certainty"])
    result.add("gy_condition", report.gy_condition is True)
    result.add("self_dual", report.self_dual is True)

    found = [(g["degree"], tuple(g["weight"])) for g in report.generators or []]
    result.add(
        "generators",
        sorted(found) == sorted(speh_config.GENERATORS),
        f"found {found}",
    )

    shifted = shifted_lattice(pipeline.lattice, speh_config.LOWEST_KTYPE, bound, pipeline.rd)
    expected = expected_shifted(bound)
    result.add(
        "shifted_lattice",
        shifted == expected,
        f"{len(shifted)} K-types up to norm {bound}",
    )
    result.add(
        "cone",
        report.cone_inequalities == speh_config.CONE_INEQUALITIES,
        f"inequalities {report.cone_inequalities}",
    )

    result.discrepancy = speh_discrepancy(pipeline.rd, bound)
    if result.discrepancy:
        logger.warning(
            "%d published terms V(2m+1, 2n+1) with n > m are not dominant, e.g. %s",
            len(result.discrepancy),
            result.discrepancy[0],
        )
    for check in result.checks:
        logger.info("speh check %s: %s", check.name, "pass" if check.passed else "FAIL")
    return result
