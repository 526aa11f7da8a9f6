from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import pytest

from engine.core.config_manager import config_manager
from engine.core.pipeline import AnalysisPipeline
from engine.core.report import OrbitReport
from engine.lie.realization import AlgebraRealization, RealFormDescriptor, build_real_form
from engine.math.mat import ExactMatrix
from engine.math.scalar import ExactScalar

SMALL_SPHERICAL = [
    "speh_sl4R",
    "su21_principal",
    "sl4_211",
    "sl6_2cubed_I",
    "sl6_2cubed_II",
    "zero_sl4R",
    "zero_su21",
]


@dataclass
class Analysed:
    pipeline: AnalysisPipeline
    report: OrbitReport


@pytest.fixture(scope="session")
def sl2() -> AlgebraRealization:
    return build_real_form(RealFormDescriptor.sl(2))


@pytest.fixture(scope="session")
def sl4() -> AlgebraRealization:
    return build_real_form(RealFormDescriptor.sl(4))


@pytest.fixture(scope="session")
def sl6() -> AlgebraRealization:
    return build_real_form(RealFormDescriptor.sl(6))


@pytest.fixture(scope="session")
def su21() -> AlgebraRealization:
    return build_real_form(RealFormDescriptor.su(2, 1))


@pytest.fixture(scope="session")
def analysed() -> Callable[[str], Analysed]:
    """Runs each fixture once per session."""
    done: Dict[str, Analysed] = {}

    def run(name: str) -> Analysed:
        if name not in done:
            pipeline = AnalysisPipeline(config_manager.from_fixture(name))
            done[name] = Analysed(pipeline, pipeline.run())
        return done[name]

    return run


@pytest.fixture(scope="session")
def speh(analysed) -> Analysed:
    return analysed("speh_sl4R")


@pytest.fixture(scope="session")
def example_matrices() -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Y1, Y2, Y3 in p_C of sl(4,R); the orbit of Y1 + Y2 carries the Speh representation."""
    i = ExactScalar(0, 1)
    zero = [0, 0, 0, 0]
    y1 = ExactMatrix.from_rows([[1, -i, 0, 0], [-i, -1, 0, 0], zero, zero])
    y2 = ExactMatrix.from_rows([zero, zero, [0, 0, 1, -i], [0, 0, -i, -1]])
    y3 = ExactMatrix.from_rows([[0, 0, 1, -i], [0, 0, -i, -1], [1, -i, 0, 0], [-i, -1, 0, 0]])
    return y1, y2, y3
