"""
The machine-readable result of one orbit analysis.
"""

from __future__ import annotations
import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional

from engine.errors import InputError

COMPLETE = "complete"
NOT_SMALL = "not_small"
NOT_SPHERICAL = "not_spherical"


@dataclass(frozen=True)
class OrbitReport:
    """
    Every field is plain JSON data, so a report compares equal to its
    own round trip. Stages that did not run leave their fields as None.
    """

    algebra: str
    orbit: Dict[str, Any]
    status: str = COMPLETE
    message: str = ""
    triple: Optional[Dict[str, Any]] = None
    grading: Optional[Dict[str, Dict[str, int]]] = None
    flags: Optional[Dict[str, Any]] = None
    desingularization: Optional[Dict[str, int]] = None
    gy_condition: Optional[bool] = None
    exact_sequence: Optional[bool] = None
    commutative: Optional[bool] = None
    generators: Optional[List[Dict[str, Any]]] = None
    gamma: Optional[Dict[str, Any]] = None
    self_dual: Optional[bool] = None
    lattice_sample: Optional[List[Dict[str, Any]]] = None
    cone_inequalities: Optional[List[List[int]]] = None
    parameters: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def to_json(self, timings: bool = True) -> Dict[str, Any]:
        data = asdict(self)
        if not timings:
            data.pop("timings")
        return data

    def dumps(self, timings: bool = True) -> str:
        return json.dumps(self.to_json(timings), sort_keys=True, indent=2, ensure_ascii=False)

    def deterministic(self) -> Dict[str, Any]:
        """Everything except the wall-clock timings."""
        return self.to_json(timings=False)

    @staticmethod
    def from_json(data: Dict[str, Any]) -> OrbitReport:
        if not isinstance(data, dict):
            raise InputError("report must be a JSON object")
        known = {f.name for f in fields(OrbitReport)}
        unknown = set(data) - known
        if unknown:
            raise InputError(f"unknown report fields: {sorted(unknown)}")
        if "algebra" not in data or "orbit" not in data:
            raise InputError("report needs 'algebra' and 'orbit'")
        return OrbitReport(**data)

    @staticmethod
    def loads(text: str) -> OrbitReport:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"report is not valid JSON: {exc}") from exc
        return OrbitReport.from_json(data)

    # lattice data carried by the report
    @property
    def lattice_generators(self) -> List[List[int]]:
        if self.gamma is None:
            raise InputError(f"report has no K-type lattice (status {self.status})")
        return self.gamma["gamma"]

    @property
    def lattice_dimension(self) -> int:
        if self.gamma is None:
            raise InputError(f"report has no K-type lattice (status {self.status})")
        return self.gamma["dimension"]
