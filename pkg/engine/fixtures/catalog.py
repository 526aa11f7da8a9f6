"""
Built-in orbits with known answers.
"""

from __future__ import annotations
from typing import Any, Dict, List, Optional, Sequence

from engine.errors import InputError


def predicted_sl_self_duality(n: int, partition: Sequence[int]) -> bool:
    """
    For spherical orbits of sl(n,R): the ring of regular functions fails
    to be self dual exactly when n = 2m with m odd and the partition is 2^m.
    """
    parts = sorted(partition, reverse=True)
    if n % 2 == 0 and (n // 2) % 2 == 1 and parts == [2] * (n // 2):
        return False
    return True


FIXTURE_INFO: List[Dict[str, Any]] = [
    {
        "name": "speh_sl4R",
        "algebra": "sl_R(4)",
        "orbit": {"partition": [2, 2], "label": "I"},
        "description": "Orbit of Y1 + Y2 in sl(4,R); the Speh representation",
        "expected": {"height": 2, "small": True, "spherical": True, "self_dual": True},
    },
    {
        "name": "su63_333",
        "algebra": "su(6,3)",
        "orbit": {"partition": [3, 3, 3]},
        "description": "Small but not spherical: dim Borel 26 < dim orbit 27",
        "expected": {"small": True, "spherical": False, "dim_borel_k": 26, "dim_orbit": 27},
        "slow": True,
    },
    {
        "name": "su21_principal",
        "algebra": "su(2,1)",
        "orbit": {"signed": "+-+"},
        "description": "Principal nilpotent orbit of su(2,1), small of height 4",
        "expected": {"height": 4, "small": True, "spherical": True},
    },
    {
        "name": "sl6_2cubed_I",
        "algebra": "sl_R(6)",
        "orbit": {"partition": [2, 2, 2], "label": "I"},
        "description": "Partition 2^3 of sl(6,R), label I",
        "expected": {"height": 2, "small": True, "spherical": True},
    },
    {
        "name": "sl6_2cubed_II",
        "algebra": "sl_R(6)",
        "orbit": {"partition": [2, 2, 2], "label": "II"},
        "description": "Partition 2^3 of sl(6,R), label II",
        "expected": {"height": 2, "small": True, "spherical": True},
    },
    {
        "name": "sl4_211",
        "algebra": "sl_R(4)",
        "orbit": {"partition": [2, 1, 1]},
        "description": "Minimal orbit of sl(4,R)",
        "expected": {"height": 2, "small": True, "spherical": True},
    },
    {
        "name": "zero_sl4R",
        "algebra": "sl_R(4)",
        "orbit": {"partition": [1, 1, 1, 1]},
        "description": "Zero orbit of sl(4,R)",
        "expected": {"height": 0, "small": True, "spherical": True, "self_dual": True},
    },
    {
        "name": "zero_sl6R",
        "algebra": "sl_R(6)",
        "orbit": {"partition": [1, 1, 1, 1, 1, 1]},
        "description": "Zero orbit of sl(6,R)",
        "expected": {"height": 0, "small": True, "spherical": True, "self_dual": True},
    },
    {
        "name": "zero_su21",
        "algebra": "su(2,1)",
        "orbit": {"partition": [1, 1, 1]},
        "description": "Zero orbit of su(2,1)",
        "expected": {"height": 0, "small": True, "spherical": True, "self_dual": True},
    },
    {
        "name": "zero_su63",
        "algebra": "su(6,3)",
        "orbit": {"partition": [1] * 9},
        "description": "Zero orbit of su(6,3)",
        "expected": {"height": 0, "small": True, "spherical": True, "self_dual": True},
        "slow": True,
    },
]

for _info in FIXTURE_INFO:
    if _info["algebra"].startswith("sl_R") and "partition" in _info["orbit"]:
        _n = int(_info["algebra"][5:-1])
        _info["predicted_self_dual"] = predicted_sl_self_duality(_n, _info["orbit"]["partition"])


def list_fixtures() -> List[Dict[str, Any]]:
    return [dict(info) for info in FIXTURE_INFO]


def fixture_names() -> List[str]:
    return [info["name"] for info in FIXTURE_INFO]


def get_fixture(name: str) -> Dict[str, Any]:
    for info in FIXTURE_INFO:
        if info["name"] == name:
            return dict(info)
    raise InputError(f"unknown fixture '{name}'; choose from {', '.join(fixture_names())}")


def predicted_self_duality(name: str) -> Optional[bool]:
    return get_fixture(name).get("predicted_self_dual")
