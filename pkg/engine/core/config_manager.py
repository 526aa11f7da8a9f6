"""
Configuration Manager
Loads the default analysis parameters, stores the active overrides in
memory, and turns fixtures and config files into AnalysisConfig values.
"""

from __future__ import annotations
import json
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from engine.core import analysis_config
from engine.errors import ConfigError, DescriptorError
from engine.fixtures.catalog import get_fixture
from engine.lie.realization import RealFormDescriptor
from engine.orbits.descriptor import OrbitDescriptor

logger = logging.getLogger(__name__)

_POSITIVE = ("max_degree", "bound", "samples", "spread", "retries")
_NON_NEGATIVE = ("seed",)


@dataclass(frozen=True)
class AnalysisConfig:
    algebra: RealFormDescriptor
    orbit: OrbitDescriptor
    max_degree: int = analysis_config.MAX_DEGREE
    bound: int = analysis_config.ENUMERATION_BOUND
    seed: int = analysis_config.RANDOM_SEED
    samples: int = analysis_config.SPHERICITY_SAMPLES
    spread: int = analysis_config.SAMPLE_PARAMETER_RANGE
    retries: int = analysis_config.INDEPENDENCE_RETRIES
    output: Optional[Path] = None

    def __post_init__(self) -> None:
        for name in _POSITIVE + _NON_NEGATIVE:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
            if name in _POSITIVE and value < 1:
                raise ConfigError(f"{name} must be positive, got {value}")
            if value < 0:
                raise ConfigError(f"{name} must be non-negative, got {value}")

    def parameters(self) -> Dict[str, int]:
        return {
            "max_degree": self.max_degree,
            "bound": self.bound,
            "seed": self.seed,
            "samples": self.samples,
        }

    def cache_data(self) -> Dict[str, Any]:
        """Inputs that determine the report, in canonical JSON form."""
        return {
            "algebra": self.algebra.name,
            "orbit": self.orbit.to_json(),
            **self.parameters(),
        }


class ConfigManager:
    """Singleton manager holding the default and active analysis parameters."""

    def __init__(self):
        self.defaults: Dict[str, Any] = {
            "max_degree": analysis_config.MAX_DEGREE,
            "bound": analysis_config.ENUMERATION_BOUND,
            "seed": analysis_config.RANDOM_SEED,
            "samples": analysis_config.SPHERICITY_SAMPLES,
            "spread": analysis_config.SAMPLE_PARAMETER_RANGE,
            "retries": analysis_config.INDEPENDENCE_RETRIES,
            "cache_dir": analysis_config.CACHE_DIR,
            "speh_bound": analysis_config.SPEH_BOUND,
        }

        self.active: Dict[str, Any] = self._deep_copy_dict(self.defaults)

    def _deep_copy_dict(self, d: Dict[str, Any]) -> Dict[str, Any]:
        result = {}
        for key, value in d.items():
            if isinstance(value, dict):
                result[key] = self._deep_copy_dict(value)
            else:
                result[key] = value
        return result

    def get(self, key: str) -> Any:
        if key not in self.active:
            raise ConfigError(f"unknown config key '{key}'")
        return self.active[key]

    def update_global(self, key: str, value: Any) -> None:
        if key not in self.active:
            raise ConfigError(f"unknown config key '{key}'")
        self.active[key] = value

    def reset(self) -> None:
        self.active = self._deep_copy_dict(self.defaults)

    # building configs
    def build(self, algebra: Any, orbit: Any, **overrides: Any) -> AnalysisConfig:
        params = {k: self.active[k] for k in _POSITIVE + _NON_NEGATIVE}
        params.update({k: v for k, v in overrides.items() if v is not None})
        output = params.pop("output", None)
        unknown = set(params) - set(_POSITIVE + _NON_NEGATIVE)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return AnalysisConfig(
            algebra=RealFormDescriptor.parse(algebra),
            orbit=OrbitDescriptor.from_json(orbit),
            output=Path(output) if output is not None else None,
            **params,
        )

    def from_fixture(self, name: str, **overrides: Any) -> AnalysisConfig:
        info = get_fixture(name)
        return self.build(info["algebra"], info["orbit"], **overrides)

    def from_mapping(self, data: Dict[str, Any], **overrides: Any) -> AnalysisConfig:
        """
        Schema: algebra, orbit, and optionally max_degree, bound, seed,
        samples, output. A `fixture` key may replace algebra and orbit.
        """
        if not isinstance(data, dict):
            raise ConfigError("config must be a table")
        data = dict(data)
        fixture = data.pop("fixture", None)
        if fixture is not None:
            info = get_fixture(fixture)
            data.setdefault("algebra", info["algebra"])
            data.setdefault("orbit", info["orbit"])
        if "algebra" not in data or "orbit" not in data:
            raise ConfigError("config needs 'algebra' and 'orbit' (or 'fixture')")
        algebra = data.pop("algebra")
        orbit = data.pop("orbit")
        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return self.build(algebra, orbit, **data)
        except DescriptorError:
            raise
        except TypeError as exc:
            raise ConfigError(f"invalid config: {exc}") from exc

    def load(self, path: Path, **overrides: Any) -> AnalysisConfig:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        try:
            if path.suffix == ".toml":
                data = tomllib.loads(text)
            else:
                data = json.loads(text)
        except (tomllib.TOMLDecodeError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot parse config {path}: {exc}") from exc
        logger.info("loaded config %s", path)
        return self.from_mapping(data, **overrides)


config_manager = ConfigManager()
