"""
On-disk report cache keyed by a content hash of the analysis inputs.
"""

from __future__ import annotations
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from engine.core.report import OrbitReport
from engine.errors import InputError

logger = logging.getLogger(__name__)


def cache_key(key_data: Dict[str, Any]) -> str:
    canonical = json.dumps(key_data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ReportCache:
    __slots__ = ("directory",)

    def __init__(self, directory: Path) -> None:
        self.directory = Path(directory)

    def path_for(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def load(self, key: str) -> Optional[OrbitReport]:
        path = self.path_for(key)
        if not path.exists():
            return None
        try:
            report = OrbitReport.loads(path.read_text(encoding="utf-8"))
        except InputError:
            logger.warning("ignoring unreadable cached report %s", path)
            return None
        logger.info("loaded cached report %s", path)
        return report

    def store(self, key: str, report: OrbitReport) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(key)
        path.write_text(report.dumps(), encoding="utf-8")
        logger.info("cached report %s", path)
        return path
