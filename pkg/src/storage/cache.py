"""Append-only JSON-lines cache of classification reports."""

from pathlib import Path

from pydantic import BaseModel, ValidationError

from src.circulant.graph import CirculantGraph
from src.classify.report import LOGIC_VERSION
from src.exceptions import CacheError
from src.models.report import ClassificationReport
from src.utils.logging import get_logger

logger = get_logger(__name__)


class CacheEntry(BaseModel):
    key: str
    version: str
    options: str
    report: ClassificationReport


def cache_key(graph: CirculantGraph, options_fingerprint: str) -> str:
    """Canonical graph serialization plus the logic version and option fingerprint."""
    return f"{graph.key()}|{LOGIC_VERSION}|{options_fingerprint}"


class ReportCache:
    """
    Reports keyed by graph, loaded into memory and appended to on store.

    Later lines for the same key are merged into earlier ones, so partial
    reports computed for different sweeps accumulate.
    """

    def __init__(self, path: str | Path, options_fingerprint: str):
        self.path = Path(path)
        self.options = options_fingerprint
        self.entries: dict[str, ClassificationReport] = {}
        self.hits = 0
        self.misses = 0
        self.stores = 0
        self.corrupt_lines = 0
        self.spot_checked = False
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, "r", encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    entry = CacheEntry.model_validate_json(line)
                except (ValidationError, ValueError) as e:
                    self.corrupt_lines += 1
                    logger.warning(f"Skipping corrupt cache line {number} in {self.path}: {str(e).splitlines()[0]}")
                    continue
                if entry.version != LOGIC_VERSION or entry.options != self.options:
                    continue
                previous = self.entries.get(entry.key)
                self.entries[entry.key] = entry.report if previous is None else previous.merged(entry.report)
        logger.debug(f"Loaded {len(self.entries)} cached reports from {self.path}")

    def lookup(self, graph: CirculantGraph) -> ClassificationReport | None:
        report = self.entries.get(cache_key(graph, self.options))
        if report is None:
            self.misses += 1
        else:
            self.hits += 1
        return report

    def store(self, graph: CirculantGraph, report: ClassificationReport) -> ClassificationReport:
        """Append ``report`` and return the merged view now held for ``graph``."""
        key = cache_key(graph, self.options)
        entry = CacheEntry(key=key, version=LOGIC_VERSION, options=self.options, report=report)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(entry.model_dump_json() + "\n")
        except OSError as e:
            raise CacheError(f"Cannot write cache {self.path}: {e}", {"path": str(self.path)}) from e
        previous = self.entries.get(key)
        self.entries[key] = report if previous is None else previous.merged(report)
        self.stores += 1
        return self.entries[key]

    def get_stats(self) -> dict:
        """Cache statistics for ``--stats``."""
        return {
            "path": str(self.path),
            "entries": len(self.entries),
            "hits": self.hits,
            "misses": self.misses,
            "stores": self.stores,
            "corrupt_lines": self.corrupt_lines,
        }

