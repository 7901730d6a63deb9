import json

from src.circulant.graph import make_circulant
from src.classify.report import LOGIC_VERSION, ClassifyOptions, classify_graph
from src.models.common import Property
from src.models.report import ClassificationReport
from src.storage.cache import ReportCache, cache_key

GRAPH = make_circulant(7, [1])
OPTIONS = ClassifyOptions().fingerprint()


def partial_report(**values) -> ClassificationReport:
    return ClassificationReport(subject=GRAPH.label, graph=GRAPH.model_dump(), **values)


class TestCacheKey:
    def test_key_components(self):
        """Test that the key joins graph, logic version and options."""
        key = cache_key(GRAPH, OPTIONS)
        assert key == f'{{"n":7,"gens":[1]}}|{LOGIC_VERSION}|{OPTIONS}'

    def test_generator_order_is_canonical(self):
        """Test that generator order does not change the key."""
        assert cache_key(make_circulant(8, [4, 1]), OPTIONS) == cache_key(make_circulant(8, [1, 4]), OPTIONS)


class TestReportCache:
    def test_miss_then_hit(self, tmp_path):
        """Test lookup before and after storing."""
        cache = ReportCache(tmp_path / "cache.jsonl", OPTIONS)
        assert cache.lookup(GRAPH) is None
        cache.store(GRAPH, partial_report(s2=True))
        assert cache.lookup(GRAPH).s2 is True
        assert cache.get_stats()["hits"] == 1
        assert cache.get_stats()["misses"] == 1

    def test_persists_across_instances(self, tmp_path):
        """Test that a fresh cache reads earlier lines, integer-keyed maps included."""
        path = tmp_path / "cache.jsonl"
        report = classify_graph(GRAPH)
        ReportCache(path, OPTIONS).store(GRAPH, report)
        loaded = ReportCache(path, OPTIONS).lookup(GRAPH)
        assert loaded.model_dump(exclude={"graph"}) == report.model_dump(exclude={"graph"})
        assert loaded.cohen_macaulay == {0: False, 2: False, 3: False, 5: False}

    def test_partial_reports_merge(self, tmp_path):
        """Test that later lines fill properties missing from earlier ones."""
        path = tmp_path / "cache.jsonl"
        cache = ReportCache(path, OPTIONS)
        cache.store(GRAPH, partial_report(s2=True))
        merged = cache.store(GRAPH, partial_report(well_covered=True, s2=False))
        assert merged.s2 is True
        assert merged.well_covered is True
        reloaded = ReportCache(path, OPTIONS).lookup(GRAPH)
        assert reloaded.missing([Property.S2, Property.WELL_COVERED]) == []

    def test_corrupt_line_is_skipped(self, tmp_path):
        """Test that an unparsable line is counted and ignored."""
        path = tmp_path / "cache.jsonl"
        ReportCache(path, OPTIONS).store(GRAPH, partial_report(s2=True))
        with open(path, "a", encoding="utf-8") as f:
            f.write('{"key": "truncated\n\n')
        cache = ReportCache(path, OPTIONS)
        assert cache.corrupt_lines == 1
        assert cache.lookup(GRAPH).s2 is True

    def test_other_options_are_ignored(self, tmp_path):
        """Test that entries written under other options are not visible."""
        path = tmp_path / "cache.jsonl"
        ReportCache(path, OPTIONS).store(GRAPH, partial_report(s2=True))
        other = ClassifyOptions(characteristics=(0,)).fingerprint()
        assert ReportCache(path, other).lookup(GRAPH) is None

    def test_other_logic_version_is_ignored(self, tmp_path):
        """Test that entries from an older logic version are not visible."""
        path = tmp_path / "cache.jsonl"
        ReportCache(path, OPTIONS).store(GRAPH, partial_report(s2=True))
        line = json.loads(path.read_text().splitlines()[0])
        line["version"] = "older-logic"
        path.write_text(json.dumps(line) + "\n")
        assert ReportCache(path, OPTIONS).lookup(GRAPH) is None

    def test_store_creates_parent_directory(self, tmp_path):
        """Test that storing creates missing directories."""
        cache = ReportCache(tmp_path / "nested" / "cache.jsonl", OPTIONS)
        cache.store(GRAPH, partial_report(s2=True))
        assert (tmp_path / "nested" / "cache.jsonl").exists()
        assert cache.get_stats()["stores"] == 1

