import pytest

from src.circulant.families import plain_cycle, power_of_cycle
from src.classify.report import options_from_config
from src.complexes.independence import independence_complex
from src.config.config_manager import AppConfig, SearchConfig
from src.exceptions import CacheError
from src.models.common import Property
from src.models.report import ClassificationReport
from src.models.sweep import SweepResult
from src.storage.cache import ReportCache
from src.theorems.ids import TheoremId
from src.theorems.sweep import SweepTask, evaluate_instance, face_bound, verify_all, verify_theorem


@pytest.fixture
def config():
    return AppConfig()


@pytest.fixture
def cache(tmp_path, config):
    return ReportCache(tmp_path / "reports.jsonl", options_from_config(config).fingerprint())


class TestEvaluateInstance:
    def test_matching_instance(self, config):
        """Test an instance whose prediction holds."""
        result = evaluate_instance(SweepTask(theorem=TheoremId.S2_POWER_OF_CYCLE, params={"n": 11, "d": 2}), config)
        assert result.mismatches == []
        assert result.fresh
        assert result.report.s2 is True
        assert set(result.requested) == {Property.S2, Property.S2_TERAI}

    def test_structural_instance(self, config):
        """Test that a decomposition instance carries re-checked certificates."""
        result = evaluate_instance(SweepTask(theorem=TheoremId.DAVIS_DOMKE, params={"two_n": 12, "a": 2}), config)
        assert result.mismatches == []
        assert len(result.certificates) == 2
        assert result.notes["certificates_rechecked"] == 2

    def test_face_cap_skips_pure_instances(self):
        """Test that instances above the face cap are skipped rather than computed."""
        config = AppConfig(search=SearchConfig(face_cap=1))
        result = evaluate_instance(SweepTask(theorem=TheoremId.S2_CYCLES, params={"n": 5}), config)
        assert result.skipped.startswith("face bound")
        assert result.report is None

    def test_face_cap_keeps_impure_instances(self):
        """Test that impure complexes are decided in full, Terai's criterion included, without a face scan."""
        config = AppConfig(search=SearchConfig(face_cap=1))
        result = evaluate_instance(SweepTask(theorem=TheoremId.S2_CYCLES, params={"n": 6}), config)
        assert result.skipped is None
        assert not result.timed_out
        assert result.notes == {}
        assert result.report.s2 is False
        assert result.report.s2_terai == {0: False, 2: False, 3: False, 5: False}

    def test_face_cap_applies_per_join_factor(self):
        """Test Ind(C_12(2,4)), two joined copies of three disjoint edges: over the cap as a whole, decided per factor."""
        config = AppConfig(search=SearchConfig(face_cap=100))
        task = SweepTask(theorem=TheoremId.CM_ONE_PAIRED, params={"n": 12, "a": 2, "b": 3})
        result = evaluate_instance(task, config)
        assert result.skipped is None
        assert not result.timed_out
        assert result.mismatches == []
        assert result.report.cohen_macaulay_all_fields is False

    def test_unsearched_values_are_timeouts(self):
        """Test that searches left unset by the facet cap count as timeouts, not as agreement."""
        config = AppConfig(search=SearchConfig(search_facet_cap=1))
        result = evaluate_instance(SweepTask(theorem=TheoremId.CM_POWER_OF_CYCLE, params={"n": 5, "d": 1}), config)
        assert result.report.cohen_macaulay_all_fields is True
        assert result.report.shellable is None
        assert result.timed_out
        assert result.notes["unsearched"] == 2
        assert result.mismatches == []

    def test_cross_polytope_is_decided_factorwise(self, config):
        """Test Ind(C_26(13)), the 12-dimensional cross-polytope: CM, shellable and vertex decomposable."""
        task = SweepTask(theorem=TheoremId.CM_UPPER_INTERVAL, params={"n": 26, "d": 12})
        result = evaluate_instance(task, config)
        assert result.skipped is None
        assert not result.timed_out
        assert result.mismatches == []
        assert result.report.n_facets == 1 << 13
        assert result.report.shellable is True
        assert result.report.vertex_decomposable is True

    def test_cached_report_breaking_the_hierarchy(self, config):
        """Test that a cached report claiming shellable but not CM is a mismatch even when predictions agree."""
        cached = ClassificationReport(
            subject="C_7(1)",
            s2=True,
            s2_terai={0: True, 2: True, 3: True, 5: True},
            cohen_macaulay_all_fields=False,
            shellable=True,
        )
        result = evaluate_instance(SweepTask(theorem=TheoremId.S2_CYCLES, params={"n": 7}, cached=cached), config)
        assert not result.fresh
        assert [m.property for m in result.mismatches] == ["hierarchy"]
        assert result.mismatches[0].computed == "shellable but not Cohen–Macaulay over every field"

    def test_face_bound(self):
        """Test the face bound of the pentagon: five edges with four subsets each."""
        assert face_bound(independence_complex(power_of_cycle(5, 1).graph)) == 20


class TestVerifyTheorem:
    def test_cycles_pass(self, config):
        """Test the plain-cycle sweep up to eight vertices."""
        sweep = verify_theorem("s2-cycles", config, max_n=8)
        assert sweep.passed
        assert sweep.instances_checked == 6
        assert sweep.theorem == "s2-cycles"

    def test_power_of_cycle_pass(self, config):
        """Test the S_2 sweep over powers of cycles."""
        sweep = verify_theorem(TheoremId.S2_POWER_OF_CYCLE, config, max_n=11)
        assert sweep.passed
        assert sweep.mismatches == []

    def test_skipped_instances_fail_the_sweep(self):
        """Test that skipped instances are reported apart from mismatches and fail the sweep."""
        sweep = verify_theorem("s2-cycles", AppConfig(search=SearchConfig(face_cap=1)), max_n=8)
        assert not sweep.passed
        assert sweep.mismatches == []
        assert len(sweep.skipped) + sweep.instances_checked == 6
        assert sweep.skipped

    def test_cache_is_reused_and_spot_checked(self, config, cache):
        """Test that a second run reads the cache and spot-checks the first hit."""
        first = verify_theorem("s2-cycles", config, cache=cache, max_n=7)
        assert cache.stores == 5
        assert not cache.spot_checked

        second = verify_theorem("s2-cycles", config, cache=cache, max_n=7)
        assert cache.spot_checked
        assert cache.hits == 5
        assert cache.stores == 5
        assert second.to_json() == first.to_json()

    def test_corrupted_cache_value_is_detected(self, config, cache):
        """Test that the spot check rejects a cached value that disagrees with recomputation."""
        verify_theorem("s2-cycles", config, cache=cache, max_n=5)
        triangle = power_of_cycle(3, 1).graph.key()
        for key, report in list(cache.entries.items()):
            if key.startswith(triangle):
                cache.entries[key] = report.model_copy(update={"s2": not report.s2})
        with pytest.raises(CacheError):
            verify_theorem("s2-cycles", config, cache=cache, max_n=5)

    @pytest.mark.slow
    def test_parallel_matches_serial(self, config):
        """Test that results do not depend on the number of workers."""
        serial = verify_theorem(TheoremId.S2_ONE_PAIRED, config, max_n=12)
        parallel = verify_theorem(TheoremId.S2_ONE_PAIRED, config, jobs=2, max_n=12)
        assert parallel.to_json() == serial.to_json()
        assert serial.passed

    def test_inconsistent_cached_report_fails_the_sweep(self, config, cache):
        """Test that a hierarchy violation read from the cache survives the spot check and fails the sweep."""
        seven_cycle = plain_cycle(7).graph
        computed = evaluate_instance(SweepTask(theorem=TheoremId.S2_CYCLES, params={"n": 7}), config).report
        cache.store(seven_cycle, computed.model_copy(update={"shellable": True, "cohen_macaulay_all_fields": False}))

        sweep = verify_theorem("s2-cycles", config, cache=cache, max_n=7)

        assert cache.spot_checked
        assert not sweep.passed
        assert [(m.params, m.property) for m in sweep.mismatches] == [({"n": 7}, "hierarchy")]


class TestVerifyAll:
    def test_selected_theorems_in_order(self, config, mocker):
        """Test that the given theorems are swept in order and announced one by one."""
        progress = mocker.Mock()
        results = verify_all(config, max_n=6, theorems=["s2-cycles", TheoremId.WC_POWER_OF_CYCLE], progress=progress)
        assert [r.theorem for r in results] == ["s2-cycles", "wc-power-of-cycle"]
        assert [c.args[0] for c in progress.call_args_list] == [TheoremId.S2_CYCLES, TheoremId.WC_POWER_OF_CYCLE]
        assert all(r.passed for r in results)

    def test_defaults_to_every_theorem(self, config, mocker):
        """Test that without a selection every theorem id is swept."""
        sweep = mocker.patch("src.theorems.sweep.verify_theorem", side_effect=lambda t, *a, **k: SweepResult(theorem=t.value))
        results = verify_all(config)
        assert [r.theorem for r in results] == [t.value for t in TheoremId]
        assert sweep.call_count == len(TheoremId)


@pytest.mark.slow
class TestDefaultBounds:
    @pytest.mark.parametrize("theorem", list(TheoremId))
    def test_theorem_holds_at_default_bounds(self, theorem):
        """Test every theorem at the configured sweep bounds: nothing mismatched, timed out, skipped or unsearched."""
        sweep = verify_theorem(theorem, AppConfig())
        assert sweep.mismatches == []
        assert sweep.timeouts == []
        assert sweep.skipped == []
        assert "terai_unchecked" not in sweep.notes
        assert "unsearched" not in sweep.notes
        assert sweep.passed
