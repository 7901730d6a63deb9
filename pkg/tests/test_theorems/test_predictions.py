import pytest

from src.exceptions import ParameterDomainError
from src.theorems.ids import TheoremId, parse_theorem
from src.theorems.predictions import PREDICTORS, predict


class TestParseTheorem:
    @pytest.mark.parametrize(
        "value,expected",
        [
            ("s2-cycles", TheoremId.S2_CYCLES),
            ("S2_PowerOfCycle", TheoremId.S2_POWER_OF_CYCLE),
            ("WC_UPPER_INTERVAL", TheoremId.WC_UPPER_INTERVAL),
            ("davis-domke", TheoremId.DAVIS_DOMKE),
        ],
    )
    def test_accepted_spellings(self, value, expected):
        """Test kebab-case ids, member names and CamelCase forms."""
        assert parse_theorem(value) is expected

    def test_unknown(self):
        """Test that unknown ids are rejected."""
        with pytest.raises(ValueError, match="Unknown theorem"):
            parse_theorem("s4-everything")

    def test_every_theorem_has_a_predictor(self):
        """Test that the predictor table covers every id."""
        assert set(PREDICTORS) == set(TheoremId)


class TestPowerOfCycle:
    def test_s2_at_four_d_plus_three(self):
        """Test C_11(1,2): S_2 with dimension 2."""
        assert predict("s2-power-of-cycle", {"n": 11, "d": 2}) == {"s2": True, "dimension": 2}

    def test_s2_fails_at_two_d_plus_two(self):
        """Test C_6(1,2): Buchsbaum but not S_2."""
        assert predict(TheoremId.S2_POWER_OF_CYCLE, {"n": 6, "d": 2})["s2"] is False
        assert predict(TheoremId.BUCHS_NOT_S2_POWER_OF_CYCLE, {"n": 6, "d": 2}) == {"buchsbaum_not_s2": True}

    def test_cm_range(self):
        """Test that CM, shellable and vertex decomposable are predicted together."""
        assert predict(TheoremId.CM_POWER_OF_CYCLE, {"n": 8, "d": 2}) == {
            "cohen_macaulay_all_fields": True,
            "shellable": True,
            "vertex_decomposable": True,
        }
        assert predict(TheoremId.CM_POWER_OF_CYCLE, {"n": 11, "d": 2})["cohen_macaulay_all_fields"] is False

    def test_well_covered(self):
        """Test the well-covered characterization."""
        assert predict(TheoremId.WC_POWER_OF_CYCLE, {"n": 11, "d": 2}) == {"well_covered": True}
        assert predict(TheoremId.WC_POWER_OF_CYCLE, {"n": 9, "d": 2}) == {"well_covered": False}

    def test_domain(self):
        """Test that n < 2d is outside the domain."""
        with pytest.raises(ParameterDomainError):
            predict(TheoremId.S2_POWER_OF_CYCLE, {"n": 3, "d": 2})

    def test_missing_parameter(self):
        """Test that a missing parameter is a domain error."""
        with pytest.raises(ParameterDomainError, match="Missing"):
            predict(TheoremId.S2_POWER_OF_CYCLE, {"n": 7})


class TestOtherFamilies:
    def test_cycles(self):
        """Test the plain cycles."""
        assert predict(TheoremId.S2_CYCLES, {"n": 7}) == {"s2": True, "cohen_macaulay_all_fields": False}

    def test_upper_interval(self):
        """Test both branches of the upper-interval characterization."""
        assert predict(TheoremId.S2_UPPER_INTERVAL, {"n": 10, "d": 3}) == {"s2": True}
        assert predict(TheoremId.S2_UPPER_INTERVAL, {"n": 9, "d": 3}) == {"s2": False}
        assert predict(TheoremId.S2_UPPER_INTERVAL, {"n": 8, "d": 3}) == {"s2": True}

    def test_interval_links_domain(self):
        """Test that the interval-link result needs n > 3d and d > 1."""
        with pytest.raises(ParameterDomainError):
            predict(TheoremId.INTERVAL_LINKS_UPPER_INTERVAL, {"n": 8, "d": 3})

    def test_omit_one(self):
        """Test S_2 and dimension for the omit-one family."""
        assert predict(TheoremId.S2_OMIT_ONE, {"n": 9, "i": 3})["s2"] is False
        assert predict(TheoremId.S2_OMIT_ONE, {"n": 9, "i": 3})["dimension"] == 2
        assert predict(TheoremId.S2_OMIT_ONE, {"n": 9, "i": 2})["dimension"] == 1

    def test_one_paired(self):
        """Test that C(12; 2, 3) is well-covered but not S_2."""
        assert predict(TheoremId.S2_ONE_PAIRED, {"n": 12, "a": 2, "b": 3}) == {"s2": False, "well_covered": True}
        assert predict(TheoremId.STRUCTURE_ONE_PAIRED, {"n": 12, "a": 2, "b": 3})["part_size"] == 2

    def test_one_paired_domain(self):
        """Test that ab must divide n."""
        with pytest.raises(ParameterDomainError):
            predict(TheoremId.S2_ONE_PAIRED, {"n": 10, "a": 2, "b": 3})

    def test_cubic(self):
        """Test the cubic quotients."""
        assert predict(TheoremId.S2_CUBIC, {"two_n": 16, "a": 2}) == {"s2": True}
        assert predict(TheoremId.S2_CUBIC, {"two_n": 12, "a": 2}) == {"s2": False}
        assert predict(TheoremId.S2_CUBIC_CONNECTED, {"two_n": 6, "a": 1}) == {"well_covered_not_s2": True}

    def test_connected_cubic_domain(self):
        """Test that disconnected cubic circulants are rejected."""
        with pytest.raises(ParameterDomainError, match="not connected"):
            predict(TheoremId.WC_CUBIC_CONNECTED, {"two_n": 12, "a": 2})

    def test_davis_domke(self):
        """Test the component description of C_12(2,6)."""
        assert predict(TheoremId.DAVIS_DOMKE, {"two_n": 12, "a": 2}) == {
            "components": 2,
            "component_n": 6,
            "component_gens": [1, 3],
        }


class TestPairs:
    def test_join(self):
        """Test that a join is S_2 exactly when both parts are."""
        assert predict(TheoremId.JOIN_S2, {"first_s2": True, "second_s2": True}) == {"s2": True}
        assert predict(TheoremId.JOIN_S2, {"first_s2": True, "second_s2": False}) == {"s2": False}

    def test_union_hypothesis(self):
        """Test that the union result requires Buchsbaum non-CM parts."""
        facts = {"first_buchsbaum": True, "first_cm": False, "second_buchsbaum": True, "second_cm": False}
        assert predict(TheoremId.UNION_NOT_BUCHSBAUM, facts) == {"buchsbaum_all_fields": False}
        with pytest.raises(ParameterDomainError):
            predict(TheoremId.UNION_NOT_BUCHSBAUM, {**facts, "second_cm": True})
