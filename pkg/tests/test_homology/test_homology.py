import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.complexes.simplicial import SimplicialComplex
from src.exceptions import ComplexError, FieldSpecError
from src.homology.chains import boundary_matrix, faces_of_dimension
from src.homology.field import betti_over_field, field_rank
from src.homology.profile import FieldSpec, betti, reduced_homology
from src.homology.snf import smith_normal_form

PROJECTIVE_PLANE = SimplicialComplex.from_facets(
    6,
    [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
    ],
)
PENTAGON = SimplicialComplex.from_facets(5, [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]])
TETRAHEDRON_BOUNDARY = SimplicialComplex.from_facets(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])

small_complexes = st.lists(
    st.sets(st.integers(min_value=0, max_value=5), min_size=1, max_size=4), min_size=1, max_size=8
).map(lambda facets: SimplicialComplex.from_facets(6, facets))


class TestSmithNormalForm:
    def test_single_entry(self):
        """Test a 1x1 matrix."""
        form = smith_normal_form([[2]])
        assert form.rank == 1
        assert form.torsion == (2,)

    def test_divisibility_chain(self):
        """Test that diag(2, 3) becomes diag(1, 6)."""
        assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)

    def test_rank_deficient(self):
        """Test a rank-one matrix."""
        form = smith_normal_form([[1, 2], [2, 4]])
        assert form.rank == 1
        assert form.torsion == ()

    def test_empty_matrix(self):
        """Test empty input."""
        assert smith_normal_form([]).rank == 0
        assert smith_normal_form([[], []]).rank == 0

    def test_negative_entries(self):
        """Test that invariant factors are positive."""
        assert smith_normal_form([[-4, 0], [0, -2]]).invariant_factors == (2, 4)

    @given(st.lists(st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3), min_size=1, max_size=4))
    def test_rank_matches_rational_rank(self, matrix):
        """Property: the number of invariant factors is the rank over Q."""
        assert smith_normal_form(matrix).rank == field_rank(matrix, 0)

    @given(st.lists(st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3), min_size=1, max_size=4))
    def test_invariant_factors_divide(self, matrix):
        """Property: each invariant factor divides the next."""
        factors = smith_normal_form(matrix).invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


class TestChains:
    def test_empty_face_basis(self):
        """Test that C_-1 is spanned by the empty face."""
        assert faces_of_dimension(PENTAGON, -1) == (0,)

    def test_augmentation(self):
        """Test that the boundary of a vertex is the empty face."""
        assert boundary_matrix(PENTAGON, 0) == [[1] * 5]

    def test_boundary_squares_to_zero(self):
        """Test that d_1 d_2 = 0 on the tetrahedron boundary."""
        d1 = boundary_matrix(TETRAHEDRON_BOUNDARY, 1)
        d2 = boundary_matrix(TETRAHEDRON_BOUNDARY, 2)
        product = [[sum(d1[r][k] * d2[k][c] for k in range(len(d2))) for c in range(len(d2[0]))] for r in range(len(d1))]
        assert all(v == 0 for row in product for v in row)

    def test_dimension_out_of_range(self):
        """Test that boundary maps above the dimension are rejected."""
        with pytest.raises(ComplexError):
            boundary_matrix(PENTAGON, 2)


class TestReducedHomology:
    def test_circle(self):
        """Test that the pentagon has H~_1 = Z and connected H~_0 = 0."""
        profile = reduced_homology(PENTAGON)
        assert profile.group(0).vanishes
        assert profile.group(1).rank == 1

    def test_two_components(self):
        """Test that two disjoint triangles have H~_0 = Z."""
        profile = reduced_homology(SimplicialComplex.from_facets(6, [[0, 2, 4], [1, 3, 5]]))
        assert profile.group(0).rank == 1
        assert profile.group(1).vanishes

    def test_irrelevant_complex(self):
        """Test that {∅} has H~_-1 of rank one."""
        profile = reduced_homology(SimplicialComplex.irrelevant())
        assert profile.group(-1).rank == 1

    def test_sphere(self):
        """Test the boundary of the tetrahedron."""
        profile = reduced_homology(TETRAHEDRON_BOUNDARY)
        assert [g.rank for g in profile.dims] == [0, 0, 0, 1]

    def test_projective_plane_torsion(self):
        """Test that the six-vertex projective plane has H~_1 = Z/2."""
        profile = reduced_homology(PROJECTIVE_PLANE)
        assert profile.group(1).rank == 0
        assert profile.group(1).torsion == (2,)
        assert profile.group(2).vanishes

    def test_projective_plane_betti_depends_on_field(self):
        """Test universal coefficients: characteristic 2 sees the torsion."""
        profile = reduced_homology(PROJECTIVE_PLANE)
        assert profile.betti(1, 0) == 0
        assert profile.betti(1, 2) == 1
        assert profile.betti(2, 2) == 1
        assert profile.betti(1, 3) == 0

    def test_truncated_profile(self):
        """Test that a truncated profile refuses dimensions it did not compute."""
        profile = reduced_homology(TETRAHEDRON_BOUNDARY, max_dim=0)
        assert profile.group(0).vanishes
        with pytest.raises(ComplexError):
            profile.group(2)

    def test_groups_outside_range_vanish(self):
        """Test that groups above the dimension are zero."""
        assert reduced_homology(PENTAGON).group(4).vanishes

    def test_void_complex(self):
        """Test that homology of the void complex is undefined."""
        with pytest.raises(ComplexError):
            reduced_homology(SimplicialComplex.void())

    def test_betti_helper(self):
        """Test the single-number helper."""
        assert betti(PROJECTIVE_PLANE, 1, 2) == 1
        assert betti(PROJECTIVE_PLANE, 5, 2) == 0


class TestFieldSpec:
    def test_rationals_by_default(self):
        """Test the default field."""
        assert FieldSpec().characteristic == 0
        assert str(FieldSpec()) == "Q"
        assert str(FieldSpec(characteristic=3)) == "GF(3)"

    def test_non_prime_rejected(self):
        """Test that non-prime characteristics are rejected."""
        with pytest.raises(FieldSpecError):
            FieldSpec.of(4)
        with pytest.raises(ValidationError):
            FieldSpec(characteristic=6)


class TestFieldOracle:
    def test_projective_plane(self):
        """Test field elimination on the projective plane."""
        assert betti_over_field(PROJECTIVE_PLANE, 1, 0) == 0
        assert betti_over_field(PROJECTIVE_PLANE, 1, 2) == 1
        assert betti_over_field(PROJECTIVE_PLANE, 2, 2) == 1

    def test_field_rank_mod_p(self):
        """Test that rank drops modulo a dividing prime."""
        assert field_rank([[2, 0], [0, 1]], 0) == 2
        assert field_rank([[2, 0], [0, 1]], 2) == 1

    @settings(max_examples=40, deadline=None)
    @given(small_complexes, st.sampled_from([0, 2, 3, 5]))
    def test_snf_agrees_with_field_elimination(self, complex_, k):
        """Property: Betti numbers from the Smith form match field elimination."""
        profile = reduced_homology(complex_)
        for i in range(-1, complex_.dim() + 1):
            assert profile.betti(i, k) == betti_over_field(complex_, i, k)
