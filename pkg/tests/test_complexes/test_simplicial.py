import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.complexes.bits import bits_of, mask_of, min_rotation, rotate_mask
from src.complexes.simplicial import SimplicialComplex
from src.exceptions import ComplexError, FaceNotInComplexError, VertexBudgetError

PENTAGON = SimplicialComplex.from_facets(5, [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]])
TWO_TRIANGLES = SimplicialComplex.from_facets(6, [[0, 2, 4], [1, 3, 5]])


class TestBits:
    def test_mask_round_trip(self):
        """Test conversion between vertex tuples and masks."""
        assert mask_of([0, 3]) == 0b1001
        assert bits_of(0b1001) == (0, 3)

    def test_negative_vertex(self):
        """Test that negative vertices are rejected."""
        with pytest.raises(ValueError):
            mask_of([-1])

    def test_rotate_wraps(self):
        """Test rotation modulo n."""
        assert rotate_mask(mask_of([3, 4]), 1, 5) == mask_of([0, 4])

    @given(st.integers(min_value=1, max_value=12), st.data())
    def test_min_rotation_is_orbit_invariant(self, n, data):
        """Property: every rotation of a set has the same orbit representative."""
        mask = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
        r = data.draw(st.integers(min_value=0, max_value=n - 1))
        assert min_rotation(rotate_mask(mask, r, n), n) == min_rotation(mask, n)


class TestConstruction:
    def test_non_maximal_sets_absorbed(self):
        """Test that generators contained in others are dropped."""
        complex_ = SimplicialComplex.from_facets(3, [[0], [0, 1], [2]])
        assert complex_.facet_lists() == [[0, 1], [2]]

    def test_canonical_order(self):
        """Test that facet order does not depend on input order."""
        shuffled = SimplicialComplex.from_facets(5, [[2, 4], [1, 3], [0, 2], [1, 4], [0, 3]])
        assert shuffled == PENTAGON

    def test_void_and_irrelevant(self):
        """Test the two degenerate complexes."""
        assert SimplicialComplex.void().is_void
        irrelevant = SimplicialComplex.irrelevant(3)
        assert irrelevant.is_irrelevant
        assert irrelevant.dim() == -1

    def test_vertex_outside_universe(self):
        """Test that facets must live on 0..n-1."""
        with pytest.raises(ComplexError):
            SimplicialComplex.from_facets(2, [[0, 2]])

    def test_vertex_budget(self):
        """Test the bit-vector width guard."""
        with pytest.raises(VertexBudgetError):
            SimplicialComplex.void(64)


class TestQueries:
    def test_dimension_and_purity(self):
        """Test dimension and purity of small complexes."""
        assert PENTAGON.dim() == 1
        assert PENTAGON.is_pure()
        impure = SimplicialComplex.from_facets(4, [[0, 1, 2], [3]])
        assert not impure.is_pure()

    def test_void_has_no_dimension(self):
        """Test that dim() of the void complex raises."""
        with pytest.raises(ComplexError):
            SimplicialComplex.void().dim()

    def test_f_vector(self):
        """Test face counts of the pentagon."""
        assert PENTAGON.f_vector() == [1, 5, 5]

    def test_faces_order(self):
        """Test that faces come grouped by size."""
        faces = list(PENTAGON.faces())
        assert faces[0] == 0
        assert len(faces) == 11
        assert list(PENTAGON.faces(descending=True))[-1] == 0

    def test_contains_face(self):
        """Test face membership."""
        assert PENTAGON.contains_face(mask_of([0, 2]))
        assert not PENTAGON.contains_face(mask_of([0, 1]))


class TestConstructions:
    def test_link_of_empty_face(self):
        """Test that the link of the empty face is the complex."""
        assert PENTAGON.link(0) == PENTAGON

    def test_link_of_vertex(self):
        """Test that a pentagon vertex link is two points."""
        assert PENTAGON.link(mask_of([0])).facet_lists() == [[2], [3]]

    def test_link_of_facet_is_irrelevant(self):
        """Test that the link of a facet is {∅}."""
        assert PENTAGON.link(mask_of([0, 2])).is_irrelevant

    def test_link_of_non_face(self):
        """Test that links are only taken at faces."""
        with pytest.raises(FaceNotInComplexError):
            PENTAGON.link(mask_of([0, 1]))

    def test_deletion(self):
        """Test vertex deletion absorbs shrunken facets."""
        assert PENTAGON.deletion(0).facet_lists() == [[1, 3], [1, 4], [2, 4]]

    def test_join_of_points(self):
        """Test that the join of two points is an edge."""
        joined = SimplicialComplex.simplex([0]).join(SimplicialComplex.simplex([1]))
        assert joined.facet_lists() == [[0, 1]]

    def test_join_needs_disjoint_vertices(self):
        """Test that overlapping joins are rejected."""
        with pytest.raises(ComplexError):
            PENTAGON.join(PENTAGON)

    def test_join_with_shifted_copy(self):
        """Test that shifting makes joins possible."""
        joined = PENTAGON.join(PENTAGON.shifted(5))
        assert joined.n_vertices == 10
        assert len(joined.facets) == 25
        assert joined.dim() == 3

    def test_rotation_invariance(self):
        """Test rotation invariance of the pentagon."""
        assert PENTAGON.is_rotation_invariant(5)
        assert PENTAGON.rotated(2, 5) == PENTAGON
        assert not SimplicialComplex.from_facets(5, [[0, 1]]).is_rotation_invariant(5)


class TestConnectivity:
    def test_connected(self):
        """Test 1-skeleton connectivity."""
        assert PENTAGON.is_connected()
        assert not TWO_TRIANGLES.is_connected()

    def test_connectivity_of_irrelevant_complex(self):
        """Test that connectivity is undefined for {∅}."""
        with pytest.raises(ComplexError):
            SimplicialComplex.irrelevant().is_connected()

    def test_strong_connectivity(self):
        """Test strong connectivity of pure complexes."""
        assert PENTAGON.is_strongly_connected()
        assert not TWO_TRIANGLES.is_strongly_connected()
        bowtie = SimplicialComplex.from_facets(5, [[0, 1, 2], [2, 3, 4]])
        assert bowtie.is_connected()
        assert not bowtie.is_strongly_connected()

    def test_strong_connectivity_needs_purity(self):
        """Test that impure complexes are rejected."""
        with pytest.raises(ComplexError):
            SimplicialComplex.from_facets(4, [[0, 1, 2], [3]]).is_strongly_connected()


class TestSerialization:
    def test_dict_round_trip(self):
        """Test dictionary serialization."""
        assert PENTAGON.to_dict() == {"n": 5, "facets": [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]}
        assert SimplicialComplex.from_dict(PENTAGON.to_dict()) == PENTAGON

    def test_malformed_dict(self):
        """Test that missing keys raise ComplexError."""
        with pytest.raises(ComplexError):
            SimplicialComplex.from_dict({"facets": [[0]]})

    def test_text_format(self):
        """Test the facet-per-line text format."""
        text = "# two triangles\n6\n0 2 4\n1 3 5\n"
        assert SimplicialComplex.from_text(text) == TWO_TRIANGLES
        assert SimplicialComplex.from_text(TWO_TRIANGLES.to_text()) == TWO_TRIANGLES

    def test_text_empty_facet(self):
        """Test that {} denotes the empty facet."""
        assert SimplicialComplex.from_text("2\n{}\n").is_irrelevant

    def test_malformed_text(self):
        """Test that junk input raises ComplexError."""
        with pytest.raises(ComplexError):
            SimplicialComplex.from_text("three\n0 1\n")
