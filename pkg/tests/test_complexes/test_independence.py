import networkx as nx
from hypothesis import given

from src.circulant.graph import disjoint_union, make_circulant
from src.complexes.bits import mask_of
from src.complexes.independence import complement_adjacency, independence_complex, maximal_independent_sets
from tests.test_circulant.test_graph import circulants, to_networkx


class TestIndependenceComplex:
    def test_complete_bipartite(self):
        """Test that Ind(C_6(1,3)) is two disjoint triangles."""
        ind = independence_complex(make_circulant(6, [1, 3]))
        assert ind.facet_lists() == [[0, 2, 4], [1, 3, 5]]

    def test_pentagon(self):
        """Test that Ind(C_5) is again a pentagon."""
        ind = independence_complex(make_circulant(5, [1]))
        assert ind.facet_lists() == [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]

    def test_impure_complex(self):
        """Test that Ind(C_9(1,2)) has facets of sizes 2 and 3."""
        ind = independence_complex(make_circulant(9, [1, 2]))
        assert {len(f) for f in ind.facet_lists()} == {2, 3}
        assert not ind.is_pure()

    def test_perfect_matching_gives_cross_polytope(self):
        """Test that Ind(C_8(4)) has one vertex from each of four pairs per facet."""
        ind = independence_complex(make_circulant(8, [4]))
        assert len(ind.facets) == 16
        assert ind.is_pure()
        assert ind.dim() == 3

    def test_edgeless_graph(self):
        """Test that an edgeless graph gives a simplex."""
        ind = independence_complex(make_circulant(4, []))
        assert ind.facets == (mask_of(range(4)),)

    def test_complete_graph(self):
        """Test that a complete graph gives isolated points."""
        ind = independence_complex(make_circulant(5, [1, 2]))
        assert ind.dim() == 0
        assert len(ind.facets) == 5

    def test_disjoint_union_is_join(self):
        """Test Ind(G + H) = Ind(G) * Ind(H)."""
        first, second = make_circulant(5, [1]), make_circulant(4, [1])
        union = independence_complex(disjoint_union(first, second))
        joined = independence_complex(first).join(independence_complex(second).shifted(5))
        assert union == joined

    def test_complement_has_no_loops(self):
        """Test complement adjacency."""
        comp = complement_adjacency(make_circulant(4, [1]))
        assert comp == (0b0100, 0b1000, 0b0001, 0b0010)

    @given(circulants())
    def test_facets_match_networkx_cliques(self, graph):
        """Property: facets are the maximal cliques of the complement graph."""
        expected = {frozenset(c) for c in nx.find_cliques(nx.complement(to_networkx(graph)))}
        found = {frozenset(f) for f in independence_complex(graph).facet_lists()}
        assert found == expected

    @given(circulants())
    def test_rotation_invariant(self, graph):
        """Property: Ind of a circulant is invariant under rotation."""
        assert independence_complex(graph).is_rotation_invariant(graph.n)

    @given(circulants())
    def test_enumeration_has_no_duplicates(self, graph):
        """Property: each maximal independent set is produced once."""
        found = list(maximal_independent_sets(graph))
        assert len(found) == len(set(found))
