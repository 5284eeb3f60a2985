import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracpow.exceptions import InvalidGraphError
from fracpow.generators import complete, cycle, path
from fracpow.graph import (
    Branch,
    Graph,
    Inner,
    Middle,
    distances_from,
    fractional_power,
    induced_subgraph,
    power,
    subdivide,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def circulant(n, jumps):
    return Graph(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})


class TestGraph:
    def test_canonical_edges(self):
        g = Graph(3, [(2, 0), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.adjacency == ((1, 2), (0,), (0,))
        assert g.edge_id(2, 0) == 1

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(InvalidGraphError):
            Graph(3, edges)

    def test_networkx_round_trip(self):
        g = cycle(6)
        assert Graph.from_networkx(g.to_networkx()) == g


class TestSubdivide:
    def test_single_edge_becomes_path(self):
        fp = subdivide(complete(2), 3)
        assert fp.graph == Graph(4, [(0, 2), (2, 3), (1, 3)])
        assert fp.roles == (Branch(0), Branch(1), Inner(0, 0, 1), Inner(0, 1, 1))
        assert fp.hub == ((2,), (3,))

    def test_triangle_becomes_nine_cycle(self):
        h = subdivide(cycle(3), 3).graph
        assert nx.is_isomorphic(h.to_networkx(), nx.cycle_graph(9))

    def test_identity(self):
        assert subdivide(path(3), 1).graph == path(3)

    def test_even_subdivision_has_middles(self):
        fp = subdivide(complete(2), 4)
        assert fp.roles[fp.middle_vertex(0)] == Middle(0)
        assert sum(isinstance(r, Middle) for r in fp.roles) == 1
        assert fp.middle_vertex(0) not in fp.hub[0] + fp.hub[1]

    def test_inner_vertex_numbering(self):
        fp = subdivide(cycle(3), 5)
        for eid in range(3):
            for host in fp.base.edges[eid]:
                for depth in (1, 2):
                    x = fp.inner_vertex(eid, host, depth)
                    assert fp.roles[x] == Inner(eid, host, depth)
                    assert distances_from(fp.graph, host, 5)[x] == depth


class TestPower:
    def test_p4_cubed_is_k4(self):
        assert power(path(4), 3) == complete(4)

    def test_identity(self):
        assert power(cycle(9), 1) == cycle(9)

    def test_c9_cubed(self):
        h = power(cycle(9), 3)
        assert h == circulant(9, (1, 2, 3))
        assert all(h.degree(v) == 6 for v in range(9))

    @given(graphs(), st.integers(1, 4))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_networkx(self, g, m):
        expected = nx.power(g.to_networkx(), m) if g.n else nx.empty_graph(0)
        assert power(g, m) == Graph.from_networkx(expected)


class TestFractionalPower:
    def test_k2_cube(self):
        assert fractional_power(complete(2), 3, 3).graph == complete(4)

    def test_c3_cube(self):
        h = fractional_power(cycle(3), 3, 3).graph
        assert nx.is_isomorphic(h.to_networkx(), circulant(9, (1, 2, 3)).to_networkx())

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_identity(self, g):
        assert fractional_power(g, 1, 1).graph == g

    @given(graphs(), st.integers(1, 5))
    @settings(max_examples=60, deadline=None)
    def test_vertex_and_role_counts(self, g, n):
        fp = subdivide(g, n)
        assert fp.graph.n == g.n + g.num_edges * (n - 1)
        assert fp.graph.num_edges == g.num_edges * n
        middles = sum(isinstance(r, Middle) for r in fp.roles)
        assert middles == (g.num_edges if n % 2 == 0 else 0)
        for v in range(g.n):
            assert len(fp.hub[v]) == g.degree(v) * ((n - 1) // 2)

    @given(graphs(max_n=6), st.integers(2, 5))
    @settings(max_examples=40, deadline=None)
    def test_branch_vertices_adjacent_iff_edge(self, g, k):
        # branch vertices are k apart along a subdivided edge
        h = fractional_power(g, k, k).graph
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert h.has_edge(u, v) == g.has_edge(u, v)


class TestDistances:
    def test_path_endpoint(self):
        assert distances_from(path(4), 0, 3) == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_cycle_cap(self):
        assert len(distances_from(cycle(9), 4, 3)) == 7

    def test_component_only(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert distances_from(g, 0, 3) == {0: 0, 1: 1}


def test_induced_subgraph():
    sub, keep = induced_subgraph(cycle(5), [4, 0, 1])
    assert keep == [0, 1, 4]
    assert sub.edges == ((0, 1), (0, 2))
