import networkx as nx
import pytest

from fracpow.exceptions import InvalidGraphError
from fracpow.generators import FAMILIES, cycle, generate, hypercube, paley, random_regular


def test_hypercube():
    g = hypercube(3)
    assert (g.n, g.num_edges) == (8, 12)
    assert all(g.degree(v) == 3 for v in range(8))


def test_paley_5_is_c5():
    assert paley(5) == cycle(5)


def test_paley_13():
    g = paley(13)
    assert (g.n, g.num_edges) == (13, 39)
    assert {g.degree(v) for v in range(13)} == {6}
    assert nx.is_isomorphic(g.to_networkx(), nx.paley_graph(13).to_undirected())


@pytest.mark.parametrize("q", [7, 9, 15])
def test_paley_rejects(q):
    with pytest.raises((InvalidGraphError, ValueError)):
        paley(q)


def test_random_regular_deterministic():
    a, b = random_regular(10, 3, seed=1), random_regular(10, 3, seed=1)
    assert a == b
    assert {a.degree(v) for v in range(10)} == {3}


def test_stochastic_families_need_seed():
    with pytest.raises(ValueError):
        generate("random_regular", 10, 3)
    with pytest.raises(ValueError):
        generate("erdos_renyi", 10, 0.5)


def test_generate_dispatch():
    assert "paley" in FAMILIES
    assert generate("cycle", 9) == cycle(9)
    assert generate("erdos_renyi", 20, 0.3, seed=4) == generate("erdos_renyi", 20, 0.3, seed=4)
