import pytest
from hypothesis import given, settings
from test_graph import graphs

from fracpow.exceptions import InvalidGraphError
from fracpow.generators import cycle
from fracpow.graph import fractional_power
from fracpow.io import (
    format_colouring,
    format_decomposition,
    format_digraph,
    format_graph,
    format_roles,
    parse_colouring,
    parse_decomposition,
    parse_digraph,
    parse_graph,
    parse_roles,
)
from fracpow.star_forest import Digraph, star_forest_decompose


@given(graphs())
@settings(max_examples=50)
def test_graph_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_graph_comments_and_header():
    assert parse_graph("# c5\np 3 1\n\n0 2\n").edges == ((0, 2),)
    with pytest.raises(InvalidGraphError):
        parse_graph("p 3 2\n0 1\n")
    with pytest.raises(InvalidGraphError):
        parse_graph("0 1\n")
    with pytest.raises(InvalidGraphError):
        parse_graph("p 3 1\n0 x\n")


def test_roles_round_trip():
    for n in (3, 4):
        roles = fractional_power(cycle(4), n, n).roles
        assert tuple(parse_roles(format_roles(roles))) == roles


def test_roles_reject_disorder():
    with pytest.raises(InvalidGraphError):
        parse_roles("1 branch 0\n")


def test_colouring_round_trip():
    assert parse_colouring(format_colouring([3, 1, 3])) == {0: 3, 1: 1, 2: 3}
    with pytest.raises(InvalidGraphError):
        parse_colouring("0 1\n0 2\n")


def test_digraph_and_decomposition_round_trip():
    d = Digraph(4, ((0, 1), (1, 2), (2, 0), (0, 1)))
    assert parse_digraph(format_digraph(d)) == d
    dec = star_forest_decompose(d)
    assert parse_decomposition(format_decomposition(dec)) == dec
    with pytest.raises(InvalidGraphError):
        parse_digraph("d 2 1\n1 1\n")
