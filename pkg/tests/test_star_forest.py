import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracpow.oracles import exact_dst
from fracpow.star_forest import (
    Digraph,
    decompose_pseudoforest,
    split_by_indegree,
    star_forest_decompose,
    star_forest_violations,
)

THREE_CYCLE = Digraph(3, ((0, 1), (1, 2), (2, 0)))
OUT_STAR = Digraph(6, tuple((0, h) for h in range(1, 6)))
PATH = Digraph(3, ((0, 1), (1, 2)))


def valid_labellings(d, t):
    return [
        labels for labels in itertools.product(range(t), repeat=len(d.arcs))
        if not star_forest_violations(d, labels)
    ]


@st.composite
def digraphs(draw, max_n=7, max_arcs=25):
    n = draw(st.integers(2, max_n))
    arcs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda a: a[0] != a[1]),
        max_size=max_arcs,
    ))
    return Digraph(n, tuple(arcs))


class TestValidator:
    def test_three_cycle_needs_three(self):
        assert valid_labellings(THREE_CYCLE, 2) == []
        assert valid_labellings(THREE_CYCLE, 3)

    def test_path_needs_two(self):
        assert valid_labellings(PATH, 1) == []
        assert valid_labellings(PATH, 2)

    def test_flags_shared_head(self):
        d = Digraph(3, ((0, 2), (1, 2)))
        assert star_forest_violations(d, (0, 0))
        assert not star_forest_violations(d, (0, 1))


class TestSplit:
    def test_out_star(self):
        assert split_by_indegree(OUT_STAR) == [list(range(5))]

    def test_parallel_arcs(self):
        assert len(split_by_indegree(Digraph(2, ((0, 1), (0, 1))))) == 2

    def test_random_c4(self):
        rng = random.Random(3)
        arcs = [(rng.randrange(12), h) for h in range(12) for _ in range(4)]
        d = Digraph(12, tuple((t if t != h else (h + 1) % 12, h) for t, h in arcs))
        parts = split_by_indegree(d)
        assert len(parts) == 4
        for p in parts:
            assert d.subgraph(p).max_indegree <= 1


class TestDecompose:
    def test_pseudoforest_cases(self):
        assert decompose_pseudoforest(THREE_CYCLE).class_count == 3
        assert decompose_pseudoforest(PATH).class_count == 2
        assert decompose_pseudoforest(OUT_STAR).class_count == 1

    def test_empty(self):
        assert star_forest_decompose(Digraph(3)).class_count == 0

    @given(digraphs())
    @settings(max_examples=200)
    def test_valid_within_3c(self, d):
        dec = star_forest_decompose(d)
        assert star_forest_violations(d, dec.labels) == []
        assert dec.class_count <= 3 * d.max_indegree

    @given(digraphs(max_n=5, max_arcs=6))
    @settings(max_examples=200)
    def test_never_beats_exact(self, d):
        assert star_forest_decompose(d).class_count >= exact_dst(d)


class TestExactDst:
    def test_examples(self):
        assert exact_dst(THREE_CYCLE) == 3
        assert exact_dst(OUT_STAR) == 1
        assert exact_dst(PATH) == 2
        assert exact_dst(Digraph(2)) == 0


def test_digraph_rejects_loops():
    with pytest.raises(ValueError):
        Digraph(2, ((1, 1),))
