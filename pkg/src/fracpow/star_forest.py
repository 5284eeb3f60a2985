"""Covering a multidigraph by directed star forests.

A directed star forest is a set of arcs in which every vertex has indegree at
most one and no vertex has both an incoming and an outgoing arc, i.e. a
vertex-disjoint union of stars whose arcs point away from their centres.  A
digraph of maximum indegree ``c`` is covered by at most ``3c`` of them: split
the arcs into ``c`` subgraphs of indegree at most one, then cover each of those
pseudoforests with three star forests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Digraph:
    """Multidigraph on ``0..n-1``; parallel arcs allowed, loops not."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arcs = tuple((int(t), int(h)) for t, h in self.arcs)
        for t, h in arcs:
            if t == h:
                raise ValueError(f"loop at vertex {t}")
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ValueError(f"arc ({t}, {h}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    def indegrees(self) -> list[int]:
        deg = [0] * self.n
        for _, h in self.arcs:
            deg[h] += 1
        return deg

    @property
    def max_indegree(self) -> int:
        return max(self.indegrees(), default=0)

    def subgraph(self, arc_indices: Sequence[int]) -> "Digraph":
        return Digraph(self.n, tuple(self.arcs[i] for i in arc_indices))


@dataclass(frozen=True)
class StarForestDecomposition:
    """Class label for every arc; labels are ``0..class_count-1``."""

    labels: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(set(self.labels))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for i, c in enumerate(self.labels):
            out[c].append(i)
        return out


def _compact(labels: Sequence[int]) -> tuple[int, ...]:
    remap = {c: i for i, c in enumerate(sorted(set(labels)))}
    return tuple(remap[c] for c in labels)


def split_by_indegree(d: Digraph) -> list[list[int]]:
    """Partition arc indices into ``max_indegree`` classes of indegree <= 1.

    The in-arcs of each head are dealt round-robin in arc order.
    """
    seen = [0] * d.n
    classes: list[list[int]] = [[] for _ in range(d.max_indegree)]
    for i, (_, h) in enumerate(d.arcs):
        classes[seen[h]].append(i)
        seen[h] += 1
    return classes


def decompose_pseudoforest(d: Digraph) -> StarForestDecomposition:
    """Cover a digraph of maximum indegree one by at most three star forests.

    Every weak component holds at most one directed cycle.  The cycle arc
    entering the smallest vertex of the cycle is cut and goes to the third
    class; what remains is an out-forest whose arcs are split by the depth
    parity of their tails.
    """
    parent = [-1] * d.n
    for i, (_, h) in enumerate(d.arcs):
        if parent[h] != -1:
            raise ValueError(f"vertex {h} has indegree > 1")
        parent[h] = i

    cut: set[int] = set()
    state = [0] * d.n
    for v in range(d.n):
        walk = []
        x = v
        while x != -1 and state[x] == 0:
            state[x] = 1
            walk.append(x)
            a = parent[x]
            x = d.arcs[a][0] if a != -1 else -1
        if x != -1 and state[x] == 1:
            cycle = walk[walk.index(x):]
            cut.add(parent[min(cycle)])
        for y in walk:
            state[y] = 2

    children: list[list[int]] = [[] for _ in range(d.n)]
    for i, (t, _) in enumerate(d.arcs):
        if i not in cut:
            children[t].append(i)
    depth = [-1] * d.n
    for r in range(d.n):
        if parent[r] != -1 and parent[r] not in cut:
            continue
        depth[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for a in children[x]:
                h = d.arcs[a][1]
                depth[h] = depth[x] + 1
                queue.append(h)

    labels = [2 if i in cut else depth[t] % 2 for i, (t, _) in enumerate(d.arcs)]
    return StarForestDecomposition(_compact(labels))


def star_forest_decompose(d: Digraph) -> StarForestDecomposition:
    """Cover ``d`` by at most ``3 * max_indegree(d)`` directed star forests."""
    labels = [0] * len(d.arcs)
    for ci, arc_ids in enumerate(split_by_indegree(d)):
        local = decompose_pseudoforest(d.subgraph(arc_ids))
        for a, lab in zip(arc_ids, local.labels):
            labels[a] = 3 * ci + lab
    dec = StarForestDecomposition(_compact(labels))
    problems = star_forest_violations(d, dec.labels)
    if problems:
        raise AssertionError(f"invalid star forest decomposition: {problems[0]}")
    return dec


def star_forest_violations(d: Digraph, labels: Sequence[int]) -> list[str]:
    """Describe every way ``labels`` fails to split ``d`` into directed star forests.

    Works from the arcs alone, so it can certify decompositions produced
    elsewhere.  An empty list means the labelling is valid.
    """
    if len(labels) != len(d.arcs):
        return [f"expected {len(d.arcs)} labels, got {len(labels)}"]
    problems = []
    indeg: dict[tuple[int, int], int] = {}
    tails: set[tuple[int, int]] = set()
    for (t, h), c in zip(d.arcs, labels):
        indeg[c, h] = indeg.get((c, h), 0) + 1
        tails.add((c, t))
    for (c, h), k in sorted(indeg.items()):
        if k > 1:
            problems.append(f"class {c}: vertex {h} has indegree {k}")
        if (c, h) in tails:
            problems.append(f"class {c}: vertex {h} has both in- and out-arcs")
    return problems
