"""Simple graphs, subdivisions, powers and fractional powers.

Vertex numbering of a subdivision is fixed: the original vertices keep their
ids ``0..n-1`` and the inner vertices of edge ``e = (u, v)`` with ``u < v`` are
appended in edge-index order, listed from ``u`` towards ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Union

from .exceptions import InvalidGraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically as ``(u, v)`` with ``u < v`` and sorted
    lexicographically; the position of an edge in :attr:`edges` is its edge id.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidGraphError(f"vertex count must be a non-negative int, got {self.n!r}")
        canon = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise InvalidGraphError(f"parallel edge {a}")
        object.__setattr__(self, "edges", tuple(canon))
        self._build_adjacency()

    def _build_adjacency(self):
        adj: list[list[int]] = [[] for _ in range(self.n)]
        # sorted edge order yields sorted neighbour lists
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @classmethod
    def _trusted(cls, n: int, edges: list[Edge]) -> "Graph":
        """Build from edges already canonical, sorted and duplicate free."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", tuple(edges))
        g._build_adjacency()
        return g

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def _adjsets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    @classmethod
    def from_networkx(cls, nxg) -> "Graph":
        """Convert a networkx graph; nodes are relabelled in sorted order."""
        if nxg.is_directed() or nxg.is_multigraph():
            raise InvalidGraphError("expected a simple undirected networkx graph")
        try:
            nodes = sorted(nxg.nodes())
        except TypeError:
            nodes = list(nxg.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls(len(nodes), [(index[a], index[b]) for a, b in nxg.edges()])

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


@dataclass(frozen=True)
class Branch:
    vertex: int


@dataclass(frozen=True)
class Inner:
    """Inner vertex on ``edge`` at distance ``depth`` from branch vertex ``host``."""

    edge: int
    host: int
    depth: int


@dataclass(frozen=True)
class Middle:
    """The inner vertex equidistant from both ends of ``edge`` (even path length)."""

    edge: int


VertexRole = Union[Branch, Inner, Middle]


@dataclass(frozen=True)
class FractionalPower:
    """The graph ``G^{m/n}`` together with where each of its vertices came from.

    Attributes:
        graph: the constructed graph.
        base: the original graph ``G``.
        m, n: power and subdivision parameters.
        roles: role of every vertex of ``graph``.
        hub: for each branch vertex ``v``, the inner vertices hosted by ``v``
            ordered by edge id and then depth. Middle vertices belong to no hub.
    """

    graph: Graph
    base: Graph
    m: int
    n: int
    roles: tuple[VertexRole, ...] = field(repr=False)
    hub: tuple[tuple[int, ...], ...] = field(repr=False)

    def inner_vertex(self, edge: int, host: int, depth: int) -> int:
        u, v = self.base.edges[edge]
        if host == u:
            pos = depth
        elif host == v:
            pos = self.n - depth
        else:
            raise ValueError(f"vertex {host} is not an endpoint of edge {edge}")
        if not 1 <= pos <= self.n - 1:
            raise ValueError(f"depth {depth} outside the subdivided edge")
        return self.base.n + edge * (self.n - 1) + pos - 1

    def middle_vertex(self, edge: int) -> int | None:
        if self.n % 2:
            return None
        return self.base.n + edge * (self.n - 1) + self.n // 2 - 1

    def edge_vertices(self, edge: int) -> list[int]:
        """Inner vertices of ``edge`` listed from its lower endpoint."""
        start = self.base.n + edge * (self.n - 1)
        return list(range(start, start + self.n - 1))

    def is_branch(self, x: int) -> bool:
        return x < self.base.n


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def subdivide(g: Graph, n: int) -> FractionalPower:
    """Replace every edge of ``g`` by a path with ``n`` edges."""
    _check_positive("n", n)
    N = g.n
    roles: list[VertexRole] = [Branch(v) for v in range(N)]
    hub: list[list[int]] = [[] for _ in range(N)]
    edges: list[Edge] = []
    nxt = N
    for eid, (u, v) in enumerate(g.edges):
        if n == 1:
            edges.append((u, v))
            continue
        path = [u] + list(range(nxt, nxt + n - 1)) + [v]
        for pos in range(1, n):
            x = nxt + pos - 1
            if 2 * pos < n:
                roles.append(Inner(eid, u, pos))
                hub[u].append(x)
            elif 2 * pos > n:
                roles.append(Inner(eid, v, n - pos))
                hub[v].append(x)
            else:
                roles.append(Middle(eid))
        nxt += n - 1
        edges.extend((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    for v in range(N):
        hub[v].sort(key=lambda x: (roles[x].edge, roles[x].depth))
    h = Graph(nxt, edges) if n > 1 else g
    return FractionalPower(h, g, 1, n, tuple(roles), tuple(tuple(a) for a in hub))


def power(h: Graph, m: int) -> Graph:
    """Join every pair of vertices at distance at most ``m`` in ``h``."""
    _check_positive("m", m)
    if m == 1:
        return h
    adj = h.adjacency
    edges: list[Edge] = []
    for s in range(h.n):
        seen = {s}
        frontier = [s]
        for _ in range(m):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        edges.extend((s, t) for t in sorted(seen) if t > s)
    return Graph._trusted(h.n, edges)


def fractional_power(g: Graph, m: int, n: int) -> FractionalPower:
    """Build ``G^{m/n}``, the ``m``-th power of the ``n``-th subdivision of ``g``."""
    _check_positive("m", m)
    sub = subdivide(g, n)
    return replace(sub, graph=power(sub.graph, m), m=m)


def distances_from(h: Graph, s: int, cap: int) -> dict[int, int]:
    """Breadth-first distances from ``s``, omitting vertices farther than ``cap``."""
    if not 0 <= s < h.n:
        raise IndexError(f"vertex {s} not in graph")
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == cap:
            continue
        for y in h.adjacency[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def induced_subgraph(h: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``; also returns the new-to-old id map."""
    keep = sorted(set(vertices))
    index = {x: i for i, x in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in h.edges if u in index and v in index]
    return Graph._trusted(len(keep), edges), keep
