"""Deterministic generators for the graph families used in experiments."""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from .exceptions import InvalidGraphError
from .graph import Graph

FAMILIES = (
    "complete",
    "cycle",
    "path",
    "hypercube",
    "random_regular",
    "erdos_renyi",
    "paley",
)


def _need_int(name, value, low):
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise InvalidGraphError(f"{name} must be an integer >= {low}, got {value!r}")


def complete(k: int) -> Graph:
    _need_int("k", k, 0)
    return Graph(k, list(combinations(range(k), 2)))


def cycle(n: int) -> Graph:
    _need_int("n", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need_int("n", n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    _need_int("d", d, 0)
    n = 1 << d
    return Graph(n, [(x, x ^ (1 << i)) for x in range(n) for i in range(d) if x < x ^ (1 << i)])


def random_regular(n: int, d: int, seed: int) -> Graph:
    _need_int("n", n, 1)
    _need_int("d", d, 0)
    if d >= n or (n * d) % 2:
        raise InvalidGraphError(f"no {d}-regular graph on {n} vertices")
    return Graph.from_networkx(nx.random_regular_graph(d, n, seed=seed))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    _need_int("n", n, 0)
    if not 0.0 <= p <= 1.0:
        raise InvalidGraphError(f"edge probability must lie in [0, 1], got {p!r}")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def paley(q: int) -> Graph:
    """Paley graph on ``Z_q``: ``x ~ y`` iff ``x - y`` is a nonzero square mod ``q``.

    Only prime ``q = 1 (mod 4)`` is supported.
    """
    _need_int("q", q, 2)
    if not _is_prime(q) or q % 4 != 1:
        raise InvalidGraphError(f"paley needs a prime q = 1 (mod 4), got {q}")
    squares = {x * x % q for x in range(1, q)}
    return Graph(q, [(x, y) for x, y in combinations(range(q), 2) if (y - x) % q in squares])


def generate(family: str, *params, seed: int | None = None) -> Graph:
    """Build a graph from a family name and its parameters.

    >>> generate("hypercube", 3).num_edges
    12
    """
    if family not in FAMILIES:
        raise InvalidGraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    stochastic = family in ("random_regular", "erdos_renyi")
    if stochastic and seed is None:
        raise InvalidGraphError(f"{family} requires an explicit seed")
    arity = 2 if stochastic else 1
    if len(params) != arity:
        raise InvalidGraphError(f"{family} takes {arity} parameter(s), got {len(params)}")
    fn = globals()[family]
    return fn(*params, seed=seed) if stochastic else fn(*params)
