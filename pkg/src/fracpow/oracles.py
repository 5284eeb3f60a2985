"""Ground truth for small instances and checks on the list-sampling failure bound."""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Mapping, Sequence

import numpy as np

from .colouring import BranchColouring, greedy_colouring
from .exceptions import ProofViolation, TooLarge
from .graph import FractionalPower, Graph, Inner, Middle, fractional_power, induced_subgraph
from .star_forest import Digraph
from .transversal import find_transversal


@dataclass(frozen=True)
class Violation:
    kind: str  # "monochromatic-edge" or "missing-colour"
    witness: tuple[int, ...]


def verify_colouring(h: Graph, colour) -> list[Violation]:
    """Every reason ``colour`` is not a proper colouring of ``h``.

    ``colour`` is a sequence indexed by vertex or a mapping vertex -> colour;
    absent, ``None`` or negative entries count as missing.
    """

    def get(v):
        if isinstance(colour, Mapping):
            return colour.get(v)
        return colour[v] if v < len(colour) else None

    out = []
    have = []
    for v in range(h.n):
        c = get(v)
        ok = c is not None and c >= 0
        have.append(ok)
        if not ok:
            out.append(Violation("missing-colour", (v,)))
    for u, v in h.edges:
        if have[u] and have[v] and get(u) == get(v):
            out.append(Violation("monochromatic-edge", (u, v)))
    return out


def verify_total_colouring(g: Graph, total: BranchColouring) -> list[str]:
    """Problems with ``total`` read as a total colouring of ``g``."""
    if total.middle is None or len(total.middle) != g.num_edges:
        return ["no edge colours"]
    problems = []
    vc, ec = total.vertex, total.middle
    for eid, (u, v) in enumerate(g.edges):
        if vc[u] == vc[v]:
            problems.append(f"vertices {u}, {v} share colour {vc[u]}")
        if ec[eid] in (vc[u], vc[v]):
            problems.append(f"edge {eid} shares colour {ec[eid]} with an endpoint")
    for v in range(g.n):
        seen: dict[int, int] = {}
        for w in g.adjacency[v]:
            eid = g.edge_id(v, w)
            if ec[eid] in seen:
                problems.append(f"edges {seen[ec[eid]]} and {eid} at vertex {v} share colour {ec[eid]}")
            seen[ec[eid]] = eid
    return problems


def _masks(h: Graph) -> list[int]:
    return [sum(1 << u for u in nb) for nb in h.adjacency]


def _max_clique_masks(nbr: list[int], n: int) -> list[int]:
    # branch and bound; greedy colouring of the candidates bounds each branch
    best: list[int] = []

    def colour_sort(cand):
        order, bounds, k = [], [], 0
        left = cand
        while left:
            k += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~nbr[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(clique, cand):
        nonlocal best
        order, bounds = colour_sort(cand)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(best):
                return
            new = cand & nbr[v]
            if new:
                expand(clique + [v], new)
            elif len(clique) + 1 > len(best):
                best = clique + [v]
            cand &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)


def max_clique(h: Graph) -> list[int]:
    """A maximum clique of ``h``."""
    return _max_clique_masks(_masks(h), h.n)


def max_independent_set(h: Graph) -> list[int]:
    full = (1 << h.n) - 1
    return _max_clique_masks([full & ~m & ~(1 << v) for v, m in enumerate(_masks(h))], h.n)


def dsatur_colouring(h: Graph) -> list[int]:
    """Greedy colouring by saturation degree, ties to higher degree then lower id."""
    colour = [-1] * h.n
    seen: list[set[int]] = [set() for _ in range(h.n)]
    for _ in range(h.n):
        v = max(
            (x for x in range(h.n) if colour[x] < 0),
            key=lambda x: (len(seen[x]), len(h.adjacency[x]), -x),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colour[v] = c
        for u in h.adjacency[v]:
            seen[u].add(c)
    return colour


def tabu_colouring(h: Graph, t: int, max_iters: int = 20_000, seed: int = 0) -> list[int] | None:
    """Search for a proper ``t``-colouring by tabu search; ``None`` if none is found."""
    n = h.n
    adj = h.adjacency
    rng = random.Random(seed)
    colour = [c if c < t else rng.randrange(t) for c in dsatur_colouring(h)]
    gamma = [[0] * t for _ in range(n)]
    for u, v in h.edges:
        gamma[u][colour[v]] += 1
        gamma[v][colour[u]] += 1
    conflicts = sum(colour[u] == colour[v] for u, v in h.edges)
    best_seen = conflicts
    tabu: dict[tuple[int, int], int] = {}
    for it in range(max_iters):
        if conflicts == 0:
            return colour
        moves = []
        best_delta = None
        bad = [v for v in range(n) if gamma[v][colour[v]]]
        for v in bad:
            cur = gamma[v][colour[v]]
            for c in range(t):
                if c == colour[v]:
                    continue
                delta = gamma[v][c] - cur
                if tabu.get((v, c), -1) > it and conflicts + delta >= best_seen:
                    continue
                if best_delta is None or delta < best_delta:
                    best_delta, moves = delta, [(v, c)]
                elif delta == best_delta:
                    moves.append((v, c))
        if not moves:
            continue
        v, c = moves[rng.randrange(len(moves))]
        old = colour[v]
        colour[v] = c
        for u in adj[v]:
            gamma[u][old] -= 1
            gamma[u][c] += 1
        conflicts += best_delta
        best_seen = min(best_seen, conflicts)
        tabu[v, old] = it + int(0.6 * len(bad)) + rng.randrange(10) + 1
    return colour if conflicts == 0 else None


def exact_chromatic(h: Graph, vertex_cap: int = 40, node_limit: int | None = 2_000_000) -> int:
    """Chromatic number of ``h`` by DSATUR branch and bound.

    The lower bound is the larger of a maximum clique and ``ceil(n / alpha)``;
    the upper bound comes from greedy colourings, and a tabu search may
    settle the question by reaching the lower bound.  Each ``t`` in between is
    tried in turn with the clique precoloured, vertices picked by saturation,
    and branches cut when the colour classes can no longer absorb the
    uncoloured vertices (no class exceeds ``alpha``).

    Raises:
        TooLarge: ``h`` has more than ``vertex_cap`` vertices, or the search
            visits more than ``node_limit`` nodes.
    """
    n = h.n
    if n > vertex_cap:
        raise TooLarge(f"{n} vertices exceeds the exact-colouring cap of {vertex_cap}")
    if n == 0:
        return 0
    if h.num_edges == 0:
        return 1
    clique = max_clique(h)
    best = min(len(set(greedy_colouring(h))), len(set(dsatur_colouring(h))))
    if best == len(clique):
        return best
    alpha = len(max_independent_set(h))
    lb = max(len(clique), -(-n // alpha))
    if tabu_colouring(h, lb) is not None:
        return lb
    budget = [node_limit]
    for t in range(lb, best):
        if _colourable(h, t, clique, alpha, budget):
            return t
    return best


def _colourable(h: Graph, t: int, clique: list[int], alpha: int, budget: list) -> bool:
    n = h.n
    adj = h.adjacency
    colour = [-1] * n
    counts = [[0] * t for _ in range(n)]
    sat = [0] * n
    size = [0] * t

    def assign(v, c):
        colour[v] = c
        size[c] += 1
        for u in adj[v]:
            row = counts[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(v, c):
        colour[v] = -1
        size[c] -= 1
        for u in adj[v]:
            row = counts[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    for i, v in enumerate(clique):
        assign(v, i)

    def room(left, used):
        # capacity of every colour class, new colours included
        free = [x for x in range(n) if colour[x] < 0]
        total = 0
        for c in range(t):
            if c < used:
                fits = sum(1 for x in free if not counts[x][c])
                total += min(alpha - size[c], fits)
            else:
                total += min(alpha, left)
        return total >= left

    def search(used, left):
        if left == 0:
            return True
        if budget[0] is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise TooLarge("exact colouring search exceeded its node limit")
        if not room(left, used):
            return False
        v = max(
            (x for x in range(n) if colour[x] < 0),
            key=lambda x: (sat[x], sum(colour[u] < 0 for u in adj[x])),
        )
        if sat[v] >= t:
            return False
        row = counts[v]
        for c in range(min(used + 1, t)):
            if row[c] or size[c] >= alpha:
                continue
            assign(v, c)
            if search(max(used, c + 1), left - 1):
                return True
            unassign(v, c)
        return False

    return search(len(clique), n - len(clique))


def branch_clique(fp: FractionalPower, k: int | None = None) -> list[int]:
    """Clique of ``G^{k/k}`` around a branch vertex of maximum degree.

    It holds the branch vertex and every inner vertex within distance
    ``floor(k/2)`` of it in the subdivision, ``floor(k/2) * Delta + 1``
    vertices in all.  Adjacency is checked pair by pair.
    """
    k = fp.n if k is None else k
    if fp.m != k or fp.n != k:
        raise ValueError("branch_clique needs G^{k/k}")
    g = fp.base
    if g.n == 0:
        return []
    v = max(range(g.n), key=lambda x: (g.degree(x), -x))
    half = k // 2
    members = [v]
    for x in range(g.n, fp.graph.n):
        role = fp.roles[x]
        if isinstance(role, Inner) and role.host == v and role.depth <= half:
            members.append(x)
        elif isinstance(role, Middle) and v in g.edges[role.edge]:
            members.append(x)
    for a, b in combinations(members, 2):
        if not fp.graph.has_edge(a, b):
            raise ProofViolation(f"branch clique vertices {a}, {b} are not adjacent")
    if len(members) != half * g.max_degree + 1:
        raise ProofViolation(f"branch clique has {len(members)} vertices")
    return sorted(members)


def exact_incidence_number(g: Graph, cap: int = 40) -> int:
    """Chromatic number of the inner vertices of ``G^{3/3}``, i.e. the incidence colouring number."""
    if 2 * g.num_edges > cap:
        raise TooLarge(f"{2 * g.num_edges} inner vertices exceeds cap {cap}")
    fp = fractional_power(g, 3, 3)
    inner, _ = induced_subgraph(fp.graph, range(g.n, fp.graph.n))
    return exact_chromatic(inner, vertex_cap=cap)


def exact_dst(d: Digraph, cap: int = 12) -> int:
    """Minimum number of directed star forests covering ``d``, by exhaustive search."""
    m = len(d.arcs)
    if m > cap:
        raise TooLarge(f"{m} arcs exceeds the exact star-arboricity cap of {cap}")
    if m == 0:
        return 0

    def fits(t):
        heads = [set() for _ in range(t)]
        tails = [dict() for _ in range(t)]

        def place(i, used):
            if i == m:
                return True
            a, b = d.arcs[i]
            for c in range(min(used + 1, t)):
                if b in heads[c] or b in tails[c] or a in heads[c]:
                    continue
                heads[c].add(b)
                tails[c][a] = tails[c].get(a, 0) + 1
                if place(i + 1, max(used, c + 1)):
                    return True
                heads[c].discard(b)
                tails[c][a] -= 1
                if not tails[c][a]:
                    del tails[c][a]
            return False

        return place(0, 0)

    t = max(1, d.max_indegree)
    while not fits(t):
        t += 1
    return t


def log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def pj_bound(k: int, r: int, j: int) -> float:
    """Natural log of ``C(k, j) * C(k + r, j) * ((j + 2) / (k + r)) ** (r * j)``.

    Bounds the probability that some ``j`` of ``k`` random lists of length
    ``r`` over ``[k + r]``, each minus two fixed colours, cover fewer than
    ``j`` colours.
    """
    if not 1 <= j <= k:
        raise ValueError("need 1 <= j <= k")
    return log_binom(k, j) + log_binom(k + r, j) + r * j * math.log((j + 2) / (k + r))


def log_pj_sum(k: int, r: int) -> float:
    """Natural log of the sum of :func:`pj_bound` over ``j = 1..k``."""
    return float(np.logaddexp.reduce([pj_bound(k, r, j) for j in range(1, k + 1)]))


def failure_log_bound(k: int, r: int) -> float:
    """Natural log of ``k ** (1 - r / 5)``."""
    return (1 - r / 5) * math.log(k)


def failure_bound_applies(k: int, r: int, k0: int = 50) -> bool:
    """Whether ``(k, r)`` is in the regime where the failure bound is asserted."""
    return k >= k0 and 7 * math.log(k) <= r <= k


def wilson_interval(failures: int, trials: int, z: float = 3.0) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    p = failures / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


EXCLUSION_STYLES = ("fixed-pair", "random-per-set", "adversarial-shared")


@dataclass(frozen=True)
class TrialStats:
    k: int
    r: int
    style: str
    seed: int
    trials: int
    failures: int
    bound: float
    log_bound: float

    @property
    def frequency(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    def slack(self, z: float = 3.0) -> float:
        return self.frequency - wilson_interval(self.failures, self.trials, z)[0]

    def consistent(self, z: float = 3.0) -> bool:
        """Observed frequency within ``z``-sigma Wilson slack of the bound."""
        return self.frequency <= self.bound + self.slack(z)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["frequency"] = self.frequency
        d["wilson_slack"] = self.slack()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def brute_force_transversal(sets: Sequence[Sequence[int]]):
    """Search all choices of one element per set for a transversal."""
    chosen: list[int] = []
    used: set[int] = set()

    def go(i):
        if i == len(sets):
            return True
        for x in sets[i]:
            if x not in used:
                used.add(x)
                chosen.append(x)
                if go(i + 1):
                    return True
                used.discard(x)
                chosen.pop()
        return False

    return tuple(chosen) if go(0) else None


def sample_excluded_lists(rng: np.random.Generator, k: int, r: int, style: str) -> list[list[int]]:
    """One experiment: ``k`` samples of ``r`` colours from ``[k + r]``, each minus a pair."""
    size = k + r
    rows = rng.integers(0, size, size=(k, r)).tolist()
    if style == "fixed-pair":
        pairs = [(0, 1)] * k
    elif style == "random-per-set":
        pairs = [tuple(rng.choice(size, 2, replace=False).tolist()) for _ in range(k)]
    elif style == "adversarial-shared":
        # the two colours present in most lists, chosen after sampling
        hits = np.zeros(size, dtype=np.int64)
        for row in rows:
            hits[list(set(row))] += 1
        top = np.argsort(-hits, kind="stable")[:2]
        pairs = [tuple(int(x) for x in top)] * k
    else:
        raise ValueError(f"unknown exclusion style {style!r}")
    return [sorted(set(row).difference(p)) for row, p in zip(rows, pairs)]


def mc_transversal_failure(
    k: int,
    r: int,
    exclusion_style: str = "fixed-pair",
    trials: int = 10_000,
    seed: int = 0,
    solver: Callable | None = None,
) -> TrialStats:
    """Estimate how often ``k`` random lists minus two colours each lack a transversal.

    Trial ``t`` draws from its own generator seeded with ``(seed, t)``, so the
    trials are independent of evaluation order.
    """
    if k < 1 or r < 1 or trials < 0:
        raise ValueError("need k >= 1, r >= 1, trials >= 0")
    solver = solver or find_transversal
    failures = 0
    for t in range(trials):
        rng = np.random.default_rng([seed % 2**64, t])
        if solver(sample_excluded_lists(rng, k, r, exclusion_style)) is None:
            failures += 1
    log_bound = failure_log_bound(k, r)
    return TrialStats(k, r, exclusion_style, seed, trials, failures, math.exp(log_bound), log_bound)

