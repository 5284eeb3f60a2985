"""Colouring ``G^{k/k}`` with ``floor(k/2) * Delta + O(log Delta)`` colours.

The pipeline has four steps:

1. colour the branch vertices properly (odd ``k``), or colour branch and
   middle vertices as a total colouring of ``G`` (even ``k``);
2. give every branch vertex ``v`` a random list ``L_v`` and resample until,
   around every branch vertex ``w``, the lists of its neighbours (minus the
   colours already fixed near ``w``) admit a system of disjoint picks;
3. colour the inner vertices hosted by ``w`` on edge ``wv`` with the picks
   made from ``L_v``;
4. recolour, with a handful of fresh colours, every hosted vertex whose colour
   lies in its host's own list.  Fresh colour classes come from a directed
   star forest cover, so no new conflicts appear.

Lists are resampled Moser-Tardos style; when resampling stalls the list length
doubles, and after the last escalation the pipeline falls back to a plain
greedy colouring of the power graph.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .exceptions import BudgetExceeded, ProofViolation
from .graph import FractionalPower, Graph, Inner, Middle, fractional_power
from .star_forest import Digraph, star_forest_decompose
from .transversal import saturate


@dataclass(frozen=True)
class BranchColouring:
    """Colours fixed in step 1.

    ``vertex[v]`` colours branch vertex ``v``; ``middle[e]`` colours the middle
    vertex of edge ``e`` and is ``None`` when no middle vertices are coloured.
    """

    vertex: tuple[int, ...]
    middle: tuple[int, ...] | None = None

    @property
    def palette_size(self) -> int:
        used = list(self.vertex) + list(self.middle or ())
        return max(used) + 1 if used else 0


def _smallest_missing(taken) -> int:
    c = 0
    while c in taken:
        c += 1
    return c


def greedy_branch_colouring(g: Graph) -> BranchColouring:
    """First-fit colouring in vertex order; at most ``Delta + 1`` colours."""
    colour = [-1] * g.n
    for v in range(g.n):
        colour[v] = _smallest_missing({colour[u] for u in g.adjacency[v]})
    return BranchColouring(tuple(colour))


def greedy_total_colouring(g: Graph) -> BranchColouring:
    """First-fit total colouring: vertices, then edges in edge order.

    An edge sees two endpoint colours and at most ``2(Delta - 1)`` edge colours,
    so at most ``2 * Delta + 1`` colours are used.
    """
    vertex = greedy_branch_colouring(g).vertex
    at: list[set[int]] = [set() for _ in range(g.n)]
    middle = []
    for u, v in g.edges:
        c = _smallest_missing(at[u] | at[v] | {vertex[u], vertex[v]})
        middle.append(c)
        at[u].add(c)
        at[v].add(c)
    return BranchColouring(vertex, tuple(middle))


def demand(k: int) -> int:
    """Inner vertices of a subdivided edge strictly closer to one end than the other."""
    return (k - 1) // 2


def initial_list_length(delta: int, r_min: int = 4) -> int:
    """``max(ceil(7 ln Delta), r_min)``."""
    return max(math.ceil(7 * math.log(delta)) if delta > 1 else 0, r_min)


@dataclass
class ListFamily:
    """Random colour lists of the branch vertices and the picks made from them.

    ``lists[v]`` is the sampled sequence for ``v`` (repeats allowed).
    ``exclusions[v, w]`` holds the colours the picks from ``L_v`` for the hub
    of ``w`` must avoid.  ``transversals[w][v]`` holds those picks, sorted.
    """

    k: int
    r: int
    palette_size: int
    lists: list[tuple[int, ...]]
    exclusions: dict[tuple[int, int], frozenset] = field(default_factory=dict)
    transversals: dict[int, dict[int, tuple[int, ...]]] = field(default_factory=dict)
    rounds: int = 0
    resampled: int = 0

    def colours(self, v: int) -> frozenset:
        return frozenset(self.lists[v])

    def family(self, g: Graph, w: int) -> list[tuple[int, ...]]:
        """The sets ``L_v - F_{v,w}`` for ``v`` adjacent to ``w``, in id order."""
        return [
            tuple(sorted(set(self.lists[v]) - self.exclusions[v, w]))
            for v in g.adjacency[w]
        ]


def exclusion_sets(g: Graph, k: int, branch: BranchColouring) -> dict[tuple[int, int], frozenset]:
    """Colours already fixed within reach of the hub of ``w`` on edge ``wv``.

    Always ``c(v)`` and ``c(w)``.  For even ``k`` the hosted vertices of ``w``
    also see the middle vertex of every edge at ``w``, so all those colours are
    excluded too.
    """
    out = {}
    middles_at: list[set[int]] = [set() for _ in range(g.n)]
    if k % 2 == 0 and branch.middle is not None:
        for eid, (a, b) in enumerate(g.edges):
            middles_at[a].add(branch.middle[eid])
            middles_at[b].add(branch.middle[eid])
    for w in range(g.n):
        for v in g.adjacency[w]:
            out[v, w] = frozenset({branch.vertex[v], branch.vertex[w]} | middles_at[w])
    return out


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, (int, np.integer)):
        seed = int(seed) % 2**64
    return np.random.default_rng(seed)


def _draw(rng: np.random.Generator, r: int, palette_size: int) -> tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(0, palette_size, size=r))


def sample_lists(g: Graph, k: int, r: int, palette_size: int, seed) -> ListFamily:
    """Draw ``r`` uniform colours with replacement for every branch vertex."""
    if r < 1 or palette_size < r:
        raise ValueError("need 1 <= r <= palette_size")
    rng = _rng(seed)
    return ListFamily(k, r, palette_size, [_draw(rng, r, palette_size) for _ in range(g.n)])


def find_good_lists(
    g: Graph,
    k: int,
    branch: BranchColouring,
    r: int,
    palette_size: int,
    seed,
    max_rounds: int = 200,
) -> ListFamily:
    """Resample lists until every branch vertex has its disjoint picks.

    The bad event at ``w`` depends only on the lists of ``N(w)``.  Each round
    checks the events whose lists changed, then resamples the lists of a
    maximal set of bad events with pairwise disjoint neighbourhoods.

    Raises:
        BudgetExceeded: bad events remain after ``max_rounds`` rounds.
    """
    if r < 1 or palette_size < r:
        raise ValueError("need 1 <= r <= palette_size")
    rng = _rng(seed)
    lists = [_draw(rng, r, palette_size) for _ in range(g.n)]
    fam = ListFamily(k, r, palette_size, lists, exclusion_sets(g, k, branch))
    q = demand(k)
    if q == 0:
        return fam
    dirty = {w for w in range(g.n) if g.adjacency[w]}
    while True:
        bad = []
        for w in sorted(dirty):
            choice, _ = saturate(fam.family(g, w), q)
            if choice is None:
                bad.append(w)
            else:
                fam.transversals[w] = dict(zip(g.adjacency[w], choice))
        if not bad:
            return fam
        if fam.rounds >= max_rounds:
            raise BudgetExceeded(
                f"{len(bad)} bad events left after {fam.rounds} rounds (r={r})",
                rounds=fam.rounds,
                bad=bad,
            )
        fam.rounds += 1
        touched: set[int] = set()
        for w in bad:
            nbrs = g.adjacency[w]
            if touched.isdisjoint(nbrs):
                touched.update(nbrs)
                for v in nbrs:
                    lists[v] = _draw(rng, r, palette_size)
                fam.resampled += 1
        dirty = set(bad)
        for v in touched:
            dirty.update(g.adjacency[v])
        for w in dirty:
            fam.transversals.pop(w, None)


def colour_inner(fp: FractionalPower, lists: ListFamily) -> dict[int, int]:
    """Colour every hosted inner vertex from the stored picks.

    On edge ``wv`` the vertices hosted by ``w`` take the picks made from
    ``L_v`` for the hub of ``w``, in increasing depth order.
    """
    g = fp.base
    q = demand(fp.n)
    out = {}
    for w in range(g.n):
        picks = lists.transversals.get(w, {})
        for v in g.adjacency[w]:
            eid = g.edge_id(w, v)
            for d, c in enumerate(picks[v], start=1):
                out[fp.inner_vertex(eid, w, d)] = c
            if len(picks[v]) != q:
                raise ProofViolation(f"hub {w}: {len(picks[v])} picks for edge {eid}, need {q}")
    return out


def colour_inner_k3(fp: FractionalPower, branch: BranchColouring, lists: ListFamily) -> dict[int, int]:
    """Step 3 for ``G^{3/3}``: ``e^v`` takes the pick made from ``L_w`` for ``e = vw``."""
    if fp.m != 3 or fp.n != 3:
        raise ValueError("colour_inner_k3 needs G^{3/3}")
    return colour_inner(fp, lists)


@dataclass(frozen=True)
class Conflict:
    """A monochromatic edge ``(a, b)`` of the power graph and its corresponding branch vertex."""

    a: int
    b: int
    corresponding: int


@dataclass(frozen=True)
class ConflictReport:
    conflicts: tuple[Conflict, ...]
    conflict_sets: tuple[tuple[int, ...], ...]

    @property
    def recolour_set(self) -> list[int]:
        return sorted(x for s in self.conflict_sets for x in s)


def detect_conflicts(fp: FractionalPower, colour, lists: ListFamily) -> ConflictReport:
    """Classify the monochromatic edges left after step 3.

    ``conflict_sets[v]`` lists the vertices hosted by ``v`` whose colour lies in
    ``L_v``.  Every monochromatic edge must join two inner vertices of different
    hubs, one of which sits in the conflict set of their corresponding branch
    vertex.

    Raises:
        ProofViolation: any other kind of monochromatic edge, or a conflict not
            covered by a conflict set.
    """
    g = fp.base
    roles = fp.roles
    sets = []
    for v in range(g.n):
        lv = lists.colours(v)
        cs = tuple(x for x in fp.hub[v] if colour[x] in lv)
        if len(cs) > len(lv):
            raise ProofViolation(f"conflict set of {v} larger than its list")
        sets.append(cs)
    members = [frozenset(s) for s in sets]

    conflicts = []
    for x, y in fp.graph.edges:
        if colour[x] != colour[y]:
            continue
        rx, ry = roles[x], roles[y]
        if not (isinstance(rx, Inner) and isinstance(ry, Inner)):
            raise ProofViolation(f"monochromatic edge ({x}, {y}) touches a branch or middle vertex")
        if rx.host == ry.host:
            raise ProofViolation(f"monochromatic edge ({x}, {y}) inside hub {rx.host}")
        if rx.edge == ry.edge:
            corr = min(rx.host, ry.host)
        else:
            shared = set(g.edges[rx.edge]) & set(g.edges[ry.edge])
            if len(shared) != 1:
                raise ProofViolation(f"adjacent inner vertices {x}, {y} on disjoint edges")
            corr = shared.pop()
        z = x if rx.host == corr else y if ry.host == corr else None
        if z is None or z not in members[corr]:
            raise ProofViolation(f"conflict ({x}, {y}) not covered by conflict set of {corr}")
        conflicts.append(Conflict(x, y, corr))
    return ConflictReport(tuple(conflicts), tuple(sets))


def recolour_conflicts(fp: FractionalPower, report: ConflictReport, first_new_colour: int) -> dict[int, int]:
    """Fresh colours for every vertex in a conflict set.

    A vertex hosted by ``v`` on edge ``vu`` becomes the arc ``u -> v``; each
    directed star forest of the resulting digraph is independent in the power
    graph and gets one new colour.
    """
    g = fp.base
    targets = report.recolour_set
    arcs = []
    for x in targets:
        role = fp.roles[x]
        a, b = g.edges[role.edge]
        arcs.append((b if role.host == a else a, role.host))
    dec = star_forest_decompose(Digraph(g.n, tuple(arcs)))
    return {x: first_new_colour + lab for x, lab in zip(targets, dec.labels)}


def greedy_colouring(h: Graph) -> list[int]:
    """First-fit colouring in vertex order."""
    colour = [-1] * h.n
    for v in range(h.n):
        colour[v] = _smallest_missing({colour[u] for u in h.adjacency[v]})
    return colour


def compact_palette(h: Graph, colour) -> list[int]:
    """Merge colour classes greedily, in order of colour value.

    Each class moves to the smallest target colour none of its neighbours
    already occupies.  Properness is preserved.
    """
    classes: dict[int, list[int]] = {}
    for x, c in enumerate(colour):
        classes.setdefault(c, []).append(x)
    out = [-1] * h.n
    for c in sorted(classes):
        blocked = {out[y] for x in classes[c] for y in h.adjacency[x]}
        t = _smallest_missing(blocked)
        for x in classes[c]:
            out[x] = t
    return out


@dataclass
class ColouringConfig:
    """Knobs of the pipeline.  ``r_override`` fixes the initial list length."""

    r_min: int = 4
    r_override: int | None = None
    max_rounds: int = 200
    max_escalations: int = 6
    compact: bool = False

    def __post_init__(self):
        if self.r_min < 1 or self.max_rounds < 0 or self.max_escalations < 0:
            raise ValueError("r_min must be positive; max_rounds and max_escalations non-negative")
        if self.r_override is not None and self.r_override < 1:
            raise ValueError("r_override must be positive")


@dataclass
class Stats:
    k: int
    seed: int
    delta: int
    r_initial: int = 0
    r_final: int = 0
    rounds: int = 0
    rounds_total: int = 0
    escalations: int = 0
    palette_size: int = 0
    step1_colours: int = 0
    conflicts: int = 0
    recoloured: int = 0
    max_conflict_set: int = 0
    new_colours: int = 0
    colours_used: int = 0
    max_colour: int = -1
    fallback_used: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _first_violation(h: Graph, colour) -> tuple[int, int] | None:
    for x, y in h.edges:
        if colour[x] == colour[y]:
            return x, y
    return None


def colour_kk(g: Graph, k: int, seed: int = 0, config: ColouringConfig | None = None):
    """Properly colour ``fractional_power(g, k, k).graph``.

    Returns ``(colour, stats)`` where ``colour[x]`` is the colour of vertex ``x``
    of the power graph.  Without fallback the number of colours is at most
    ``max(step-1 colours, floor(k/2) * Delta + r) + 3r`` for the final list
    length ``r``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    config = config or ColouringConfig()
    fp = fractional_power(g, k, k)
    delta = g.max_degree
    stats = Stats(k=k, seed=seed, delta=delta)
    colour = [-1] * fp.graph.n

    branch = greedy_total_colouring(g) if k % 2 == 0 else greedy_branch_colouring(g)
    colour[: g.n] = branch.vertex
    if branch.middle is not None:
        for eid, c in enumerate(branch.middle):
            colour[fp.middle_vertex(eid)] = c
    stats.step1_colours = branch.palette_size
    stats.palette_size = branch.palette_size

    if demand(k) > 0:
        r = config.r_override or initial_list_length(delta, config.r_min)
        stats.r_initial = r
        lists = None
        for attempt in range(config.max_escalations + 1):
            palette = (k // 2) * delta + r
            try:
                lists = find_good_lists(
                    g, k, branch, r, palette, seed=[int(seed) % 2**64, attempt],
                    max_rounds=config.max_rounds,
                )
            except BudgetExceeded as exc:
                stats.rounds_total += exc.rounds
                r *= 2
                stats.escalations += 1
                continue
            break
        if lists is None:
            stats.fallback_used = True
            colour = greedy_colouring(fp.graph)
        else:
            stats.r_final = lists.r
            stats.rounds = lists.rounds
            stats.rounds_total += lists.rounds
            stats.palette_size = max(branch.palette_size, lists.palette_size)
            for x, c in colour_inner(fp, lists).items():
                colour[x] = c
            report = detect_conflicts(fp, colour, lists)
            stats.conflicts = len(report.conflicts)
            stats.max_conflict_set = max((len(s) for s in report.conflict_sets), default=0)
            delta_colours = recolour_conflicts(fp, report, stats.palette_size)
            stats.recoloured = len(delta_colours)
            stats.new_colours = len(set(delta_colours.values()))
            for x, c in delta_colours.items():
                colour[x] = c

    bad = _first_violation(fp.graph, colour)
    if bad is not None or min(colour, default=0) < 0:
        raise ProofViolation(f"final colouring is not proper: edge {bad}")
    if config.compact:
        colour = compact_palette(fp.graph, colour)
    stats.colours_used = len(set(colour))
    stats.max_colour = max(colour, default=-1)
    return colour, stats


def colour_k3(g: Graph, seed: int = 0, config: ColouringConfig | None = None):
    """Properly colour ``G^{3/3}`` with about ``Delta + 28 ln Delta`` colours."""
    return colour_kk(g, 3, seed, config)
