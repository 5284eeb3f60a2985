"""Transversals (systems of distinct representatives) of set families.

A family with per-set demand ``b`` is solved as a unit-capacity flow: every
set contributes ``b`` slots, every element can serve one slot, and slots are
saturated one at a time by shortest augmenting paths.  When a slot cannot be
saturated, the slots reachable from it by alternating paths name a set of
indices that violates the generalised Hall condition.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class SetFamily:
    """Ordered family of finite sets over ``range(universe_size)``."""

    sets: tuple[tuple[int, ...], ...]
    universe_size: int

    def __post_init__(self):
        sets = tuple(tuple(sorted(set(int(x) for x in s))) for s in self.sets)
        if self.universe_size < 1:
            raise ValueError("universe_size must be positive")
        for s in sets:
            if s and (s[0] < 0 or s[-1] >= self.universe_size):
                raise ValueError(f"set {s} not inside range({self.universe_size})")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], universe_size: int | None = None) -> "SetFamily":
        sets = [tuple(s) for s in sets]
        if universe_size is None:
            universe_size = 1 + max((max(s) for s in sets if s), default=0)
        return cls(tuple(sets), universe_size)

    def __len__(self):
        return len(self.sets)

    def to_json(self) -> str:
        return json.dumps({"universe_size": self.universe_size, "sets": [list(s) for s in self.sets]})

    @classmethod
    def from_json(cls, text: str) -> "SetFamily":
        data = json.loads(text)
        return cls(tuple(tuple(s) for s in data["sets"]), data["universe_size"])


FamilyLike = Union[SetFamily, Sequence[Iterable[int]]]


def _sets_of(f: FamilyLike) -> list[tuple[int, ...]]:
    if isinstance(f, SetFamily):
        return list(f.sets)
    return [tuple(sorted(set(s))) for s in f]


def saturate(sets: Sequence[Sequence[int]], b: int = 1):
    """Try to pick ``b`` distinct elements from every set, all globally distinct.

    ``sets`` must hold sorted, duplicate-free sequences.  Returns
    ``(choice, None)`` on success, where ``choice[i]`` is the sorted tuple picked
    from ``sets[i]``, or ``(None, violator)`` where ``violator`` is a frozenset
    of indices ``J`` with ``|union of sets[J]| < b * |J|``.
    """
    for i, s in enumerate(sets):
        if len(s) < b:
            return None, frozenset([i])
    n_slots = len(sets) * b
    owner: dict[int, int] = {}
    held = [-1] * n_slots
    for root in range(n_slots):
        elems = sets[root // b]
        for e in elems:
            if e not in owner:
                owner[e] = root
                held[root] = e
                break
        else:
            if not _augment(sets, b, root, owner, held):
                return None, _reachable_sets(sets, b, root, owner)
    choice = tuple(tuple(sorted(held[i * b:(i + 1) * b])) for i in range(len(sets)))
    return choice, None


def _augment(sets, b, root, owner, held) -> bool:
    came_from: dict[int, int] = {}
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for e in sets[s // b]:
            if e in came_from:
                continue
            came_from[e] = s
            t = owner.get(e)
            if t is None:
                # flip the alternating path ending at the free element e
                while True:
                    prev = held[s]
                    owner[e] = s
                    held[s] = e
                    if s == root:
                        return True
                    e = prev
                    s = came_from[e]
            queue.append(t)
    return False


def _reachable_sets(sets, b, root, owner) -> frozenset:
    seen_slots = {root}
    seen_elems: set[int] = set()
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for e in sets[s // b]:
            if e in seen_elems:
                continue
            seen_elems.add(e)
            t = owner[e]
            if t not in seen_slots:
                seen_slots.add(t)
                queue.append(t)
    return frozenset(s // b for s in seen_slots)


def find_transversal(f: FamilyLike) -> tuple[int, ...] | None:
    """Distinct representatives ``x_i in S_i``, or ``None`` if none exist.

    >>> find_transversal([{1}, {1}]) is None
    True
    >>> find_transversal([{1, 2}, {2, 3}])
    (1, 2)
    """
    choice, _ = saturate(_sets_of(f), 1)
    return None if choice is None else tuple(c[0] for c in choice)


def find_b_transversal(f: FamilyLike, b: int) -> tuple[tuple[int, ...], ...] | None:
    """Pick a ``b``-subset of every set, all picked elements pairwise distinct."""
    if b < 1:
        raise ValueError("demand b must be positive")
    choice, _ = saturate(_sets_of(f), b)
    return choice


def hall_violator(f: FamilyLike, b: int = 1) -> frozenset[int] | None:
    """Indices ``J`` with ``|union of S_j, j in J| < b|J|``, or ``None`` if solvable."""
    if b < 1:
        raise ValueError("demand b must be positive")
    _, violator = saturate(_sets_of(f), b)
    return violator


def is_b_transversal(f: FamilyLike, choice, b: int = 1) -> bool:
    """Check a candidate system of representatives directly."""
    sets = _sets_of(f)
    if choice is None or len(choice) != len(sets):
        return False
    used: set[int] = set()
    for s, picked in zip(sets, choice):
        picked = (picked,) if b == 1 and isinstance(picked, int) else tuple(picked)
        if len(picked) != b or len(set(picked)) != b or not set(picked) <= set(s):
            return False
        if used & set(picked):
            return False
        used.update(picked)
    return True
