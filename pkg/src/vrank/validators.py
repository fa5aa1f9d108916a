"""Decide proper colorings, l-vertex rankings, unique-superior colorings and
vertex rankings, returning a concrete witness when the check fails.

A coloring is any total map ``vertex -> positive int``: a sequence indexed by
vertex or a mapping keyed by vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .errors import BudgetExceeded, ColoringIncomplete, InvalidColor
from .graph import Graph

Coloring = Union[Sequence[int], Mapping[int, int]]

NOT_PROPER = "NotProper"
PATH_VIOLATION = "PathViolation"

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Violation:
    kind: str
    path: tuple[int, ...]

    def __str__(self):
        return f"{self.kind} " + " ".join(str(v + 1) for v in self.path)


def as_color_list(G: Graph, c: Coloring) -> list[int]:
    """Normalise ``c`` to a list indexed by vertex, checking totality."""
    if isinstance(c, Mapping):
        missing = [v for v in range(G.n) if v not in c]
        if missing:
            raise ColoringIncomplete(f"no color for vertex {missing[0]}")
        colors = [c[v] for v in range(G.n)]
    else:
        colors = list(c)
        if len(colors) < G.n:
            raise ColoringIncomplete(f"no color for vertex {len(colors)}")
        if len(colors) > G.n:
            raise ColoringIncomplete(f"{len(colors)} colors given for {G.n} vertices")
    for v, x in enumerate(colors):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InvalidColor(f"vertex {v} has color {x!r}")
    return colors


def num_colors(c: Coloring) -> int:
    """Largest color used (0 for the empty coloring)."""
    values = c.values() if isinstance(c, Mapping) else c
    return max(values, default=0)


def is_proper(G: Graph, c: Coloring) -> Optional[Violation]:
    colors = as_color_list(G, c)
    for u, v in G.edges:
        if colors[u] == colors[v]:
            return Violation(NOT_PROPER, (u, v))
    return None


def is_l_vr(G: Graph, c: Coloring, l: int, budget: int = DEFAULT_BUDGET) -> Optional[Violation]:
    """Check that every simple path of length at most ``l`` between two
    equally colored vertices has an interior vertex of strictly higher color.

    Paths are explored depth-first from each start vertex ``s`` in ascending
    order. Only vertices colored below ``c(s)`` are walked through: a higher
    interior vertex settles every extension, and an equal one ends a shorter
    violating path that has already been reported.
    """
    if l < 1:
        raise ValueError(f"l must be at least 1, got {l}")
    colors = as_color_list(G, c)
    adj = G.adj
    steps = 0
    for s in range(G.n):
        cs = colors[s]
        path = [s]
        on_path = {s}
        # stack of neighbor iterators, one per path vertex
        stack = [iter(adj[s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"path enumeration exceeded {budget} steps")
            if nxt in on_path:
                continue
            cn = colors[nxt]
            if cn == cs:
                witness = tuple(path) + (nxt,)
                return Violation(NOT_PROPER if len(witness) == 2 else PATH_VIOLATION, witness)
            if cn < cs and len(path) < l:
                path.append(nxt)
                on_path.add(nxt)
                stack.append(iter(adj[nxt]))
    return None


def is_us(G: Graph, c: Coloring, budget: int = DEFAULT_BUDGET) -> Optional[Violation]:
    """Unique-superior check: the ``l = 2`` case of :func:`is_l_vr`."""
    return is_l_vr(G, c, 2, budget)


class _DisjointSets:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


def is_vr(G: Graph, c: Coloring) -> Optional[Violation]:
    """Full vertex-ranking check.

    ``c`` is a vertex ranking iff for every color ``t`` each component of the
    subgraph induced by colors ``<= t`` holds at most one vertex of color
    ``t``. Colors are swept upwards with a union-find; on the first clash a
    shortest witness path is recovered by BFS inside that subgraph.
    """
    colors = as_color_list(G, c)
    by_color: dict[int, list[int]] = {}
    for v, x in enumerate(colors):
        by_color.setdefault(x, []).append(v)
    dsu = _DisjointSets(G.n)
    for t in sorted(by_color):
        layer = by_color[t]
        for v in layer:
            for u in G.adj[v]:
                if colors[u] <= t:
                    dsu.union(u, v)
        owner: dict[int, int] = {}
        for v in layer:
            r = dsu.find(v)
            if r in owner:
                witness = _witness_path(G, colors, owner[r], t)
                return Violation(NOT_PROPER if len(witness) == 2 else PATH_VIOLATION, witness)
            owner[r] = v
    return None


def _witness_path(G: Graph, colors: list[int], start: int, t: int) -> tuple[int, ...]:
    """Shortest path from ``start`` to the nearest other color-``t`` vertex
    through vertices colored at most ``t``."""
    prev = {start: start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if u in prev or colors[u] > t:
                continue
            prev[u] = v
            if colors[u] == t:
                path = [u]
                while path[-1] != start:
                    path.append(prev[path[-1]])
                path.reverse()
                return tuple(path)
            queue.append(u)
    raise AssertionError("union-find reported a clash that BFS cannot reach")


def check_violation(G: Graph, c: Coloring, violation: Violation, l: Optional[int] = None) -> bool:
    """True when ``violation`` is a genuine witness against ``c``.

    ``l=None`` means unbounded path length.
    """
    colors = as_color_list(G, c)
    path = violation.path
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if any(not G.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    if l is not None and len(path) - 1 > l:
        return False
    if colors[path[0]] != colors[path[-1]]:
        return False
    if violation.kind == NOT_PROPER:
        return len(path) == 2
    return all(colors[v] <= colors[path[0]] for v in path[1:-1])
