"""Immutable simple undirected graphs and the structural primitives built on them.

Vertices are the dense integers ``0..n-1``. Every tie anywhere in the package
is broken towards the smaller vertex index so results are reproducible.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Disconnected, EndpointOutOfRange, SelfLoop


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The edge set is stored as a sorted tuple of pairs ``(u, v)`` with
    ``u < v`` and adjacency as sorted tuples. Instances are never mutated
    after construction.
    """

    __slots__ = ("_n", "_edges", "_adj", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        pairs = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._n = n
        self._edges = tuple(sorted(pairs))
        self._adj = tuple(tuple(sorted(a)) for a in nbrs)
        self._adjsets = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(a) for a in self._adj)
        return v in self._adjsets[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Vertex order in which each vertex has at most ``d`` earlier neighbors."""

    order: tuple[int, ...]
    d: int

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


@dataclass(frozen=True)
class BfsTree:
    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]

    def root_path(self, u: int) -> list[int]:
        """Vertices on the tree path from ``u`` up to the root, ``u`` first."""
        path = [u]
        while u != self.root:
            u = self.parent[u]
            path.append(u)
        return path


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def degeneracy_ordering(G: Graph) -> DegeneracyOrdering:
    """Peel minimum-degree vertices (smallest index first) and reverse the peel.

    Buckets are indexed by residual degree; each bucket is a min-heap of
    vertex indices with lazy deletion, which gives the deterministic
    tie-break at an extra log factor.
    """
    n = G.n
    if n == 0:
        return DegeneracyOrdering((), 0)
    deg = [G.degree(v) for v in range(n)]
    buckets: list[list[int]] = [[] for _ in range(max(deg) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending already, so a valid heap
    removed = [False] * n
    peel = []
    d = 0
    low = 0
    for _ in range(n):
        while True:
            while not buckets[low]:
                low += 1
            v = heapq.heappop(buckets[low])
            if not removed[v] and deg[v] == low:
                break
        removed[v] = True
        peel.append(v)
        d = max(d, low)
        for u in G.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
                if deg[u] < low:
                    low = deg[u]
    peel.reverse()
    return DegeneracyOrdering(tuple(peel), d)


def degeneracy(G: Graph) -> int:
    return degeneracy_ordering(G).d


def greedy_coloring(G: Graph, order: Sequence[int]) -> list[int]:
    """First-fit coloring along ``order``; colors start at 1."""
    color = [0] * G.n
    for v in order:
        used = {color[u] for u in G.adj[v]}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def square(G: Graph) -> Graph:
    """Graph joining every pair of vertices at distance 1 or 2 in ``G``."""
    edges = []
    for v in range(G.n):
        reach = set(G.adj[v])
        for u in G.adj[v]:
            reach.update(G.adj[u])
        edges.extend((v, w) for w in reach if w > v)
    return Graph(G.n, edges)


def bfs_tree(G: Graph, root: int) -> BfsTree:
    n = G.n
    parent = [-1] * n
    depth = [-1] * n
    parent[root] = root
    depth[root] = 0
    queue = deque([root])
    seen = 1
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if depth[u] < 0:
                depth[u] = depth[v] + 1
                parent[u] = v
                queue.append(u)
                seen += 1
    if seen != n:
        raise Disconnected(f"{n - seen} vertices unreachable from root {root}")
    return BfsTree(root, tuple(parent), tuple(depth))


def components(G: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``G`` minus ``removed``.

    Each component is sorted; components are ordered by their smallest vertex.
    """
    mark = [False] * G.n
    for v in removed:
        mark[v] = True
    parts = []
    for s in range(G.n):
        if mark[s]:
            continue
        mark[s] = True
        part = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in G.adj[v]:
                if not mark[u]:
                    mark[u] = True
                    part.append(u)
                    stack.append(u)
        part.sort()
        parts.append(part)
    return parts


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` in ascending order of ``S``.

    The second value maps each new label back to its vertex of ``G``.
    """
    verts = sorted(set(S))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        iv = index[v]
        for u in G.adj[v]:
            iu = index.get(u)
            if iu is not None and iv < iu:
                edges.append((iv, iu))
    return Graph(len(verts), edges), verts


def distances_from(G: Graph, source: int) -> list[int]:
    """Unweighted shortest-path distances; -1 marks unreachable vertices."""
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist
