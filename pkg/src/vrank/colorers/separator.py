"""l-vertex rankings from recursive three-path separators.

A connected planar graph with a BFS tree always has three root paths whose
union leaves components of at most half the vertices. The pieces are ranked
recursively with a shared color range ``1..d``; separator vertices take
colors above ``d`` that cycle with period ``l + 1`` along each root path, so
two of them share a color only when the BFS distance between them is at
least ``l + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import Disconnected, NoSeparatorFound
from ..graph import BfsTree, Graph, bfs_tree, components, induced_subgraph


@dataclass
class SeparatorNode:
    """One recursion step; vertex labels are those of the input graph."""

    vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    offset: int
    children: list["SeparatorNode"] = field(default_factory=list)

    @property
    def separator(self) -> frozenset:
        return frozenset(v for p in self.paths for v in p)

    def depth(self) -> int:
        return 1 + max((ch.depth() for ch in self.children), default=0)


def _splits(adj, alive: set, removed: set, limit: int) -> bool:
    """True when ``alive - removed`` has no connected piece above ``limit``.

    Stops as soon as one piece is too big or what is left cannot be.
    """
    left = len(alive) - len(removed)
    seen = set(removed)
    for s in alive:
        if left <= limit:
            return True
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        size = 1
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in alive and u not in seen:
                    seen.add(u)
                    stack.append(u)
                    size += 1
            if size > limit:
                return False
        left -= size
    return True


def _best_third(G: Graph, T: BfsTree, piece: list[int], first: int, limit: int):
    """Smallest ``u2 >= first`` whose root path cuts ``piece`` into parts of
    at most ``limit`` vertices, or ``None``.

    ``piece`` is a component left by an ancestor-closed set of tree vertices,
    so a root path meets it in one tail segment: the tree path from ``u2`` up
    to the first vertex outside the piece (empty when ``u2`` is outside).
    A longer tail only helps, so a failure at ``a`` condemns every ancestor
    of ``a`` inside the piece. Deepest candidates go first to exploit that.
    """
    inside = set(piece)
    parent = T.parent
    candidates = sorted((v for v in piece if v >= first), key=lambda v: (-T.depth[v], v))
    failed = set()
    best = None
    for a in candidates:
        if a in failed or (best is not None and a > best):
            continue
        cut = set()
        x = a
        while x in inside:
            cut.add(x)
            x = parent[x]
        if _splits(G.adj, inside, cut, limit):
            best = a
        else:
            failed |= cut
    return best


def three_path_separator(G: Graph, T: BfsTree) -> tuple[int, int, int, frozenset]:
    """First triple ``u0 <= u1 <= u2`` in lexicographic order whose root paths
    form a separator leaving components of at most ``n // 2`` vertices.

    For a fixed ``(u0, u1)`` the paths' union leaves at most one component
    above the limit; only ``u2`` inside that component can help, and only
    that component needs re-splitting. The answer is the triple a plain
    lexicographic scan would return.
    """
    n = G.n
    if n == 0:
        raise ValueError("empty graph has no separator")
    if len(T.parent) != n or T.parent[T.root] != T.root:
        raise ValueError("T is not a BFS tree of G")
    if any(d < 0 for d in T.depth):
        raise Disconnected("BFS tree does not span G")
    limit = n // 2
    root_paths = [frozenset(T.root_path(u)) for u in range(n)]
    for u0 in range(n):
        for u1 in range(u0, n):
            base = root_paths[u0] | root_paths[u1]
            big = [part for part in components(G, base) if len(part) > limit]
            if not big:
                return u0, u1, u1, base
            (piece,) = big
            u2 = _best_third(G, T, piece, u1, limit)
            if u2 is not None:
                return u0, u1, u2, base | root_paths[u2]
    raise NoSeparatorFound(f"no three root paths halve this graph (n={n}); is it planar?")


def _distinct_paths(T: BfsTree, triple) -> list[tuple[int, ...]]:
    """Root paths of the distinct endpoints of ``triple``, root first."""
    seen = []
    for u in triple:
        if u not in seen:
            seen.append(u)
    return [tuple(reversed(T.root_path(u))) for u in seen]


def _color_connected(G: Graph, l: int, colors: list[int], labels: list[int]) -> SeparatorNode:
    """Rank connected ``G`` (vertex ``i`` is ``labels[i]`` of the input)."""
    T = bfs_tree(G, 0)
    u0, u1, u2, S = three_path_separator(G, T)
    children = []
    offset = 0
    for part in components(G, S):
        H, back = induced_subgraph(G, part)
        child = _color_connected(H, l, colors, [labels[v] for v in back])
        children.append(child)
        offset = max(offset, max(colors[labels[v]] for v in back))
    paths = _distinct_paths(T, (u0, u1, u2))
    local: dict[int, int] = {}
    for j, p in enumerate(paths):
        for x in p:
            c = offset + 1 + T.depth[x] % (l + 1) + (l + 1) * j
            if c > local.get(x, 0):
                local[x] = c
    for x, c in local.items():
        colors[labels[x]] = c
    return SeparatorNode(
        vertices=tuple(labels),
        paths=tuple(tuple(labels[x] for x in p) for p in paths),
        offset=offset,
        children=children,
    )


def separator_lvr_coloring(G: Graph, l: int, return_tree: bool = False):
    """l-vertex ranking of a planar graph by recursive three-path separators.

    Components of the input are ranked independently and reuse colors. Uses
    at most ``3 (l + 1) ceil(log2 n)`` colors on planar input with ``n >= 2``.
    With ``return_tree=True`` also returns the recursion forest.
    """
    if l < 1:
        raise ValueError(f"l must be at least 1, got {l}")
    colors = [0] * G.n
    forest = []
    for part in components(G):
        H, back = induced_subgraph(G, part)
        forest.append(_color_connected(H, l, colors, back))
    if return_tree:
        return colors, forest
    return colors
