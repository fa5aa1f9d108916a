"""Tree colorings: the level coloring of complete k-ary trees and a
centroid-decomposition vertex ranking for arbitrary trees."""

from __future__ import annotations

from ..errors import NotATree
from ..graph import Graph, is_connected
from ..generators import complete_kary_tree


def kary_level_coloring(k: int) -> tuple[Graph, list[int]]:
    """``T_k`` with every level-``i`` vertex colored ``k - i``."""
    T, _, level = complete_kary_tree(k)
    return T, [k - lv for lv in level]


def _centroid(T: Graph, piece: list[int], alive: list[bool]) -> int:
    """Smallest-index vertex of ``piece`` whose removal leaves parts of at
    most ``len(piece) // 2`` vertices."""
    root = piece[0]
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in T.adj[v]:
            if alive[u] and u not in parent:
                parent[u] = v
                order.append(u)
    size = dict.fromkeys(order, 1)
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    total = len(order)
    best = None
    for v in order:
        heaviest = total - size[v]
        for u in T.adj[v]:
            if alive[u] and parent.get(u) == v:
                heaviest = max(heaviest, size[u])
        if heaviest <= total // 2 and (best is None or v < best):
            best = v
    return best


def centroid_decomposition(T: Graph) -> list[int]:
    """Depth of every vertex in the centroid decomposition (top centroid 0)."""
    alive = [True] * T.n
    depth = [0] * T.n
    pending = [(sorted(range(T.n)), 0)] if T.n else []
    while pending:
        piece, dep = pending.pop()
        c = _centroid(T, piece, alive)
        depth[c] = dep
        alive[c] = False
        for u in T.adj[c]:
            if not alive[u]:
                continue
            part = [u]
            seen = {u}
            for v in part:
                for w in T.adj[v]:
                    if alive[w] and w not in seen:
                        seen.add(w)
                        part.append(w)
            pending.append((sorted(part), dep + 1))
    return depth


def centroid_vr_coloring(T: Graph) -> list[int]:
    """Vertex ranking of a tree with at most ``floor(log2 n) + 1`` colors.

    Centroids found at recursion depth ``j`` get color ``h - j`` where ``h``
    is the number of decomposition levels, so the top centroid of every
    piece outranks everything left in it.
    """
    if T.n and (T.m != T.n - 1 or not is_connected(T)):
        raise NotATree(f"graph with n={T.n}, m={T.m} is not a tree")
    depth = centroid_decomposition(T)
    levels = max(depth, default=-1) + 1
    return [levels - dep for dep in depth]
