"""Unique-superior coloring of d-degenerate graphs with O(d sqrt(n)) colors."""

from __future__ import annotations

from math import isqrt

from ..graph import Graph, degeneracy_ordering, induced_subgraph


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def square_greedy_coloring(G: Graph) -> list[int]:
    """Proper coloring of the square of ``G``, first-fit along a degeneracy
    ordering of ``G`` itself (not of its square)."""
    color = [0] * G.n
    for v in degeneracy_ordering(G).order:
        used = set()
        for u in G.adj[v]:
            used.add(color[u])
            for w in G.adj[u]:
                if w != v:
                    used.add(color[w])
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def degenerate_us_coloring(G: Graph) -> list[int]:
    """Square-color the vertices of degree below ``ceil(sqrt(n))``; every
    remaining vertex gets its own color above those, in ascending index order."""
    n = G.n
    if n == 0:
        return []
    threshold = ceil_sqrt(n)
    low = [v for v in range(n) if G.degree(v) < threshold]
    H, back = induced_subgraph(G, low)
    local = square_greedy_coloring(H)
    colors = [0] * n
    for i, v in enumerate(back):
        colors[v] = local[i]
    top = max(local, default=0)
    for v in range(n):
        if not colors[v]:
            top += 1
            colors[v] = top
    return colors
