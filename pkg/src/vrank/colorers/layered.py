"""Layered unique-superior coloring for sparse graphs.

Vertices are peeled into independent layers of bounded forward degree.
Each layer is then colored so that two of its vertices sharing an earlier
neighbor differ, using a palette placed above every earlier palette. Two
equally colored vertices therefore sit in one layer, and any common
neighbor lies in a later layer with a larger color.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import SetsOverlap
from ..graph import Graph, degeneracy_ordering, greedy_coloring, induced_subgraph


@dataclass(frozen=True)
class LayerPartition:
    layers: tuple[tuple[int, ...], ...]
    palettes: tuple[range, ...]
    b: int

    @property
    def t(self) -> int:
        return len(self.layers)


def shared_neighbor_coloring(G: Graph, A: Iterable[int], B: Iterable[int]) -> tuple[dict[int, int], int]:
    """Color ``B`` so that vertices with a common neighbor in ``A`` differ.

    The conflict graph on ``B`` turns every ``A``-neighborhood into a clique
    (the union of the graphs obtained by contracting one ``A``-``B`` edge per
    ``A`` vertex). It is colored first-fit along its degeneracy ordering, so
    the palette size never exceeds its degeneracy plus one. Only ``A``-``B``
    edges of ``G`` are consulted.
    """
    A = set(A)
    B = sorted(set(B))
    if A & set(B):
        raise SetsOverlap(f"A and B share {len(A & set(B))} vertices")
    index = {v: i for i, v in enumerate(B)}
    edges = set()
    for a in sorted(A):
        group = [index[u] for u in G.adj[a] if u in index]
        for x in range(len(group)):
            for y in range(x + 1, len(group)):
                edges.add((group[x], group[y]))
    conflict = Graph(len(B), edges)
    local = greedy_coloring(conflict, degeneracy_ordering(conflict).order)
    palette = max(local, default=1)
    return {v: local[i] for i, v in enumerate(B)}, palette


def peel_layers(G: Graph) -> tuple[list[list[int]], int, int]:
    """Partition ``V`` into independent layers.

    Returns ``(layers, d, b)`` with ``d`` the degeneracy of ``G`` and
    ``b = 4d`` the residual-degree threshold: each round keeps the residual
    vertices of degree at most ``b`` (at least half of them, since the
    residual graph has at most ``d`` edges per vertex), colors them with
    ``d + 1`` colors along a degeneracy ordering, and extracts the largest
    class (smallest color on ties).
    """
    d = degeneracy_ordering(G).d
    b = 4 * d
    alive = [True] * G.n
    deg = [G.degree(v) for v in range(G.n)]
    remaining = G.n
    layers = []
    while remaining:
        low = [v for v in range(G.n) if alive[v] and deg[v] <= b]
        H, back = induced_subgraph(G, low)
        local = greedy_coloring(H, degeneracy_ordering(H).order)
        counts: dict[int, int] = {}
        for x in local:
            counts[x] = counts.get(x, 0) + 1
        best = min(counts, key=lambda x: (-counts[x], x))
        layer = [back[i] for i, x in enumerate(local) if x == best]
        for v in layer:
            alive[v] = False
        for v in layer:
            for u in G.adj[v]:
                if alive[u]:
                    deg[u] -= 1
        remaining -= len(layer)
        layers.append(layer)
    return layers, d, b


def layered_us_coloring(G: Graph) -> tuple[list[int], LayerPartition]:
    layers, _, b = peel_layers(G)
    colors = [0] * G.n
    earlier: list[int] = []
    offset = 0
    palettes = []
    for layer in layers:
        local, size = shared_neighbor_coloring(G, earlier, layer)
        for v, x in local.items():
            colors[v] = offset + x
        palettes.append(range(offset + 1, offset + size + 1))
        offset += size
        earlier.extend(layer)
    partition = LayerPartition(tuple(tuple(layer) for layer in layers), tuple(palettes), b)
    return colors, partition
