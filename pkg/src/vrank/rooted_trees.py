"""Non-isomorphic rooted trees via canonical level sequences.

A rooted tree is encoded by the depths of its vertices in preorder, visiting
larger subtrees first. Beyer and Hedetniemi's successor rule walks these
sequences from the path down to the star, producing each isomorphism class
exactly once.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the canonical level sequence of every rooted tree on ``n`` vertices."""
    if n <= 0:
        return
    levels = list(range(n))
    while True:
        yield tuple(levels)
        p = n - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def parents_from_levels(levels: Sequence[int]) -> list[int]:
    """Parent array of a preorder level sequence; the root is its own parent."""
    parent = [0] * len(levels)
    last_at = {}
    for i, lv in enumerate(levels):
        if lv > 0:
            parent[i] = last_at[lv - 1]
        last_at[lv] = i
    return parent


def tree_from_levels(levels: Sequence[int]) -> Graph:
    """Tree on ``len(levels)`` vertices rooted at vertex 0."""
    parent = parents_from_levels(levels)
    return Graph(len(levels), [(parent[i], i) for i in range(1, len(levels))])


def rooted_trees(n: int) -> Iterator[tuple[Graph, int]]:
    """Every rooted tree on ``n`` vertices up to isomorphism, as ``(tree, root)``."""
    for levels in level_sequences(n):
        yield tree_from_levels(levels), 0
