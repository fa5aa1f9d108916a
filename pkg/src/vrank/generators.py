"""Deterministic instance families.

Random instances draw from :class:`XorShift64Star`, a fixed 64-bit generator
specified entirely by the update equations below, so any port reproduces
the same graphs from the same seed::

    seeding (splitmix64):  z = seed + 0x9E3779B97F4A7C15
                           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                           z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                           state = z ^ (z >> 31)      (replaced by 1 if 0)
    step:                  x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27
    output:                (x * 0x2545F4914F6CDD1D) mod 2**64

All arithmetic is modulo 2**64. ``below(n)`` rejects outputs at or above
the largest multiple of ``n`` that fits in 64 bits and returns ``out % n``.
"""

from __future__ import annotations

from math import comb

from .errors import SizeOverflow
from .graph import Graph

MASK64 = (1 << 64) - 1
DEFAULT_SIZE_LIMIT = 2_000_000


class XorShift64Star:
    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        self.state = z or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


def kary_tree_size(k: int) -> int:
    return k if k == 1 else (k**k - 1) // (k - 1)


def complete_kary_tree(k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> tuple[Graph, int, list[int]]:
    """Complete ``k``-ary tree with ``k`` levels in BFS numbering.

    Returns ``(tree, root, level)`` where the root is vertex 0 and the
    children of ``v`` are ``k*v + 1 .. k*v + k``.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    n = kary_tree_size(k)
    if n > size_limit:
        raise SizeOverflow(f"T_{k} has {n} vertices, limit is {size_limit}")
    level = [0] * n
    edges = []
    for v in range(1, n):
        parent = (v - 1) // k
        level[v] = level[parent] + 1
        edges.append((parent, v))
    return Graph(n, edges), 0, level


def subdivided_replicated_clique(k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """``K_k`` with every edge replicated ``k`` times, then every copy subdivided.

    Hubs are ``0..k-1``; the subdividers of pair ``(i, j)`` follow in
    lexicographic pair order.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    n = k + k * comb(k, 2)
    if n > size_limit:
        raise SizeOverflow(f"subdivided clique k={k} has {n} vertices, limit is {size_limit}")
    edges = []
    s = k
    for i in range(k):
        for j in range(i + 1, k):
            for _ in range(k):
                edges.append((i, s))
                edges.append((j, s))
                s += 1
    return Graph(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def grid(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid, vertex ``r*cols + c`` at row ``r``, column ``c``."""
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be at least 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def apollonian(n_target: int, seed: int = 0) -> Graph:
    """Random stacked triangulation on ``n_target`` vertices.

    Starts from the triangle ``0, 1, 2`` and repeatedly drops a new vertex
    into a uniformly chosen inner face, joining it to the three corners. The
    chosen face is replaced in place by one child and the other two are
    appended, so the face list order is part of the determinism contract.
    """
    if n_target < 3:
        raise ValueError(f"n_target must be at least 3, got {n_target}")
    rng = XorShift64Star(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n_target):
        idx = rng.below(len(faces))
        a, b, c = faces[idx]
        edges.extend(((a, v), (b, v), (c, v)))
        faces[idx] = (a, b, v)
        faces.append((a, c, v))
        faces.append((b, c, v))
    return Graph(n_target, edges)
