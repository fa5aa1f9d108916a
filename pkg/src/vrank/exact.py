"""Exact oracles for small graphs.

``exact_rank_number`` finds the least number of colors admitting a
unique-superior coloring, an l-vertex ranking or a vertex ranking by
iterative deepening over ``k`` and backtracking over vertices in degeneracy
order. ``p_predicate`` and ``min_f`` evaluate the rooted-tree counting
predicates used to bound the unique-superior number of trees.
"""

from __future__ import annotations

import sys
from typing import Callable, Iterable, Mapping, Optional

from .errors import Infeasible, NotATree, SearchBudgetExceeded
from .graph import Graph, degeneracy_ordering, is_connected
from .rooted_trees import rooted_trees

KINDS = ("us", "lvr", "vr")
DEFAULT_SEARCH_BUDGET = 5 * 10**7


# Each checker answers: with ``colors`` (0 = unassigned) already a valid
# partial coloring, does giving ``v`` color ``x`` create a violation among
# assigned vertices? Only constraints through ``v`` need checking.

def _proper_ok(adj, colors, v, x):
    for u in adj[v]:
        if colors[u] == x:
            return False
    return True


def _us_ok(adj, colors, v, x):
    above = set()
    for a in adj[v]:
        ca = colors[a]
        if not ca:
            continue
        if ca == x:
            return False
        if ca > x:
            # a-v-b with c(a) = c(b) > c(v)
            if ca in above:
                return False
            above.add(ca)
        else:
            # v-a-w with c(w) = c(v) > c(a)
            for w in adj[a]:
                if w != v and colors[w] == x:
                    return False
    return True


def _make_lvr_ok(l):
    if l == 1:
        return _proper_ok
    if l == 2:
        return _us_ok

    def ok(adj, colors, v, x):
        # v as an endpoint: walk through lower colors towards another x
        stack = [(v, iter(adj[v]))]
        on_path = {v}
        while stack:
            a, it = stack[-1]
            b = next(it, None)
            if b is None:
                stack.pop()
                on_path.discard(a)
                continue
            cb = colors[b]
            if not cb or b in on_path:
                continue
            if cb == x:
                return False
            if cb < x and len(stack) < l:
                on_path.add(b)
                stack.append((b, iter(adj[b])))

        # v in the interior: join two arms ending at equal colors t that
        # exceed everything strictly between them
        arms: dict[int, list[tuple[int, int, frozenset]]] = {}
        path = [v]
        top = [x]
        stack = [iter(adj[v])]
        while stack:
            b = next(stack[-1], None)
            if b is None:
                stack.pop()
                path.pop()
                top.pop()
                continue
            cb = colors[b]
            if not cb or b in path:
                continue
            if cb > top[-1]:
                arms.setdefault(cb, []).append((len(path), top[-1], frozenset(path[1:] + [b])))
            if len(path) < l - 1:
                path.append(b)
                top.append(max(top[-1], cb))
                stack.append(iter(adj[b]))
        for t, group in arms.items():
            for i in range(len(group)):
                len1, _, set1 = group[i]
                for j in range(i + 1, len(group)):
                    len2, _, set2 = group[j]
                    if len1 + len2 <= l and not (set1 & set2):
                        return False
        return True

    return ok


def _vr_ok(adj, colors, v, x):
    thresholds = sorted({c for c in colors if c >= x} | {x})
    for t in thresholds:
        seen = {v}
        stack = [v]
        hits = 1 if x == t else 0
        while stack:
            a = stack.pop()
            for b in adj[a]:
                cb = colors[b]
                if cb and cb <= t and b not in seen:
                    if cb == t:
                        hits += 1
                        if hits > 1:
                            return False
                    seen.add(b)
                    stack.append(b)
    return True


def _checker(kind: str, l: Optional[int]) -> Callable:
    if kind == "us":
        return _us_ok
    if kind == "lvr":
        if l is None or l < 1:
            raise ValueError("kind 'lvr' needs l >= 1")
        return _make_lvr_ok(l)
    if kind == "vr":
        return _vr_ok
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


class _Search:
    def __init__(self, G: Graph, ok, budget: int):
        self.adj = G.adj
        self.ok = ok
        self.budget = budget
        self.nodes = 0

    def solve(self, order, k, domains: Optional[Mapping[int, Iterable[int]]] = None) -> Optional[list[int]]:
        colors = [0] * len(self.adj)
        choices = []
        for v in order:
            allowed = range(1, k + 1)
            if domains is not None and v in domains:
                allowed = sorted(c for c in domains[v] if 1 <= c <= k)
            choices.append(allowed)
        if self._extend(order, choices, colors, 0):
            return colors
        return None

    def _extend(self, order, choices, colors, i):
        if i == len(order):
            return True
        v = order[i]
        for x in choices[i]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")
            if self.ok(self.adj, colors, v, x):
                colors[v] = x
                if self._extend(order, choices, colors, i + 1):
                    return True
                colors[v] = 0
        return False


def _search_order(G: Graph) -> list[int]:
    if G.n + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(G.n + 1000)
    return list(degeneracy_ordering(G).order)


def exact_rank_number(
    G: Graph,
    kind: str = "us",
    l: Optional[int] = None,
    max_k: Optional[int] = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> tuple[int, list[int]]:
    """Least ``k`` admitting a coloring of the given kind, with a witness.

    ``kind`` is ``"us"``, ``"lvr"`` (with ``l``) or ``"vr"``. Raises
    :class:`Infeasible` when no valid coloring uses at most ``max_k``
    colors, which is how lower bounds are certified.
    """
    ok = _checker(kind, l)
    if max_k is None:
        max_k = max(G.n, 1)
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}")
    if G.n == 0:
        return 0, []
    order = _search_order(G)
    search = _Search(G, ok, budget)
    for k in range(1, max_k + 1):
        colors = search.solve(order, k)
        if colors is not None:
            return k, colors
    raise Infeasible(kind if kind != "lvr" else f"{l}-vr", max_k)


def _check_tree(T: Graph):
    if T.m != T.n - 1 or not is_connected(T):
        raise NotATree(f"graph with n={T.n}, m={T.m} is not a tree")


def p_predicate(T: Graph, r: int, i: int, k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """True iff for all colors ``i <= a, b <= k-1`` some unique-superior
    coloring of ``T`` with colors ``1..k-1`` gives the root ``r`` color ``a``
    and no child of ``r`` color ``b``."""
    _check_tree(T)
    if not 1 <= i <= k - 1:
        raise ValueError(f"need 1 <= i <= k-1, got i={i}, k={k}")
    palette = k - 1
    order = _search_order(T)
    search = _Search(T, _us_ok, budget)
    children = T.adj[r]
    for root_color in range(i, k):
        for banned in range(i, k):
            domains = {r: [root_color]}
            for ch in children:
                domains[ch] = [c for c in range(1, palette + 1) if c != banned]
            if search.solve(order, palette, domains) is None:
                return False
    return True


def p_table(T: Graph, r: int, k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> dict[int, bool]:
    """``{i: p_predicate(T, r, i, k)}`` for ``i = 1..k-1``."""
    return {i: p_predicate(T, r, i, k, budget) for i in range(1, k)}


def min_f(i: int, k: int, n_max: int, budget: int = DEFAULT_SEARCH_BUDGET) -> Optional[tuple[int, Graph, int]]:
    """Smallest rooted tree ``(T, r)`` with ``p_predicate(T, r, i, k)`` false.

    Trees are scanned by increasing size up to ``n_max``; returns
    ``(n, T, r)`` or ``None`` when every tree in range satisfies the predicate.
    """
    for n in range(1, n_max + 1):
        for T, r in rooted_trees(n):
            if not p_predicate(T, r, i, k, budget):
                return n, T, r
    return None
