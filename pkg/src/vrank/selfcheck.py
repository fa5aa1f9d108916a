"""Executable checks of the rooted-tree counting machinery and the validator
hierarchy, printed as a pass/fail table."""

from __future__ import annotations

import random
from dataclasses import dataclass
from .exact import exact_rank_number, min_f, p_table
from .graph import Graph
from .rooted_trees import rooted_trees
from .validators import is_l_vr, is_proper, is_vr

ROOTED_TREE_COUNTS = (1, 1, 2, 4, 9, 20, 48, 115, 286)  # OEIS A000081


@dataclass
class CheckResult:
    name: str
    status: str  # PASS, FAIL or DIFF (documented disagreement, not a failure)
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"


@dataclass
class TreeRow:
    tree: Graph
    root: int
    us: int
    table: dict


def tree_tables(n_max: int = 6, k: int = 4) -> list[TreeRow]:
    """``p_i`` truth tables for every rooted tree up to ``n_max`` vertices."""
    rows = []
    for n in range(1, n_max + 1):
        for T, r in rooted_trees(n):
            us, _ = exact_rank_number(T, "us")
            rows.append(TreeRow(T, r, us, p_table(T, r, k)))
    return rows


def check_rooted_tree_counts(n_max: int = 6) -> CheckResult:
    got = tuple(sum(1 for _ in rooted_trees(n)) for n in range(1, n_max + 1))
    want = ROOTED_TREE_COUNTS[:n_max]
    ok = got == want
    return CheckResult("rooted-tree enumeration", "PASS" if ok else "FAIL", f"counts {got} expected {want}")


def check_observation(rows: list[TreeRow], k: int, n_max: int) -> list[CheckResult]:
    """A tree needing ``k`` or more colors has every ``p_i`` false (any true
    ``p_i`` exhibits a ``(k-1)``-coloring). Also re-evaluated at each tree's
    own unique-superior number."""
    bad_k = [row for row in rows if row.us >= k and any(row.table.values())]
    bad_own = []
    for row in rows:
        if row.us < 2:
            continue
        own = p_table(row.tree, row.root, row.us)
        if any(own.values()):
            bad_own.append(row)
    n_at_k = sum(1 for row in rows if row.us == k)
    ok = not (bad_k or bad_own)
    detail = (
        f"{len(rows)} rooted trees n<={n_max}; {n_at_k} with us={k}; "
        f"violations: {len(bad_k) + len(bad_own)}"
    )
    return [CheckResult(f"p_i=0 whenever us(T)=k (k={k}, and k=us(T))", "PASS" if ok else "FAIL", detail)]


def check_monotone(rows: list[TreeRow]) -> CheckResult:
    bad = [row for row in rows if any(row.table[i] and not row.table[i + 1] for i in range(1, len(row.table)))]
    return CheckResult(
        "p_i monotone in i", "PASS" if not bad else "FAIL", f"{len(rows)} trees, {len(bad)} non-monotone"
    )


def check_f1(k: int = 4, n_max: int = 6) -> CheckResult:
    found = min_f(1, k, n_max)
    if found is None:
        return CheckResult(f"min_f(1, {k}, {n_max})", "FAIL", "no tree in range has p_1 = 0")
    n, T, r = found
    claimed = k - 2
    status = "PASS" if n == claimed else "DIFF"
    verdict = "agrees with" if n == claimed else "differs from"
    return CheckResult(
        f"min_f(1, {k}, {n_max})",
        status,
        f"f(1)={n} (witness: root of degree {T.degree(r)}, {T.n} vertices) {verdict} claimed f(1)=k-2={claimed}",
    )


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def check_hierarchy(cases: int = 2000, seed: int = 7, max_l: int = 4) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        n = rng.randint(1, 8)
        G = random_graph(rng, n, rng.choice((0.2, 0.35, 0.5)))
        c = [rng.randint(1, max(1, n)) for _ in range(n)]
        vr = is_vr(G, c) is None
        lvr = [is_l_vr(G, c, l) is None for l in range(1, max_l + 1)]
        proper = is_proper(G, c) is None
        if vr and not all(lvr):
            bad += 1
        if any(lvr[j] and not lvr[j - 1] for j in range(1, max_l)):
            bad += 1
        if lvr[0] != proper:
            bad += 1
    return CheckResult("validator hierarchy fuzz", "PASS" if not bad else "FAIL", f"{cases} cases, {bad} counterexamples")


def run_selfcheck(n_max: int = 6, k: int = 4, fuzz_cases: int = 2000, seed: int = 7) -> list[CheckResult]:
    results = [check_rooted_tree_counts(n_max)]
    rows = tree_tables(n_max, k)
    results.extend(check_observation(rows, k, n_max))
    results.append(check_monotone(rows))
    results.append(check_f1(k, n_max))
    results.append(check_hierarchy(fuzz_cases, seed))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  status  detail"]
    lines.extend(f"{r.name:<{width}}  {r.status:<6}  {r.detail}" for r in results)
    return "\n".join(lines)
