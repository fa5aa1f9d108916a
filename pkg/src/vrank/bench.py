"""Empirical color-budget experiments.

Suites and what ``sizes`` means for each:

=============  ===========================  ========================  ================
suite          instance                     colorer                   validator
=============  ===========================  ========================  ================
planar-us      apollonian(n, seed)          layered_us_coloring       is_us
planar-lvr     apollonian(n, seed)          separator_lvr_coloring    is_l_vr(l)
degen-us       subdivided clique, k=size    degenerate_us_coloring    is_us
tree-exact     T_k, k=size                  exact us number           is_us
=============  ===========================  ========================  ================

The ``depth`` column holds the layer count (planar-us), the separator
recursion depth (planar-lvr) and 0 otherwise.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from typing import Optional, Sequence, TextIO

from .colorers import degenerate_us_coloring, layered_us_coloring, separator_lvr_coloring
from .exact import exact_rank_number
from .generators import apollonian, complete_kary_tree, subdivided_replicated_clique
from .validators import is_l_vr, is_us, num_colors

SUITES = ("planar-us", "planar-lvr", "degen-us", "tree-exact")
CSV_HEADER = ("instance", "n", "m", "algorithm", "l", "colors", "depth", "valid", "runtime_ms")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    algorithm: str
    l: int
    colors: int
    depth: int
    valid: bool
    runtime_ms: float


def _run_one(suite: str, size: int, l: Optional[int], seed: int) -> BenchRecord:
    start = time.perf_counter()
    if suite == "planar-us":
        G = apollonian(size, seed)
        label = f"apollonian-n{size}-s{seed}"
        colors, part = layered_us_coloring(G)
        algo, lval, depth = "layered-us", 0, part.t
        valid = is_us(G, colors) is None
    elif suite == "planar-lvr":
        lval = 2 if l is None else l
        G = apollonian(size, seed)
        label = f"apollonian-n{size}-s{seed}"
        colors, forest = separator_lvr_coloring(G, lval, return_tree=True)
        algo = "sep-lvr"
        depth = max((node.depth() for node in forest), default=0)
        valid = is_l_vr(G, colors, lval) is None
    elif suite == "degen-us":
        G = subdivided_replicated_clique(size)
        label = f"subclique-k{size}"
        colors = degenerate_us_coloring(G)
        algo, lval, depth = "degen-us", 0, 0
        valid = is_us(G, colors) is None
    elif suite == "tree-exact":
        G, _, _ = complete_kary_tree(size)
        label = f"kary-k{size}"
        _, colors = exact_rank_number(G, "us")
        algo, lval, depth = "exact-us", 0, 0
        valid = is_us(G, colors) is None
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return BenchRecord(label, G.n, G.m, algo, lval, num_colors(colors), depth, valid, elapsed)


def run_bench(
    suite: str,
    sizes: Sequence[int],
    l: Optional[int] = None,
    seed: int = 1,
    jobs: int = 1,
) -> list[BenchRecord]:
    """One record per size, in input order whatever the completion order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    args = [(suite, s, l, seed) for s in sizes]
    if jobs <= 1:
        return [_run_one(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, *zip(*args)))


def write_csv(records: Sequence[BenchRecord], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        row = list(astuple(rec))
        row[7] = "true" if rec.valid else "false"
        row[8] = f"{rec.runtime_ms:.3f}"
        writer.writerow(row)
