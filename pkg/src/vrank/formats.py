"""Text formats for graphs and colorings.

Graph::

    c optional comment
    p edge <n> <m>
    e <u> <v>          (m lines, 1-indexed endpoints)

Coloring::

    v <vertex> <color> (1-indexed vertex, one line per vertex, ascending)

Parsing is strict: any malformed line raises :class:`ParseError` carrying
the 1-based line number.
"""

from __future__ import annotations

from typing import Iterable, TextIO, Union

from .errors import ParseError
from .graph import Graph
from .validators import Coloring, as_color_list

Source = Union[str, Iterable[str]]


def _lines(src: Source) -> Iterable[str]:
    return src.splitlines() if isinstance(src, str) else src


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} {token!r} is not an integer") from None


def parse_graph(src: Source) -> Graph:
    n = m = None
    edges = []
    seen = set()
    last = 0
    for lineno, raw in enumerate(_lines(src), 1):
        last = lineno
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            n = _int(parts[2], lineno, "vertex count")
            m = _int(parts[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before problem line")
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u = _int(parts[1], lineno, "endpoint")
            v = _int(parts[2], lineno, "endpoint")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"endpoint outside 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise ParseError(last, "missing problem line")
    if len(edges) != m:
        raise ParseError(last, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(G: Graph) -> str:
    out = [f"p edge {G.n} {G.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def write_graph(G: Graph, fh: TextIO) -> None:
    fh.write(format_graph(G))


def parse_coloring(src: Source) -> list[int]:
    """Colors indexed by 0-based vertex; vertices must run 1..N in order."""
    colors = []
    last = 0
    for lineno, raw in enumerate(_lines(src), 1):
        last = lineno
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] != "v" or len(parts) != 3:
            raise ParseError(lineno, "expected 'v <vertex> <color>'")
        v = _int(parts[1], lineno, "vertex")
        x = _int(parts[2], lineno, "color")
        if v != len(colors) + 1:
            raise ParseError(lineno, f"expected vertex {len(colors) + 1}, got {v}")
        if x < 1:
            raise ParseError(lineno, f"color must be positive, got {x}")
        colors.append(x)
    return colors


def format_coloring(colors: Coloring, G: Graph = None) -> str:
    if G is not None:
        colors = as_color_list(G, colors)
    elif isinstance(colors, dict):
        colors = [colors[v] for v in sorted(colors)]
    return "".join(f"v {v + 1} {x}\n" for v, x in enumerate(colors))


def write_coloring(colors: Coloring, fh: TextIO, G: Graph = None) -> None:
    fh.write(format_coloring(colors, G))
