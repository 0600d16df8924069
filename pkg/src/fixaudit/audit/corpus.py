"""Graph corpora: exhaustive small graphs, graph6 ingestion and named families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path
from typing import Iterator

from ..coloring import chromatic_number
from ..families import generate, parse_family
from ..formats import ParseError, decode_graph6
from ..graph import Graph, GraphError
from ..planarity import is_planar

EXHAUSTIVE_LIMIT = 7


class ConfigError(ValueError):
    pass


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered colour-refinement cells; the ordering is isomorphism-invariant."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v)))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> int:
    """Least upper-triangle bit code over all labelings that respect the refined cells.

    The cells are ordered by an isomorphism-invariant rule, so minimising over
    the labelings compatible with them is a canonical form.
    """
    cells = _refined_cells(g)
    edges = g.sorted_edges()
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        pos = {}
        for block in choice:
            for v in block:
                pos[v] = len(pos)
        code = 0
        for u, v in edges:
            i, j = pos[u], pos[v]
            if i > j:
                i, j = j, i
            code |= 1 << (j * (j - 1) // 2 + i)
        if best is None or code < best:
            best = code
    return best or 0


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    for j in range(1, n):
        for i in range(j):
            if code >> (j * (j - 1) // 2 + i) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple:
    """All connected graphs on exactly ``n`` vertices up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each class on n-1 vertices by one vertex with a non-empty
    neighbourhood reaches every class on n vertices.
    """
    if n < 1:
        return ()
    if n > EXHAUSTIVE_LIMIT:
        raise ConfigError(f"exhaustive corpora stop at n={EXHAUSTIVE_LIMIT}; ingest graph6 for larger graphs")
    if n == 1:
        return (Graph(1),)
    seen = set()
    for base in connected_graphs(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if nbrs >> v & 1]
            seen.add(canonical_code(Graph(n, base.edges | frozenset(extra))))
    return tuple(graph_from_code(n, c) for c in sorted(seen))


@dataclass(frozen=True)
class Source:
    kind: str
    arg: object

    def describe(self) -> str:
        if self.kind == "family":
            name, params = self.arg
            return f"family({name}{':' if params else ''}{','.join(map(str, params))})"
        return f"{self.kind}({self.arg})"


def exhaustive(n: int) -> Source:
    return Source("exhaustive", n)


def exhaustive_upto(n: int, start: int = 1) -> list[Source]:
    return [exhaustive(i) for i in range(start, n + 1)]


def ingest(path) -> Source:
    return Source("ingest", str(path))


def family(text: str) -> Source:
    name, params = parse_family(text)
    return Source("family", (name, params))


FILTERS = ("connected", "planar")


@dataclass(frozen=True)
class CorpusSpec:
    sources: tuple
    filters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "filters", tuple(self.filters))
        for f in self.filters:
            if f not in FILTERS and not f.startswith("chromatic="):
                raise ConfigError(f"unknown corpus filter {f!r}")
        for s in self.sources:
            if s.kind == "exhaustive" and not 1 <= int(s.arg) <= EXHAUSTIVE_LIMIT:
                raise ConfigError(
                    f"exhaustive({s.arg}) is infeasible; exhaustive corpora cover 1..{EXHAUSTIVE_LIMIT}"
                )
            if s.kind not in ("exhaustive", "ingest", "family"):
                raise ConfigError(f"unknown corpus source {s.kind!r}")

    def to_json(self) -> dict:
        return {"sources": [s.describe() for s in self.sources], "filters": list(self.filters)}


def read_graph6_file(path) -> list[Graph]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(decode_graph6(line))
        except (ParseError, GraphError) as exc:
            raise ParseError(f"{path}, line {lineno}: {exc}") from None
    return graphs


def _source_graphs(src: Source) -> Iterator[Graph]:
    if src.kind == "exhaustive":
        yield from connected_graphs(int(src.arg))
    elif src.kind == "ingest":
        yield from read_graph6_file(src.arg)
    else:
        name, params = src.arg
        yield generate(name, *params)


def _passes(g: Graph, f: str) -> bool:
    if f == "connected":
        return g.is_connected()
    if f == "planar":
        return is_planar(g)
    return chromatic_number(g) == int(f.split("=", 1)[1])


def corpus(spec: CorpusSpec) -> Iterator[Graph]:
    for src in spec.sources:
        for g in _source_graphs(src):
            if all(_passes(g, f) for f in spec.filters):
                yield g
