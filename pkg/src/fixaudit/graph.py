"""Immutable simple graphs on vertices 0..n-1, cycles and neighbourhood queries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for invalid graph data or a violated operation precondition."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        norm = set()
        adj = [0] * self.n
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} has endpoint outside 0..{self.n - 1}")
            a, b = _norm(u, v)
            norm.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {_norm(u, v)})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {u}-{v} not in graph")
        return Graph(self.n, self.edges - {e})

    def remove_vertex(self, x: int) -> "Graph":
        """Delete ``x`` and shift higher ids down by one."""
        relabel = lambda w: w - (w > x)
        return Graph(
            self.n - 1,
            frozenset((relabel(u), relabel(v)) for u, v in self.edges if x not in (u, v)),
        )

    def induced(self, vs: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..len(vs)-1 in sorted order."""
        order = sorted(set(vs))
        pos = {v: i for i, v in enumerate(order)}
        return Graph(
            len(order),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(
            self.n + other.n,
            self.edges | frozenset((u + shift, v + shift) for u, v in other.edges),
        )

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class CycleRef:
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"cycle {self.vertices} repeats a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def edge_set(self) -> frozenset:
        vs = self.vertices
        return frozenset(_norm(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def canonical(self) -> "CycleRef":
        return CycleRef(canonical_cycle(self.vertices))

    def in_graph(self, g: Graph) -> bool:
        return all(0 <= v < g.n for v in self.vertices) and all(
            g.has_edge(u, v) for u, v in self.edge_set()
        )


def canonical_cycle(vs: Sequence[int]) -> tuple:
    """Least of all rotations and both orientations of the vertex sequence."""
    vs = list(vs)
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    rev = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, rev))


def common_neighbors(g: Graph, s: Iterable[int]) -> frozenset:
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
    if not s:
        return frozenset(range(g.n))
    common = (1 << g.n) - 1
    for v in s:
        common &= g.adj[v]
    return frozenset(bits(common & ~mask_of(s)))


def default_cycle_cap(g: Graph, max_len: int | None) -> int:
    if max_len is not None:
        return max_len
    if g.n <= 12:
        return max(g.n, 3)
    raise GraphError("cycle enumeration on more than 12 vertices needs an explicit max_len")


def enumerate_cycles(g: Graph, max_len: int | None = None, parity: str = "any") -> list[CycleRef]:
    """All simple cycles up to ``max_len``, each once in canonical orientation.

    A cycle is rooted at its least vertex and kept only in the orientation whose
    second vertex is smaller than its last, so every cycle appears exactly once.
    """
    max_len = default_cycle_cap(g, max_len)
    if max_len < 3:
        raise GraphError("max_len must be at least 3")
    if parity not in ("any", "odd"):
        raise GraphError(f"unknown parity {parity!r}")
    found: list[tuple] = []
    adj = g.adj
    for s in range(g.n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(v: int, used: int) -> None:
            nbrs = adj[v]
            if len(path) >= 3 and nbrs >> s & 1 and path[1] < path[-1]:
                if parity == "any" or len(path) % 2 == 1:
                    found.append(tuple(path))
            if len(path) == max_len:
                return
            for w in bits(nbrs & allowed & ~used):
                path.append(w)
                extend(w, used | (1 << w))
                path.pop()

        extend(s, 1 << s)
    found.sort(key=lambda c: (len(c), c))
    return [CycleRef(c) for c in found]


def odd_cycles_within(g: Graph, vs: Iterable[int], max_len: int | None = None) -> list[CycleRef]:
    """Odd cycles of ``g`` whose vertices all lie in ``vs``, in host labels."""
    order = sorted(set(vs))
    if len(order) < 3:
        return []
    sub = g.induced(order)
    cap = len(order) if max_len is None else min(max_len, len(order))
    if cap < 3:
        return []
    return [CycleRef(tuple(order[i] for i in c.vertices)) for c in enumerate_cycles(sub, cap, "odd")]
