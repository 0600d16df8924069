"""Colorings as vertex partitions, chromatic number, criticality and pinning."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import CycleRef, Graph, GraphError, bits


@dataclass(frozen=True)
class Coloring:
    """Proper partition of V(g); classes are sorted tuples ordered by least member."""

    classes: tuple

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class PinnedLabeling:
    """Colors 1..k per vertex, with the reference cycle holding colors 1..k-1."""

    colors: tuple
    reference: CycleRef

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def _partitions(g: Graph, k: int, first_only: bool = False):
    n = g.n
    adj = g.adj
    assign = [0] * n
    masks: list[int] = []

    def rec(v: int):
        if v == n:
            yield tuple(tuple(bits(m)) for m in masks)
            return
        nb = adj[v]
        for j, m in enumerate(masks):
            if not m & nb:
                masks[j] = m | (1 << v)
                assign[v] = j
                yield from rec(v + 1)
                masks[j] = m
        if len(masks) < k:
            masks.append(1 << v)
            assign[v] = len(masks) - 1
            yield from rec(v + 1)
            masks.pop()

    return rec(0)


def enumerate_colorings(g: Graph, k: int) -> list[Coloring]:
    """All proper partitions into at most ``k`` classes, in restricted-growth order.

    Vertices are placed in id order; a vertex may open a new class only after
    every existing class has been tried, so each partition is produced once.
    """
    if k < 1:
        return [Coloring(())] if g.n == 0 else []
    return [Coloring(c) for c in _partitions(g, k)]


def is_k_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k < 1:
        return False
    # Largest-degree-first ordering prunes far earlier than id order.
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    relabelled = Graph(g.n, frozenset((pos[u], pos[v]) for u, v in g.edges))
    return next(iter(_partitions(relabelled, k)), None) is not None


@lru_cache(maxsize=65536)
def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    k = 2
    while not is_k_colorable(g, k):
        k += 1
    return k


def is_k_critical(g: Graph, k: int) -> bool:
    if chromatic_number(g) != k:
        return False
    return all(chromatic_number(g.remove_edge(u, v)) == k - 1 for u, v in g.edges)


def is_uniquely_k_colorable(g: Graph, k: int) -> bool:
    count = 0
    for _ in _partitions(g, k):
        count += 1
        if count > 1:
            return False
    return count == 1


def is_apollonian(g: Graph) -> bool:
    """Planar 3-tree test: peel degree-3 vertices whose neighbours form a triangle.

    Any such vertex can be peeled first, so the greedy reduction decides
    membership; a successful peel down to K3 is then checked for planarity so
    that non-planar 3-trees are rejected.
    """
    from .planarity import is_planar

    if g.n < 3:
        return False
    h = g
    while h.n > 3:
        for v in range(h.n):
            if h.degree(v) != 3:
                continue
            a, b, c = h.neighbors(v)
            if h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c):
                h = h.remove_vertex(v)
                break
        else:
            return False
    return h.m == 3 and is_planar(g)


def check_reference(g: Graph, r: CycleRef | tuple) -> CycleRef:
    r = r if isinstance(r, CycleRef) else CycleRef(tuple(r))
    if not r.is_odd or not r.in_graph(g):
        raise GraphError(f"{r.vertices} is not an odd cycle of the graph")
    return r


def pinned_labelings(g: Graph, r: CycleRef | tuple, k: int = 4) -> list[PinnedLabeling]:
    """Labelings of the k-colorings in which ``r`` spans exactly k-1 classes.

    The classes met by ``r`` get colors 1..k-1 ordered by the least ``r``
    vertex each contains; the remaining class gets color k.
    """
    r = check_reference(g, r)
    if chromatic_number(g) != k:
        raise GraphError(f"graph is {chromatic_number(g)}-chromatic, not {k}-chromatic")
    rset = set(r.vertices)
    out = []
    for col in enumerate_colorings(g, k):
        where = col.class_of()
        ref_classes = []
        for v in sorted(rset):
            if where[v] not in ref_classes:
                ref_classes.append(where[v])
        if len(ref_classes) != k - 1:
            continue
        label = {c: i + 1 for i, c in enumerate(ref_classes)}
        colors = tuple(label.get(where[v], k) for v in range(g.n))
        out.append(PinnedLabeling(colors, r))
    return out


def default_reference(g: Graph) -> CycleRef:
    """Lexicographically least triangle."""
    for u, v in g.sorted_edges():
        for w in bits(g.adj[u] & g.adj[v]):
            if w > v:
                return CycleRef((u, v, w))
    raise GraphError("graph has no triangle to use as coloring reference")


def triangles(g: Graph) -> list[CycleRef]:
    return [
        CycleRef((u, v, w))
        for u, v in g.sorted_edges()
        for w in bits(g.adj[u] & g.adj[v])
        if w > v
    ]
