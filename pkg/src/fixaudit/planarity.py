"""Planarity, rotation-system embeddings, cycle sides and adjaceability."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import networkx as nx

from .graph import CycleRef, Graph, GraphError, common_neighbors, enumerate_cycles


class NonPlanarError(GraphError):
    def __init__(self, message: str, witness: list[tuple[int, int]] | None = None):
        super().__init__(message)
        self.witness = witness or []


@dataclass(frozen=True)
class Embedding:
    """Clockwise neighbour order per vertex plus the face walks it induces.

    Each face is a tuple of darts ``(u, v)``; every edge contributes one dart
    in each direction, and each dart lies on exactly one face.
    """

    rotation: dict
    faces: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(trace_faces(self.rotation)))

    def face_of_dart(self) -> dict:
        return {d: i for i, face in enumerate(self.faces) for d in face}


@dataclass(frozen=True)
class SideClassification:
    on: frozenset
    side_a: frozenset
    side_b: frozenset

    def side(self, v: int) -> int | None:
        if v in self.side_a:
            return 0
        if v in self.side_b:
            return 1
        return None

    def opposite(self, u: int, v: int) -> bool:
        su, sv = self.side(u), self.side(v)
        return su is not None and sv is not None and su != sv


def trace_faces(rotation: dict) -> list[tuple]:
    nxt = {}
    for v, ring in rotation.items():
        for i, u in enumerate(ring):
            # Arriving at v along (u, v), leave along the edge after u in v's rotation.
            nxt[(u, v)] = (v, ring[(i + 1) % len(ring)])
    faces = []
    seen = set()
    for start in sorted(nxt):
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = nxt[d]
        faces.append(tuple(walk))
    if not faces and rotation:
        faces.append(())
    return faces


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return h


@lru_cache(maxsize=65536)
def _check(g: Graph):
    return nx.check_planarity(to_networkx(g), counterexample=True)


def is_planar(g: Graph) -> bool:
    return _check(g)[0]


def kuratowski_witness(g: Graph) -> list[tuple[int, int]] | None:
    """Edges of a K5 or K3,3 subdivision, or None for planar graphs."""
    ok, cert = _check(g)
    if ok:
        return None
    return sorted(tuple(sorted(e)) for e in cert.edges())


def embed(g: Graph) -> Embedding:
    if not g.is_connected():
        raise GraphError("embedding requires a connected graph")
    ok, cert = _check(g)
    if not ok:
        raise NonPlanarError("graph is not planar", kuratowski_witness(g))
    rotation = {v: tuple(cert.neighbors_cw_order(v)) for v in range(g.n)}
    return Embedding(rotation)


def euler_holds(g: Graph, emb: Embedding) -> bool:
    f = len(emb.faces)
    return g.n - g.m + f == 2


def cycle_sides(g: Graph, emb: Embedding, x: CycleRef | tuple) -> SideClassification:
    """Split the off-cycle vertices by the two face regions the cycle bounds.

    Faces are joined across every edge not on ``x``; the cycle leaves exactly
    two regions, and each off-cycle vertex inherits the region of its faces.
    Which region is reported first carries no meaning.
    """
    x = x if isinstance(x, CycleRef) else CycleRef(tuple(x))
    if not x.in_graph(g):
        raise GraphError(f"{x.vertices} is not a cycle of the graph")
    face_of = emb.face_of_dart()
    parent = list(range(len(emb.faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    cyc_edges = x.edge_set()
    for u, v in g.edges:
        if (u, v) in cyc_edges:
            continue
        a, b = find(face_of[(u, v)]), find(face_of[(v, u)])
        if a != b:
            parent[a] = b
    on = frozenset(x.vertices)
    groups: dict[int, set] = {}
    for v in range(g.n):
        if v in on:
            continue
        regions = {find(face_of[(v, w)]) for w in emb.rotation[v]}
        if len(regions) != 1:
            raise GraphError(f"vertex {v} touches {len(regions)} regions of cycle {x.vertices}")
        groups.setdefault(regions.pop(), set()).add(v)
    sides = sorted((frozenset(s) for s in groups.values()), key=sorted)
    if len(sides) > 2:
        raise GraphError(f"cycle {x.vertices} bounds more than two regions")
    while len(sides) < 2:
        sides.append(frozenset())
    return SideClassification(on, sides[0], sides[1])


def adjaceable(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("adjaceability needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex outside 0..{g.n - 1}")
    if not is_planar(g):
        raise NonPlanarError("adjaceability is defined on planar graphs", kuratowski_witness(g))
    if g.has_edge(u, v):
        return False
    return is_planar(g.add_edge(u, v))


def _component_views(g: Graph):
    """Yield (host vertex ids, relabelled component, embedding) per component with a cycle."""
    for comp in g.components():
        if len(comp) < 3:
            continue
        sub = g.induced(comp)
        if sub.m < 3:
            continue
        yield comp, sub, embed(sub)


def _require_planar(g: Graph) -> None:
    if not is_planar(g):
        raise NonPlanarError("check requires a planar graph", kuratowski_witness(g))


def theorem1_check(g: Graph, max_len: int | None = None) -> tuple[int, list[dict]]:
    """At most two vertices see a whole cycle, and two such lie on opposite sides.

    Returns ``(cycles_checked, violations)`` over the computed embedding.
    """
    _require_planar(g)
    checked = 0
    violations = []
    for comp, sub, emb in _component_views(g):
        cap = None if max_len is None else min(max_len, sub.n)
        for cyc in enumerate_cycles(sub, cap):
            checked += 1
            common = sorted(common_neighbors(sub, cyc.vertices))
            host_cycle = [comp[i] for i in cyc.vertices]
            if len(common) > 2:
                violations.append({
                    "kind": "more_than_two_universal",
                    "cycle": host_cycle,
                    "vertices": [comp[i] for i in common],
                })
            elif len(common) == 2:
                sides = cycle_sides(sub, emb, cyc)
                if not sides.opposite(*common):
                    violations.append({
                        "kind": "universal_pair_same_side",
                        "cycle": host_cycle,
                        "vertices": [comp[i] for i in common],
                    })
    return checked, violations


def theorem2_check(g: Graph, max_len: int | None = None) -> tuple[int, list[dict]]:
    """Two cycles both fully adjacent to one outside vertex never cross.

    Vertices of Y lying on X are neutral; only Y's off-X vertices are tested.
    Returns ``(ordered_cycle_pairs_checked, violations)``.
    """
    _require_planar(g)
    checked = 0
    violations = []
    for comp, sub, emb in _component_views(g):
        for x in range(sub.n):
            nbrs = sub.neighbors(x)
            if len(nbrs) < 3:
                continue
            local = sub.induced(nbrs)
            cap = None if max_len is None else min(max_len, local.n)
            if cap is not None and cap < 3:
                continue
            cycles = [CycleRef(tuple(nbrs[i] for i in c.vertices)) for c in enumerate_cycles(local, cap)]
            sides_of = {}
            for cx, cy in permutations(cycles, 2):
                checked += 1
                if cx not in sides_of:
                    sides_of[cx] = cycle_sides(sub, emb, cx)
                sides = sides_of[cx]
                hit = {sides.side(v) for v in cy.vertices} - {None}
                if len(hit) == 2:
                    violations.append({
                        "kind": "crossing_cycles",
                        "vertex": comp[x],
                        "cycle_x": [comp[i] for i in cx.vertices],
                        "cycle_y": [comp[i] for i in cy.vertices],
                    })
    return checked, violations
