"""Deterministic generators for fixtures and test families."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(rim_len: int) -> Graph:
    """Rim 0..rim_len-1, hub rim_len."""
    if rim_len < 3:
        raise GraphError("wheel needs a rim of length >= 3")
    rim = [(i, (i + 1) % rim_len) for i in range(rim_len)]
    spokes = [(i, rim_len) for i in range(rim_len)]
    return Graph.from_edges(rim_len + 1, rim + spokes)


def k4_minus_e() -> Graph:
    """K4 without the edge {2, 3}."""
    return complete(4).remove_edge(2, 3)


def k5_minus_e() -> Graph:
    """K5 without the edge {3, 4}."""
    return complete(5).remove_edge(3, 4)


def fig6() -> Graph:
    # a..f -> 0..5
    return Graph.from_edges(
        6,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    )


def cf_chain_layout(m: int) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Vertex nodes v_0..v_m and triangles T_1..T_m of ``cf_chain(m)``."""
    nodes = [0] + [4 * i for i in range(1, m + 1)]
    tris = [(4 * i - 3, 4 * i - 2, 4 * i - 1) for i in range(1, m + 1)]
    return nodes, tris


def cf_chain(m: int) -> Graph:
    if m < 1:
        raise GraphError("cf_chain needs m >= 1")
    nodes, tris = cf_chain_layout(m)
    edges = []
    for i, (a, b, c) in enumerate(tris):
        edges += [(a, b), (b, c), (a, c)]
        for v in (nodes[i], nodes[i + 1]):
            edges += [(v, a), (v, b), (v, c)]
    return Graph.from_edges(4 * m + 1, edges)


def branch_chain(fan: int) -> Graph:
    """Centre 0 fixing ``fan`` disjoint triangles, each also fixed by its own outer vertex.

    Unit i uses the triangle (4i+1, 4i+2, 4i+3) and the outer vertex 4i+4.
    """
    if fan < 1:
        raise GraphError("branch_chain needs fan >= 1")
    edges = []
    for i in range(fan):
        a, b, c, outer = 4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4
        edges += [(a, b), (b, c), (a, c)]
        for v in (0, outer):
            edges += [(v, a), (v, b), (v, c)]
    return Graph.from_edges(4 * fan + 1, edges)


def apollonian(steps: int, seed: int = 0) -> Graph:
    """Stack ``steps`` vertices into uniformly chosen faces, starting from a triangle."""
    if steps < 0:
        raise GraphError("apollonian needs steps >= 0")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 1, 2)]
    edges = [(0, 1), (1, 2), (0, 2)]
    for x in range(3, 3 + steps):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges += [(x, a), (x, b), (x, c)]
        faces += [(a, b, x), (b, c, x), (a, c, x)]
    return Graph.from_edges(3 + steps, edges)


def octahedron() -> Graph:
    """K_{2,2,2}; antipodal pairs {0,1}, {2,3}, {4,5}."""
    return Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "k4_minus_e": (k4_minus_e, 0),
    "k5_minus_e": (k5_minus_e, 0),
    "fig6": (fig6, 0),
    "cf_chain": (cf_chain, 1),
    "apollonian": (apollonian, 2),
    "branch_chain": (branch_chain, 1),
    "octahedron": (octahedron, 0),
    "petersen": (petersen, 0),
}

FAMILY_NAMES = tuple(_FAMILIES)


def generate(family: str, *params: int) -> Graph:
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}") from None
    if family == "apollonian" and len(params) == 1:
        params = (params[0], 0)
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def parse_family(text: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"cf_chain:3"`` / ``"apollonian:4,1"`` into name and parameters."""
    name, _, rest = text.partition(":")
    try:
        params = tuple(int(p) for p in rest.split(",") if p.strip())
    except ValueError:
        raise GraphError(f"bad family parameters in {text!r}") from None
    return name.strip(), params
