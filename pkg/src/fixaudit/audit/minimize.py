from __future__ import annotations

from typing import Callable

from ..graph import Graph, GraphError


def minimize(g: Graph, predicate: Callable[[Graph], bool]) -> Graph:
    """Shrink ``g`` to a 1-minimal graph that still satisfies ``predicate``.

    Each pass tries edge deletions in descending lexicographic order, then
    deletion of isolated vertices from the highest id down; passes repeat
    until nothing can be removed.
    """
    if not predicate(g):
        raise GraphError("predicate does not hold on the input graph")
    changed = True
    while changed:
        changed = False
        for e in sorted(g.edges, reverse=True):
            h = g.remove_edge(*e)
            if predicate(h):
                g, changed = h, True
        for v in reversed(range(g.n)):
            if g.degree(v) == 0:
                h = g.remove_vertex(v)
                if predicate(h):
                    g, changed = h, True
    return g
