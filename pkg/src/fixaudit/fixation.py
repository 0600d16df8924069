"""Color-identical pairs, color fixation and fixation chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import (
    Coloring,
    PinnedLabeling,
    check_reference,
    chromatic_number,
    enumerate_colorings,
    pinned_labelings,
)
from .graph import CycleRef, Graph, GraphError, odd_cycles_within


def _require_chromatic(g: Graph, k: int) -> None:
    chi = chromatic_number(g)
    if chi != k:
        raise GraphError(f"graph is {chi}-chromatic, not {k}-chromatic")


def _full_colorings(g: Graph, k: int) -> list[Coloring]:
    return [c for c in enumerate_colorings(g, k) if len(c) == k]


def ci_pairs(g: Graph, k: int) -> set[tuple[int, int]]:
    """Pairs sharing a class in every k-coloring."""
    _require_chromatic(g, k)
    colorings = enumerate_colorings(g, k)
    if not colorings:
        return set()
    candidates = {p for cls in colorings[0].classes for p in combinations(cls, 2)}
    for col in colorings[1:]:
        where = col.class_of()
        candidates = {(u, v) for u, v in candidates if where[u] == where[v]}
        if not candidates:
            break
    return candidates


def ci_pair_oracle(g: Graph, k: int, u: int, v: int) -> bool:
    """Decide a CI pair by whether joining it forces an extra color."""
    _require_chromatic(g, k)
    if u == v:
        raise GraphError("a CI pair needs two distinct vertices")
    if g.has_edge(u, v):
        return False
    return chromatic_number(g.add_edge(u, v)) > k


def _classes_meeting(where: dict, vs) -> frozenset:
    return frozenset(where[v] for v in vs)


def is_color_fixed(g: Graph, k: int, r, s) -> bool:
    r, s = set(r), set(s)
    if not r or not s or r & s:
        raise GraphError("fixation needs two non-empty disjoint vertex sets")
    _require_chromatic(g, k)
    for col in _full_colorings(g, k):
        where = col.class_of()
        cr, cs = _classes_meeting(where, r), _classes_meeting(where, s)
        if cr & cs or len(cr | cs) != k:
            return False
    return True


@dataclass(frozen=True)
class FixedSet:
    reference: CycleRef
    fixed_vertices: dict = field(hash=False)
    fixed_edges: dict = field(hash=False)

    def vertices(self) -> frozenset:
        return frozenset(self.fixed_vertices)


def fixed_elements(g: Graph, r, k: int = 4, labelings: list[PinnedLabeling] | None = None) -> FixedSet:
    """Vertices and edges whose pinned colors agree across every pinned labeling."""
    r = check_reference(g, r)
    if labelings is None:
        labelings = pinned_labelings(g, r, k)
    fv: dict[int, int] = {}
    fe: dict[tuple[int, int], tuple[int, int]] = {}
    if labelings:
        first = labelings[0].colors
        for v in range(g.n):
            if all(lab.colors[v] == first[v] for lab in labelings):
                fv[v] = first[v]
        for u, v in g.sorted_edges():
            pair = tuple(sorted((first[u], first[v])))
            if all(tuple(sorted((lab.colors[u], lab.colors[v]))) == pair for lab in labelings):
                fe[(u, v)] = pair
    return FixedSet(r, fv, fe)


def fixed_color_set(labelings: list[PinnedLabeling], vs) -> frozenset | None:
    """The color set of ``vs`` if it is the same in every labeling, else None."""
    vs = tuple(vs)
    if not labelings:
        return None
    first = frozenset(labelings[0].colors[v] for v in vs)
    for lab in labelings[1:]:
        if frozenset(lab.colors[v] for v in vs) != first:
            return None
    return first


def ci_condition_witness(g: Graph, k: int, u: int, v: int):
    """Smallest neighbour subsets X of u and Y of v that always carry the same k-1 classes.

    Candidates are tried by ascending size, then lexicographically; returns
    ``(X, Y)`` as sorted tuples, or None when no such pair exists.
    """
    if u == v or g.has_edge(u, v) or (min(u, v), max(u, v)) not in ci_pairs(g, k):
        raise GraphError(f"{{{u}, {v}}} is not a CI_{k} pair")
    colorings = [c.class_of() for c in _full_colorings(g, k)]

    def sees_all_others(x, subset) -> bool:
        return all(
            len(_classes_meeting(w, subset)) == k - 1 and w[x] not in _classes_meeting(w, subset)
            for w in colorings
        )

    def first(x):
        nbrs = g.neighbors(x)
        for size in range(k - 1, len(nbrs) + 1):
            for subset in combinations(nbrs, size):
                if sees_all_others(x, subset):
                    return subset
        return None

    # u and v share a class everywhere, so X and Y satisfy the joint condition
    # exactly when each independently meets every class other than their own.
    xs, ys = first(u), first(v)
    if xs is None or ys is None:
        return None
    assert all(_classes_meeting(w, xs) == _classes_meeting(w, ys) for w in colorings)
    return xs, ys


@dataclass(frozen=True)
class FixationIncidence:
    pairs: frozenset

    def vertex_nodes(self, cycle: CycleRef) -> list[int]:
        return sorted(v for v, c in self.pairs if c == cycle)

    def cycles_of(self, v: int) -> list[CycleRef]:
        return sorted((c for w, c in self.pairs if w == v), key=lambda c: (len(c), c.vertices))

    def by_cycle(self) -> dict:
        out: dict[CycleRef, list[int]] = {}
        for v, c in self.pairs:
            out.setdefault(c, []).append(v)
        return {c: sorted(vs) for c, vs in sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0].vertices))}


def fixation_incidence(g: Graph, max_cycle_len: int | None = None) -> FixationIncidence:
    """Every (vertex, odd cycle) pair with the vertex adjacent to the whole cycle."""
    pairs = set()
    for v in range(g.n):
        for c in odd_cycles_within(g, g.neighbors(v), max_cycle_len):
            pairs.add((v, c))
    return FixationIncidence(frozenset(pairs))


@dataclass(frozen=True)
class CFChain:
    nodes: tuple
    branches: frozenset = frozenset()

    @property
    def vertex_nodes(self) -> tuple:
        return self.nodes[0::2]

    @property
    def cycle_nodes(self) -> tuple:
        return self.nodes[1::2]

    def to_json(self) -> dict:
        return {
            "nodes": [n if isinstance(n, int) else list(n.vertices) for n in self.nodes],
            "branches": [[v, list(c.vertices)] for v, c in sorted(self.branches, key=_branch_key)],
        }


def _branch_key(b):
    return (b[0], len(b[1]), b[1].vertices)


def _links(inc: FixationIncidence):
    """Cycle nodes joining exactly two vertex nodes, plus the overloaded ones."""
    links: dict[int, list[tuple[int, CycleRef]]] = {}
    overloaded = []
    for c, vs in inc.by_cycle().items():
        if len(vs) == 2:
            a, b = vs
            links.setdefault(a, []).append((b, c))
            links.setdefault(b, []).append((a, c))
        elif len(vs) > 2:
            overloaded.append({"kind": "cycle_node_over_two", "cycle": list(c.vertices), "vertex_nodes": vs})
    for v in links:
        links[v].sort(key=lambda t: (t[0], len(t[1]), t[1].vertices))
    return links, overloaded


def _walk_chains(inc: FixationIncidence):
    links, anomalies = _links(inc)
    found: dict[tuple, CFChain] = {}
    loops = set()

    def extensions(end, vset, used):
        ext, closing = [], []
        for w, c in links.get(end, ()):
            if c in used:
                continue
            (closing if w in vset else ext).append((w, c))
        return ext, closing

    for start in sorted(links):
        path = [start]

        def dfs(vset, used):
            end = path[-1]
            ext, closing = extensions(end, vset, used)
            for w, c in closing:
                loops.add((min(end, w), max(end, w), c))
            for w, c in ext:
                path.extend((c, w))
                dfs(vset | {w}, used | {c})
                del path[-2:]
            if ext or len(path) < 3:
                return
            head_ext, _ = extensions(path[0], vset, used)
            if head_ext:
                return
            nodes = tuple(path) if path[0] < path[-1] else tuple(reversed(path))
            if nodes in found:
                return
            branches = frozenset(
                (v, c) for v in nodes[0::2] for w, c in links.get(v, ()) if c not in used
            )
            found[nodes] = CFChain(nodes, branches)

        dfs({start}, set())
    for a, b, c in sorted(loops, key=lambda t: (t[0], t[1], t[2].vertices)):
        anomalies.append({"kind": "loop_candidate", "vertex_nodes": [a, b], "cycle": list(c.vertices)})
    chains = sorted(found.values(), key=lambda ch: _chain_key(ch.nodes))
    return chains, anomalies


def _chain_key(nodes):
    return tuple((n, ()) if isinstance(n, int) else (-1, n.vertices) for n in nodes)


def extract_chains(inc: FixationIncidence) -> list[CFChain]:
    """Maximal alternating vertex/cycle paths with at least two vertex nodes.

    Only cycle nodes seen by exactly two vertex nodes link a chain; unused
    links at a chain's vertex nodes are kept as branch attachments.
    """
    return _walk_chains(inc)[0]


def chain_anomalies(inc: FixationIncidence) -> list[dict]:
    """Cycle nodes with more than two vertex nodes and would-be chain loops."""
    return _walk_chains(inc)[1]


def chain_vertex_pairs(chains: list[CFChain]) -> set[tuple[int, int]]:
    pairs = set()
    for ch in chains:
        pairs |= {tuple(sorted(p)) for p in combinations(ch.vertex_nodes, 2)}
    return pairs
