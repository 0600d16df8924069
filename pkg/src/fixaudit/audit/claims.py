"""Claim registry: one executable check per audited statement.

Each check takes a graph and returns ``None`` when the graph falls outside the
claim's hypotheses, otherwise ``(instances, violations)`` where every violation
is a JSON-ready witness dict. Checks recompute everything from the graph, so a
stored witness re-verifies by running the same check again.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..coloring import (
    chromatic_number,
    is_apollonian,
    is_k_critical,
    is_uniquely_k_colorable,
    pinned_labelings,
    triangles,
)
from ..fixation import (
    chain_anomalies,
    chain_vertex_pairs,
    ci_condition_witness,
    ci_pairs,
    extract_chains,
    fixation_incidence,
    fixed_color_set,
    fixed_elements,
)
from ..graph import Graph, enumerate_cycles
from ..planarity import adjaceable, is_planar, theorem1_check, theorem2_check

CLAIMS = ("T1", "T2", "T3", "T4", "L1", "L2", "L3", "L4", "L5", "CI_COND", "FOWLER")

HYPOTHESES = {
    "T1": "planar",
    "T2": "planar",
    "T3": "planar, 4-critical",
    "T4": "planar, 4-chromatic",
    "L1": "4-chromatic, has a triangle",
    "L2": "4-chromatic, has a triangle",
    "L3": "4-chromatic, has a triangle",
    "L4": "4-chromatic",
    "L5": "planar, 4-chromatic",
    "CI_COND": "chromatic number >= 2",
    "FOWLER": "planar, at least 3 vertices",
}

UNITS = {
    "T1": "cycles",
    "T2": "ordered cycle pairs",
    "T3": "edges",
    "T4": "CI pairs",
    "L1": "edges per reference",
    "L2": "vertices per reference",
    "L3": "odd cycles per reference",
    "L4": "vertex pairs",
    "L5": "chain vertex-node pairs",
    "CI_COND": "CI pairs",
    "FOWLER": "graphs",
}


@dataclass(frozen=True)
class AuditConfig:
    max_cycle_len: int | None = None
    large_graph_cycle_cap: int = 9
    minimize: bool = True
    jobs: int = 1

    def cycle_cap(self, g: Graph) -> int:
        if self.max_cycle_len is not None:
            return self.max_cycle_len
        return max(3, g.n) if g.n <= 12 else self.large_graph_cycle_cap

    def to_json(self) -> dict:
        return asdict(self)


def check_t1(g, cfg):
    if not is_planar(g):
        return None
    return theorem1_check(g, cfg.cycle_cap(g))


def check_t2(g, cfg):
    if not is_planar(g):
        return None
    return theorem2_check(g, cfg.cycle_cap(g))


def check_t3(g, cfg):
    if not is_planar(g) or not is_k_critical(g, 4):
        return None
    violations = []
    for x, y in g.sorted_edges():
        h = g.remove_edge(x, y)
        chi = chromatic_number(h)
        failed = []
        if chi != 3:
            failed.append("not_3_chromatic")
        elif (x, y) not in ci_pairs(h, 3):
            failed.append("not_ci_pair")
        if not adjaceable(h, x, y):
            failed.append("not_adjaceable")
        if failed:
            violations.append({"kind": "edge_deletion", "edge": [x, y], "failed": failed, "chi": chi})
    return g.m, violations


def check_t4(g, cfg):
    if not is_planar(g) or chromatic_number(g) != 4:
        return None
    pairs = sorted(ci_pairs(g, 4))
    violations = [
        {"kind": "adjaceable_ci_pair", "pair": [u, v]} for u, v in pairs if adjaceable(g, u, v)
    ]
    return len(pairs), violations


def _references(g):
    return triangles(g)


def _fixation_hypothesis(g) -> bool:
    return chromatic_number(g) == 4 and bool(_references(g))


def check_l1(g, cfg):
    """Fixed edges have a fixed edge completely joined to them, and conversely."""
    if not _fixation_hypothesis(g):
        return None
    checked = 0
    violations = []
    for r in _references(g):
        ref = list(r.vertices)
        rset = set(ref)
        fixed = fixed_elements(g, r, 4).fixed_edges
        for x, y in g.sorted_edges():
            if x in rset and y in rset:
                continue
            checked += 1
            supports = [
                (z, w) for z, w in g.sorted_edges()
                if {z, w}.isdisjoint((x, y))
                and all(g.has_edge(a, b) for a in (x, y) for b in (z, w))
            ]
            fixed_supports = [e for e in supports if e in fixed]
            if (x, y) in fixed and not fixed_supports:
                violations.append({
                    "kind": "fixed_edge_without_fixed_support",
                    "reference": ref, "edge": [x, y], "colors": list(fixed[(x, y)]),
                })
            elif (x, y) not in fixed and fixed_supports:
                violations.append({
                    "kind": "supported_edge_not_fixed",
                    "reference": ref, "edge": [x, y], "support": list(fixed_supports[0]),
                })
    return checked, violations


def check_l2(g, cfg):
    """Fixed vertices see a whole fixed odd cycle, and conversely."""
    if not _fixation_hypothesis(g):
        return None
    inc = fixation_incidence(g, cfg.cycle_cap(g))
    cycles_at = {}
    for v, c in inc.pairs:
        cycles_at.setdefault(v, []).append(c)
    checked = 0
    violations = []
    for r in _references(g):
        ref = list(r.vertices)
        labelings = pinned_labelings(g, r, 4)
        fixed = fixed_elements(g, r, 4, labelings).fixed_vertices
        for x in range(g.n):
            if x in r.vertices:
                continue
            checked += 1
            fixed_cycles = sorted(
                (c for c in cycles_at.get(x, ()) if _fixed_to_three(labelings, c)),
                key=lambda c: (len(c), c.vertices),
            )
            if x in fixed and not fixed_cycles:
                violations.append({
                    "kind": "fixed_vertex_without_fixed_odd_cycle",
                    "reference": ref, "vertex": x, "color": fixed[x],
                })
            elif x not in fixed and fixed_cycles:
                violations.append({
                    "kind": "vertex_on_fixed_cycle_not_fixed",
                    "reference": ref, "vertex": x, "cycle": list(fixed_cycles[0].vertices),
                })
    return checked, violations


def _fixed_to_three(labelings, c) -> bool:
    colors = fixed_color_set(labelings, c.vertices)
    return colors is not None and len(colors) == 3


def check_l3(g, cfg):
    """Fixed odd cycles have a fixed vertex adjacent to all of them, and conversely."""
    if not _fixation_hypothesis(g):
        return None
    odd = enumerate_cycles(g, cfg.cycle_cap(g), "odd")
    checked = 0
    violations = []
    for r in _references(g):
        ref = list(r.vertices)
        labelings = pinned_labelings(g, r, 4)
        fixed = fixed_elements(g, r, 4, labelings).fixed_vertices
        for c in odd:
            if c == r:
                continue
            checked += 1
            universal = [v for v in range(g.n) if v not in c.vertices and all(g.has_edge(v, w) for w in c.vertices)]
            fixers = [v for v in universal if v in fixed]
            if _fixed_to_three(labelings, c) and not fixers:
                violations.append({
                    "kind": "fixed_odd_cycle_without_fixed_vertex",
                    "reference": ref, "cycle": list(c.vertices),
                })
            elif fixers and not _fixed_to_three(labelings, c):
                violations.append({
                    "kind": "cycle_seen_by_fixed_vertex_not_fixed",
                    "reference": ref, "cycle": list(c.vertices), "vertex": fixers[0],
                })
    return checked, violations


def check_l4(g, cfg):
    if chromatic_number(g) != 4:
        return None
    ci = ci_pairs(g, 4)
    chained = chain_vertex_pairs(extract_chains(fixation_incidence(g, cfg.cycle_cap(g))))
    violations = []
    for u, v in sorted(ci | chained):
        if (u, v) in ci and (u, v) not in chained:
            violations.append({"kind": "ci_pair_outside_chains", "pair": [u, v]})
        elif (u, v) in chained and (u, v) not in ci:
            violations.append({"kind": "chain_pair_not_ci", "pair": [u, v]})
    return len(ci | chained), violations


def check_l5(g, cfg):
    if not is_planar(g) or chromatic_number(g) != 4:
        return None
    inc = fixation_incidence(g, cfg.cycle_cap(g))
    violations = [
        {"kind": "chain_anomaly", **a} for a in chain_anomalies(inc)
    ]
    pairs = sorted(chain_vertex_pairs(extract_chains(inc)))
    violations += [
        {"kind": "adjaceable_vertex_nodes", "pair": [u, v]} for u, v in pairs if adjaceable(g, u, v)
    ]
    return len(pairs), violations


def check_ci_cond(g, cfg):
    k = chromatic_number(g)
    if k < 2:
        return None
    pairs = sorted(ci_pairs(g, k))
    violations = [
        {"kind": "no_ci_condition_witness", "k": k, "pair": [u, v]}
        for u, v in pairs if ci_condition_witness(g, k, u, v) is None
    ]
    return len(pairs), violations


def check_fowler(g, cfg):
    if g.n < 3 or not is_planar(g):
        return None
    unique = is_uniquely_k_colorable(g, 4)
    apol = is_apollonian(g)
    if unique != apol:
        return 1, [{"kind": "fowler_mismatch", "uniquely_4_colorable": unique, "apollonian": apol}]
    return 1, []


CHECKS = {
    "T1": check_t1,
    "T2": check_t2,
    "T3": check_t3,
    "T4": check_t4,
    "L1": check_l1,
    "L2": check_l2,
    "L3": check_l3,
    "L4": check_l4,
    "L5": check_l5,
    "CI_COND": check_ci_cond,
    "FOWLER": check_fowler,
}


def run_check(claim: str, g: Graph, cfg: AuditConfig):
    return CHECKS[claim](g, cfg)


def violates(claim: str, cfg: AuditConfig):
    """Predicate for minimisation: the hypotheses hold and some violation remains."""

    def predicate(h: Graph) -> bool:
        out = run_check(claim, h, cfg)
        return out is not None and bool(out[1])

    return predicate
