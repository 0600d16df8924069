from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixaudit.audit.corpus import connected_graphs
from fixaudit.coloring import chromatic_number, enumerate_colorings, pinned_labelings, triangles
from fixaudit.families import (
    branch_chain,
    cf_chain,
    cf_chain_layout,
    complete,
    cycle,
    fig6,
    k4_minus_e,
    k5_minus_e,
)
from fixaudit.fixation import (
    chain_anomalies,
    ci_condition_witness,
    ci_pair_oracle,
    ci_pairs,
    extract_chains,
    fixation_incidence,
    fixed_elements,
    is_color_fixed,
)
from fixaudit.graph import CycleRef, Graph, GraphError

from oracles import brute_force_partitions


def test_ci_pairs_examples():
    assert ci_pairs(k4_minus_e(), 3) == {(2, 3)}
    assert ci_pairs(k5_minus_e(), 4) == {(3, 4)}
    assert ci_pairs(cycle(5), 3) == set()


def test_ci_pairs_by_labelings_brute_force():
    g = k5_minus_e()
    parts = brute_force_partitions(g.n, g.sorted_edges(), 4)
    together = [
        (u, v) for u, v in combinations(range(g.n), 2)
        if all(any(u in c and v in c for c in p) for p in parts)
    ]
    assert together == [(3, 4)]


def test_ci_pairs_requires_matching_k():
    with pytest.raises(GraphError):
        ci_pairs(cycle(5), 4)


def test_ci_oracle_examples():
    assert ci_pair_oracle(k4_minus_e(), 3, 2, 3)
    assert ci_pair_oracle(k5_minus_e(), 4, 3, 4)
    assert not ci_pair_oracle(cycle(5), 3, 0, 2)
    assert not ci_pair_oracle(complete(4), 4, 0, 1)


def test_ci_methods_agree_on_small_connected_graphs():
    for n in range(2, 7):
        for g in connected_graphs(n):
            k = chromatic_number(g)
            if k > 4:
                continue
            pairs = ci_pairs(g, k)
            for u, v in combinations(range(n), 2):
                if not g.has_edge(u, v):
                    assert ((u, v) in pairs) == ci_pair_oracle(g, k, u, v)


def test_is_color_fixed_examples():
    assert is_color_fixed(complete(4), 4, {0, 1, 2}, {3})
    assert is_color_fixed(fig6(), 4, {0, 1, 2}, {3})
    assert is_color_fixed(fig6(), 4, {0, 1}, {2, 3})
    # the blue-yellow edge dc fixes ef to red-green
    assert is_color_fixed(fig6(), 4, {2, 3}, {4, 5})
    # a alone does not fix e
    assert not is_color_fixed(fig6(), 4, {0}, {4})


def test_is_color_fixed_errors():
    with pytest.raises(GraphError):
        is_color_fixed(fig6(), 4, {0, 1}, {1, 2})
    with pytest.raises(GraphError):
        is_color_fixed(fig6(), 4, set(), {1})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([fig6(), k5_minus_e(), complete(4), cf_chain(1)]), st.data())
def test_is_color_fixed_symmetric(g, data):
    r = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=3))
    rest = [v for v in range(g.n) if v not in r]
    s = data.draw(st.sets(st.sampled_from(rest), min_size=1, max_size=3))
    assert is_color_fixed(g, 4, r, s) == is_color_fixed(g, 4, s, r)


def test_fixed_to_one_color_by_same_set_means_ci():
    for g in (fig6(), k5_minus_e(), cf_chain(2)):
        cis = ci_pairs(g, 4)
        for r in triangles(g):
            fixed = [x for x in range(g.n) if x not in r.vertices and is_color_fixed(g, 4, r.vertices, {x})]
            for x, y in combinations(fixed, 2):
                assert not g.has_edge(x, y)
                assert (x, y) in cis


def test_fixed_elements_fig6():
    fs = fixed_elements(fig6(), (0, 1, 2), 4)
    assert fs.fixed_vertices == {0: 1, 1: 2, 2: 3, 3: 4}
    assert fs.fixed_edges[(2, 3)] == (3, 4)
    assert fs.fixed_edges[(4, 5)] == (1, 2)
    assert 4 not in fs.fixed_vertices and 5 not in fs.fixed_vertices


def test_fixed_elements_k4_and_disconnected():
    assert fixed_elements(complete(4), (0, 1, 2), 4).vertices() == {0, 1, 2, 3}
    g = complete(4).disjoint_union(cycle(5))
    fs = fixed_elements(g, (0, 1, 2), 4)
    assert fs.vertices() == {0, 1, 2, 3}


def _fixed_vertices_other_tiebreak(g, r):
    """Fixed vertices when reference classes are numbered by largest reference vertex."""
    rows = []
    for col in enumerate_colorings(g, 4):
        where = col.class_of()
        order = []
        for v in sorted(r, reverse=True):
            if where[v] not in order:
                order.append(where[v])
        if len(order) != 3:
            continue
        label = {c: i + 1 for i, c in enumerate(order)}
        rows.append([label.get(where[v], 4) for v in range(g.n)])
    return {v for v in range(g.n) if len({row[v] for row in rows}) == 1}


def test_fixed_vertex_set_does_not_depend_on_tiebreak():
    for g in (fig6(), k5_minus_e(), cf_chain(2), branch_chain(2)):
        for r in triangles(g):
            assert fixed_elements(g, r, 4).vertices() == _fixed_vertices_other_tiebreak(g, r.vertices)


def test_ci_condition_witness_examples():
    assert ci_condition_witness(k5_minus_e(), 4, 3, 4) == ((0, 1, 2), (0, 1, 2))
    assert ci_condition_witness(k4_minus_e(), 3, 2, 3) == ((0, 1), (0, 1))
    with pytest.raises(GraphError):
        ci_condition_witness(cycle(5), 3, 0, 2)


def test_ci_condition_witness_is_minimal_subset():
    g = cf_chain(2)
    x, y = ci_condition_witness(g, 4, 0, 8)
    assert len(x) == len(y) == 3
    assert set(x) <= set(g.neighbors(0)) and set(y) <= set(g.neighbors(8))


def test_incidence_examples():
    assert fixation_incidence(cycle(5)).pairs == frozenset()
    k4 = fixation_incidence(complete(4))
    assert len(k4.pairs) == 4
    assert all(v not in c.vertices for v, c in k4.pairs)


def _brute_force_incidence(g):
    from fixaudit.graph import enumerate_cycles

    return {
        (v, c) for c in enumerate_cycles(g, g.n, "odd") for v in range(g.n)
        if v not in c.vertices and all(g.has_edge(v, w) for w in c.vertices)
    }


def test_cf_chain_incidence():
    g = cf_chain(2)
    inc = fixation_incidence(g)
    assert inc.pairs == _brute_force_incidence(g)
    assert len(inc.pairs) == 16
    nodes, tris = cf_chain_layout(2)
    linking = {c: vs for c, vs in inc.by_cycle().items() if len(vs) == 2}
    assert linking == {CycleRef(tris[0]): [0, 4], CycleRef(tris[1]): [4, 8]}


def test_incidence_matches_brute_force_on_fixtures():
    for g in (fig6(), k5_minus_e(), branch_chain(2), complete(5)):
        assert fixation_incidence(g).pairs == _brute_force_incidence(g)


def test_extract_chains_cf_chain():
    for m in range(1, 5):
        chains = extract_chains(fixation_incidence(cf_chain(m)))
        assert len(chains) == 1
        nodes, tris = cf_chain_layout(m)
        assert chains[0].vertex_nodes == tuple(nodes)
        assert chains[0].cycle_nodes == tuple(CycleRef(t) for t in tris)
        assert chains[0].branches == frozenset()


def test_extract_chains_k4_and_k5_minus_e():
    assert extract_chains(fixation_incidence(complete(4))) == []
    chains = extract_chains(fixation_incidence(k5_minus_e()))
    assert [c.vertex_nodes for c in chains] == [(3, 4)]


def test_extract_chains_branching():
    chains = extract_chains(fixation_incidence(branch_chain(3)))
    assert len(chains) == 3
    for ch in chains:
        assert ch.vertex_nodes[1] == 0
        assert len(ch.branches) == 1
        (v, c), = ch.branches
        assert v == 0 and c not in ch.cycle_nodes
    assert {frozenset(ch.vertex_nodes) for ch in chains} == {
        frozenset({0, 4, 8}), frozenset({0, 4, 12}), frozenset({0, 8, 12})
    }


def test_chain_invariants_and_order():
    chains = extract_chains(fixation_incidence(branch_chain(3)))
    assert chains == sorted(chains, key=lambda ch: [n if isinstance(n, int) else n.vertices for n in ch.nodes])
    inc = fixation_incidence(branch_chain(3))
    for ch in chains:
        assert len(set(ch.vertex_nodes)) == len(ch.vertex_nodes)
        assert len(set(ch.cycle_nodes)) == len(ch.cycle_nodes)
        for i, c in enumerate(ch.cycle_nodes):
            assert (ch.vertex_nodes[i], c) in inc.pairs and (ch.vertex_nodes[i + 1], c) in inc.pairs


def test_overloaded_cycle_is_an_anomaly():
    # Three vertices all adjacent to one triangle (non-planar): no chain, one anomaly.
    g = Graph(6, frozenset({(0, 1), (1, 2), (0, 2)} | {(a, b) for a in range(3) for b in range(3, 6)}))
    inc = fixation_incidence(g)
    assert extract_chains(inc) == []
    kinds = [a["kind"] for a in chain_anomalies(inc)]
    assert "cycle_node_over_two" in kinds


def test_loop_candidate_reported():
    # Two vertices joined through two different triangles: a would-be loop.
    tri1 = [(0, 1), (1, 2), (0, 2)]
    tri2 = [(3, 4), (4, 5), (3, 5)]
    spokes = [(v, t) for v in (6, 7) for t in range(6)]
    g = Graph.from_edges(8, tri1 + tri2 + spokes)
    inc = fixation_incidence(g, 3)
    anomalies = chain_anomalies(inc)
    assert any(a["kind"] == "loop_candidate" for a in anomalies)
    assert all(len(set(ch.vertex_nodes)) == len(ch.vertex_nodes) for ch in extract_chains(inc))


def test_consecutive_chain_nodes_are_ci_pairs():
    for g in (cf_chain(3), branch_chain(3), k5_minus_e()):
        for ch in extract_chains(fixation_incidence(g)):
            for u, v in zip(ch.vertex_nodes, ch.vertex_nodes[1:]):
                assert ci_pair_oracle(g, 4, u, v)


def test_chain_json_shape():
    ch = extract_chains(fixation_incidence(cf_chain(1)))[0]
    assert ch.to_json() == {"nodes": [0, [1, 2, 3], 4], "branches": []}


def test_pinned_labelings_consistent_with_fixed_elements():
    g = fig6()
    labs = pinned_labelings(g, (0, 1, 2), 4)
    fs = fixed_elements(g, (0, 1, 2), 4, labs)
    for v, c in fs.fixed_vertices.items():
        assert all(lab[v] == c for lab in labs)
