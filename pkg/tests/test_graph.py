import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixaudit.families import complete, cycle, k5_minus_e, wheel
from fixaudit.graph import CycleRef, Graph, GraphError, canonical_cycle, common_neighbors, enumerate_cycles

from oracles import brute_force_cycles


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_graph_rejects_self_loop_and_out_of_range():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_graphs_are_values():
    g = complete(4)
    h = g.remove_edge(0, 1)
    assert g.m == 6 and h.m == 5
    assert h.add_edge(1, 0) == g
    assert hash(h.add_edge(0, 1)) == hash(g)


def test_remove_vertex_relabels():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.remove_vertex(1) == Graph.from_edges(3, [(1, 2)])


def test_common_neighbors_examples():
    assert common_neighbors(k5_minus_e(), {0, 1, 2}) == {3, 4}
    assert common_neighbors(cycle(5), {0, 1}) == frozenset()
    assert common_neighbors(wheel(5), {0, 1}) == {5}


def test_common_neighbors_domain_error():
    with pytest.raises(GraphError):
        common_neighbors(cycle(5), {0, 7})


@given(graphs(), st.data())
def test_common_neighbors_matches_brute_force(g, data):
    if g.n == 0:
        return
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    expected = {v for v in range(g.n) if v not in s and all(g.has_edge(v, w) for w in s)}
    got = common_neighbors(g, s)
    assert got == expected
    assert got.isdisjoint(s)


def test_cycle_examples():
    assert len(enumerate_cycles(cycle(5), 5)) == 1
    k4 = enumerate_cycles(complete(4), 4)
    assert len(k4) == 7
    assert sum(len(c) == 3 for c in k4) == 4
    assert sum(len(c) == 4 for c in k4) == 3
    assert [c.vertices for c in enumerate_cycles(complete(4), 4, "odd")] == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)
    ]


def test_cycles_are_canonical_and_unique():
    cycles = enumerate_cycles(complete(5))
    seen = {c.vertices for c in cycles}
    assert len(seen) == len(cycles)
    for c in cycles:
        assert c.vertices == canonical_cycle(c.vertices)
        assert c.vertices[0] == min(c.vertices)
        assert c.vertices[1] < c.vertices[-1]


def test_canonical_cycle_picks_least_rotation_and_reflection():
    assert canonical_cycle((3, 1, 4, 2)) == (1, 3, 2, 4)
    assert canonical_cycle((2, 0, 1)) == (0, 1, 2)


def test_cycle_ref_invariants():
    with pytest.raises(GraphError):
        CycleRef((0, 1))
    with pytest.raises(GraphError):
        CycleRef((0, 1, 0))


def test_large_graph_requires_cycle_cap():
    big = cycle(13)
    with pytest.raises(GraphError):
        enumerate_cycles(big)
    assert len(enumerate_cycles(big, 13)) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_cycles_match_sequence_brute_force(g):
    if g.n < 3:
        return
    for parity in ("any", "odd"):
        ours = {c.edge_set() for c in enumerate_cycles(g, g.n, parity)}
        ours = {frozenset(frozenset(e) for e in es) for es in ours}
        assert ours == brute_force_cycles(g.n, g.sorted_edges(), g.n, parity == "odd")


def test_cycles_match_brute_force_on_all_small_connected_graphs():
    from fixaudit.audit.corpus import connected_graphs

    for n in range(3, 7):
        for g in connected_graphs(n):
            ours = {frozenset(frozenset(e) for e in c.edge_set()) for c in enumerate_cycles(g)}
            assert ours == brute_force_cycles(g.n, g.sorted_edges(), g.n)


def test_components():
    g = complete(3).disjoint_union(cycle(4))
    assert g.components() == [[0, 1, 2], [3, 4, 5, 6]]
    assert not g.is_connected()
