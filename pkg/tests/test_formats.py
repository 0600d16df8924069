import networkx as nx
import pytest
from hypothesis import given

from fixaudit.families import FAMILY_NAMES, complete, cycle, generate
from fixaudit.formats import (
    ParseError,
    decode_graph6,
    emit_graph,
    encode_graph6,
    parse_graph,
    parse_inline_edges,
)
from fixaudit.graph import Graph

from oracles import graph6_string_encoder
from test_graph import graphs


def test_edge_list_triangle():
    assert parse_graph("0 1\n1 2\n0 2", "edge-list") == complete(3)


def test_edge_list_comments_blank_lines_and_header():
    g = parse_graph("# triangle plus isolated vertex\nn 4\n\n0 1  # first\n1 2\n0 2\n", "edge-list")
    assert g == Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize(
    "text, where",
    [("0 0", "line 1"), ("0 1\n1 x", "line 2"), ("n 2\n0 2", "line 2"), ("0 1 2", "line 1")],
)
def test_edge_list_errors_name_the_line(text, where):
    with pytest.raises(ParseError, match=where):
        parse_graph(text, "edge-list")


def test_graph6_examples():
    assert parse_graph("C~", "graph6") == complete(4)
    assert emit_graph(complete(3), "graph6") == "Bw\n"


def test_graph6_matches_independent_encoders():
    for name in ("fig6", "k5_minus_e", "petersen", "octahedron"):
        g = generate(name)
        ours = encode_graph6(g)
        assert ours == graph6_string_encoder(g.n, g.sorted_edges())
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.sorted_edges())
        ref = nx.to_graph6_bytes(h, header=False)
        assert ours == ref.decode().strip()


def test_graph6_rejects_bad_input():
    with pytest.raises(ParseError, match="byte"):
        decode_graph6("C}x")
    with pytest.raises(ParseError, match="byte 1"):
        decode_graph6("C\x10")


@given(graphs(max_n=12))
def test_round_trip(g):
    for fmt in ("edge-list", "graph6"):
        assert parse_graph(emit_graph(g, fmt), fmt) == g


@given(graphs(max_n=10))
def test_graph6_decodes_like_networkx(g):
    h = nx.from_graph6_bytes(encode_graph6(g).encode())
    assert {tuple(sorted(e)) for e in h.edges()} == g.edges
    assert h.number_of_nodes() == g.n


def test_round_trip_generated_families():
    params = {"complete": (5,), "cycle": (7,), "wheel": (6,), "cf_chain": (3,),
              "apollonian": (5, 2), "branch_chain": (2,)}
    for name in FAMILY_NAMES:
        g = generate(name, *params.get(name, ()))
        for fmt in ("edge-list", "graph6"):
            assert parse_graph(emit_graph(g, fmt), fmt) == g


def test_dot_output():
    out = emit_graph(complete(3), "dot")
    assert out.count("graph G {") == 1
    assert out.count(" -- ") == 3


def test_inline_edges():
    assert parse_inline_edges("0-1,1-2,0-2") == complete(3)
    with pytest.raises(ParseError):
        parse_inline_edges("0-1,2")
    with pytest.raises(ParseError):
        parse_inline_edges("1-1")


def test_large_header_graph6():
    g = cycle(63)
    s = encode_graph6(g)
    assert s[0] == "~"
    assert decode_graph6(s) == g
