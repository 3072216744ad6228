import networkx as nx
import pytest
from hypothesis import given

from spectral_iso.formats import (
    FormatError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
)
from spectral_iso.graph import Graph

from conftest import K3, P3, graphs


def reference_graph6(g: Graph) -> str:
    """networkx's independent encoder, used as the format oracle."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def test_reference_oracle_agrees_with_format_description():
    # K2: order byte 2+63='A'; single bit x(0,1)=1 padded to 100000b=32, 32+63='_'
    assert reference_graph6(Graph.complete(2)) == "A_"
    # K3: bits x01 x02 x12 = 111 padded to 111000b=56, 56+63='w'
    assert reference_graph6(K3) == "Bw"


@pytest.mark.parametrize(
    "text, expected",
    [("A?", Graph.empty(2)), ("A_", Graph.complete(2)), ("Bw", K3), ("?", Graph.empty(0)), ("@", Graph.empty(1))],
)
def test_parse_graph6_examples(text, expected):
    assert parse_graph6(text) == expected


def test_emit_graph6_examples():
    assert emit_graph6(Graph.complete(2)) == "A_"
    assert emit_graph6(Graph.empty(2)) == "A?"
    assert emit_graph6(P3) == reference_graph6(P3)


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == K3


@pytest.mark.parametrize("n", [62, 63, 64, 100, 258047 // 1000])
def test_long_form_header_matches_reference(n):
    g = Graph.from_edges(n, [(i, (i * 7 + 3) % n) for i in range(n) if i != (i * 7 + 3) % n])
    text = emit_graph6(g)
    assert text == reference_graph6(g)
    assert text.startswith("~") == (n >= 63)
    assert parse_graph6(text) == g


def test_very_long_header_round_trip():
    # orders above 258047 use '~~' plus 6 bytes; only the header is exercised
    from spectral_iso.formats import _decode_order, _encode_order

    head = _encode_order(300000)
    assert head.startswith("~~") and len(head) == 8
    assert _decode_order(head, 0) == (300000, 8)


@given(graphs(max_n=14))
def test_round_trip_and_reference(g):
    text = emit_graph6(g)
    assert text == reference_graph6(g)
    assert parse_graph6(text) == g
    back = nx.from_graph6_bytes(text.encode())
    assert {tuple(sorted(e)) for e in back.edges} == set(g.edges)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),          # no header
        ("B", 1),         # truncated bit field
        ("Bww", 2),       # trailing garbage
        ("B!", 1),        # byte out of range
        ("Bx", 1),        # nonzero padding bit
        ("~??", 3),       # truncated long header
    ],
)
def test_parse_graph6_errors_name_offset(text, offset):
    with pytest.raises(FormatError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_parse_edge_list_examples():
    assert parse_edge_list("3 2\n1 2\n2 3") == P3
    assert parse_edge_list("2 0") == Graph.empty(2)
    g = parse_edge_list("3 2\n1 2\n2 1")
    assert g == Graph.from_edges(3, [(0, 1)])


@pytest.mark.parametrize(
    "text",
    ["3 1\n2 2", "3 1\n1 4", "3 1\n0 1", "3 2\n1 2", "x y\n", "3 1\n1 2 3", "", "3 1\n1 b"],
)
def test_parse_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_edge_list_comments_and_round_trip():
    g = parse_edge_list("# path\n3 2\n\n1 2  # first\n3 2\n")
    assert g == P3
    assert parse_edge_list(emit_edge_list(g)) == g


def test_read_graph_by_extension(tmp_path):
    (tmp_path / "a.g6").write_text("Bw\n")
    (tmp_path / "b.el").write_text("3 2\n1 2\n2 3\n")
    (tmp_path / "c.txt").write_text("Bw\n")
    assert read_graph(tmp_path / "a.g6") == K3
    assert read_graph(tmp_path / "b.el") == P3
    with pytest.raises(ValueError):
        read_graph(tmp_path / "c.txt")
