import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st
from oracles import edge_set, graph6_from_definition

from icpart.enumeration import enumerate_graphs
from icpart.graph import CapacityError, build
from icpart.graph6 import Graph6Error, encode_graph6, parse_graph6, read_stream

K2 = build(2, [(0, 1)])
K3 = build(3, [(0, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize(
    "text, graph",
    [("A_", K2), ("A?", build(2, [])), ("B?", build(3, [])), ("Bw", K3), ("@", build(1, [])), ("?", build(0, []))],
)
def test_hand_derived_strings(text, graph):
    assert parse_graph6(text) == graph


def test_hand_encoding():
    assert encode_graph6(K2) == "A_"
    assert encode_graph6(build(2, [])) == "A?"
    assert encode_graph6(K3) == "Bw"
    assert encode_graph6(build(0, [])) == "?"


def test_matches_bitstring_definition_exhaustive():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert encode_graph6(g) == graph6_from_definition(n, edge_set(g))


@given(graphs(max_order=20))
def test_matches_bitstring_definition(g):
    assert encode_graph6(g) == graph6_from_definition(g.n, edge_set(g))


@given(graphs(max_order=30))
def test_round_trip_and_length(g):
    text = encode_graph6(g)
    assert parse_graph6(text) == g
    assert len(text) == 1 + (g.n * (g.n - 1) // 2 + 5) // 6


@pytest.mark.parametrize("n", [62, 63, 64])
def test_large_orders(n):
    g = build(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    text = encode_graph6(g)
    if n >= 63:
        assert text.startswith("~")
    assert parse_graph6(text) == g


def test_too_large_order():
    # extended header announcing 65 vertices
    header = "~" + "".join(chr(63 + ((65 >> s) & 63)) for s in (12, 6, 0))
    with pytest.raises(CapacityError):
        parse_graph6(header + "?" * 400)


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<Bw") == K3


@pytest.mark.parametrize(
    "text, position",
    [
        ("", None),
        ("B", None),  # truncated payload
        ("Bww", 2),  # trailing byte
        ("A~", 1),  # nonzero padding
        ("B!", 1),  # byte outside the printable range
    ],
)
def test_malformed(text, position):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    if position is not None:
        assert err.value.position == position


def test_read_stream_examples():
    assert [item.graph for item in read_stream(["A_", "Bw"])] == [K2, K3]
    assert [item.graph for item in read_stream([">>graph6<<A_"])] == [K2]
    assert list(read_stream([""])) == []


def test_read_stream_keeps_going():
    items = list(read_stream(["A_", "oops!", "", "Bw\n"]))
    assert [i.lineno for i in items] == [1, 2, 4]
    assert items[1].graph is None and items[1].error
    assert items[2].graph == K3


@given(st.text(max_size=12))
def test_parse_never_crashes(text):
    try:
        g = parse_graph6(text)
    except ValueError:
        return
    assert encode_graph6(g) == text.strip().removeprefix(">>graph6<<")
