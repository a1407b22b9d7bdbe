import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from model.family import make_complete, make_path, make_star
from model.graph import MAX_ORDER, graph_from_edges
from model.graph6 import Graph6Error, parse_graph6, read_graph6, to_graph6
from shared.utility import Utility


@pytest.mark.parametrize("text, graph", [
    ("Bg", make_path(3)),
    ("C~", make_complete(4)),
    ("Ch", make_path(4)),
    ("Cs", make_star(4)),
    ("@", graph_from_edges(1, [])),
])
def test_known_encodings(text, graph):
    assert parse_graph6(text) == graph
    assert to_graph6(graph) == text


def test_header_and_whitespace_are_ignored():
    assert parse_graph6(">>graph6<<Bg\n") == make_path(3)
    assert parse_graph6("  Ch  ") == make_path(4)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("B!", 1),
    ("~~", 0),
    ("?", 0),
    ("C", 1),
    ("Bgg", 2),
    ("Bh", 1),
])
def test_malformed_strings_report_offset(text, offset):
    with pytest.raises(Graph6Error) as error:
        parse_graph6(text)
    assert error.value.offset == offset
    assert error.value.line_number is None


def test_read_graph6_skips_blank_lines_and_headers():
    lines = [">>graph6<<Bg\n", "\n", "Ch\n", "   \n", "C~"]
    result = list(read_graph6(lines))
    assert [(number, text) for number, text, _ in result] == [(1, "Bg"), (3, "Ch"), (5, "C~")]
    assert result[1][2] == make_path(4)


def test_read_graph6_reports_line_number():
    with pytest.raises(Graph6Error) as error:
        list(read_graph6(["Bg", "", "B!"]))
    assert error.value.line_number == 3
    assert error.value.offset == 1
    assert "line 3" in str(error.value)


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=MAX_ORDER))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return graph_from_edges(n, [p for k, p in enumerate(pairs) if (mask >> k) & 1])


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_round_trip_property(g):
    assert parse_graph6(to_graph6(g)) == g


def test_round_trip_on_many_random_graphs():
    rng = random.Random(7)
    for _ in range(10_000):
        g = Utility.random_graph(rng.randint(1, MAX_ORDER), rng.random(), rng)
        assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", range(1, 8))
def test_agrees_with_networkx_on_atlas(n, atlas, from_nx):
    for text in atlas(n):
        h = nx.from_graph6_bytes(text.encode())
        assert parse_graph6(text) == from_nx(h)
        assert to_graph6(parse_graph6(text)) == text
