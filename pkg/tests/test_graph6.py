import io
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domcycle.graph import Graph
from domcycle.graph6 import Graph6Error, graph6_decode, graph6_encode, read_stream

GOLDEN = Path(__file__).parent / "data" / "golden.g6"


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_hand_derived_examples():
    g = graph6_decode("D?")
    assert g.n == 5 and g.num_edges() == 0
    k4 = graph6_decode("C~")
    assert k4.n == 4 and k4.num_edges() == 6
    c4 = graph6_decode("Cl")
    assert sorted(c4.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_encode_examples():
    assert graph6_encode(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == "Cl"
    assert graph6_encode(Graph.from_edges(4, [(u, v) for v in range(4) for u in range(v)])) == "C~"
    assert graph6_encode(Graph.empty(5)) == "D??"


@pytest.mark.parametrize(
    "line",
    ["", "D??x", "C~~", "C\x7f", "C ", "B@", "~~??", "~?@A"],
)
def test_malformed(line):
    with pytest.raises(Graph6Error):
        graph6_decode(line)


def test_strict_rejects_truncation():
    with pytest.raises(Graph6Error):
        graph6_decode("D?", strict=True)
    assert graph6_decode("D??", strict=True).n == 5


def test_long_order_field():
    g = Graph.from_edges(63, [(i, i + 1) for i in range(62)])
    line = graph6_encode(g)
    assert line.startswith("~??~")
    assert graph6_decode(line) == g


def test_header_and_newline_tolerated():
    assert graph6_decode(">>graph6<<Cl\r\n") == graph6_decode("Cl")


def test_golden_fixture_canonical_bytes():
    for raw in GOLDEN.read_text().splitlines():
        line = raw.removeprefix(">>graph6<<")
        g = graph6_decode(line)
        assert graph6_encode(g) == line
        # independent decoder agrees on the edge set
        ref = nx.from_graph6_bytes(line.encode())
        assert sorted(tuple(sorted(e)) for e in ref.edges()) == sorted(g.edges())


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_decode_encode_identity(g):
    assert graph6_decode(graph6_encode(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=30))
def test_encoding_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    assert graph6_encode(g) == nx.to_graph6_bytes(ref, header=False).decode().strip()


class TestReadStream:
    def test_empty(self):
        assert list(read_stream(io.StringIO(""))) == []

    def test_three_lines(self):
        recs = list(read_stream(io.StringIO("Cl\nC~\nD??\n")))
        assert [r.index for r in recs] == [0, 1, 2]
        assert [r.graph.n for r in recs] == [4, 4, 5]

    def test_skip_policy(self):
        diags = []
        recs = list(read_stream(io.StringIO("Cl\nC!!\nC~\n"), skip_malformed=True, diagnostics=diags))
        assert len(recs) == 2 and len(diags) == 1
        assert diags[0].startswith("line 2")
        assert [r.lineno for r in recs] == [1, 3]

    def test_fail_fast(self):
        with pytest.raises(Graph6Error, match="line 2"):
            list(read_stream(io.StringIO("Cl\nC!!\nC~\n")))

    def test_path_source(self, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text(">>graph6<<\nCl\n\nC~\n")
        assert len(list(read_stream(f))) == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            list(read_stream(tmp_path / "nope.g6"))
