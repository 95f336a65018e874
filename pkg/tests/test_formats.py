import networkx as nx
import pytest
from hypothesis import given, strategies as st

from chirality.canon import canonical_key
from chirality.catalog import named
from chirality.formats import ParseError, from_graph6, from_mg, read_graph, to_dot, to_graph6, to_mg
from chirality.graph import GraphError, Multigraph

from conftest import to_nx


def simple_graphs(max_n=12):
    return st.integers(0, max_n).flatmap(
        lambda n: st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))))
        .map(lambda es: Multigraph(n, tuple(sorted({(min(a, b), max(a, b)) for a, b in es if a != b}))) if n else Multigraph(0, ()))
    )


@given(simple_graphs())
def test_graph6_round_trip_matches_networkx(g):
    text = to_graph6(g)
    assert from_graph6(text) == g
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text


def test_graph6_large_order_header():
    g = Multigraph(70, ((0, 69),))
    assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_multigraphs_and_garbage():
    with pytest.raises(GraphError):
        to_graph6(Multigraph(2, ((0, 1), (0, 1))))
    with pytest.raises(ParseError):
        from_graph6("C~~~~")
    with pytest.raises(ParseError):
        from_graph6("")


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<" + to_graph6(named("K5").graph)) == named("K5").graph


def test_mg_round_trip_with_multiedges():
    g = Multigraph(3, ((0, 1), (0, 1), (2, 2)))
    assert from_mg(to_mg(g)) == g


def test_mg_comments_and_blank_lines():
    assert from_mg("# header next\n2 1\n\n0 1  # the edge\n").edges == ((0, 1),)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("x y\n", 1),
        ("2 2\n0 1\n", 2),
        ("2 1\n0 5\n", 2),
        ("3 2\n0 1\n1 z\n", 3),
    ],
)
def test_mg_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        from_mg(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_read_graph_dispatches_on_suffix(tmp_path):
    k33 = named("K33").graph
    (tmp_path / "a.g6").write_text(to_graph6(k33) + "\n")
    (tmp_path / "a.mg").write_text(to_mg(k33))
    assert canonical_key(read_graph(str(tmp_path / "a.g6"))) == canonical_key(k33)
    assert read_graph(str(tmp_path / "a.mg")).edges == Multigraph(6, k33.edges).edges


def test_dot_marks_highlighted_edges():
    g = named("K5").graph
    text = to_dot(g, "K5", highlight=[(0, 1)])
    assert text.startswith("graph K5 {")
    assert "0 -- 1 [color=red];" in text
    assert text.count("--") == 10
