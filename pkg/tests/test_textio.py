import pytest
from hypothesis import given

from conftest import graphs
from decycling.generators import grid, petersen
from decycling.graph import Graph, GraphError
from decycling.textio import from_structured, from_text, read_graph, to_structured, to_text, write_graph


def test_text_format():
    text = to_text(Graph(3, ((0, 1), (1, 2))))
    assert text == "p 3 2\ne 0 1\ne 1 2\n"
    assert from_text("c a comment\np 3 2\ne 1 2\ne 0 1\n") == Graph(3, ((0, 1), (1, 2)))


@given(graphs(max_vertices=12))
def test_text_round_trip(g):
    assert from_text(to_text(g)) == g
    assert to_text(from_text(to_text(g))) == to_text(g)


def test_structured_keeps_labels():
    g = grid(2, 3)
    back = from_structured(to_structured(g))
    assert back == g and back.labels == g.labels
    assert to_structured(back) == to_structured(g)


def test_multigraph_round_trip():
    g = Graph(2, ((0, 0), (0, 1), (0, 1)))
    assert from_text(to_text(g)) == g


@pytest.mark.parametrize(
    "text",
    ["e 0 1\n", "p 2 1\n", "p 2 1\ne 0 5\n", "p 2 1\nx 0 1\n", "p 2 1\ne 0\n", "p 2 0\np 2 0\n"],
)
def test_malformed_text(text):
    with pytest.raises(GraphError):
        from_text(text)


def test_files(tmp_path):
    g = petersen()
    write_graph(g, tmp_path / "g.txt")
    write_graph(g, tmp_path / "g.json", structured=True)
    assert read_graph(tmp_path / "g.txt") == read_graph(tmp_path / "g.json") == g
