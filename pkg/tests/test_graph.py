import pytest
from hypothesis import given, settings

from conftest import graphs
from decycling.generators import complete, cycle, grid, hypercube, path, petersen, star
from decycling.graph import (
    Graph,
    GraphError,
    cartesian_product,
    components,
    connectivity,
    count_4cycles,
    cycle_rank,
    delete_vertices,
    disjoint_union,
    distance,
    identification,
    independence_and_covering,
    is_acyclic,
    is_decycling_set,
    outlay,
    relabel,
    smooth_homeomorphic,
    vertex_set,
)


def theta_graph():
    # two poles joined by paths of length 2, 3 and 4
    return Graph(7, ((0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)))


def test_edges_are_order_independent():
    assert Graph(3, ((2, 0), (1, 2))) == Graph(3, ((0, 2), (1, 2)))
    assert Graph(3, ((0, 1), (0, 1))) != Graph(3, ((0, 1),))


def test_edge_out_of_range():
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


def test_components():
    assert components(Graph(0)) == 0
    assert components(path(5)) == 1
    assert components(disjoint_union(cycle(3), cycle(3))) == 2
    assert components(Graph(4)) == 4


def test_is_acyclic():
    assert is_acyclic(star(7))
    assert not is_acyclic(cycle(3))
    assert not is_acyclic(Graph(1, ((0, 0),)))
    assert not is_acyclic(Graph(2, ((0, 1), (0, 1))))


def test_cycle_rank():
    assert cycle_rank(path(7)) == 0
    assert cycle_rank(petersen()) == 6
    assert cycle_rank(hypercube(3)) == 5
    assert cycle_rank(disjoint_union(cycle(4), cycle(5))) == 2


def test_delete_vertices():
    rest, back = delete_vertices(complete(4), [0])
    assert rest == complete(3)
    assert back == (1, 2, 3)
    assert delete_vertices(cycle(5), [])[0] == cycle(5)
    rest, _ = delete_vertices(petersen(), [4])
    assert (rest.vertex_count, rest.edge_count) == (9, 12)
    with pytest.raises(GraphError):
        delete_vertices(cycle(5), [5])


def test_is_decycling_set():
    assert is_decycling_set(petersen(), [0, 2, 8])
    assert not is_decycling_set(cycle(5), [])
    assert is_decycling_set(star(6), [])
    with pytest.raises(GraphError):
        is_decycling_set(cycle(4), [-1])


def test_outlay_examples():
    assert outlay(cycle(6), [0]) == 1
    assert outlay(complete(4), [0, 1]) == 3
    assert outlay(petersen(), [0, 2, 8]) == 6
    with pytest.raises(GraphError):
        outlay(disjoint_union(cycle(3), cycle(3)), [0, 3])


def test_cartesian_product():
    k2 = complete(2)
    assert relabel(cartesian_product(k2, k2), [0, 1, 3, 2]) == cycle(4)
    q3 = cartesian_product(k2, hypercube(2))
    assert sorted(q3.degrees) == sorted(hypercube(3).degrees)
    assert count_4cycles(q3) == count_4cycles(hypercube(3))
    g = cartesian_product(path(2), path(3))
    assert (g.vertex_count, g.edge_count) == (6, 7)
    assert g.labels[4] == "(1,1)"
    with pytest.raises(GraphError):
        cartesian_product(Graph(2, ((0, 1), (0, 1))), k2)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=5), graphs(max_vertices=5))
def test_product_statistics_symmetric(g, h):
    gh, hg = cartesian_product(g, h), cartesian_product(h, g)
    assert sorted(gh.degrees) == sorted(hg.degrees)
    assert count_4cycles(gh) == count_4cycles(hg)


def test_identification():
    bowtie = identification(cycle(3), cycle(3), [(0, 0)])
    assert (bowtie.vertex_count, bowtie.edge_count) == (5, 6)
    book = identification(cycle(4), cycle(4), [(0, 0), (1, 1)])
    assert (book.vertex_count, book.edge_count) == (6, 7)
    assert identification(cycle(3), path(2), []) == disjoint_union(cycle(3), path(2))
    with pytest.raises(GraphError):
        identification(cycle(3), cycle(3), [(0, 0), (1, 0)])


def test_smoothing():
    assert smooth_homeomorphic(cycle(6)) == Graph(1, ((0, 0),))
    assert smooth_homeomorphic(path(5)).edge_count == 1
    assert smooth_homeomorphic(theta_graph()) == Graph(2, ((0, 1),) * 3)
    assert smooth_homeomorphic(petersen()) == petersen()


def test_connectivity():
    assert connectivity(star(5)) == 1
    assert connectivity(cycle(5)) == 2
    assert connectivity(petersen()) == 3
    assert connectivity(complete(5)) == 4


def test_independence_and_covering():
    assert independence_and_covering(cycle(5)) == (2, 3)
    assert independence_and_covering(complete(6)) == (1, 5)
    assert independence_and_covering(petersen()) == (4, 6)
    with pytest.raises(GraphError):
        independence_and_covering(path(41))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=12))
def test_alpha_plus_beta(g):
    alpha, beta = independence_and_covering(g)
    assert alpha + beta == g.vertex_count


def test_distance():
    q3 = hypercube(3)
    assert distance(q3, 0b000, 0b111) == 3
    assert distance(q3, 5, 5) == 0
    assert distance(disjoint_union(cycle(3), cycle(3)), 0, 4) is None


def test_count_4cycles():
    assert count_4cycles(cycle(4)) == 1
    assert count_4cycles(hypercube(3)) == 6
    assert count_4cycles(hypercube(4)) == 24
    assert count_4cycles(complete(4)) == 3
    assert count_4cycles(grid(3, 3)) == 4


def test_vertex_set_canonical():
    assert vertex_set([3, 1, 3, 2]) == (1, 2, 3)
