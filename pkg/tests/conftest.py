import random

from hypothesis import strategies as st

from decycling.graph import Graph


@st.composite
def graphs(draw, min_vertices=0, max_vertices=10, max_edges=None):
    """Simple graphs with a random edge subset."""
    p = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    if not pairs:
        return Graph(p)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges or len(pairs)))
    return Graph(p, tuple(chosen))


def random_graph(rng: random.Random, p: int, density: float) -> Graph:
    edges = tuple((u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < density)
    return Graph(p, edges)


def random_connected_graph(rng: random.Random, p: int, density: float) -> Graph:
    """Random spanning tree plus extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, p)}
    edges |= {(u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < density}
    return Graph(p, tuple(edges))
