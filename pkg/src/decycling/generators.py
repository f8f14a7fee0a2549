"""Constructors for the graph families used throughout the package."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, cartesian_product

HYPERCUBE_CAP = 20


def edgeless(p: int) -> Graph:
    if p < 0:
        raise GraphError("edgeless graph needs p >= 0")
    return Graph(p)


def path(p: int) -> Graph:
    if p < 1:
        raise GraphError("path needs p >= 1")
    return Graph(p, tuple((i, i + 1) for i in range(p - 1)))


def cycle(p: int) -> Graph:
    if p < 3:
        raise GraphError("cycle needs p >= 3")
    return Graph(p, tuple((i, (i + 1) % p) for i in range(p)))


def complete(p: int) -> Graph:
    if p < 1:
        raise GraphError("complete graph needs p >= 1")
    return Graph(p, tuple(combinations(range(p), 2)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(k < 1 for k in parts):
        raise GraphError("complete multipartite graph needs a non-empty list of positive part sizes")
    owner = [i for i, k in enumerate(parts) for _ in range(k)]
    edges = [(u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v]]
    return Graph(len(owner), tuple(edges))


def complete_bipartite(r: int, s: int) -> Graph:
    return complete_multipartite([r, s])


def star(p: int) -> Graph:
    """K_{1,p-1}: centre 0 joined to p - 1 leaves."""
    if p < 1:
        raise GraphError("star needs p >= 1")
    return Graph(p, tuple((0, i) for i in range(1, p)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, tuple(outer + inner + spokes))


def hypercube(n: int, cap: int = HYPERCUBE_CAP) -> Graph:
    """Q_n on the binary n-strings; vertex id is the string read as a binary number."""
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    if n > cap:
        raise GraphError(f"hypercube dimension {n} exceeds cap {cap}")
    edges = [(x, x | (1 << b)) for x in range(1 << n) for b in range(n) if not x >> b & 1]
    labels = tuple(format(x, f"0{n}b") for x in range(1 << n))
    return Graph(1 << n, tuple(edges), labels)


def hypercube_by_products(n: int) -> Graph:
    """Q_n built as K_2 x Q_{n-1}, starting from Q_1 = K_2."""
    q = complete(2)
    for _ in range(n - 1):
        q = cartesian_product(complete(2), q)
    return q


def grid(m: int, n: int) -> Graph:
    """P_m x P_n with m rows and n columns.

    Vertex ``v_{i,j}`` (1-based row i, column j) has id ``(i-1)*n + (j-1)``.
    """
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    labels = tuple(f"v_{{{i + 1},{j + 1}}}" for i in range(m) for j in range(n))
    return Graph(m * n, tuple(edges), labels)


def grid_id(n: int, i: int, j: int) -> int:
    """Id of the 1-based position (i, j) in a grid with n columns."""
    return (i - 1) * n + (j - 1)


def torus(m: int, n: int) -> Graph:
    if m < 3 or n < 3:
        raise GraphError("torus needs m, n >= 3")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            edges.append((v, i * n + (j + 1) % n))
            edges.append((v, ((i + 1) % m) * n + j))
    labels = tuple(f"v_{{{i + 1},{j + 1}}}" for i in range(m) for j in range(n))
    return Graph(m * n, tuple(edges), labels)


def triangle_replacement(g: Graph) -> Graph:
    """Blow each vertex of a cubic graph up into a triangle.

    Corner ``3*v + k`` of the triangle for ``v`` takes the k-th edge at ``v``.
    """
    if not g.is_simple or any(d != 3 for d in g.degrees):
        raise GraphError("triangle replacement needs a simple cubic graph")
    edges = []
    for v in range(g.vertex_count):
        a, b, c = 3 * v, 3 * v + 1, 3 * v + 2
        edges += [(a, b), (b, c), (a, c)]
    used = [0] * g.vertex_count
    for u, v in g.edges:
        edges.append((3 * u + used[u], 3 * v + used[v]))
        used[u] += 1
        used[v] += 1
    return Graph(3 * g.vertex_count, tuple(edges))


def maximal_outerplanar(n: int, seed: int = 0) -> Graph:
    """Random triangulation of the n-gon by clipping seeded random ears."""
    if n < 3:
        raise GraphError("maximal outerplanar graph needs n >= 3")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    polygon = list(range(n))
    while len(polygon) > 3:
        k = rng.randrange(len(polygon))
        before, after = polygon[k - 1], polygon[(k + 1) % len(polygon)]
        edges.append((before, after))
        del polygon[k]
    return Graph(n, tuple(edges))


def fan_outerplanar(n: int) -> Graph:
    """The fan triangulation: every chord leaves vertex 0."""
    if n < 3:
        raise GraphError("maximal outerplanar graph needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(0, k) for k in range(2, n - 1)]
    return Graph(n, tuple(edges))
