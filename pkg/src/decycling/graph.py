"""Undirected multigraphs and the structural operations on them.

A :class:`Graph` is an immutable value: vertex ids are ``0..vertex_count-1``
and edges form an order-independent multiset of unordered pairs.  Loops and
parallel edges are allowed; the family generators never produce them, but
smoothing degree-2 vertices can.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]

DEFAULT_EXACT_LIMIT = 40


class GraphError(ValueError):
    """Raised when a graph or vertex set violates an operation's precondition."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        canonical = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            canonical.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.vertex_count:
                raise GraphError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        # neighbours with multiplicity; a loop lists its vertex twice
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct neighbours of ``v`` (``v`` itself included when it has a loop)."""
        return tuple(sorted(set(self.adjacency[v])))

    @cached_property
    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonical sorted, duplicate-free form of a vertex collection."""
    return tuple(sorted(set(int(v) for v in vertices)))


def _check_vertices(g: Graph, s: Iterable[int]) -> VertexSet:
    s = vertex_set(s)
    for v in s:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return s


def _require_simple(g: Graph, what: str) -> None:
    if not g.is_simple:
        raise GraphError(f"{what} requires a simple graph")


class DisjointSet:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of ``a`` and ``b``; False if they were already one class."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def components(g: Graph) -> int:
    dsu = DisjointSet(g.vertex_count)
    count = g.vertex_count
    for u, v in g.edges:
        if dsu.union(u, v):
            count -= 1
    return count


def component_lists(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest member."""
    dsu = DisjointSet(g.vertex_count)
    for u, v in g.edges:
        dsu.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(dsu.find(v), []).append(v)
    return sorted(groups.values())


def is_connected(g: Graph) -> bool:
    return components(g) <= 1


def is_acyclic(g: Graph) -> bool:
    # a loop or a second parallel edge closes a cycle just like any other edge
    dsu = DisjointSet(g.vertex_count)
    return all(dsu.union(u, v) for u, v in g.edges)


def cycle_rank(g: Graph) -> int:
    return g.edge_count - g.vertex_count + components(g)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Subgraph induced on ``keep``; the second value maps new ids to old ids."""
    keep = _check_vertices(g, keep)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(edges), labels), keep


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """``G - S`` together with the map from new vertex ids back to ids of ``g``."""
    s = set(_check_vertices(g, s))
    return induced_subgraph(g, (v for v in range(g.vertex_count) if v not in s))


def is_decycling_set(g: Graph, s: Iterable[int]) -> bool:
    s = set(_check_vertices(g, s))
    dsu = DisjointSet(g.vertex_count)
    return all(dsu.union(u, v) for u, v in g.edges if u not in s and v not in s)


def outlay(g: Graph, s: Iterable[int]) -> int:
    """Degree sum of S, minus |S|, minus edges inside S, minus components of G - S, plus one.

    For a connected graph and a decycling set S this equals ``q - p + 1``.
    """
    if not is_connected(g):
        raise GraphError("outlay is only defined for connected graphs")
    s = _check_vertices(g, s)
    members = set(s)
    degree_sum = sum(g.degrees[v] for v in s)
    inside = sum(1 for u, v in g.edges if u in members and v in members)
    rest, _ = delete_vertices(g, s)
    return degree_sum - len(s) - inside - components(rest) + 1


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Product graph; vertex ``(x, y)`` gets id ``x * |h| + y``."""
    _require_simple(g, "cartesian_product")
    _require_simple(h, "cartesian_product")
    ng, nh = g.vertex_count, h.vertex_count
    edges = []
    for x in range(ng):
        for y1, y2 in h.edges:
            edges.append((x * nh + y1, x * nh + y2))
    for x1, x2 in g.edges:
        for y in range(nh):
            edges.append((x1 * nh + y, x2 * nh + y))
    labels = tuple(f"({g.label(x)},{h.label(y)})" for x in range(ng) for y in range(nh))
    return Graph(ng * nh, tuple(edges), labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return identification(g, h, ())


def identification(h: Graph, j: Graph, f: Sequence[tuple[int, int]]) -> Graph:
    """Glue ``j`` onto ``h`` by identifying each ``t`` in ``j`` with its partner ``s`` in ``h``.

    ``f`` is a list of ``(s, t)`` pairs.  Vertices of ``h`` keep their ids; the
    unglued vertices of ``j`` follow in increasing order.  Edges are combined as
    a set union, so a pair adjacent in both graphs yields a single edge.
    """
    pairs = [(int(s), int(t)) for s, t in f]
    sources = [s for s, _ in pairs]
    targets = [t for _, t in pairs]
    if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
        raise GraphError("identification map must be a bijection")
    _check_vertices(h, sources)
    _check_vertices(j, targets)

    to_h = {t: s for s, t in pairs}
    new_id: dict[int, int] = {}
    nxt = h.vertex_count
    for v in range(j.vertex_count):
        if v in to_h:
            new_id[v] = to_h[v]
        else:
            new_id[v] = nxt
            nxt += 1

    counts = Counter(h.edges)
    mapped = Counter(tuple(sorted((new_id[u], new_id[v]))) for u, v in j.edges)
    for e, m in mapped.items():
        counts[e] = max(counts[e], m)
    labels = None
    if h.labels is not None or j.labels is not None:
        labels = [h.label(v) for v in range(h.vertex_count)]
        labels += [j.label(v) for v in range(j.vertex_count) if v not in to_h]
    return Graph(nxt, tuple(counts.elements()), labels)


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``permutation[v]``."""
    if sorted(permutation) != list(range(g.vertex_count)):
        raise GraphError("not a permutation of the vertex ids")
    labels = None
    if g.labels is not None:
        inverse = [0] * g.vertex_count
        for old, new in enumerate(permutation):
            inverse[new] = old
        labels = tuple(g.labels[inverse[v]] for v in range(g.vertex_count))
    return Graph(g.vertex_count, tuple((permutation[u], permutation[v]) for u, v in g.edges), labels)


def smooth_with_map(g: Graph) -> tuple[Graph, VertexSet]:
    """Smooth away degree-2 vertices; also return surviving vertices' original ids."""
    alive = set(range(g.vertex_count))
    edges = Counter(g.edges)
    incident: dict[int, Counter] = {v: Counter() for v in alive}
    for (u, v), m in edges.items():
        incident[u][(u, v)] += m
        if u != v:
            incident[v][(u, v)] += m

    def degree(v: int) -> int:
        return sum(m * (2 if a == b else 1) for (a, b), m in incident[v].items())

    def has_loop(v: int) -> bool:
        return incident[v][(v, v)] > 0

    def change(e: tuple[int, int], delta: int) -> None:
        a, b = e
        edges[e] += delta
        incident[a][e] += delta
        if a != b:
            incident[b][e] += delta
        if edges[e] == 0:
            del edges[e]
            del incident[a][e]
            if a != b:
                del incident[b][e]

    pending = sorted(alive)
    while pending:
        v = pending.pop(0)
        if v not in alive or has_loop(v) or degree(v) != 2:
            continue
        ends = []
        for e, m in list(incident[v].items()):
            other = e[0] if e[1] == v else e[1]
            ends.extend([other] * m)
            change(e, -m)
        a, b = ends
        alive.discard(v)
        del incident[v]
        new_edge = (a, b) if a <= b else (b, a)
        change(new_edge, +1)
        for w in (a, b):
            if w not in pending:
                pending.append(w)
        pending.sort()

    keep = tuple(sorted(alive))
    index = {v: i for i, v in enumerate(keep)}
    new_edges = []
    for (a, b), m in edges.items():
        new_edges.extend([(index[a], index[b])] * m)
    labels = tuple(g.label(v) for v in keep)
    return Graph(len(keep), tuple(new_edges), labels), keep


def smooth_homeomorphic(g: Graph) -> Graph:
    """Repeatedly replace loop-free degree-2 vertices by an edge between their neighbours."""
    return smooth_with_map(g)[0]


def connectivity(g: Graph) -> int:
    _require_simple(g, "connectivity")
    import networkx as nx

    if g.vertex_count <= 1:
        return 0
    return nx.node_connectivity(to_networkx(g))


def to_networkx(g: Graph):
    import networkx as nx

    nxg = nx.MultiGraph() if not g.is_simple else nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.edges)
    return nxg


def maximum_independent_set(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> VertexSet:
    _require_simple(g, "maximum_independent_set")
    if g.vertex_count > limit:
        raise GraphError(f"exact independence search capped at {limit} vertices")
    nbr = g.neighbor_masks
    best = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        while True:
            if cand == 0:
                if size > best[0]:
                    best[:] = [size, chosen]
                return
            if size + cand.bit_count() <= best[0]:
                return
            # take any vertex of candidate-degree <= 1 without branching
            forced = -1
            branch, branch_deg = -1, -1
            rest = cand
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                d = (nbr[v] & cand).bit_count()
                if d <= 1:
                    forced = v
                    break
                if d > branch_deg:
                    branch, branch_deg = v, d
            if forced < 0:
                break
            chosen |= 1 << forced
            size += 1
            cand &= ~(nbr[forced] | (1 << forced))
        v = branch
        search(cand & ~(nbr[v] | (1 << v)), chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    search((1 << g.vertex_count) - 1, 0, 0)
    return tuple(v for v in range(g.vertex_count) if best[1] >> v & 1)


def independence_and_covering(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> tuple[int, int]:
    alpha = len(maximum_independent_set(g, limit))
    return alpha, g.vertex_count - alpha


def distance(g: Graph, u: int, v: int) -> int | None:
    """BFS distance from ``u`` to ``v``; None when they lie in different components."""
    _check_vertices(g, (u, v))
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                if y == v:
                    return seen[y]
                queue.append(y)
    return None


def count_4cycles(g: Graph) -> int:
    _require_simple(g, "count_4cycles")
    nbr = g.neighbor_masks
    paths = 0
    for u, w in combinations(range(g.vertex_count), 2):
        c = (nbr[u] & nbr[w]).bit_count()
        paths += c * (c - 1) // 2
    # each 4-cycle has two diagonals
    return paths // 2


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A proper 2-colouring as two colour classes, or None if ``g`` is not bipartite.

    Within each component the smaller side is placed in the first class.
    """
    color = [-1] * g.vertex_count
    first: list[int] = []
    second: list[int] = []
    for start in range(g.vertex_count):
        if color[start] >= 0:
            continue
        color[start] = 0
        side = [[start], []]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    side[color[y]].append(y)
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
        small, large = sorted(side, key=len)
        first.extend(small)
        second.extend(large)
    return vertex_set(first), vertex_set(second)
