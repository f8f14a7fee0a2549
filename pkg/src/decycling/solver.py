"""Exact minimum decycling sets.

Two independent engines live here.  :func:`oracle` walks vertex subsets in
increasing size and lexicographic order and returns the first one whose
removal leaves a forest; it is slow but transparent and serves as ground
truth.  :func:`branch_and_bound` reduces the graph, then branches on
"delete v" / "keep v" with degree-sum and cycle-packing lower bounds.
"""

from __future__ import annotations

import multiprocessing
import time
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .graph import DisjointSet, Graph, GraphError, VertexSet, component_lists, induced_subgraph, is_decycling_set, vertex_set

ORACLE_CAP = 26
DEFAULT_BUDGET = 60.0

OPTIMAL = "optimal"
BOUNDED = "bounded"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class DecyclingResult:
    witness: VertexSet
    value: int
    status: str
    lower: int
    upper: int
    nodes_explored: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


# ---------------------------------------------------------------------------
# oracle


def oracle(g: Graph, cap: int = ORACLE_CAP, prune: bool = True) -> DecyclingResult:
    """First decycling set in (size, lexicographic) order.

    With ``prune`` the walk skips subsets that delete too few edges to leave
    a forest: a forest on ``p - k >= 1`` vertices keeps at most ``p - k - 1``
    edges.  Skipping only such subsets leaves the returned witness unchanged.
    """
    p = g.vertex_count
    if p > cap:
        raise GraphError(f"oracle is capped at {cap} vertices (graph has {p})")
    start = time.perf_counter()
    q = g.edge_count
    mult = [Counter() for _ in range(p)]
    loops = [0] * p
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1
    checked = 0

    def acyclic_without(s: tuple[int, ...]) -> bool:
        nonlocal checked
        checked += 1
        return is_decycling_set(g, s)

    def result(s: tuple[int, ...]) -> DecyclingResult:
        return DecyclingResult(tuple(s), len(s), OPTIMAL, len(s), len(s), checked, time.perf_counter() - start)

    if not prune:
        for k in range(p + 1):
            for s in combinations(range(p), k):
                if acyclic_without(s):
                    return result(s)

    # edges removed by deleting v on top of S: deg(v) - loops(v) - mult(v, S)
    solo = [g.degrees[v] - loops[v] for v in range(p)]
    # best[i][r]: largest total of r solo gains among vertices >= i
    best = []
    for i in range(p + 1):
        gains = sorted(solo[i:], reverse=True)
        acc = [0]
        for x in gains:
            acc.append(acc[-1] + x)
        best.append(acc)

    for k in range(p + 1):
        need = q - p + k + 1 if k < p else 0
        chosen: list[int] = []

        def walk(first: int, removed: int) -> tuple[int, ...] | None:
            r = k - len(chosen)
            if r == 0:
                if removed >= need and acyclic_without(tuple(chosen)):
                    return tuple(chosen)
                return None
            for v in range(first, p - r + 1):
                if removed + best[v][r] < need:
                    return None
                gain = solo[v] - sum(mult[v][u] for u in chosen)
                chosen.append(v)
                found = walk(v + 1, removed + gain)
                chosen.pop()
                if found is not None:
                    return found
            return None

        found = walk(0, 0)
        if found is not None:
            return result(found)
    raise AssertionError("deleting every vertex always decycles")


# ---------------------------------------------------------------------------
# preprocessing


@dataclass(frozen=True)
class Reduction:
    graph: Graph
    forced: VertexSet
    offset: int
    mapping: VertexSet  # reduced vertex id -> id in the original graph

    def lift(self, witness) -> VertexSet:
        return vertex_set([self.mapping[v] for v in witness] + list(self.forced))


def preprocess(g: Graph) -> Reduction:
    """Shrink ``g`` without changing its decycling number.

    Rules, applied until none fires: drop vertices of degree <= 1; force a
    looped vertex into the solution; cap edge multiplicity at 2; smooth a
    loop-free degree-2 vertex into an edge between its neighbours.
    """
    adj: dict[int, Counter] = {v: Counter() for v in range(g.vertex_count)}
    for u, v in g.edges:
        adj[u][v] += 1
        if u != v:
            adj[v][u] += 1
    forced: list[int] = []

    def degree(v: int) -> int:
        return sum(adj[v].values()) + adj[v][v]

    def remove(v: int) -> list[int]:
        touched = [w for w in adj[v] if w != v]
        for w in touched:
            del adj[w][v]
        del adj[v]
        return touched

    queue = deque(sorted(adj))
    queued = set(queue)

    def push(vs) -> None:
        for w in vs:
            if w in adj and w not in queued:
                queued.add(w)
                queue.append(w)

    while queue:
        v = queue.popleft()
        queued.discard(v)
        if v not in adj:
            continue
        if adj[v][v] > 0:
            forced.append(v)
            push(remove(v))
            continue
        for w, m in adj[v].items():
            if m > 2:
                adj[v][w] = 2
                adj[w][v] = 2
        d = degree(v)
        if d <= 1:
            push(remove(v))
        elif d == 2:
            ends = [w for w, m in adj[v].items() for _ in range(m)]
            remove(v)
            a, b = ends
            adj[a][b] += 1
            if a != b:
                adj[b][a] += 1
            push((a, b))

    keep = tuple(sorted(adj))
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for u in keep:
        for w, m in adj[u].items():
            if u < w or u == w:
                edges.extend([(index[u], index[w])] * m)
    reduced = Graph(len(keep), tuple(edges))
    forced_set = vertex_set(forced)
    return Reduction(reduced, forced_set, len(forced_set), keep)


# ---------------------------------------------------------------------------
# bitmask multigraph machinery shared by the bounds and the search


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Masks:
    """Adjacency of a loop-free multigraph with multiplicities at most 2."""

    def __init__(self, g: Graph) -> None:
        n = g.vertex_count
        self.n = n
        self.nbr = [0] * n
        self.dbl = [0] * n
        count = Counter(g.edges)
        for (u, v), m in count.items():
            if u == v or m > 2:
                raise GraphError("search graph must be loop-free with multiplicity <= 2")
            self.nbr[u] |= 1 << v
            self.nbr[v] |= 1 << u
            if m == 2:
                self.dbl[u] |= 1 << v
                self.dbl[v] |= 1 << u

    def degree(self, v: int, alive: int) -> int:
        return (self.nbr[v] & alive).bit_count() + (self.dbl[v] & alive).bit_count()

    def component_masks(self, alive: int) -> list[int]:
        comps = []
        rest = alive
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self.nbr[v]
                frontier = reach & alive & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def peel(self, alive: int) -> int:
        """Strip vertices of degree <= 1 until the 2-core remains."""
        deg = {v: self.degree(v, alive) for v in _bits(alive)}
        stack = [v for v, d in deg.items() if d <= 1]
        while stack:
            v = stack.pop()
            if not alive >> v & 1:
                continue
            alive &= ~(1 << v)
            for w in _bits(self.nbr[v] & alive):
                deg[w] -= 2 if self.dbl[v] >> w & 1 else 1
                if deg[w] <= 1:
                    stack.append(w)
        return alive

    def shortest_cycle(self, alive: int) -> int:
        """Vertex mask of a shortest cycle inside ``alive`` (0 if acyclic)."""
        for v in _bits(alive):
            d = self.dbl[v] & alive
            if d:
                return (1 << v) | (d & -d)
        best, best_len = 0, None
        for root in _bits(alive):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            found = None
            while queue and found is None:
                x = queue.popleft()
                if best_len is not None and 2 * dist[x] + 1 >= best_len:
                    break
                for y in _bits(self.nbr[x] & alive):
                    if y == parent[x]:
                        continue
                    if y in dist:
                        found = (x, y)
                        break
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
            if found is None:
                continue
            x, y = found
            length = dist[x] + dist[y] + 1
            if best_len is None or length < best_len:
                mask = 0
                for z in (x, y):
                    while z != -1:
                        mask |= 1 << z
                        z = parent[z]
                best, best_len = mask, length
                if best_len == 3:
                    break
        return best

    def is_forest(self, alive: int) -> bool:
        return self.peel(alive) == 0


def _degree_bound(m: _Masks, alive: int, deletable: int) -> int | None:
    """Per-component least s with (s largest deletable degrees - 1) summing to the cycle rank.

    Returns None when some component cannot be decycled from ``deletable``.
    """
    total = 0
    for comp in m.component_masks(alive):
        degs = [m.degree(v, alive) for v in _bits(comp)]
        rank = sum(degs) // 2 - len(degs) + 1
        if rank <= 0:
            continue
        gains = sorted((m.degree(v, alive) - 1 for v in _bits(comp & deletable)), reverse=True)
        acc = 0
        for s, gain in enumerate(gains, 1):
            acc += gain
            if acc >= rank:
                total += s
                break
        else:
            return None
    return total


def _packing_size(m: _Masks, alive: int) -> int:
    count = 0
    alive = m.peel(alive)
    while alive:
        cyc = m.shortest_cycle(alive)
        if not cyc:
            break
        count += 1
        alive = m.peel(alive & ~cyc)
    return count


def cycle_packing_lower_bound(g: Graph) -> int:
    """Size of a greedy vertex-disjoint cycle packing (shortest cycle first)."""
    red = preprocess(g)
    if red.graph.vertex_count == 0:
        return red.offset
    # looped vertices carry disjoint loops; the rest packs in the reduced graph
    return red.offset + _packing_size(_Masks(red.graph), (1 << red.graph.vertex_count) - 1)


def greedy_decycling(g: Graph) -> VertexSet:
    """Repeatedly delete a maximum-degree vertex lying on a cycle, then drop redundant picks."""
    red = preprocess(g)
    chosen = _greedy_masks(_Masks(red.graph), (1 << red.graph.vertex_count) - 1)
    return red.lift(chosen)


def _greedy_masks(m: _Masks, alive: int) -> list[int]:
    chosen = []
    alive = m.peel(alive)
    while alive:
        ranked = sorted(_bits(alive), key=lambda v: (-m.degree(v, alive), v))
        for v in ranked:
            if _on_cycle(m, alive, v):
                break
        chosen.append(v)
        alive = m.peel(alive & ~(1 << v))
    full = (1 << m.n) - 1
    for v in list(reversed(chosen)):
        trial = [u for u in chosen if u != v]
        mask = full
        for u in trial:
            mask &= ~(1 << u)
        if m.is_forest(mask):
            chosen = trial
    return sorted(chosen)


def _on_cycle(m: _Masks, alive: int, v: int) -> bool:
    if m.dbl[v] & alive:
        return True
    rest = alive & ~(1 << v)
    nbrs = m.nbr[v] & rest
    for comp in m.component_masks(rest):
        if (comp & nbrs).bit_count() >= 2:
            return True
    return False


# ---------------------------------------------------------------------------
# branch and bound


class _Timeout(Exception):
    pass


class _Search:
    def __init__(self, m: _Masks, incumbent: list[int], deadline: float, shared=None) -> None:
        self.m = m
        self.best = list(incumbent)
        self.best_value = len(incumbent)
        self.deadline = deadline
        self.nodes = 0
        self.shared = shared
        self.cycles = self._short_cycles()

    def _short_cycles(self) -> list[int]:
        # all cycles of length <= 4 plus one shortest cycle through each vertex
        m = self.m
        found = set()
        for v in range(m.n):
            for w in _bits(m.dbl[v]):
                if v < w:
                    found.add((1 << v) | (1 << w))
        for a in range(m.n):
            for b in _bits(m.nbr[a]):
                if b <= a:
                    continue
                for c in _bits(m.nbr[b] & m.nbr[a]):
                    found.add((1 << a) | (1 << b) | (1 << c))
        for a in range(m.n):
            for c in range(a + 1, m.n):
                common = [x for x in _bits(m.nbr[a] & m.nbr[c]) if x != a and x != c]
                for b, d in combinations(common, 2):
                    found.add((1 << a) | (1 << b) | (1 << c) | (1 << d))
        for v in range(m.n):
            cyc = self._shortest_through(v)
            if cyc:
                found.add(cyc)
        return sorted(found, key=lambda c: (c.bit_count(), c))

    def _shortest_through(self, v: int) -> int:
        # BFS from v; paths down different branches close a cycle through v
        m = self.m
        dist = {v: 0}
        parent = {v: -1}
        branch = {v: -1}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in _bits(m.nbr[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    branch[y] = y if x == v else branch[x]
                    queue.append(y)
        best, best_len = 0, None
        for x in dist:
            if x == v:
                continue
            for y in _bits(m.nbr[x]):
                if y == v:
                    if parent[x] == v:
                        continue
                    length, ends = dist[x] + 1, (x,)
                elif x < y and branch[x] != branch[y]:
                    length, ends = dist[x] + dist[y] + 1, (x, y)
                else:
                    continue
                if best_len is None or length < best_len:
                    mask = 0
                    for z in ends:
                        while z != -1:
                            mask |= 1 << z
                            z = parent[z]
                    best, best_len = mask, length
        return best

    def incumbent_value(self) -> int:
        if self.shared is not None:
            return min(self.best_value, self.shared.value)
        return self.best_value

    def record(self, chosen: list[int]) -> None:
        self.best_value = len(chosen)
        self.best = list(chosen)
        if self.shared is not None:
            with self.shared.get_lock():
                if len(chosen) < self.shared.value:
                    self.shared.value = len(chosen)

    def reduce(self, alive: int, kept: int) -> tuple[int, int, list[int]]:
        m = self.m
        forced: list[int] = []
        while True:
            alive = m.peel(alive)
            kept &= alive
            kcomps = m.component_masks(kept) if kept else []
            hit = -1
            for u in _bits(alive & ~kept):
                if m.dbl[u] & kept:
                    hit = u
                    break
                nb = m.nbr[u] & kept
                if nb.bit_count() >= 2 and any((nb & c).bit_count() >= 2 for c in kcomps):
                    hit = u
                    break
            if hit < 0:
                return alive, kept, forced
            forced.append(hit)
            alive &= ~(1 << hit)

    def lower_bound(self, alive: int, kept: int) -> int | None:
        deg = _degree_bound(self.m, alive, alive & ~kept)
        if deg is None:
            return None
        used = 0
        packed = 0
        for c in self.cycles:
            if c & alive == c and not c & used:
                used |= c
                packed += 1
        return max(deg, packed)

    def bound_at(self, alive: int, kept: int, chosen: list[int]) -> tuple[int, int, list[int], int | None]:
        alive, kept, forced = self.reduce(alive, kept)
        chosen = chosen + forced
        lb = self.lower_bound(alive, kept) if alive else 0
        return alive, kept, chosen, lb

    def run(self, alive: int, kept: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.nodes & 127 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout
        alive, kept, chosen, lb = self.bound_at(alive, kept, chosen)
        if lb is None or len(chosen) + lb >= self.incumbent_value():
            return
        if not alive:
            self.record(chosen)
            return
        m = self.m
        v = max(_bits(alive & ~kept), key=lambda x: (m.degree(x, alive), -x))
        self.run(alive & ~(1 << v), kept, chosen + [v])
        self.run(alive, kept | (1 << v), chosen)


_worker_state: dict = {}


def _worker_init(graph: Graph, shared, deadline: float) -> None:
    _worker_state["graph"] = graph
    _worker_state["shared"] = shared
    _worker_state["deadline"] = deadline


def _worker_run(task):
    alive, kept, chosen = task
    m = _Masks(_worker_state["graph"])
    shared = _worker_state["shared"]
    search = _Search(m, [], _worker_state["deadline"], shared)
    search.best_value = shared.value
    search.best = None
    timed_out = False
    try:
        search.run(alive, kept, chosen)
    except _Timeout:
        timed_out = True
    return search.best, search.nodes, timed_out


def _solve_component(comp: Graph, deadline: float, threads: int) -> tuple[list[int], int, int, bool]:
    """Return (best set, proven lower bound, nodes, completed) for one reduced component."""
    m = _Masks(comp)
    full = (1 << m.n) - 1
    incumbent = _greedy_masks(m, full)
    search = _Search(m, incumbent, deadline)
    alive, kept, chosen, lb = search.bound_at(full, 0, [])
    root_lower = len(chosen) + (lb if lb is not None else 0)
    if threads > 1 and len(incumbent) > root_lower:
        return _solve_parallel(comp, search, incumbent, root_lower, deadline, threads)
    try:
        search.run(full, 0, [])
    except _Timeout:
        return search.best, min(root_lower, search.best_value), search.nodes, False
    return search.best, search.best_value, search.nodes, True


def _solve_parallel(comp, search, incumbent, root_lower, deadline, threads):
    # expand the tree breadth-first into independent subproblems
    frontier = [(((1 << search.m.n) - 1), 0, [])]
    m = search.m
    while frontier and len(frontier) < 4 * threads:
        nxt = []
        for alive, kept, chosen in frontier:
            search.nodes += 1
            alive, kept, chosen, lb = search.bound_at(alive, kept, chosen)
            if lb is None or len(chosen) + lb >= search.best_value:
                continue
            if not alive:
                search.record(chosen)
                continue
            v = max(_bits(alive & ~kept), key=lambda x: (m.degree(x, alive), -x))
            nxt.append((alive & ~(1 << v), kept, chosen + [v]))
            nxt.append((alive, kept | (1 << v), chosen))
        frontier = nxt
    best = search.best
    nodes = search.nodes
    if not frontier:
        return best, len(best), nodes, True
    ctx = multiprocessing.get_context("fork")
    shared = ctx.Value("i", len(best))
    completed = True
    with ProcessPoolExecutor(threads, mp_context=ctx, initializer=_worker_init, initargs=(comp, shared, deadline)) as pool:
        for found, count, timed_out in pool.map(_worker_run, frontier):
            nodes += count
            completed &= not timed_out
            if found is not None and len(found) < len(best):
                best = found
    if not completed:
        return best, min(root_lower, len(best)), nodes, False
    return best, len(best), nodes, True


def branch_and_bound(g: Graph, budget: float = DEFAULT_BUDGET, threads: int = 1) -> DecyclingResult:
    """Minimum decycling set by reduction plus branch and bound.

    Status is ``optimal`` if the search finishes within ``budget`` seconds and
    ``bounded`` otherwise, with the best proven lower bound and the incumbent.
    """
    start = time.perf_counter()
    deadline = start + budget
    red = preprocess(g)
    witness = []
    lower = red.offset
    nodes = 0
    completed = True
    for members in component_lists(red.graph):
        comp, back = induced_subgraph(red.graph, members)
        if comp.edge_count == 0:
            continue
        found, comp_lower, count, done = _solve_component(comp, deadline, threads)
        witness.extend(back[v] for v in found)
        lower += comp_lower
        nodes += count
        completed &= done
    lifted = red.lift(witness)
    elapsed = time.perf_counter() - start
    status = OPTIMAL if completed else BOUNDED
    if completed:
        lower = len(lifted)
    return DecyclingResult(lifted, len(lifted), status, lower, len(lifted), nodes, elapsed)


def decycling_number(g: Graph, method: str = "bnb", **kwargs) -> int:
    """Exact decycling number; raises if the search does not finish."""
    result = oracle(g, **kwargs) if method == "oracle" else branch_and_bound(g, **kwargs)
    if not result.optimal:
        raise TimeoutError(f"decycling number not certified (bounds {result.lower}..{result.upper})")
    return result.value


def verify_certificate(g: Graph, r: DecyclingResult, oracle_cap: int = 20) -> bool:
    if len(r.witness) != r.value or not is_decycling_set(g, r.witness):
        return False
    if not r.optimal:
        return r.lower <= r.value
    if g.vertex_count <= oracle_cap:
        return oracle(g, cap=oracle_cap).value == r.value
    from .bounds import strongest_lower_bound

    return r.value >= strongest_lower_bound(g)
