"""Exact edge and vertex connectivity of digraphs with full minimum-cut enumeration.

Flows run on unit-capacity networks with Dinic's blocking-flow phases.
All minimum s-t cuts are enumerated as closed vertex sets of the residual
network's strongly-connected-component condensation; global minimum cuts
are the union over the pivot pairs (0, u) and (u, 0).  Brute-force subset
oracles are provided for cross-checking at small n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from drdlab.digraph import Digraph, bits, popcount, require_regular, require_strongly_connected
from drdlab.errors import PreconditionError

OUT_STAR = "OutStar"
IN_STAR = "InStar"
OUT_NEIGHBORHOOD = "OutNeighborhood"
IN_NEIGHBORHOOD = "InNeighborhood"
NON_TRIVIAL = "NonTrivial"

Edge = tuple[int, int]


@dataclass(frozen=True)
class EdgeCut:
    """The crossing set [A, V - A] of a minimum edge cut.

    ``side_a`` is the canonical (largest) source side; ``sides`` lists every
    bipartition that produced the same crossing set during enumeration.
    """

    side_a: frozenset[int]
    crossing: tuple[Edge, ...]
    sides: tuple[frozenset[int], ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.crossing)

    def sort_key(self):
        return (self.size, self.crossing)


@dataclass(frozen=True)
class VertexCut:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CutClass:
    tag: str
    vertex: int | None = None
    both: bool = False  # star cut that is simultaneously an out- and in-star (or nbhd)

    @property
    def trivial(self) -> bool:
        return self.tag != NON_TRIVIAL

    def __str__(self) -> str:
        if self.vertex is None:
            return self.tag
        return f"{self.tag}({self.vertex})" + ("*" if self.both else "")


# -- flow network --------------------------------------------------------------


class _Network:
    """Residual network with integer capacities on arcs stored as adjacency lists."""

    def __init__(self, size: int):
        self.size = size
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(size)]

    def add_arc(self, u: int, v: int, c: int) -> None:
        # arc index i and its reverse i ^ 1
        self.adj[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            level = self._levels(s)
            if level[t] < 0:
                break
            it = [0] * self.size
            while limit is None or flow < limit:
                pushed = self._augment(s, t, level, it)
                if not pushed:
                    break
                flow += pushed
        return flow

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.head[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS along the level graph; pushes one unit-bottleneck path
        path: list[int] = []
        u = s
        while True:
            if u == t:
                amount = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= amount
                    self.cap[a ^ 1] += amount
                return amount
            advanced = False
            arcs = self.adj[u]
            while it[u] < len(arcs):
                a = arcs[it[u]]
                v = self.head[a]
                if self.cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == s:
                    return 0
                level[u] = -1  # dead end
                a = path.pop()
                u = self.head[a ^ 1]
                it[u] += 1

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for a in self.adj[u]:
                v = self.head[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def residual_adjacency(self) -> list[list[int]]:
        return [[self.head[a] for a in self.adj[u] if self.cap[a] > 0] for u in range(self.size)]


def _edge_network(g: Digraph) -> _Network:
    net = _Network(g.n)
    for u, v in g.edges():
        net.add_arc(u, v, 1)
    return net


def max_flow(g: Digraph, s: int, t: int) -> tuple[int, EdgeCut]:
    """Unit-capacity max flow from s to t and the minimum cut nearest to s."""
    if s == t:
        raise PreconditionError("source and sink must differ")
    net = _edge_network(g)
    value = net.max_flow(s, t)
    side = net.residual_reach(s)
    crossing = tuple((u, v) for u, v in g.edges() if u in side and v not in side)
    return value, EdgeCut(frozenset(side), crossing)


def flow_value(g: Digraph, s: int, t: int) -> int:
    return max_flow(g, s, t)[0]


# -- closed-set enumeration -----------------------------------------------------


def _condensation(adj: list[list[int]]) -> tuple[list[int], list[set[int]]]:
    """Tarjan SCCs (iterative). Returns comp id per node and the component DAG successors."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            u, i = work[-1]
            if i < len(adj[u]):
                work[-1] = (u, i + 1)
                v = adj[u][i]
                if index[v] < 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                    work.append((v, 0))
                elif on_stack[v]:
                    low[u] = min(low[u], index[v])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[u])
                if low[u] == index[u]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = ncomp
                        if w == u:
                            break
                    ncomp += 1
    succ: list[set[int]] = [set() for _ in range(ncomp)]
    for u in range(n):
        for v in adj[u]:
            if comp[u] != comp[v]:
                succ[comp[u]].add(comp[v])
    return comp, succ


def _closed_sets(adj: list[list[int]], s: int, t: int):
    """Yield every node set S with s in S, t not in S and no residual arc leaving S."""
    comp, succ = _condensation(adj)
    ncomp = len(succ)
    pred: list[set[int]] = [set() for _ in range(ncomp)]
    for c, ss in enumerate(succ):
        for d in ss:
            pred[d].add(c)

    def closure(start: int, nbrs) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            c = stack.pop()
            for d in nbrs[c]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return seen

    forced_in = closure(comp[s], succ)
    forced_out = closure(comp[t], pred)
    if forced_in & forced_out:
        return
    # Tarjan numbers components in reverse topological order: successors get smaller ids.
    free = [c for c in range(ncomp) if c not in forced_in and c not in forced_out]
    members: list[list[int]] = [[] for _ in range(ncomp)]
    for u, c in enumerate(comp):
        members[c].append(u)
    chosen = set(forced_in)

    def rec(i: int):
        if i == len(free):
            yield {u for c in chosen for u in members[c]}
            return
        c = free[i]
        # free is ascending, so every successor of c has already been decided
        yield from rec(i + 1)
        if succ[c] <= chosen:
            chosen.add(c)
            yield from rec(i + 1)
            chosen.discard(c)

    yield from rec(0)


def min_st_edge_cuts(g: Digraph, s: int, t: int) -> tuple[int, list[frozenset[int]]]:
    """Flow value and all source sides A of minimum s-t edge cuts."""
    net = _edge_network(g)
    value = net.max_flow(s, t)
    adj = net.residual_adjacency()
    return value, [frozenset(side) for side in _closed_sets(adj, s, t)]


# -- global edge connectivity ---------------------------------------------------


def _crossing(g: Digraph, side: int) -> tuple[Edge, ...]:
    return tuple((u, v) for u in bits(side) for v in bits(g.rows[u] & ~side))


def _crossing_size(g: Digraph, side: int) -> int:
    return sum(popcount(g.rows[u] & ~side) for u in bits(side))


def _require_cut_domain(g: Digraph) -> None:
    if g.n < 2:
        raise PreconditionError("connectivity needs at least 2 vertices")
    require_strongly_connected(g)


def _pivot_flows(g: Digraph) -> list[tuple[int, int, int]]:
    return [(s, t, flow_value(g, s, t)) for u in range(1, g.n) for s, t in ((0, u), (u, 0))]


def edge_connectivity(g: Digraph) -> int:
    _require_cut_domain(g)
    return min(v for _, _, v in _pivot_flows(g))


def canonical_side(g: Digraph, crossing) -> frozenset[int]:
    """Vertices that reach no head of ``crossing`` once it is removed."""
    heads = 0
    for _, v in crossing:
        heads |= 1 << v
    reduced = g.without_edges(crossing)
    back = 0
    for h in bits(heads):
        back |= reduced.reach_mask(h, reduced.in_rows)
    full = (1 << g.n) - 1
    return frozenset(bits(full & ~back))


def _collect(g: Digraph, sides) -> list[EdgeCut]:
    by_crossing: dict[tuple[Edge, ...], set[frozenset[int]]] = {}
    for side in sides:
        mask = sum(1 << u for u in side)
        by_crossing.setdefault(_crossing(g, mask), set()).add(frozenset(side))
    cuts = [
        EdgeCut(canonical_side(g, crossing), crossing, tuple(sorted(group, key=sorted)))
        for crossing, group in by_crossing.items()
    ]
    return sorted(cuts, key=EdgeCut.sort_key)


def enumerate_min_edge_cuts(g: Digraph) -> list[EdgeCut]:
    """Every minimum edge cut of ``g`` (distinct crossing sets), canonically sorted."""
    _require_cut_domain(g)
    flows = _pivot_flows(g)
    best = min(v for _, _, v in flows)
    sides = []
    for s, t, value in flows:
        if value == best:
            _, found = min_st_edge_cuts(g, s, t)
            sides.extend(found)
    return _collect(g, sides)


def brute_force_min_edge_cuts(g: Digraph) -> list[EdgeCut]:
    """Oracle: scan every nonempty proper vertex subset."""
    _require_cut_domain(g)
    n = g.n
    full = (1 << n) - 1
    best = None
    sides = []
    for mask in range(1, full):
        size = _crossing_size(g, mask)
        if best is None or size < best:
            best, sides = size, [mask]
        elif size == best:
            sides.append(mask)
    return _collect(g, [frozenset(bits(m)) for m in sides])


def classify_edge_cut(g: Digraph, cut: EdgeCut | tuple) -> CutClass:
    crossing = set(cut.crossing if isinstance(cut, EdgeCut) else cut)
    if not crossing or not is_edge_cut(g, crossing):
        raise PreconditionError("not an edge cut of this digraph")
    tails = {u for u, _ in crossing}
    heads = {v for _, v in crossing}
    out_star = len(tails) == 1 and crossing == {(u, v) for u in tails for v in g.out_neighbors(u)}
    in_star = len(heads) == 1 and crossing == {(u, v) for v in heads for u in g.in_neighbors(v)}
    if out_star:
        return CutClass(OUT_STAR, next(iter(tails)), both=in_star)
    if in_star:
        return CutClass(IN_STAR, next(iter(heads)))
    return CutClass(NON_TRIVIAL)


def is_edge_cut(g: Digraph, crossing) -> bool:
    edge_set = set(g.edges())
    if not set(crossing) <= edge_set:
        return False
    return not g.without_edges(crossing).strongly_connected


def check_cut_balance(g: Digraph, side) -> bool:
    """|[A, V-A]| == |[V-A, A]| for a regular digraph."""
    require_regular(g)
    mask = sum(1 << u for u in side)
    full = (1 << g.n) - 1
    if mask == 0 or mask == full:
        raise PreconditionError("subset must be nonempty and proper")
    return _crossing_size(g, mask) == _crossing_size(g, full & ~mask)


# -- vertex connectivity -----------------------------------------------------------


def _split_network(g: Digraph) -> _Network:
    # v_in = 2v, v_out = 2v + 1
    net = _Network(2 * g.n)
    big = g.n
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add_arc(2 * u + 1, 2 * v, big)
    return net


def _nonadjacent_pairs(g: Digraph) -> list[tuple[int, int]]:
    pairs = [(s, t) for s in range(g.n) for t in range(g.n) if s != t and not g.has_edge(s, t)]
    if not pairs:
        raise PreconditionError("complete digraph: no vertex cut exists")
    return pairs


def _vertex_flows(g: Digraph) -> list[tuple[int, int, int]]:
    _require_cut_domain(g)
    out = []
    for s, t in _nonadjacent_pairs(g):
        net = _split_network(g)
        out.append((s, t, net.max_flow(2 * s + 1, 2 * t)))
    return out


def vertex_connectivity(g: Digraph) -> int:
    return min(v for _, _, v in _vertex_flows(g))


def enumerate_min_vertex_cuts(g: Digraph) -> list[VertexCut]:
    flows = _vertex_flows(g)
    best = min(v for _, _, v in flows)
    found: set[tuple[int, ...]] = set()
    for s, t, value in flows:
        if value != best:
            continue
        net = _split_network(g)
        net.max_flow(2 * s + 1, 2 * t)
        adj = net.residual_adjacency()
        for side in _closed_sets(adj, 2 * s + 1, 2 * t):
            cut = tuple(sorted(v for v in range(g.n) if 2 * v in side and 2 * v + 1 not in side))
            found.add(cut)
    return [VertexCut(c) for c in sorted(found, key=lambda c: (len(c), c))]


def _disconnects(g: Digraph, removed: int) -> bool:
    keep = ((1 << g.n) - 1) & ~removed
    if popcount(keep) < 2:
        return False
    rows = g.induced_mask(keep)
    cols = [0] * g.n
    for u in bits(keep):
        for v in bits(rows[u]):
            cols[v] |= 1 << u
    root = (keep & -keep).bit_length() - 1
    return g.reach_mask(root, rows) != keep or g.reach_mask(root, cols) != keep


def brute_force_min_vertex_cuts(g: Digraph) -> list[VertexCut]:
    """Oracle: smallest subsets whose removal leaves >= 2 vertices not strongly connected."""
    _require_cut_domain(g)
    _nonadjacent_pairs(g)
    for size in range(0, g.n - 1):
        hits = [
            VertexCut(c)
            for c in combinations(range(g.n), size)
            if _disconnects(g, sum(1 << v for v in c))
        ]
        if hits:
            return hits
    return []


def is_vertex_cut(g: Digraph, vertices) -> bool:
    return _disconnects(g, sum(1 << v for v in vertices))


def classify_vertex_cut(g: Digraph, cut: VertexCut | tuple) -> CutClass:
    vertices = cut.vertices if isinstance(cut, VertexCut) else tuple(sorted(cut))
    if not is_vertex_cut(g, vertices):
        raise PreconditionError("not a vertex cut of this digraph")
    mask = sum(1 << v for v in vertices)
    outs = [v for v in range(g.n) if g.rows[v] == mask]
    ins = [v for v in range(g.n) if g.in_rows[v] == mask]
    if outs:
        return CutClass(OUT_NEIGHBORHOOD, outs[0], both=outs[0] in ins)
    if ins:
        return CutClass(IN_NEIGHBORHOOD, ins[0])
    return CutClass(NON_TRIVIAL)
