"""Generators for the digraph families used throughout the package.

Also hosts the exact isomorphism test and the backtracking search for
strongly regular digraphs with prescribed parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from drdlab.digraph import Digraph, bits, popcount
from drdlab.errors import ConsistencyError, PreconditionError
from drdlab.regularity import LONG, BlockStructure, drd_type

__all__ = [
    "BlockStructure",
    "LiftSpec",
    "antipodal_classes",
    "antipodal_quotient",
    "block_cycle",
    "block_structure_of",
    "dedupe_isomorphic",
    "find_isomorphism",
    "damerell_lift",
    "directed_cycle",
    "find_srd",
    "regular_digraphs",
    "walk_constrained_digraphs",
    "gamma_n",
    "isomorphic",
    "undirected_cycle",
]


@dataclass(frozen=True)
class LiftSpec:
    base: Digraph
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"lift multiplicity must be >= 2, got {self.m}")

    def build(self) -> Digraph:
        return damerell_lift(self.base, self.m)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"directed cycle needs n >= 2, got {n}")
    return Digraph.from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def undirected_cycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError(f"undirected cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [((i + 1) % n, i) for i in range(n)]
    return Digraph.from_edge_list(n, edges)


def block_structure_of(t: int, rho: int) -> BlockStructure:
    blocks = tuple(tuple(range(b * rho, (b + 1) * rho)) for b in range(t))
    return BlockStructure(t=t, rho=rho, blocks=blocks)


def block_cycle(t: int, rho: int) -> Digraph:
    """C[X_1..X_t] with |X_i| = rho; vertex j lies in block j // rho."""
    if t < 2 or rho < 1:
        raise ValueError(f"block cycle needs t >= 2 and rho >= 1, got t={t}, rho={rho}")
    n = t * rho
    edges = []
    for u in range(n):
        nxt = (u // rho + 1) % t
        edges.extend((u, nxt * rho + j) for j in range(rho))
    return Digraph.from_edge_list(n, edges)


def damerell_lift(base: Digraph, m: int) -> Digraph:
    """m-fold blow-up: (u, i) -> (v, j) iff u -> v, vertex (u, i) numbered u*m + i."""
    if m < 2:
        raise ValueError(f"lift multiplicity must be >= 2, got {m}")
    edges = [(u * m + i, v * m + j) for u, v in base.edges() for i in range(m) for j in range(m)]
    return Digraph.from_edge_list(base.n * m, edges)


def antipodal_classes(g: Digraph) -> list[tuple[int, ...]]:
    """Classes {x} + out-shell_g(x) of a long-type distance-regular digraph."""
    if drd_type(g) != LONG:
        raise PreconditionError("antipodal quotient needs a long-type distance-regular digraph")
    gi = g.girth
    classes = {}
    for x in range(g.n):
        cls = (1 << x) | g.out_shell_mask(x, gi)
        classes[x] = cls
    for x, cls in classes.items():
        for y in bits(cls):
            if classes[y] != cls:
                raise ConsistencyError(f"antipodal classes of {x} and {y} differ")
    distinct = sorted({cls for cls in classes.values()}, key=lambda c: (c & -c).bit_length())
    sizes = {popcount(c) for c in distinct}
    if len(sizes) != 1:
        raise ConsistencyError(f"antipodal classes have non-uniform sizes {sorted(sizes)}")
    return [tuple(bits(c)) for c in distinct]


def antipodal_quotient(g: Digraph) -> Digraph:
    """Identify antipodal vertices of a long-type DRD; one vertex per class."""
    classes = antipodal_classes(g)
    masks = [sum(1 << x for x in cls) for cls in classes]
    edges = []
    for p, cls in enumerate(classes):
        for q, target in enumerate(masks):
            hits = {bool(g.rows[x] & target) for x in cls}
            if len(hits) != 1:
                raise ConsistencyError(f"quotient edge between classes {p} and {q} is ill-defined")
            if hits.pop():
                if p == q:
                    raise ConsistencyError(f"class {p} has an internal edge")
                edges.append((p, q))
    return Digraph.from_edge_list(len(classes), edges)


def gamma_n(n: int) -> Digraph:
    """Forward cycle v_1..v_n, backward cycle u_1 u_n ... u_2 u_1, digon rungs v_i <-> u_i.

    v_i is vertex i - 1 and u_i is vertex n + i - 1.
    """
    if n < 2:
        raise ValueError(f"gamma_n needs n >= 2, got {n}")
    v = list(range(n))
    u = list(range(n, 2 * n))
    edges = set()
    for i in range(n):
        edges.add((v[i], v[(i + 1) % n]))
        edges.add((u[(i + 1) % n], u[i]))
        edges.add((v[i], u[i]))
        edges.add((u[i], v[i]))
    return Digraph.from_edge_list(2 * n, sorted(edges))


# -- isomorphism ----------------------------------------------------------------


def _base_invariant(g: Digraph, x: int) -> tuple:
    rows, cols = g.rows, g.in_rows
    head = (popcount(rows[x]), popcount(cols[x]), popcount(rows[x] & cols[x]))
    # the leading flag keeps invariants of the two shapes mutually comparable
    if g.strongly_connected:
        dist = g.dist
        return head + (1, tuple(sorted(dist[x])), tuple(sorted(dist[y][x] for y in range(g.n))))
    return head + (0, popcount(g.reach_mask(x)), popcount(g.reach_mask(x, cols)))


def joint_refinement(graphs: list[Digraph]) -> list[list[int]]:
    """Colour refinement run over several digraphs with a shared palette.

    Colours are comparable across the inputs: an isomorphism must map each
    vertex to a vertex of the same colour.
    """
    cols = [[_base_invariant(g, x) for x in range(g.n)] for g in graphs]
    palette = {c: i for i, c in enumerate(sorted({c for cs in cols for c in cs}))}
    cols = [[palette[c] for c in cs] for cs in cols]
    classes = len(palette)
    while True:
        sigs = [
            [
                (cs[x],
                 tuple(sorted(cs[y] for y in bits(g.rows[x]))),
                 tuple(sorted(cs[y] for y in bits(g.in_rows[x]))))
                for x in range(g.n)
            ]
            for g, cs in zip(graphs, cols)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        cols = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == classes:
            return cols
        classes = len(palette)


def isomorphic(g: Digraph, h: Digraph) -> bool:
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: Digraph, h: Digraph) -> list[int] | None:
    """A bijection ``phi`` with u -> v in g iff phi[u] -> phi[v] in h, or None."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    n = g.n
    cg, ch = joint_refinement([g, h])
    if sorted(cg) != sorted(ch):
        return None
    candidates = [[y for y in range(n) if ch[y] == cg[x]] for x in range(n)]
    order = _search_order(g, sorted(range(n), key=lambda x: (len(candidates[x]), x)))
    phi = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            if all(
                g.has_edge(x, z) == h.has_edge(y, phi[z]) and g.has_edge(z, x) == h.has_edge(phi[z], y)
                for z in order[:pos]
            ):
                phi[x] = y
                used[y] = True
                if extend(pos + 1):
                    return True
                used[y] = False
        phi[x] = -1
        return False

    return phi if extend(0) else None


def _search_order(g: Digraph, order: list[int]) -> list[int]:
    # prefer vertices adjacent to already placed ones so consistency checks bite early
    remaining = list(order)
    placed: list[int] = []
    mask = 0
    while remaining:
        pick = next((x for x in remaining if (g.rows[x] | g.in_rows[x]) & mask), remaining[0])
        remaining.remove(pick)
        placed.append(pick)
        mask |= 1 << pick
    return placed


def dedupe_isomorphic(graphs: list[Digraph]) -> list[Digraph]:
    """Keep the first member of each isomorphism class, preserving order."""
    buckets: dict[tuple, list[Digraph]] = {}
    unique = []
    for g in graphs:
        key = (g.n, g.edge_count, tuple(sorted(_base_invariant(g, x) for x in range(g.n))))
        bucket = buckets.setdefault(key, [])
        if not any(isomorphic(g, h) for h in bucket):
            bucket.append(g)
            unique.append(g)
    return unique


# -- strongly regular digraph search ---------------------------------------------


def find_srd(n: int, k: int, t: int, lam: int, mu: int) -> list[Digraph]:
    """All strongly regular digraphs with parameters (n, k, t, lam, mu), up to isomorphism.

    Output is sorted by edge list.
    """
    if not (n >= 1 and 0 <= t <= k and 0 <= lam <= k and 0 <= mu <= k and k <= n - 1):
        raise ValueError(f"parameters out of range: {(n, k, t, lam, mu)}")
    found = list(walk_constrained_digraphs(n, k, t, lam, mu))
    return sorted(dedupe_isomorphic(found), key=lambda g: g.edges())


def walk_constrained_digraphs(n: int, k: int, t: int, lam: int, mu: int, allow_zero: bool = False):
    """Labeled k-regular digraphs whose length-2 walk counts are t on the diagonal,
    lam on edges and mu on non-adjacent pairs (or 0 there too, if ``allow_zero``).

    Backtracks row by row over k-subsets, pruning on column sums and on
    partial walk counts; vertex 0 is fixed to out-neighbours {1..k}, which
    loses no isomorphism class.
    """
    if k == 0:
        g = Digraph(n, [0] * n)
        ok = t == 0 and (n == 1 or mu == 0 or allow_zero)
        if ok:
            yield g
        return
    rows = [0] * n
    colsum = [0] * n
    # partial[u][v] = walks u -> w -> v through already fixed rows w
    partial = [[0] * n for _ in range(n)]
    subsets = [
        [sum(1 << v for v in c) for c in combinations([v for v in range(n) if v != r], k)]
        for r in range(n)
    ]

    def row_ok(r: int) -> bool:
        for u in range(r + 1):
            row_u = rows[u]
            complete = row_u < (2 << r)  # all out-neighbours already fixed
            pu = partial[u]
            for v in range(n):
                p = pu[v]
                if u == v:
                    want = t
                elif row_u >> v & 1:
                    want = lam
                else:
                    if p > mu or (complete and p != mu and not (allow_zero and p == 0)):
                        return False
                    continue
                if p > want or (complete and p != want):
                    return False
        return True

    def apply(r: int, row: int, sign: int) -> None:
        rows[r] = row if sign > 0 else 0
        for v in bits(row):
            colsum[v] += sign
        # walks u -> r -> v for fixed u with u -> r
        for u in range(r):
            if rows[u] >> r & 1:
                pu = partial[u]
                for v in bits(row):
                    pu[v] += sign
        # walks r -> w -> v for fixed w < r
        pr = partial[r]
        for w in bits(row):
            if w < r:
                for v in bits(rows[w]):
                    pr[v] += sign

    def search(r: int):
        if r == n:
            yield Digraph(n, list(rows))
            return
        left = n - r - 1
        for row in subsets[r]:
            if any(colsum[v] >= k for v in bits(row)):
                continue
            apply(r, row, +1)
            if all(k - colsum[v] <= left - (v > r) for v in range(n)) and row_ok(r):
                yield from search(r + 1)
            apply(r, row, -1)

    apply(0, sum(1 << v for v in range(1, k + 1)), +1)
    if row_ok(0):
        yield from search(1)


# -- exhaustive regular digraphs ---------------------------------------------------


def regular_digraphs(n: int, k: int):
    """Yield every labeled k-regular digraph on n vertices whose vertex 0 has out-neighbours {1..k}.

    Every k-regular digraph is isomorphic to at least one of these, so the
    stream is exhaustive up to isomorphism (with repeats).
    """
    if not 0 <= k <= n - 1:
        return
    if k == 0:
        yield Digraph(n, [0] * n)
        return
    rows = [0] * n
    colsum = [0] * n
    subsets = [
        [sum(1 << v for v in c) for c in combinations([v for v in range(n) if v != r], k)]
        for r in range(n)
    ]

    def place(r: int, row: int, sign: int) -> None:
        rows[r] = row if sign > 0 else 0
        for v in bits(row):
            colsum[v] += sign

    def rec(r: int):
        if r == n:
            yield Digraph(n, list(rows))
            return
        left = n - r - 1
        for row in subsets[r]:
            if any(colsum[v] >= k for v in bits(row)):
                continue
            place(r, row, 1)
            # column v still needs k - colsum[v] entries from rows r+1..n-1 other than v itself
            if all(k - colsum[v] <= left - (v > r) for v in range(n)):
                yield from rec(r + 1)
            place(r, row, -1)

    place(0, sum(1 << v for v in range(1, k + 1)), 1)
    yield from rec(1)
