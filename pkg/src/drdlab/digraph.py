"""Immutable simple digraphs stored as bit rows.

Row ``u`` of the adjacency relation is a Python int whose bit ``v`` is set
iff there is an edge ``u -> v``.  Every neighborhood operation is a row
operation, which keeps BFS and walk counting exact and cheap for the
desk-scale sizes this package targets (n <= 64, larger works but is slow).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from drdlab.errors import DigraphError, NotStronglyConnected, PreconditionError

OUT = "out"
IN = "in"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Digraph:
    """A finite simple digraph on vertices ``0..n-1``.

    Instances are immutable; derived data (distances, transpose rows) is
    computed lazily once and cached.
    """

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise DigraphError(f"vertex count must be >= 1, got {n}")
        if len(rows) != n:
            raise DigraphError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                v = max(bits(row & ~full))
                raise DigraphError(f"edge ({u}, {v}) out of range for n={n}", pair=(u, v))
            if row >> u & 1:
                raise DigraphError(f"loop at vertex {u}", pair=(u, u))
        self._n = n
        self._rows = tuple(rows)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        """Build a digraph from ordered pairs, rejecting loops and duplicates."""
        if n < 1:
            raise DigraphError(f"vertex count must be >= 1, got {n}")
        rows = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"edge ({u}, {v}) out of range for n={n}", pair=(u, v))
            if u == v:
                raise DigraphError(f"loop at vertex {u}", pair=(u, v))
            if rows[u] >> v & 1:
                raise DigraphError(f"duplicate edge ({u}, {v})", pair=(u, v))
            rows[u] |= 1 << v
        return cls(n, rows)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        cols = [0] * self._n
        for u, row in enumerate(self._rows):
            for v in bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def out_neighbors(self, u: int) -> list[int]:
        return list(bits(self._rows[u]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(bits(self.in_rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges, sorted lexicographically."""
        return [(u, v) for u, row in enumerate(self._rows) for v in bits(row)]

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self._rows)

    def out_degree(self, u: int) -> int:
        return popcount(self._rows[u])

    def in_degree(self, v: int) -> int:
        return popcount(self.in_rows[v])

    def adjacency(self) -> list[list[int]]:
        n = self._n
        return [[row >> v & 1 for v in range(n)] for row in self._rows]

    def reverse(self) -> "Digraph":
        return Digraph(self._n, self.in_rows)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Return the digraph with vertex ``u`` renamed ``perm[u]``."""
        return Digraph.from_edge_list(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Digraph":
        rows = list(self._rows)
        for u, v in removed:
            rows[u] &= ~(1 << v)
        return Digraph(self._n, rows)

    def induced_mask(self, keep: int) -> list[int]:
        """Bit rows restricted to the vertex mask ``keep`` (others zeroed)."""
        return [row & keep if keep >> u & 1 else 0 for u, row in enumerate(self._rows)]

    # -- equality --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, edges={self.edge_count})"

    # -- reachability and distances ----------------------------------------

    def reach_mask(self, source: int, rows: Sequence[int] | None = None) -> int:
        """Mask of vertices reachable from ``source`` (including itself)."""
        rows = self._rows if rows is None else rows
        seen = frontier = 1 << source
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    @cached_property
    def strongly_connected(self) -> bool:
        full = (1 << self._n) - 1
        return self.reach_mask(0) == full and self.reach_mask(0, self.in_rows) == full

    @cached_property
    def _bfs_levels(self) -> tuple[tuple[int, ...], ...]:
        # _bfs_levels[u][k] = mask of vertices at distance exactly k from u
        out = []
        for u in range(self._n):
            levels = [1 << u]
            seen = 1 << u
            frontier = 1 << u
            while True:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self._rows[w]
                frontier = nxt & ~seen
                if not frontier:
                    break
                seen |= frontier
                levels.append(frontier)
            out.append(tuple(levels))
        return tuple(out)

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs directed distances; requires strong connectivity."""
        n = self._n
        table = [[-1] * n for _ in range(n)]
        for u, levels in enumerate(self._bfs_levels):
            for k, mask in enumerate(levels):
                for v in bits(mask):
                    table[u][v] = k
        for u in range(n):
            for v in range(n):
                if table[u][v] < 0:
                    raise NotStronglyConnected(u, v)
        return tuple(tuple(r) for r in table)

    def out_shell_mask(self, x: int, k: int) -> int:
        """Mask of the out-shell at distance ``k`` from ``x``."""
        self.dist  # raise if not strongly connected
        levels = self._bfs_levels[x]
        return levels[k] if 0 <= k < len(levels) else 0

    def in_shell_mask(self, x: int, k: int) -> int:
        dist = self.dist
        mask = 0
        for v in range(self._n):
            if dist[v][x] == k:
                mask |= 1 << v
        return mask

    @cached_property
    def diameter(self) -> int:
        dist = self.dist
        return max((d for row in dist for d in row), default=0)

    @cached_property
    def girth(self) -> int:
        """Shortest directed cycle length, via 1 + min dist(w, u) over edges u -> w."""
        if self._n < 2:
            raise PreconditionError("girth is undefined for a single vertex")
        dist = self.dist
        return min(1 + dist[w][u] for u, w in self.edges())

    @cached_property
    def regular_degree(self) -> int | None:
        k = popcount(self._rows[0])
        for u in range(self._n):
            if popcount(self._rows[u]) != k or popcount(self.in_rows[u]) != k:
                return None
        return k

    @cached_property
    def undirected(self) -> bool:
        return self._rows == self.in_rows

    def degree_witness(self) -> tuple[int, int, int] | None:
        """First vertex whose degrees break regularity: (vertex, out, in)."""
        k = popcount(self._rows[0])
        for u in range(self._n):
            out_d, in_d = popcount(self._rows[u]), popcount(self.in_rows[u])
            if out_d != k or in_d != k:
                return (u, out_d, in_d)
        return None


# Function-style aliases for the module surface.

def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph.from_edge_list(n, edges)


def distance_matrix(g: Digraph) -> tuple[tuple[int, ...], ...]:
    return g.dist


def diameter(g: Digraph) -> int:
    return g.diameter


def girth(g: Digraph) -> int:
    return g.girth


def shell(g: Digraph, x: int, k: int, direction: str = OUT) -> frozenset[int]:
    """Vertices at distance ``k`` from ``x`` (out) or from which ``x`` is at distance ``k`` (in)."""
    if direction == OUT:
        mask = g.out_shell_mask(x, k)
    elif direction == IN:
        mask = g.in_shell_mask(x, k)
    else:
        raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
    return frozenset(bits(mask))


def regular_degree(g: Digraph) -> int | None:
    return g.regular_degree


def is_strongly_connected(g: Digraph) -> bool:
    return g.strongly_connected


def is_undirected(g: Digraph) -> bool:
    return g.undirected


def require_strongly_connected(g: Digraph) -> None:
    if not g.strongly_connected:
        g.dist  # raises NotStronglyConnected with the first unreachable pair


def require_regular(g: Digraph) -> int:
    k = g.regular_degree
    if k is None:
        u, out_d, in_d = g.degree_witness()
        raise PreconditionError(
            f"digraph is not regular: vertex {u} has out-degree {out_d}, in-degree {in_d}"
        )
    return k
