"""Recognizers for distance-regular, weakly distance-regular and strongly
regular digraphs, plus the structural predicates used around them
(normality, stability, short/long type, block-cycle membership).

Violation witnesses are always the lexicographically first offending
ordered pair, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from drdlab.digraph import Digraph, bits, popcount, require_regular, require_strongly_connected
from drdlab.errors import ConsistencyError, PreconditionError

SHORT = "short"
LONG = "long"


class Violation(NamedTuple):
    """An ordered pair breaking constancy; ``index`` is i (DRD) or the walk length (WDRD)."""

    u: int
    v: int
    index: int
    kind: str

    def as_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "index": self.index, "kind": self.kind}


@dataclass(frozen=True)
class IntersectionNumbers:
    """``table[k][i]`` is the common value of |out-shell_i(u) & out-nbhd(v)| over pairs at distance k."""

    valency: int
    diameter: int
    table: dict[int, tuple[int, ...]]

    @property
    def lam(self) -> int:
        return self.table[1][1]

    def a(self, i: int, k: int) -> int:
        row = self.table[k]
        return row[i] if i < len(row) else 0


@dataclass(frozen=True)
class SrdParams:
    n: int
    k: int
    t: int
    lam: int
    mu: int | None  # None when no non-adjacent ordered pair exists

    @property
    def mu_vacuous(self) -> bool:
        return self.mu is None

    def as_tuple(self) -> tuple:
        return (self.n, self.k, self.t, self.lam, self.mu)


@dataclass(frozen=True)
class BlockStructure:
    """Ordered blocks X_1..X_t of equal size rho with complete arcs X_i -> X_{i+1}."""

    t: int
    rho: int
    blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RegularityVerdict:
    kind: str  # "DRD", "WDRD-only", "SRD" or "none"
    witness: Violation | None = None
    srd: SrdParams | None = None


def _check_domain(g: Digraph) -> int:
    require_strongly_connected(g)
    k = require_regular(g)
    if g.n < 2:
        raise PreconditionError("need at least 2 vertices")
    return k


# -- distance-regularity ---------------------------------------------------


def _scan_intersection_numbers(g: Digraph):
    k_val = _check_domain(g)
    dist = g.dist
    levels = g._bfs_levels
    rows = g.rows
    table: dict[int, list[int]] = {}
    for u in range(g.n):
        lev = levels[u]
        for v in range(g.n):
            k = dist[u][v]
            if k == 0:
                continue
            out_v = rows[v]
            counts = [popcount(lev[i] & out_v) if i < len(lev) else 0 for i in range(k + 2)]
            ref = table.get(k)
            if ref is None:
                table[k] = counts
                continue
            for i, (a, b) in enumerate(zip(ref, counts)):
                if a != b:
                    return None, Violation(u, v, i, "intersection-number")
    for k, row in table.items():
        if sum(row) != k_val:
            raise ConsistencyError(f"shell counts for distance {k} sum to {sum(row)}, not {k_val}")
    numbers = IntersectionNumbers(
        valency=k_val,
        diameter=g.diameter,
        table={k: tuple(table[k]) for k in sorted(table)},
    )
    return numbers, None


def intersection_numbers(g: Digraph) -> IntersectionNumbers | Violation:
    """Intersection numbers of ``g``, or the first pair on which they vary."""
    numbers, witness = _scan_intersection_numbers(g)
    return witness if numbers is None else numbers


def is_distance_regular(g: Digraph) -> bool:
    return isinstance(intersection_numbers(g), IntersectionNumbers)


def drd_lambda(g: Digraph) -> int:
    numbers = intersection_numbers(g)
    if isinstance(numbers, Violation):
        raise PreconditionError(f"not distance-regular: {numbers}")
    return numbers.lam


def is_normal(g: Digraph) -> bool:
    """True iff A A^t == A^t A."""
    rows, cols = g.rows, g.in_rows
    for u in range(g.n):
        for v in range(u, g.n):
            if popcount(rows[u] & rows[v]) != popcount(cols[u] & cols[v]):
                return False
    return True


# -- walk counting ---------------------------------------------------------


def walk_counts(g: Digraph, length: int) -> list[list[int]]:
    """Exact ``length``-th power of the adjacency matrix."""
    if length < 0:
        raise ValueError("walk length must be nonnegative")
    n = g.n
    w = [[int(u == v) for v in range(n)] for u in range(n)]
    for _ in range(length):
        w = _times_adjacency(w, g)
    return w


def _times_adjacency(w: list[list[int]], g: Digraph) -> list[list[int]]:
    preds = [list(bits(c)) for c in g.in_rows]
    return [[sum(row[x] for x in preds[v]) for v in range(g.n)] for row in w]


def wdrd_violation(g: Digraph, max_length: int | None = None) -> Violation | None:
    """First (length, pair) where walk counts are not a function of distance.

    Lengths run over ``0..D`` unless ``max_length`` is given.
    """
    _check_domain(g)
    dist = g.dist
    n = g.n
    top = g.diameter if max_length is None else max_length
    w = [[int(u == v) for v in range(n)] for u in range(n)]
    for length in range(top + 1):
        if length:
            w = _times_adjacency(w, g)
        seen: dict[int, int] = {}
        for u in range(n):
            for v in range(n):
                d = dist[u][v]
                ref = seen.setdefault(d, w[u][v])
                if ref != w[u][v]:
                    return Violation(u, v, length, "walk-count")
    return None


def is_weakly_distance_regular(g: Digraph) -> bool:
    return wdrd_violation(g) is None


def wdrd_extended_agrees(g: Digraph) -> bool:
    """Diagnostic: does extending the walk-length range to 2D change the verdict?"""
    return (wdrd_violation(g) is None) == (wdrd_violation(g, 2 * g.diameter) is None)


# -- strongly regular digraphs ----------------------------------------------


def srd_params(g: Digraph) -> SrdParams | None:
    """(n, k, t, lambda, mu) if ``g`` is a strongly regular digraph, else None."""
    k = g.regular_degree
    if k is None:
        return None
    rows, cols = g.rows, g.in_rows
    t = lam = mu = None
    for u in range(g.n):
        for v in range(g.n):
            walks = popcount(rows[u] & cols[v])
            if u == v:
                t = walks if t is None else t
                if walks != t:
                    return None
            elif rows[u] >> v & 1:
                lam = walks if lam is None else lam
                if walks != lam:
                    return None
            else:
                mu = walks if mu is None else mu
                if walks != mu:
                    return None
    if lam is None:
        # edgeless digraph on n >= 1 vertices; no adjacent pairs at all
        lam = 0
    return SrdParams(g.n, k, t, lam, mu)


def srd_identity_holds(g: Digraph, params: SrdParams) -> bool:
    """Entrywise check of A^2 = tI + lam A + mu (J - I - A)."""
    a2 = walk_counts(g, 2)
    mu = params.mu or 0
    for u in range(g.n):
        for v in range(g.n):
            adj = g.has_edge(u, v)
            want = params.t if u == v else (params.lam if adj else mu)
            if a2[u][v] != want:
                return False
    return True


# -- stability, type, a11 positivity ----------------------------------------------


def is_stable(g: Digraph) -> bool:
    g_val = g.girth
    dist = g.dist
    for x in range(g.n):
        for y in range(g.n):
            d = dist[x][y]
            if 0 < d < g_val and d + dist[y][x] != g_val:
                return False
    return True


def _require_drd_girth3(g: Digraph) -> IntersectionNumbers:
    numbers = intersection_numbers(g)
    if isinstance(numbers, Violation):
        raise PreconditionError(f"not distance-regular: {numbers}")
    if g.girth < 3:
        raise PreconditionError(f"girth {g.girth} < 3")
    return numbers


def drd_type(g: Digraph) -> str:
    """``LONG`` if D == g, ``SHORT`` if D == g - 1."""
    _require_drd_girth3(g)
    d, gi = g.diameter, g.girth
    if d == gi:
        return LONG
    if d == gi - 1:
        return SHORT
    raise ConsistencyError(f"distance-regular digraph with D={d}, g={gi} is neither short nor long")


def a11_failure(g: Digraph) -> int | None:
    """Smallest l in 2..D with a_11^l == 0, or None."""
    numbers = _require_drd_girth3(g)
    for l in range(2, numbers.diameter + 1):
        if numbers.a(1, l) < 1:
            return l
    return None


def a11_all_positive(g: Digraph) -> bool:
    return a11_failure(g) is None


# -- block cycles -----------------------------------------------------------


def family_d_structure(g: Digraph) -> BlockStructure | None:
    """Block structure if ``g`` is a block cycle C[X_1..X_t] with t >= 3, else None."""
    groups: dict[int, list[int]] = {}
    for u, row in enumerate(g.rows):
        groups.setdefault(row, []).append(u)
    if len(groups) < 3:
        return None
    sizes = {len(members) for members in groups.values()}
    if len(sizes) != 1:
        return None
    rho = sizes.pop()
    mask_of = {}
    for row, members in groups.items():
        mask = 0
        for u in members:
            mask |= 1 << u
        mask_of[mask] = row
    # each block's common out-neighborhood must be exactly another block
    for row in groups:
        if row not in mask_of:
            return None
    start = min(groups.values(), key=lambda m: m[0])
    order = [tuple(start)]
    mask = sum(1 << u for u in start)
    while True:
        mask = mask_of[mask]
        block = tuple(bits(mask))
        if block == order[0]:
            break
        if block in order:
            return None
        order.append(block)
    if len(order) != len(groups):
        return None
    return BlockStructure(t=len(order), rho=rho, blocks=tuple(order))


def is_family_d(g: Digraph) -> bool:
    return family_d_structure(g) is not None


# -- combined verdict ---------------------------------------------------------


def classify(g: Digraph) -> RegularityVerdict:
    """DRD, SRD (when not DRD), WDRD-only, or none, with the first witness on failure."""
    if not g.strongly_connected or g.regular_degree is None or g.n < 2:
        return RegularityVerdict("none")
    numbers = intersection_numbers(g)
    if isinstance(numbers, IntersectionNumbers):
        return RegularityVerdict("DRD", srd=srd_params(g))
    witness = wdrd_violation(g)
    if witness is not None:
        return RegularityVerdict("none", witness=numbers)
    params = srd_params(g)
    if params is not None:
        return RegularityVerdict("SRD", witness=numbers, srd=params)
    return RegularityVerdict("WDRD-only", witness=numbers)
