import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from drdlab.connectivity import (
    IN_NEIGHBORHOOD,
    IN_STAR,
    NON_TRIVIAL,
    OUT_NEIGHBORHOOD,
    OUT_STAR,
    EdgeCut,
    brute_force_min_edge_cuts,
    brute_force_min_vertex_cuts,
    canonical_side,
    check_cut_balance,
    classify_edge_cut,
    classify_vertex_cut,
    edge_connectivity,
    enumerate_min_edge_cuts,
    enumerate_min_vertex_cuts,
    flow_value,
    is_edge_cut,
    is_vertex_cut,
    max_flow,
    vertex_connectivity,
)
from drdlab.constructions import block_cycle, directed_cycle, find_srd, gamma_n, undirected_cycle
from drdlab.digraph import from_edge_list
from drdlab.errors import NotStronglyConnected, PreconditionError

from oracles import min_edge_cut_sets, min_vertex_cut_sets, nx_flow
from strategies import digraphs, regular_digraphs

S6 = find_srd(6, 2, 1, 0, 1)[0]
S8 = find_srd(8, 3, 2, 1, 1)[0]


def _complete(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(n) if u != v])


# -- max flow ---------------------------------------------------------------------


def test_max_flow_examples():
    c = directed_cycle(5)
    assert all(flow_value(c, s, t) == 1 for s in range(5) for t in range(5) if s != t)
    u6 = undirected_cycle(6)
    assert all(flow_value(u6, s, t) == 2 for s in range(6) for t in range(6) if s != t)
    value, cut = max_flow(block_cycle(3, 2), 0, 2)
    assert value == 2 and cut.size == 2
    assert 0 in cut.side_a and 2 not in cut.side_a


def test_max_flow_same_endpoint():
    with pytest.raises(PreconditionError):
        max_flow(directed_cycle(3), 1, 1)


@settings(max_examples=150, deadline=None)
@given(digraphs(min_n=2, max_n=8), st.data())
def test_max_flow_matches_networkx(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != s))
    value, cut = max_flow(g, s, t)
    assert value == nx_flow(g.n, g.edges(), s, t)
    assert cut.size == value
    # the returned side separates s from t with exactly the crossing edges
    assert s in cut.side_a and t not in cut.side_a
    assert set(cut.crossing) == {(u, v) for u, v in g.edges() if u in cut.side_a and v not in cut.side_a}


# -- edge connectivity and enumeration ---------------------------------------------------


@pytest.mark.parametrize(
    "g, k",
    [(directed_cycle(6), 1), (undirected_cycle(7), 2), (block_cycle(3, 2), 2), (block_cycle(4, 3), 3),
     (S6, 2), (S8, 3), (gamma_n(5), 2), (_complete(5), 4)],
)
def test_edge_connectivity(g, k):
    assert edge_connectivity(g) == k
    assert min_edge_cut_sets(g.n, g.edges())[0] == k


def test_edge_connectivity_preconditions():
    with pytest.raises(NotStronglyConnected):
        edge_connectivity(from_edge_list(3, [(0, 1), (1, 2)]))
    with pytest.raises(PreconditionError):
        edge_connectivity(from_edge_list(1, []))


def test_directed_triangle_cuts():
    g = directed_cycle(3)
    cuts = enumerate_min_edge_cuts(g)
    assert [c.crossing for c in cuts] == [((0, 1),), ((1, 2),), ((2, 0),)]
    for c in cuts:
        cls = classify_edge_cut(g, c)
        assert cls.tag == OUT_STAR and cls.both


def test_undirected_c4_has_nontrivial_cut():
    g = undirected_cycle(4)
    cuts = enumerate_min_edge_cuts(g)
    assert EdgeCut(frozenset({0, 1}), ((0, 3), (1, 2))) in cuts
    assert any(classify_edge_cut(g, c).tag == NON_TRIVIAL for c in cuts)


def test_srd6_has_nontrivial_cut():
    cuts = enumerate_min_edge_cuts(S6)
    assert any(c.size == 2 and classify_edge_cut(S6, c).tag == NON_TRIVIAL for c in cuts)


def test_srd8_edge_cuts_are_stars():
    assert all(classify_edge_cut(S8, c).trivial for c in enumerate_min_edge_cuts(S8))


def test_canonical_side_is_maximal():
    g = gamma_n(5)
    for cut in enumerate_min_edge_cuts(g):
        assert cut.side_a == canonical_side(g, cut.crossing)
        for side in cut.sides:
            assert side <= cut.side_a


@pytest.mark.parametrize(
    "g",
    [directed_cycle(3), undirected_cycle(4), undirected_cycle(6), block_cycle(3, 2), gamma_n(5), S6, S8,
     block_cycle(4, 3)],
)
def test_enumeration_matches_brute_force(g):
    fast = enumerate_min_edge_cuts(g)
    slow = brute_force_min_edge_cuts(g)
    assert fast == slow
    assert [c.sides for c in fast] == [c.sides for c in slow]
    _, oracle = min_edge_cut_sets(g.n, g.edges())
    assert {frozenset(c.crossing) for c in fast} == oracle


@settings(max_examples=200, deadline=None)
@given(digraphs(min_n=2, max_n=8, strongly_connected=True))
def test_enumeration_matches_subset_oracle(g):
    cuts = enumerate_min_edge_cuts(g)
    best, oracle = min_edge_cut_sets(g.n, g.edges())
    assert edge_connectivity(g) == best
    assert {frozenset(c.crossing) for c in cuts} == oracle
    assert len(cuts) == len(oracle)
    for c in cuts:
        assert is_edge_cut(g, c.crossing)
    assert best <= min(len(g.out_neighbors(u)) for u in range(g.n))


# -- classification ---------------------------------------------------------------


def test_classify_edge_cut_examples():
    bc = block_cycle(3, 2)
    cls = classify_edge_cut(bc, ((0, 2), (0, 3)))
    assert (cls.tag, cls.vertex, cls.both) == (OUT_STAR, 0, False)
    assert str(cls) == "OutStar(0)"
    cls = classify_edge_cut(bc, ((0, 2), (1, 2)))
    assert (cls.tag, cls.vertex) == (IN_STAR, 2)
    g5 = gamma_n(5)
    # v_1 -> v_2 together with u_1 -> u_5
    assert classify_edge_cut(g5, ((0, 1), (5, 9))).tag == NON_TRIVIAL
    c4 = directed_cycle(4)
    cls = classify_edge_cut(c4, ((2, 3),))
    assert cls.tag == OUT_STAR and cls.both and str(cls) == "OutStar(2)*"


def test_classify_rejects_non_cut():
    with pytest.raises(PreconditionError):
        classify_edge_cut(undirected_cycle(5), ((0, 1),))
    with pytest.raises(PreconditionError):
        classify_edge_cut(directed_cycle(4), ((1, 0),))


# -- balance ------------------------------------------------------------------------


def test_balance_examples():
    g = block_cycle(3, 2)
    assert check_cut_balance(g, {0})
    assert check_cut_balance(g, {0, 3, 5})
    with pytest.raises(PreconditionError):
        check_cut_balance(from_edge_list(3, [(0, 1), (1, 2)]), {0})
    with pytest.raises(PreconditionError):
        check_cut_balance(g, set())
    with pytest.raises(PreconditionError):
        check_cut_balance(g, set(range(6)))


@settings(max_examples=150, deadline=None)
@given(regular_digraphs(min_n=2, max_n=9), st.data())
def test_balance_holds_for_regular(g, data):
    side = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n - 1))
    assert check_cut_balance(g, side)
    out = sum(1 for u, v in g.edges() if u in side and v not in side)
    back = sum(1 for u, v in g.edges() if v in side and u not in side)
    assert out == back


def test_balance_fails_on_irregular_via_raw_counts():
    # sanity for the oracle: the identity genuinely needs regularity
    g = from_edge_list(3, [(0, 1), (0, 2), (1, 0), (2, 1)])
    out = sum(1 for u, v in g.edges() if u == 0 and v != 0)
    back = sum(1 for u, v in g.edges() if v == 0 and u != 0)
    assert out != back


# -- vertex connectivity ----------------------------------------------------------------


@pytest.mark.parametrize(
    "g, k", [(directed_cycle(6), 1), (undirected_cycle(6), 2), (S8, 2), (block_cycle(3, 2), 2), (gamma_n(4), 2)]
)
def test_vertex_connectivity(g, k):
    assert vertex_connectivity(g) == k


def test_vertex_connectivity_complete():
    with pytest.raises(PreconditionError, match="no vertex cut exists"):
        vertex_connectivity(_complete(4))


def test_srd8_nontrivial_vertex_cut():
    cuts = enumerate_min_vertex_cuts(S8)
    assert {c.size for c in cuts} == {2}
    tags = {classify_vertex_cut(S8, c).tag for c in cuts}
    assert NON_TRIVIAL in tags
    for c in cuts:
        if classify_vertex_cut(S8, c).tag == NON_TRIVIAL:
            mask = set(c.vertices)
            assert all(set(S8.out_neighbors(x)) != mask and set(S8.in_neighbors(x)) != mask for x in range(8))


def test_classify_vertex_cut_examples():
    c5 = undirected_cycle(5)
    cls = classify_vertex_cut(c5, (1, 4))
    assert cls.tag == OUT_NEIGHBORHOOD and cls.vertex == 0 and cls.both
    bc = block_cycle(4, 1)
    # out-neighbourhood of 0 in the directed 4-cycle
    assert classify_vertex_cut(bc, (1,)).tag == OUT_NEIGHBORHOOD
    g = from_edge_list(4, [(0, 1), (1, 2), (1, 3), (2, 0), (2, 3), (3, 0), (3, 2)])
    cls = classify_vertex_cut(g, (0,))
    assert cls.tag == IN_NEIGHBORHOOD and cls.vertex == 1
    with pytest.raises(PreconditionError):
        classify_vertex_cut(c5, (0,))


@pytest.mark.parametrize(
    "g", [directed_cycle(5), undirected_cycle(6), block_cycle(3, 2), gamma_n(4), gamma_n(5), S6, S8]
)
def test_vertex_cuts_match_oracles(g):
    fast = enumerate_min_vertex_cuts(g)
    assert fast == brute_force_min_vertex_cuts(g)
    size, oracle = min_vertex_cut_sets(g.n, g.edges())
    assert vertex_connectivity(g) == size
    assert {frozenset(c.vertices) for c in fast} == oracle


@settings(max_examples=150, deadline=None)
@given(digraphs(min_n=3, max_n=7, strongly_connected=True))
def test_vertex_cut_enumeration_matches_oracle(g):
    assume(g.edge_count < g.n * (g.n - 1))
    cuts = enumerate_min_vertex_cuts(g)
    size, oracle = min_vertex_cut_sets(g.n, g.edges())
    assert vertex_connectivity(g) == size
    assert {frozenset(c.vertices) for c in cuts} == oracle
    assert all(is_vertex_cut(g, c.vertices) for c in cuts)


def test_random_regular_balance_thousand_subsets():
    rng = random.Random(7)
    for g in [S8, gamma_n(6), block_cycle(4, 3)]:
        for _ in range(1000):
            side = {v for v in range(g.n) if rng.random() < 0.5}
            if 0 < len(side) < g.n:
                assert check_cut_balance(g, side)
