from fractions import Fraction

import pytest

from oracles import stretch as brute_stretch
from oracles import swap_stretch as brute_swap_stretch
from swapcrit.errors import NotASwapEdge, OrientationMismatch
from swapcrit.graphcore import OrientedSwapEdge, build_graph, build_spanning_tree
from swapcrit.stretch import (
    baseline_stretch,
    detour_value,
    stretch_factor,
    swap_stretch_fast,
    swap_stretch_oracle,
    swap_stretch_restricted_oracle,
    swap_tree,
)

from conftest import cut_of, make


def test_stretch_factor_examples(c4, k4_star):
    g, t = c4
    assert stretch_factor(g, t) == Fraction(3)
    g, t = k4_star
    assert stretch_factor(g, t) == Fraction(2) == brute_stretch(4, g.edges, t.edges)


def test_stretch_identity():
    # any non-tree edge has tree distance >= 2, so ratio 1 forces G == T
    g, t = make(4, [(0, 1), (0, 2), (2, 3)], [(0, 1), (0, 2), (2, 3)])
    assert stretch_factor(g, t) == 1


def test_stretch_is_reduced_fraction():
    # 5-cycle with path tree plus pendant: worst ratio 4/1; 6-cycle with chord gives ratios like 3/2
    g, t = make(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)], [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    s = stretch_factor(g, t)
    assert s == brute_stretch(6, g.edges, t.edges) == 5


def test_swap_tree(c4, k4_star):
    g, t = c4
    st = swap_tree(t, g.edge_id(1, 2), g.edge_id(0, 3))
    assert set(st.edges) == {(0, 1), (2, 3), (0, 3)}
    g, t = k4_star
    st = swap_tree(t, g.edge_id(0, 1), g.edge_id(1, 2))
    assert set(st.edges) == {(0, 2), (0, 3), (1, 2)}
    with pytest.raises(NotASwapEdge):
        swap_tree(t, g.edge_id(0, 1), g.edge_id(2, 3))


def test_swap_tree_round_trip(hex_chord):
    g, t = hex_chord
    e, f = g.edge_id(2, 3), g.edge_id(0, 3)
    back = swap_tree(swap_tree(t, e, f), f, e)
    assert back.tree_edge_ids == t.tree_edge_ids


@pytest.mark.parametrize(
    "fixture, e, f, expected",
    [("c4", (1, 2), (0, 3), 1), ("k4_star", (0, 1), (1, 2), 3), ("hex_chord", (2, 3), (0, 3), 3)],
)
def test_swap_stretch_oracle(request, fixture, e, f, expected):
    g, t = request.getfixturevalue(fixture)
    val = swap_stretch_oracle(g, t, g.edge_id(*e), g.edge_id(*f))
    assert val == Fraction(expected)
    assert val == brute_swap_stretch(g.n, g.edges, t.edges, e, f)


def test_detour_value(k4_star, hex_chord):
    g, t = k4_star
    cut = cut_of(g, t, 0, 1)
    f, h = cut.swap_edge(2, 1), cut.swap_edge(3, 1)
    assert detour_value(cut, t, f, f) == 1
    assert detour_value(cut, t, f, h) == 3
    g, t = hex_chord
    cut = cut_of(g, t, 2, 3)
    assert detour_value(cut, t, cut.swap_edge(0, 5), cut.swap_edge(0, 3)) == 3
    with pytest.raises(OrientationMismatch):
        detour_value(cut, t, OrientedSwapEdge(6, 3, 0), cut.swap_edge(0, 5))


def test_swap_stretch_fast(c4, k4_star, hex_chord):
    g, t = c4
    cut = cut_of(g, t, 1, 2)
    f = cut.swap_edges[0]
    ev = swap_stretch_fast(cut, t, f)
    assert ev.value == 1 and ev.critical_edges == {f}
    g, t = k4_star
    cut = cut_of(g, t, 0, 1)
    ev = swap_stretch_fast(cut, t, cut.swap_edge(2, 1))
    assert ev.value == 3 and ev.critical_edges == {cut.swap_edge(3, 1)}
    g, t = hex_chord
    cut = cut_of(g, t, 2, 3)
    ev = swap_stretch_fast(cut, t, cut.swap_edge(0, 3))
    assert ev.value == 3 and ev.critical_edges == {cut.swap_edge(0, 5)}


def test_fast_matches_swap_restricted_oracle(hex_chord, k4_star):
    for g, t in (hex_chord, k4_star):
        for e in t.tree_edge_ids:
            cut = cut_of(g, t, *g.edges[e])
            for f in cut.swap_edges:
                assert swap_stretch_fast(cut, t, f).value == swap_stretch_restricted_oracle(g, t, e, f.edge_id)


def test_literal_oracle_exceeds_fast_when_baseline_dominates():
    # C4 plus vertex 4 on 0 and 1; non-tree edge 0-3 lies inside X
    g, t = make(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (0, 4)], [(0, 1), (1, 2), (2, 3), (1, 4)])
    e = g.edge_id(1, 4)
    cut = cut_of(g, t, 1, 4)
    f = cut.swap_edges[0]
    assert swap_stretch_fast(cut, t, f).value == 1
    assert baseline_stretch(g, t, cut) == 3
    assert swap_stretch_oracle(g, t, e, f.edge_id) == 3


def test_detour_self_is_one(hex_chord):
    g, t = hex_chord
    for e in t.tree_edge_ids:
        cut = cut_of(g, t, *g.edges[e])
        for f in cut.swap_edges:
            assert detour_value(cut, t, f, f) == 1
