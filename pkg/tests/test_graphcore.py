import itertools

import numpy as np
import pytest

from oracles import bfs_table, two_edge_connected
from swapcrit.errors import (
    Disconnected,
    DuplicateEdge,
    NotATree,
    NotATreeEdge,
    NotInTX,
    SelfLoop,
    VertexOutOfRange,
)
from swapcrit.graphcore import (
    bridges,
    build_graph,
    build_spanning_tree,
    is_two_edge_connected,
    split_cut,
    subtree_split,
)

from conftest import cut_of


def test_build_cycle_keeps_input_order():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edges == ((0, 1), (1, 2), (2, 3), (0, 3))
    assert g.edge_id(3, 0) == 3


def test_build_k4():
    g = build_graph(4, list(itertools.combinations(range(4), 2)))
    assert g.m == 6


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 1), (1, 2), (0, 1)], DuplicateEdge),
        (3, [(0, 1), (1, 0), (1, 2)], DuplicateEdge),
        (3, [(0, 0), (0, 1), (1, 2)], SelfLoop),
        (3, [(0, 1), (1, 3)], VertexOutOfRange),
        (4, [(0, 1), (2, 3)], Disconnected),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_distances_match_bfs(hex_chord):
    g, t = hex_chord
    assert g.dist.tolist() == bfs_table(g.n, g.edges)
    assert t.dist.tolist() == bfs_table(g.n, t.edges)
    assert (t.dist >= g.dist).all()


def test_two_edge_connectivity():
    assert is_two_edge_connected(build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert not is_two_edge_connected(build_graph(3, [(0, 1), (1, 2)]))
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert two_edge_connected(5, bowtie.edges)
    assert is_two_edge_connected(bowtie)


def test_bridges_against_removal_oracle():
    rng = np.random.default_rng(3)
    pairs = list(itertools.combinations(range(7), 2))
    checked = 0
    for _ in range(300):
        edges = [p for p in pairs if rng.random() < 0.3]
        try:
            g = build_graph(7, edges)
        except Disconnected:
            continue
        assert is_two_edge_connected(g) == two_edge_connected(7, g.edges)
        checked += 1
    assert checked > 50


def test_bridge_ids():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert bridges(g) == [3, 4]


def test_spanning_tree_shapes(c4, k4_star):
    g, t = c4
    assert t.edges == ((0, 1), (1, 2), (2, 3))
    assert t.dist[0, 3] == 3
    g, t = k4_star
    assert t.dist[1, 2] == 2


@pytest.mark.parametrize("ids", [[0, 2], [0, 1, 2, 3], [0, 0, 1]])
def test_not_a_tree(ids):
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(NotATree):
        build_spanning_tree(g, ids)


def test_not_a_tree_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(NotATree):
        build_spanning_tree(g, [0, 1, 2])


def test_split_cut_c4(c4):
    g, t = c4
    cut = cut_of(g, t, 1, 2)
    assert cut.X == (0, 1) and cut.Y == (2, 3)
    assert [(s.a, s.b) for s in cut.swap_edges] == [(0, 3)]


def test_split_cut_k4_star(k4_star):
    g, t = k4_star
    cut = cut_of(g, t, 0, 1)
    assert cut.X == (0, 2, 3) and cut.Y == (1,)
    assert {(s.a, s.b) for s in cut.swap_edges} == {(2, 1), (3, 1)}


def test_split_cut_hex_chord(hex_chord):
    g, t = hex_chord
    cut = cut_of(g, t, 2, 3)
    assert cut.X == (0, 1, 2)
    assert {(s.a, s.b) for s in cut.swap_edges} == {(0, 5), (0, 3)}


def test_split_cut_rejects_non_tree_edge(c4):
    g, t = c4
    with pytest.raises(NotATreeEdge):
        split_cut(g, t, g.edge_id(0, 3))


def test_subtree_split(k4_star, hex_chord):
    g, t = k4_star
    cut = cut_of(g, t, 0, 1)
    assert subtree_split(t, cut, (0, 2)) == ({0, 3}, {2})
    g, t = hex_chord
    cut = cut_of(g, t, 2, 3)
    assert subtree_split(t, cut, (1, 2)) == ({0, 1}, {2})
    assert subtree_split(t, cut, (0, 1)) == ({0}, {1, 2})
    with pytest.raises(NotInTX):
        subtree_split(t, cut, (2, 3))
    with pytest.raises(NotInTX):
        subtree_split(t, cut, (0, 2))
