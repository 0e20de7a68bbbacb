import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from swapcrit import build_graph, build_spanning_tree, split_cut  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def make(n, edges, tree_pairs):
    g = build_graph(n, edges)
    t = build_spanning_tree(g, [g.edge_id(u, v) for u, v in tree_pairs])
    return g, t


@pytest.fixture
def c4():
    return make(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4_star():
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return make(4, k4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def hex_chord():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]
    return make(6, edges, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])


def cut_of(g, t, u, v):
    return split_cut(g, t, g.edge_id(u, v))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
