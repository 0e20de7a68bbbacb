"""Graphs, spanning trees, hop distances and the cut of a tree edge."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    Disconnected,
    DuplicateEdge,
    NotATree,
    NotATreeEdge,
    NotInTX,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def hop_distances(n: int, edges: Sequence[Edge]) -> np.ndarray:
    """All-pairs hop counts as an ``(n, n)`` int64 matrix.

    Unreachable pairs are reported as ``-1``.
    """
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if edges:
        rows = [u for u, _ in edges]
        cols = [v for _, v in edges]
        adj = csr_matrix((np.ones(len(edges)), (rows, cols)), shape=(n, n))
    else:
        adj = csr_matrix((n, n))
    d = shortest_path(adj, method="D", directed=False, unweighted=True)
    out = np.full((n, n), -1, dtype=np.int64)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int64)
    return out


def _adjacency(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(nb)) for nb in adj)


def _reachable(adj: Sequence[Sequence[int]], start: int) -> list[bool]:
    seen = [False] * len(adj)
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return seen


def edge_label(edge: Edge) -> str:
    return f"{edge[0]}-{edge[1]}"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple, connected, undirected graph on vertices ``0..n-1``.

    Edge ids are positions in :attr:`edges`; every edge is stored as
    ``(u, v)`` with ``u < v``.  Use :func:`build_graph` to construct one.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {uv: i for i, uv in enumerate(self.edges)}

    @cached_property
    def dist(self) -> np.ndarray:
        return hop_distances(self.n, self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise KeyError(f"no edge {edge_label(key)}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    normalized: list[Edge] = []
    seen: set[Edge] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {edge_label(key)}")
        seen.add(key)
        normalized.append(key)
    g = Graph(n, tuple(normalized))
    if not all(_reachable(g.adjacency, 0)):
        raise Disconnected("graph is not connected")
    return g


def bridges(g: Graph) -> list[int]:
    """Ids of all bridges, found with an iterative low-link DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[int] = []
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append((v, eid))
        incident[v].append((u, eid))
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge id used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            u, via, pos = stack[-1]
            if pos < len(incident[u]):
                stack[-1] = (u, via, pos + 1)
                w, eid = incident[u][pos]
                if eid == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                else:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        found.append(via)
    return sorted(found)


def is_two_edge_connected(g: Graph) -> bool:
    if not all(_reachable(g.adjacency, 0)):
        return False
    return not bridges(g)


@dataclass(frozen=True, eq=False)
class SpanningTree:
    graph: Graph
    tree_edge_ids: frozenset[int]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self.graph.edges[i] for i in sorted(self.tree_edge_ids))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.graph.n, self.edges)

    @cached_property
    def dist(self) -> np.ndarray:
        return hop_distances(self.graph.n, self.edges)

    @property
    def n(self) -> int:
        return self.graph.n

    def __contains__(self, eid: int) -> bool:
        return eid in self.tree_edge_ids


def build_spanning_tree(g: Graph, tree_edge_ids: Iterable[int]) -> SpanningTree:
    ids = frozenset(int(i) for i in tree_edge_ids)
    for i in ids:
        if not 0 <= i < g.m:
            raise NotATree(f"edge id {i} not in graph")
    if len(ids) != g.n - 1:
        raise NotATree(f"expected {g.n - 1} tree edges, got {len(ids)}")
    adj = _adjacency(g.n, (g.edges[i] for i in ids))
    # n-1 edges + connected implies acyclic
    if not all(_reachable(adj, 0)):
        raise NotATree("tree edges contain a cycle or do not span the graph")
    return SpanningTree(g, ids)


class OrientedSwapEdge(NamedTuple):
    """A swap edge with ``a`` on the X side and ``b`` on the Y side."""

    edge_id: int
    a: int
    b: int

    @property
    def endpoints(self) -> Edge:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def label(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(eq=False)
class CutContext:
    """Everything attached to one removed tree edge.

    ``swap_edges`` is sorted by endpoint pair, so index order is also the
    canonical order used for tie-breaking.  ``pairs`` is filled lazily by
    :func:`swapcrit.critical.compute_pairs`.
    """

    e: int
    in_x: tuple[bool, ...]
    swap_edges: tuple[OrientedSwapEdge, ...]
    x_end: int
    y_end: int
    pairs: object | None = field(default=None, repr=False)

    @cached_property
    def X(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.in_x) if s)

    @cached_property
    def Y(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.in_x) if not s)

    @cached_property
    def a_arr(self) -> np.ndarray:
        return np.array([g.a for g in self.swap_edges], dtype=np.int64)

    @cached_property
    def b_arr(self) -> np.ndarray:
        return np.array([g.b for g in self.swap_edges], dtype=np.int64)

    @cached_property
    def index_of(self) -> dict[OrientedSwapEdge, int]:
        return {g: i for i, g in enumerate(self.swap_edges)}

    def side(self, v: int) -> str:
        return "X" if self.in_x[v] else "Y"

    def swap_edge(self, u: int, v: int) -> OrientedSwapEdge:
        """Look up the oriented swap edge with endpoints ``{u, v}``."""
        key = (u, v) if u < v else (v, u)
        for g in self.swap_edges:
            if g.endpoints == key:
                return g
        raise KeyError(f"{edge_label(key)} is not a swap edge")


def split_cut(g: Graph, t: SpanningTree, e: int) -> CutContext:
    if e not in t.tree_edge_ids:
        raise NotATreeEdge(f"edge id {e} is not a tree edge")
    u, v = g.edges[e]
    x_end, y_end = (u, v) if u < v else (v, u)
    # X is the component of T - e holding the lower-numbered endpoint
    in_x = [False] * g.n
    in_x[x_end] = True
    queue = deque([x_end])
    while queue:
        w = queue.popleft()
        for z in t.adjacency[w]:
            if w == x_end and z == y_end:
                continue
            if not in_x[z]:
                in_x[z] = True
                queue.append(z)
    swaps = []
    for eid, (p, q) in enumerate(g.edges):
        if eid == e or in_x[p] == in_x[q]:
            continue
        a, b = (p, q) if in_x[p] else (q, p)
        swaps.append(OrientedSwapEdge(eid, a, b))
    swaps.sort(key=lambda s: s.endpoints)
    return CutContext(e, tuple(in_x), tuple(swaps), x_end, y_end)


def tx_edges(t: SpanningTree, cut: CutContext) -> list[Edge]:
    """Edges of the subtree induced on X, as ``(u, v)`` with ``u < v``."""
    return [(u, v) for u, v in t.edges if cut.in_x[u] and cut.in_x[v]]


def in_part(t: SpanningTree, w: int, x: int, z: int) -> bool:
    """True when ``w`` falls on ``x``'s side of tree edge ``(x, z)``."""
    return bool(t.dist[w, x] < t.dist[w, z])


def subtree_split(
    t: SpanningTree, cut: CutContext, e_prime: Edge
) -> tuple[frozenset[int], frozenset[int]]:
    """Split X along the T_X edge ``e_prime = (x, z)``.

    Returns ``(U(e', x), U(e', z))``.
    """
    x, z = e_prime
    if not (cut.in_x[x] and cut.in_x[z]):
        raise NotInTX(f"{x}-{z} is not inside X")
    if t.dist[x, z] != 1 or t.graph.edge_index.get((min(x, z), max(x, z))) not in t.tree_edge_ids:
        raise NotInTX(f"{x}-{z} is not a tree edge")
    ux = frozenset(w for w in cut.X if in_part(t, w, x, z))
    return ux, frozenset(cut.X) - ux
