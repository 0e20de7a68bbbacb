"""Instance generation, exhaustive enumeration and the ``.gts`` file format.

``.gts`` layout (ASCII, whitespace separated, ``#`` starts a comment)::

    n m
    u v flag        # m lines, 0-indexed, u < v, flag 1 marks a tree edge

Exactly ``n - 1`` records carry flag 1.  Canonical files list records sorted
by ``(u, v)`` with no comments and a trailing newline.

Randomness comes from ``numpy.random.Generator(PCG64(seed))``.  Output is
reproducible for a given seed and library version; only the files themselves
are meant to be portable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    InfeasibleSpec,
    ParseError,
    SwapCritError,
    TooLarge,
    ValidationError,
)
from .graphcore import (
    Graph,
    SpanningTree,
    _reachable,
    bridges,
    build_graph,
    build_spanning_tree,
    is_two_edge_connected,
)

MODELS = ("cycle-chords", "augment")
TREE_METHODS = ("uniform-random", "bfs", "dfs")
MAX_ENUM_N = 6


@dataclass(frozen=True)
class GenSpec:
    model: str = "cycle-chords"
    n: int = 8
    chords: int | None = None
    density: float | None = None
    seed: int = 0
    tree: str = "uniform-random"

    def __post_init__(self):
        if self.model not in MODELS:
            raise InfeasibleSpec(f"unknown model {self.model!r}")
        if self.tree not in TREE_METHODS:
            raise InfeasibleSpec(f"unknown tree method {self.tree!r}")
        if self.n < 3:
            raise InfeasibleSpec("n must be at least 3")


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_graph(spec: GenSpec, rng: np.random.Generator | None = None) -> Graph:
    rng = rng if rng is not None else rng_for(spec.seed)
    n = spec.n
    if spec.model == "cycle-chords":
        k = spec.chords or 0
        cycle = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        cycle_set = set(cycle)
        available = [uv for uv in combinations(range(n), 2) if uv not in cycle_set]
        if not 0 <= k <= len(available):
            raise InfeasibleSpec(f"{k} chords requested, {len(available)} available")
        picks = rng.choice(len(available), size=k, replace=False) if k else []
        chords = sorted(available[int(i)] for i in picks)
        return build_graph(n, cycle + chords)

    p = 0.15 if spec.density is None else spec.density
    if not 0.0 <= p <= 1.0:
        raise InfeasibleSpec(f"density {p} outside [0, 1]")
    pairs = list(combinations(range(n), 2))
    coins = rng.random(len(pairs))
    edges = {uv for uv, c in zip(pairs, coins) if c < p}
    edges = _connect(n, edges, rng)
    while True:
        g = build_graph(n, sorted(edges))
        br = bridges(g)
        if not br:
            break
        u, v = g.edges[br[0]]
        adj = [list(nb) for nb in g.adjacency]
        adj[u].remove(v)
        adj[v].remove(u)
        side = _reachable(adj, u)
        a_side = [w for w in range(n) if side[w]]
        b_side = [w for w in range(n) if not side[w]]
        # the bridge is the only edge across, so any other cross pair is free
        cand = [(min(a, b), max(a, b)) for a in a_side for b in b_side if {a, b} != {u, v}]
        edges.add(cand[int(rng.integers(len(cand)))])
    if not is_two_edge_connected(g):
        raise InfeasibleSpec("augmentation failed to produce a 2-edge-connected graph")
    return g


def _connect(n: int, edges: set[tuple[int, int]], rng: np.random.Generator) -> set[tuple[int, int]]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    roots = sorted({find(v) for v in range(n)})
    members = {r: [v for v in range(n) if find(v) == r] for r in roots}
    for r1, r2 in zip(roots, roots[1:]):
        a = members[r1][int(rng.integers(len(members[r1])))]
        b = members[r2][int(rng.integers(len(members[r2])))]
        edges.add((min(a, b), max(a, b)))
    return edges


def _wilson(g: Graph, rng: np.random.Generator) -> list[int]:
    n = g.n
    in_tree = [False] * n
    nxt = [-1] * n
    in_tree[0] = True
    for start in range(1, n):
        u = start
        while not in_tree[u]:
            nb = g.adjacency[u]
            nxt[u] = nb[int(rng.integers(len(nb)))]
            u = nxt[u]
        # following nxt from start walks the loop-erased path
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return [g.edge_id(v, nxt[v]) for v in range(1, n)]


def _search_tree(g: Graph, root: int, breadth_first: bool) -> list[int]:
    seen = [False] * g.n
    ids = []
    if breadth_first:
        seen[root] = True
        frontier = [root]
        while frontier:
            nxt_frontier = []
            for u in frontier:
                for w in g.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        ids.append(g.edge_id(u, w))
                        nxt_frontier.append(w)
            frontier = nxt_frontier
        return ids
    stack = [(root, -1)]
    while stack:
        u, via = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        if via >= 0:
            ids.append(via)
        for w in reversed(g.adjacency[u]):
            if not seen[w]:
                stack.append((w, g.edge_id(u, w)))
    return ids


def gen_tree(
    g: Graph,
    method: str = "uniform-random",
    seed: int | None = 0,
    *,
    root: int | None = None,
    rng: np.random.Generator | None = None,
) -> SpanningTree:
    """Spanning tree by Wilson's algorithm, BFS or DFS.

    BFS/DFS start from ``root`` when given, otherwise from a seeded random
    vertex; neighbours are visited in increasing order.
    """
    if method not in TREE_METHODS:
        raise InfeasibleSpec(f"unknown tree method {method!r}")
    rng = rng if rng is not None else rng_for(seed or 0)
    if method == "uniform-random":
        ids = _wilson(g, rng)
    else:
        if root is None:
            root = int(rng.integers(g.n))
        ids = _search_tree(g, root, method == "bfs")
    return build_spanning_tree(g, ids)


def generate(spec: GenSpec) -> tuple[Graph, SpanningTree]:
    """Graph and tree from one seeded stream."""
    rng = rng_for(spec.seed)
    g = gen_graph(spec, rng)
    return g, gen_tree(g, spec.tree, rng=rng)


def two_edge_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled 2-edge-connected graph on ``n`` vertices, in subset order."""
    if n > MAX_ENUM_N:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {MAX_ENUM_N}")
    if n < 3:
        return
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        try:
            g = build_graph(n, edges)
        except SwapCritError:
            continue
        if is_two_edge_connected(g):
            yield g


def spanning_trees(g: Graph, cap: int = 0) -> Iterator[SpanningTree]:
    """Spanning trees in lexicographic order of edge-id sets; ``cap=0`` means all."""
    count = 0
    for ids in combinations(range(g.m), g.n - 1):
        parent = list(range(g.n))
        ok = True
        for i in ids:
            u, v = g.edges[i]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        if not ok:
            continue
        yield SpanningTree(g, frozenset(ids))
        count += 1
        if cap and count >= cap:
            return


def enumerate_instances(n: int, tree_cap: int = 0) -> Iterator[tuple[Graph, SpanningTree]]:
    for g in two_edge_connected_graphs(n):
        for t in spanning_trees(g, tree_cap):
            yield g, t


# ---------------------------------------------------------------------------
# .gts files


def write_instance(g: Graph, t: SpanningTree) -> bytes:
    order = sorted(range(g.m), key=lambda i: g.edges[i])
    lines = [f"{g.n} {g.m}"]
    for i in order:
        u, v = g.edges[i]
        lines.append(f"{u} {v} {1 if i in t.tree_edge_ids else 0}")
    return ("\n".join(lines) + "\n").encode("ascii")


def read_instance(data: bytes | str, *, validate: bool = True) -> tuple[Graph, SpanningTree]:
    """Parse a ``.gts`` document.

    Edge ids follow record order.  With ``validate`` the graph must be
    2-edge-connected.
    """
    text = data.decode("ascii") if isinstance(data, (bytes, bytearray)) else data
    records: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            records.append((lineno, body))
    if not records:
        raise ParseError("empty instance", 1)
    lineno, head = records[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header fields must be integers", lineno) from None
    if n < 1 or m < 0:
        raise ParseError("header values out of range", lineno)
    if len(records) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(records) - 1}", lineno)
    edges: list[tuple[int, int]] = []
    flags: list[int] = []
    for lineno, rec in records[1:]:
        if len(rec) != 3:
            raise ParseError("edge record must be 'u v flag'", lineno)
        try:
            u, v, flag = (int(tok) for tok in rec)
        except ValueError:
            raise ParseError("edge fields must be integers", lineno) from None
        if flag not in (0, 1):
            raise ParseError(f"tree flag must be 0 or 1, got {flag}", lineno)
        if u >= v:
            raise ParseError(f"records need u < v, got {u} {v}", lineno)
        edges.append((u, v))
        flags.append(flag)
    try:
        g = build_graph(n, edges)
        t = build_spanning_tree(g, [i for i, fl in enumerate(flags) if fl])
    except SwapCritError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc
    if validate and not is_two_edge_connected(g):
        raise ValidationError("graph is not 2-edge-connected")
    return g, t


def canonicalize(data: bytes | str) -> bytes:
    g, t = read_instance(data, validate=False)
    return write_instance(g, t)


def export_dot(
    g: Graph,
    t: SpanningTree,
    highlight: dict[str, Sequence[int]] | None = None,
) -> str:
    """Graphviz text: tree edges solid, others dashed.

    ``highlight`` maps a colour name to edge ids drawn in that colour.
    """
    colour_of: dict[int, str] = {}
    for colour, ids in (highlight or {}).items():
        for i in ids:
            colour_of[int(i)] = colour
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    for i, (u, v) in enumerate(g.edges):
        attrs = ["style=solid" if i in t.tree_edge_ids else "style=dashed"]
        if i in colour_of:
            attrs.append(f'color="{colour_of[i]}"')
            attrs.append("penwidth=2")
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
