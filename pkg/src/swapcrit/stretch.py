"""Stretch factors, swap trees and the two swap-stretch engines.

Stretch values are :class:`fractions.Fraction` instances, which are kept in
lowest terms and compare exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotASwapEdge, NotATreeEdge, OrientationMismatch
from .graphcore import (
    CutContext,
    Graph,
    OrientedSwapEdge,
    SpanningTree,
    hop_distances,
    split_cut,
)

RationalStretch = Fraction


@dataclass(frozen=True)
class SwapEvaluation:
    value: int
    critical_edges: frozenset[OrientedSwapEdge]


def max_ratio(num: np.ndarray, den: np.ndarray) -> Fraction:
    """Exact ``max(num / den)`` over entries with ``den > 0``."""
    mask = den > 0
    if not mask.any():
        raise ValueError("no pair with positive denominator")
    num = num[mask]
    den = den[mask]
    best = Fraction(0)
    for q in np.unique(den):
        p = int(num[den == q].max())
        cand = Fraction(p, int(q))
        if cand > best:
            best = cand
    return best


def stretch_factor(g: Graph, t: SpanningTree) -> Fraction:
    """Max of ``d_T(x, y) / d_G(x, y)`` over distinct vertex pairs."""
    if g.n < 2:
        return Fraction(1)
    return max_ratio(t.dist, g.dist)


def swap_tree(t: SpanningTree, e: int, f: int) -> SpanningTree:
    g = t.graph
    if e not in t.tree_edge_ids:
        raise NotATreeEdge(f"edge id {e} is not a tree edge")
    cut = split_cut(g, t, e)
    if f not in {s.edge_id for s in cut.swap_edges}:
        raise NotASwapEdge(f"edge {g.edges[f]} does not cross the cut of {g.edges[e]}")
    return SpanningTree(g, (t.tree_edge_ids - {e}) | {f})


def swap_stretch_oracle(g: Graph, t: SpanningTree, e: int, f: int) -> Fraction:
    """Stretch of ``T_{e/f}`` with respect to ``G - e``, from scratch.

    Both distance tables are rebuilt on every call; this is the slow,
    definitional reference.
    """
    swapped = swap_tree(t, e, f)
    g_minus = [uv for i, uv in enumerate(g.edges) if i != e]
    d_graph = hop_distances(g.n, g_minus)
    d_tree = hop_distances(g.n, swapped.edges)
    return max_ratio(d_tree, d_graph)


def swap_stretch_restricted_oracle(g: Graph, t: SpanningTree, e: int, f: int) -> int:
    """Stretch of ``T_{e/f}`` measured only over the swap edges of ``e``.

    Each swap edge joins vertices at distance one in ``G - e``, so this is the
    largest swap-tree distance between the endpoints of a swap edge.  Distances
    in the swap tree are recomputed from scratch.
    """
    cut = split_cut(g, t, e)
    swapped = swap_tree(t, e, f)
    d_tree = hop_distances(g.n, swapped.edges)
    return int(max(d_tree[s.a, s.b] for s in cut.swap_edges))


def baseline_stretch(g: Graph, t: SpanningTree, cut: CutContext) -> int:
    """Largest tree distance across a non-swap edge of ``G - e``.

    Stretch is always realized on an edge, and the tree paths of non-swap
    edges do not change under a swap, so this term is the same for every
    swap edge of ``e``.
    """
    best = 1
    for eid, (u, v) in enumerate(g.edges):
        if eid != cut.e and cut.in_x[u] == cut.in_x[v]:
            best = max(best, int(t.dist[u, v]))
    return best


def detour_value(cut: CutContext, t: SpanningTree, f: OrientedSwapEdge, g: OrientedSwapEdge) -> int:
    """``d_T(x, a) + 1 + d_T(b, y)`` for ``f = (x, y)`` and ``g = (a, b)``."""
    for s in (f, g):
        if not (cut.in_x[s.a] and not cut.in_x[s.b]):
            raise OrientationMismatch(f"{s.label()} is not oriented X->Y")
    return int(t.dist[f.a, g.a] + 1 + t.dist[g.b, f.b])


def detour_row(cut: CutContext, t: SpanningTree, f: OrientedSwapEdge) -> np.ndarray:
    """Detour value of ``f`` against every swap edge, in swap-edge order."""
    return t.dist[f.a, cut.a_arr] + 1 + t.dist[cut.b_arr, f.b]


def swap_stretch_fast(cut: CutContext, t: SpanningTree, f: OrientedSwapEdge) -> SwapEvaluation:
    if not cut.swap_edges:
        raise NotASwapEdge("cut has no swap edges")
    row = detour_row(cut, t, f)
    value = int(row.max())
    crit = frozenset(cut.swap_edges[i] for i in np.flatnonzero(row == value))
    return SwapEvaluation(value, crit)
