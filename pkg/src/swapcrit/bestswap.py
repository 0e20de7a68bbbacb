"""All best swap edges, with a definitional engine and a pair-based engine."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .critical import ensure_pairs
from .errors import NotATreeEdge
from .graphcore import Graph, OrientedSwapEdge, SpanningTree, split_cut
from .stretch import baseline_stretch, swap_stretch_oracle

ENGINES = ("oracle", "pairs")


@dataclass(frozen=True)
class BestSwapRow:
    e: int
    best_value: Fraction
    argmin: tuple[OrientedSwapEdge, ...]
    engine: str
    values: tuple[Fraction, ...] = ()

    def same_result(self, other: "BestSwapRow") -> bool:
        return (
            self.e == other.e
            and self.best_value == other.best_value
            and self.argmin == other.argmin
        )


def swap_values(
    g: Graph, t: SpanningTree, e: int, engine: str = "pairs", *, include_baseline: bool = True
) -> tuple[tuple[OrientedSwapEdge, ...], tuple[Fraction, ...]]:
    """Stretch of every swap tree of ``e``, in swap-edge order.

    The pairs engine takes, for ``f = (x, y)``, the larger detour through the
    two edges of the optimal pair at ``x``, and raises it to the largest tree
    distance across the non-swap edges of ``G - e``.  That second term does
    not depend on ``f``; ``include_baseline=False`` drops it and yields only
    the part of the stretch carried by swap edges.
    """
    if e not in t.tree_edge_ids:
        raise NotATreeEdge(f"edge id {e} is not a tree edge")
    cut = split_cut(g, t, e)
    if engine == "oracle":
        vals = tuple(swap_stretch_oracle(g, t, e, f.edge_id) for f in cut.swap_edges)
        return cut.swap_edges, vals
    if engine != "pairs":
        raise ValueError(f"unknown engine {engine!r}")
    pa = ensure_pairs(cut, t)
    d = t.dist
    base = baseline_stretch(g, t, cut) if include_baseline else 1
    vals = []
    for f in cut.swap_edges:
        best = base
        for i in pa.canonical[f.a]:
            s = cut.swap_edges[i]
            best = max(best, int(d[f.a, s.a] + 1 + d[s.b, f.b]))
        vals.append(Fraction(best))
    return cut.swap_edges, tuple(vals)


def best_swaps_for_edge(
    g: Graph, t: SpanningTree, e: int, engine: str = "pairs", *, include_baseline: bool = True
) -> BestSwapRow:
    swaps, vals = swap_values(g, t, e, engine, include_baseline=include_baseline)
    best = min(vals)
    argmin = tuple(f for f, v in zip(swaps, vals) if v == best)
    return BestSwapRow(e, best, argmin, engine, vals)


def all_best_swap_edges(g: Graph, t: SpanningTree, engine: str = "pairs", **kw) -> list[BestSwapRow]:
    return [best_swaps_for_edge(g, t, e, engine, **kw) for e in sorted(t.tree_edge_ids)]
