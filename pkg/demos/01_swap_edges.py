"""Swap edges, swap trees and their stretch on a small instance.

Run with ``python demos/01_swap_edges.py``.
"""

from swapcrit import build_graph, build_spanning_tree, split_cut, stretch_factor, swap_stretch_fast, swap_stretch_oracle
from swapcrit.stretch import baseline_stretch

# a hexagon with one chord, and the path 0-1-2-3-4-5 as spanning tree
g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
t = build_spanning_tree(g, [g.edge_id(i, i + 1) for i in range(5)])
print("stretch of the tree:", stretch_factor(g, t))

# cut the tree at 2-3 and look at the edges that reconnect it
e = g.edge_id(2, 3)
cut = split_cut(g, t, e)
print("X side:", cut.X, " Y side:", cut.Y)
print("swap edges:", [s.label() for s in cut.swap_edges])

# two ways to price each swap: the definition, and the detour through other swap edges
for f in cut.swap_edges:
    fast = swap_stretch_fast(cut, t, f)
    slow = swap_stretch_oracle(g, t, e, f.edge_id)
    print(f"  swap in {f.label()}: detour max {fast.value}, critical {[c.label() for c in fast.critical_edges]}, "
          f"stretch over G-e {slow}")

# the definitional stretch also sees non-swap edges; their tree paths do not move
print("non-swap baseline for this cut:", baseline_stretch(g, t, cut))
