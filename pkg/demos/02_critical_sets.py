"""Optimal phi pairs, critical sets and the region replay on a random instance.

Run with ``python demos/02_critical_sets.py``.
"""

from swapcrit import GenSpec, compute_pairs, construct_critical_set, min_critical_set_size, proof_trace, split_cut
from swapcrit.instances import generate

g, t = generate(GenSpec(model="cycle-chords", n=24, chords=18, seed=7, tree="uniform-random"))
print(f"n={g.n}, m={g.m}")

for e in sorted(t.tree_edge_ids)[:8]:
    cut = split_cut(g, t, e)
    pairs = compute_pairs(cut, t)
    res = construct_critical_set(cut, t)
    trace = proof_trace(cut, t)
    x0 = cut.x_end
    pair = [s.label() for s in pairs.edges(cut, x0)]
    print(
        f"edge {g.edges[e]}: |S_e|={len(cut.swap_edges):2d}  pair at {x0}: {pair}  "
        f"greedy {len(res.edges)} ({res.case_tag}, verified={res.verified})  "
        f"minimum {min_critical_set_size(cut, t)}  replay case {trace.case}"
    )
