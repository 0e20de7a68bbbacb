"""A small verification campaign and the best swap edges of one instance.

Run with ``python demos/03_campaign.py``.  The same campaign is available as
``swapcrit verify --random n=8-20,count=40,seed=1``.
"""

import json

from swapcrit import all_best_swap_edges
from swapcrit.verify import exhaustive_corpus, random_corpus, run_campaign, summarize

corpus = list(exhaustive_corpus(4)) + list(random_corpus(40, n="8-20", chords="2-n", seed=1))
report = run_campaign(corpus, out_dir="counterexamples")
print(summarize(report))

inst = corpus[-1]
print(f"\nbest swap edges of {inst.label}:")
for row in all_best_swap_edges(inst.graph, inst.tree, "pairs"):
    u, v = inst.graph.edges[row.e]
    print(f"  {u}-{v}: stretch {row.best_value} via {[f.label() for f in row.argmin]}")

print("\nreport keys:", json.dumps(sorted(report)))
