"""
Exhaustive search for labelings
===============================

For a small unlabeled graph, search tries every injective labeling by
non-empty subsets of X, pruning branches that cannot succeed.
"""

import time

from iassl import GroundSet, LabeledGraph, find_labelings, min_ground_set, sweep_graphs
from iassl.families import cycle_graph, ground_sets, path_graph

res = find_labelings(path_graph(3), GroundSet.parse("0,1"), enumerate_all=True)
for sol in res.solutions:
    print([s.members for s in sol])
print("nodes", res.nodes_expanded, "exhausted", res.exhausted)

###############################################################################
# One edge and four isolated vertices admit an indexer on {0,1,2}.
g = LabeledGraph(6, [(0, 1)])
x = GroundSet.parse("0,1,2")
for kw in (dict(), dict(pruning=False), dict(symmetry=True)):
    t = time.perf_counter()
    r = find_labelings(g, x, predicate="iassi", enumerate_all=True, **kw)
    print(kw or "default", len(r.solutions), "solutions", r.nodes_expanded, "nodes",
          f"{time.perf_counter() - t:.3f}s")

###############################################################################
# Smallest ground set for a path, and a cycle sweep that finds nothing.
print(min_ground_set(path_graph(3)), min_ground_set(cycle_graph(4)))
rows = sweep_graphs(("cycles", range(3, 6)), ground_sets(3, 4))
print(sum(r["admits"] for r in rows), "of", len(rows), "cells admit a labeling")
