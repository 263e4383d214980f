"""
Building a set-sequential graph for any X
=========================================

The star construction hangs every non-sum-set off a {0} hub and then adds
one edge for each sum set.  The indexer variant keeps vertex and edge labels
disjoint, leaving some vertices isolated.
"""

from iassl import GroundSet, construct_iassi_graph, construct_iassl_graph, minimality_stats

x = GroundSet.parse("0,1,2")
g, trace = construct_iassl_graph(x)
for c in trace.coverage:
    print(f"{str(c.label.members):12} {c.covered_by:6} {c.how}")
print(g.to_dot("iassl_012"))
print(minimality_stats(trace))

###############################################################################
# The indexer build for the same X has four isolated vertices.
h, trace = construct_iassi_graph(x)
print("edges", h.edges, "isolated", h.isolated_vertices())
print(minimality_stats(trace))
