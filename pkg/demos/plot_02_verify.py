"""
Checking a labeling by hand
===========================

Label the path on three vertices with {0} in the middle and {1}, {0,1} on
the ends.  Edge labels are sum sets of the endpoint labels.
"""

from iassl import GroundSet, LabeledGraph, structural_audit, verify

x = GroundSet.parse("0,1")
g = LabeledGraph(3, [(0, 1), (0, 2)], [[0], [1], [0, 1]], ground=x)

img = g.f_star_image()
print("vertex labels:", [s.members for s in img.vertex_labels])
print("edge labels:  ", [s.members for s in img.edge_labels])

report = verify(g, x)
print("IASL", report.is_iasl, "IASI", report.is_iasi, "IASGL", report.is_iasgl)
print("IASSL", report.is_iassl, "IASSI", report.is_iassi, "kappa", report.kappa)

# n + m - kappa counts each subset of X exactly once
print(g.n + g.m - report.kappa, "==", 2 ** x.size - 1)

###############################################################################
# The structural findings: some hold, some stronger statements do not.
for f in structural_audit(g, x):
    tag = " (literal form)" if f.literal else ""
    print(f"{f.status:4} {f.name}{tag}: {f.detail}")

###############################################################################
# A triangle on singletons fails: {1}+{2} = {3} leaves X.
tri = LabeledGraph(3, [(0, 1), (0, 2), (1, 2)], [[0], [1], [2]])
r = verify(tri, GroundSet.parse("0,1,2"))
print("escaped", [s.members for s in r.escaped_sets], "missing", [s.members for s in r.missing_sets])
