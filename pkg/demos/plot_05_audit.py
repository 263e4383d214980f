"""
Auditing the claims at desk scale
=================================

The audit collects every labeled instance in range (constructions and all
search solutions) and tests each claim against them.  Claims stated in a
stronger literal form are kept apart from their restated versions.
"""

from iassl.audit import AuditBounds, reverify_witness, run_full_audit

report = run_full_audit(AuditBounds(max_size=3, max_value=4, max_vertices=5))
print(report.instance_count, "instances")
for c in report.claims:
    print(f"{c.verdict:10} {c.claim_id:34} {c.passes}/{c.tested}")

###############################################################################
# Each failure carries a witness that can be checked again from scratch.
rec = report.claim("tree-order")
w = rec.witnesses[0]
print(w["graph_name"], w["ground"], w["observed"], reverify_witness(rec.claim_id, w))
