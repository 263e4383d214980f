"""
Sorting the subsets of a small ground set
=========================================

Every non-empty subset of X either splits as B + C with neither part {0},
or it does not.  The ones that do not must appear as vertex labels in any
set-sequential labeling, so their count is a lower bound on the order.
"""

from iassl import GroundSet, classify_powerset

x = GroundSet.parse("0,1,2")
cls = classify_powerset(x)

# the sets that cannot be built from two smaller pieces
print("non-sum-sets:", [s.members for s in cls.non_sumsets], "rho =", cls.rho)

# the ones that can, with every way of building them
for s in cls.sumsets:
    print(s.members, "=", [(b.members, c.members) for b, c in cls.decompositions_of(s)])

# non-sum-sets that are not useful summands either; these can only sit next to {0}
print("b-family:", [s.members for s in cls.b_family], "rho' =", cls.rho_prime)

###############################################################################
# A wider ground set has many more sum sets.
cls = classify_powerset(GroundSet.parse("0,1,2,3"))
print(cls.rho, "of", 2 ** 4 - 1, "subsets are not sum sets")
