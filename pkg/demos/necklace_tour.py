"""
Decorated permutations, Grassmann necklaces, and bases
======================================================

A walk through the three faces of a positroid and the conversions
between them.
"""

from positroids import (
    Subset,
    bases_of,
    format_bases,
    format_necklace,
    format_perm,
    loop_coloop_status,
    necklace_of,
    necklace_violations,
    oracle_necklace,
    parse_perm,
    perm_of,
)

# a permutation of {1..8} with one fixed point, 5, colored +1
p = parse_perm("8,1,4,2,5+,7,3,6")
print("permutation:", format_perm(p))
print("5 is a", loop_coloop_status(p, 5))  # +1 fixed point = loop

# the necklace records, for each rotation of the circular order,
# the smallest basis in that rotation's Gale order
necklace = necklace_of(p)
print("necklace:   ", format_necklace(necklace))

# entry r changes from entry r+1 by at most one element
for r in range(1, 9):
    here, there = necklace.entry(r), necklace.entry(r + 1)
    drops = set(here) - set(there)
    gains = set(there) - set(here)
    print(f"  I_{r} -> I_{r % 8 + 1}: drops {drops or '{}'} gains {gains or '{}'}")

# the bases are everything bounded below by the necklace, rotation by rotation
family = bases_of(necklace)
print(f"{len(family.bases)} bases of rank {family.k}:")
print(" ", format_bases(family))

# both conversions invert exactly
assert perm_of(necklace) == p
assert oracle_necklace(family) == necklace
print("round trips: ok")

# a cyclic sequence that breaks the step rule gets pinpointed diagnostics
bad = [Subset.of(3, [1]), Subset.of(3, [3]), Subset.of(3, [2])]
for v in necklace_violations(bad):
    print("violation:", v)
