"""
Exhaustive self-checking and positroid recognition
==================================================

Every decorated permutation up to a chosen size, every element, both
minor operations, compared against brute-force set arithmetic.
"""

import sys

from positroids import (
    BasisFamily,
    check_matroid,
    enumerate_decorated_perms,
    format_perm,
    is_positroid,
    verify_all,
)

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5

for n in range(1, max_n + 1):
    print(verify_all(n).summary())

# the census behind those numbers
counts = [sum(1 for _ in enumerate_decorated_perms(n)) for n in range(1, max_n + 1)]
print("decorated permutations by size:", counts)

# a few of the small ones, in enumeration order
print("all of size 2:", " | ".join(format_perm(p) for p in enumerate_decorated_perms(2)))

# recognition: positroids sit strictly inside matroids
uniform = BasisFamily.of(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])
ring = BasisFamily.of(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
split = BasisFamily.of(4, [[1, 2], [3, 4]])

for name, fam in [("uniform", uniform), ("ring", ring), ("split", split)]:
    print(f"{name}: matroid={check_matroid(fam)} positroid={is_positroid(fam)}")
