"""
Contracting an element, two ways
================================
"""

from positroids import (
    MinorKind,
    bases_of,
    contract,
    contract_necklace,
    format_necklace,
    format_perm,
    necklace_of,
    oracle_contract,
    parse_perm,
    render_trace,
    trace_minor,
)

p = parse_perm("6,1,4,8,2,7,3,5")
necklace = necklace_of(p)
j = 3

# way one: rewrite the necklace entry by entry.  Entries already containing
# j keep their place; the others trade their largest expendable element for j.
table = contract_necklace(necklace, j)
print("I:", format_necklace(necklace))
print("K:", format_necklace(table))

# way two: walk the permutation itself, carrying a displaced value around
# the circle until it lands
mu = contract(p, j)
print("contract at", j, "gives", format_perm(mu))

# the trace shows both at once: each column is one commuting square,
# labelled by which branch of the walk fired
trace = trace_minor(p, j, MinorKind.CONTRACTION)
print()
print(render_trace(trace))
print()
for row in trace.rows:
    print(f"  a={row.a}: {row.case.value:6s} swap={row.swap} image {row.image} -> {row.minor_image}")

# sanity: the walk result and the set-arithmetic oracle agree basis by basis
oracle = oracle_contract(bases_of(necklace), j)
assert bases_of(necklace_of(mu)).bases == oracle.bases
print()
print("agrees with brute-force contraction over", len(oracle.bases), "bases")
