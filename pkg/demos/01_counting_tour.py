"""Counting non-crossing diagrams four independent ways.

Run:  python demos/01_counting_tour.py
"""
from rumer import (
    enumerate_rumer,
    enumerate_rumer_by_multidegree,
    n_recurrence,
    rho_closed,
    rho_product,
    rho_sum_over_compositions,
)

# The headline number: diagrams on n circle points with m non-crossing bonds,
# parallel bonds allowed.  Four routes must give the same answer: a 2x2
# determinant of binomials, a factored product (n >= 3), a branching
# recurrence summed over all per-vertex degree prescriptions, and plain
# enumeration.

print("count of diagrams, four ways, for n=4, m=2:")
print("  determinant :", rho_closed(4, 2))
print("  product     :", rho_product(4, 2))
print("  recurrence  :", rho_sum_over_compositions(4, 2))
print("  enumeration :", len(enumerate_rumer(4, 2)))
print()

# A small table.  Two vertices always give exactly one diagram: every bond
# must be a parallel copy of (1,2).
print("rho(n, m) for n = 2..6, m = 0..4:")
header = "  n\\m " + "".join(f"{m:>8}" for m in range(5))
print(header)
for n in range(2, 7):
    row = "".join(f"{rho_closed(n, m):>8}" for m in range(5))
    print(f"  {n:>3} {row}")
print()

# Counting with the degree of every vertex pinned down.  (1,1,1,1) means
# four vertices of valence one: two non-crossing perfect matchings.
print("counts for fixed multidegrees:")
for degrees in [(1, 1, 1, 1), (1, 1, 2), (2, 2, 2), (2, 0, 2), (1, 0)]:
    diagrams = enumerate_rumer_by_multidegree(degrees)
    print(f"  {degrees}: recurrence={n_recurrence(degrees)}, listed={len(diagrams)}")
    for d in diagrams:
        print(f"      {d}")
print()

# All-ones multidegrees are non-crossing perfect matchings; their counts are
# the Catalan numbers.
print("Catalan numbers from the recurrence:")
print(" ", [n_recurrence((1,) * (2 * m)) for m in range(1, 9)])
