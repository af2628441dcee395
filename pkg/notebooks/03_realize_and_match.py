"""
Realizations and maximum matchings
==================================

Build a graph with a given degree sequence, then find a maximum matching
with the blossom search.
"""

from gapgraph.dpg import small_n_matching_check
from gapgraph.graphs import enumerate_realizations, havel_hakimi_realize, maximum_matching
from gapgraph.primes import gap_sequence

pd = gap_sequence(20).tolist()
g = havel_hakimi_realize(pd)
print(g, g.degrees() == pd)

m = maximum_matching(g)
m.verify(g)
print("maximum matching:", len(m), m.edges)

###############################################################################
# Small n: every labeled realization of PD_n, and the smallest maximum
# matching among them, against half the next gap.
for row in small_n_matching_check(8):
    print(row)

###############################################################################
# (1, 1, 1, 1) has three realizations: the three perfect matchings of K4.
for h in enumerate_realizations((1, 1, 1, 1)):
    print(list(h.edges()))
