"""
Degree-preserving growth
========================

Start from a realization of PD_5 and add one vertex per prime. Each step
removes half-gap many disjoint edges and reconnects their endpoints to
the new vertex, so the old degrees never change.
"""

from collections import Counter

from gapgraph.dpg import dpg_inequality_witness, dpg_run, final_graph
from gapgraph.primes import gap_sequence

certs = list(dpg_run(5, 2000, seed=42))
print(len(certs), "steps")
print(certs[0])
print(certs[-1])

###############################################################################
# The final graph realizes PD_2000 exactly, vertex by vertex.
g = final_graph(5, 2000, seed=42)
print(g.degrees() == gap_sequence(2000).tolist(), g.m)
print(Counter(g.degrees()).most_common(5))

###############################################################################
# The counting inequality N * d_{n+1} + 2 S'_N < p_n has small witnesses.
for n in (3, 10, 100, 10**4):
    c = dpg_inequality_witness(n)
    print(n, c.witness_n, c.lhs, "<", c.rhs)
