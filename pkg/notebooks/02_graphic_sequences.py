"""
Which degree sequences are graphic?
===================================

Two tests of the same criterion: the full Erdős–Gallai check over every
k, and the reduced check that only visits k = m and the descents below it.
"""

from gapgraph import DegreeMultiset, erdos_gallai_full, zz_tv_reduced
from gapgraph.graphic import sweep
from gapgraph.primes import gap_sequence

for seq in [(3, 3, 2, 2), (3, 3, 2, 1), (3, 3, 1, 1), (4, 4, 4, 1, 1), (2,)]:
    full = erdos_gallai_full(seq)
    red = zz_tv_reduced(seq)
    print(seq, full.graphic, red.graphic, "m =", red.m, "checked", red.checked_ks)

###############################################################################
# A prefix of the prime gap sequence, kept as a multiset.
pd = DegreeMultiset.from_sequence(gap_sequence(10**5))
print(pd.n, pd.total, pd.items()[:5])
v = zz_tv_reduced(pd)
print("PD_100000 graphic:", v.graphic, "m =", v.m, "ks checked:", len(v.checked_ks))

###############################################################################
# Every prefix up to 10^5, updated one gap at a time.
rep = sweep(10**5)
print(rep["checked"], "prefixes,", len(rep["failures"]), "failures")
