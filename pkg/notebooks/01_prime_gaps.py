"""
Prime gaps and their statistics
===============================

Sieve the primes, look at the gap sequence with p_0 = 1, and count the
large forward gaps below x.
"""

import numpy as np

from gapgraph import primes

# The first gaps. The leading 1 comes from 2 - p_0 with p_0 = 1.
print(primes.gap_sequence(12))

# Streaming records carry (index, prime, gap); the gaps telescope to p - 1.
recs = list(primes.sieve_gaps(10**6))
print(len(recs), recs[-1])
assert sum(r.gap for r in recs) == recs[-1].prime - 1

###############################################################################
# Forward gaps p_{l+1} - p_l, with M(x) the largest one starting below x.
x = 10**7
st = primes.gap_stats(x, [2, 6, 20, 50])
print("M(x) =", st.max_gap)
for n in st.k:
    print(f"N={n:3d}  k_N={st.k[n]:8d}  S_N={st.s[n]:10d}  S_N/x={st.s[n] / x:.4f}")

# Gaps are even after the first two, and small gaps dominate.
hist = np.array(sorted(st.histogram.items()))
print(hist[:8])

###############################################################################
# psi and theta track x closely.
for x in (10**4, 10**5, 10**6):
    print(x, primes.psi(x) / x, primes.theta(x) / x)
