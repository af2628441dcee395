"""
Where the threshold inequalities switch on
==========================================

With t = log log p_n both inequalities compare a linear function of t with
something growing like e^(t/3). Locate the crossing and confirm there is
only one.
"""

from gapgraph import analytic
from gapgraph.analytic import AnalyticParams

for alpha in (0.249, 1 / 13):
    print(f"alpha={alpha:.4f}  C={analytic.big_constant_C(AnalyticParams(alpha=alpha)):.3f}")

for t in (30.0, 30.5, 31.0):
    print("case2", t, analytic.threshold_case2(t))
for t in (34.0, 34.5, 35.0):
    print("dpg  ", t, analytic.threshold_dpg(t))

###############################################################################
rep = analytic.find_threshold("case2", 29.0, 32.0)
print("case2 crossing", rep.fails_below, rep.t_min)
rep = analytic.find_threshold("dpg", 33.0, 36.0)
print("dpg crossing  ", rep.fails_below, rep.t_min)
print(analytic.sign_changes("case2", 28, 60), analytic.sign_changes("dpg", 32, 60))
