"""
Bounds at astronomically large x
================================

x = exp(exp(30.5)) has no float representation, but log x does. The bound
evaluators take LogValue inputs and return LogValue results.
"""

import math

from gapgraph import LogValue
from gapgraph.analytic import AnalyticParams, eta, integral_I_bound, sn_bound

x = LogValue.exp(math.exp(30.5))
print(x, x.to_float())

# eta at height T, passed as log T
print("eta(4) =", eta(4), " eta(e^10) =", eta(10, scale="log"))

params = AnalyticParams()
N = LogValue.exp(0.6 * x.ln())
res = sn_bound(x, N, params, M=LogValue.exp(2 * math.log(x.ln())))
print("log S_N bound:", res.value.ln(), "vs log x:", x.ln())
print(res.hypotheses)

###############################################################################
# Mean-square bound of the zero sum, and what happens outside its T range.
res = integral_I_bound(LogValue.exp(5000.0), LogValue.exp(200.0), 0.5, params)
print(res.value, res.extrapolated)
try:
    integral_I_bound(LogValue.exp(50.0), LogValue.exp(1.0), 0.5, params)
except ValueError as exc:
    print("refused:", exc)
