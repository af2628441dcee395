"""
Checks against zeta zeros
=========================

Load the bundled ordinates, count zeros in short windows, and rebuild psi
from the truncated explicit formula.
"""

from pathlib import Path

from gapgraph.primes import psi
from gapgraph.zeros import explicit_formula_psi, integral_I_quadrature, load_zeros, rect_count_check

path = Path(__file__).resolve().parents[1] / "tests" / "data" / "zeta_zeros.txt"
z = load_zeros(path)
print(z.count, "zeros up to", z.max_ordinate)

rep = rect_count_check(z)
print("windows:", rep["points"], "violations:", rep["violationCount"], "worst:", rep["worst"])

###############################################################################
# psi(x) from zeros below T; the error shrinks as T grows.
x = 10**6 + 0.5
exact = psi(10**6)
for T in (100.0, 1e3, 1e4, 5e4):
    approx, env = explicit_formula_psi(x, T, z)
    print(f"T={T:>8.0f}  error={abs(approx - exact):10.3f}  envelope={env:12.1f}")

###############################################################################
# Direct quadrature of the mean square over [x, 2x].
print(integral_I_quadrature(1e4, 100.0, 0.5, z))
