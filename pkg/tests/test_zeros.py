import hashlib

import mpmath as mp
import numpy as np
import pytest

from gapgraph.exceptions import DomainError, InsufficientDataError, ScaleRefusal, ZeroTableError
from gapgraph.primes import psi
from gapgraph.zeros import (
    ZeroTable,
    explicit_formula_matrix,
    explicit_formula_psi,
    integral_I_quadrature,
    load_zeros,
    rect_count_check,
    zero_sum,
)
from conftest import ZEROS


def test_fixture_checksum():
    digest = ZEROS.with_suffix(".sha256").read_text().strip()
    assert hashlib.sha256(ZEROS.read_bytes()).hexdigest() == digest


def test_fixture_contents(zero_table):
    assert zero_table.ordinates[0] == pytest.approx(14.134725142, abs=1e-8)
    assert zero_table.count_below(100) == 29
    assert zero_table.count >= 10_000
    assert zero_table.max_ordinate > 50_000
    with mp.workdps(20):
        assert zero_table.count_below(1000) == int(mp.nzeros(1000))


def test_fixture_spot_values(zero_table):
    for n in (1, 2, 100, 10_000):
        assert zero_table.ordinates[n - 1] == pytest.approx(float(mp.zetazero(n).imag), abs=1e-8)


def test_table_validation():
    with pytest.raises(ZeroTableError):
        ZeroTable(np.array([]))
    with pytest.raises(ZeroTableError):
        ZeroTable(np.array([-1.0, 2.0]))
    with pytest.raises(ZeroTableError):
        ZeroTable(np.array([14.0, 14.0]))
    with pytest.raises(ZeroTableError):
        ZeroTable(np.array([14.0, 4e12]))
    t = ZeroTable(np.array([14.1, 21.0, 25.0]))
    assert t.below(21.0).tolist() == [14.1] and t.count_below(30) == 3


def test_load_reports_line(tmp_path):
    p = tmp_path / "z.txt"
    p.write_text("# header\n14.13\n21.02\nabc\n")
    with pytest.raises(ZeroTableError) as info:
        load_zeros(p)
    assert info.value.line == 4
    p.write_text("14.13\n10.0\n")
    with pytest.raises(ZeroTableError) as info:
        load_zeros(p)
    assert info.value.line == 2
    p.write_text("# nothing\n")
    with pytest.raises(ZeroTableError):
        load_zeros(p)


def test_rect_count_passes(zero_table):
    rep = rect_count_check(zero_table)
    assert rep["pass"] and rep["violationCount"] == 0
    assert rep["tMax"] <= zero_table.max_ordinate - 1
    assert rep["worst"]["count"] < rep["worst"]["logT"]


def test_rect_count_flags_clusters():
    crowded = ZeroTable(np.array([14.0, 20.0, 20.1, 20.2, 20.3, 30.0]))
    rep = rect_count_check(crowded)
    assert not rep["pass"] and rep["violationCount"] > 0
    with pytest.raises(InsufficientDataError):
        rect_count_check(ZeroTable(np.array([5.0, 11.0])))


def test_zero_sum_against_mpmath():
    g = np.array([14.134725142, 21.022039639, 25.010857580])
    x = 1000.5
    with mp.workdps(30):
        want = sum(2 * mp.re(mp.power(x, mp.mpc(0.5, t)) / mp.mpc(0.5, t)) for t in g)
    assert zero_sum(x, g) == pytest.approx(float(want), rel=1e-10)


def test_explicit_formula_close_to_psi(zero_table):
    approx, env = explicit_formula_psi(10**5, 1e4, zero_table)
    assert abs(approx - psi(10**5)) < env
    with pytest.raises(InsufficientDataError):
        explicit_formula_psi(10**5, 1e9, zero_table)
    with pytest.raises(DomainError):
        explicit_formula_psi(5, 1e3, zero_table)
    with pytest.raises(DomainError):
        explicit_formula_psi(1e5, 10, zero_table)


def test_explicit_formula_matrix(zero_table):
    rows = explicit_formula_matrix(zero_table, [10**4 + 0.5, 10**6], [1e3, 1e4])
    assert len(rows) == 4
    assert rows[2]["x"] == 10**6 + 0.5
    assert all(r["ratio"] < 1 for r in rows)
    # more zeros, smaller error
    assert rows[1]["error"] < rows[0]["error"]


def test_quadrature_against_direct_sampling(zero_table):
    x, T, delta = 1000.0, 200.0, 0.5
    got = integral_I_quadrature(x, T, delta, zero_table)
    g = zero_table.below(T)
    rho = 0.5 + 1j * g
    coef = (1 - (1 + delta) ** rho) / rho
    ys = np.linspace(x, 2 * x, 200_001)
    s = 2.0 * (np.exp(np.outer(np.log(ys), rho)) @ coef).real
    want = (np.trapezoid if hasattr(np, "trapezoid") else np.trapz)(s * s, ys)
    assert got == pytest.approx(want, rel=1e-2)


def test_quadrature_guards(zero_table):
    with pytest.raises(DomainError):
        integral_I_quadrature(1e9, 100.0, 0.5, zero_table)
    with pytest.raises(DomainError):
        integral_I_quadrature(1e3, 100.0, 2.0, zero_table)
    with pytest.raises(ScaleRefusal):
        integral_I_quadrature(1e8, 5e4, 0.5, zero_table)


def test_quadrature_scales_like_delta_squared(zero_table):
    a = integral_I_quadrature(1e4, 100.0, 1e-3, zero_table)
    b = integral_I_quadrature(1e4, 100.0, 2e-3, zero_table)
    assert b / a == pytest.approx(4.0, rel=1e-2)


def test_quadrature_stable_under_refinement(zero_table):
    coarse = integral_I_quadrature(1e4, 100.0, 0.5, zero_table, rtol=1e-2)
    fine = integral_I_quadrature(1e4, 100.0, 0.5, zero_table, rtol=1e-6)
    assert np.isfinite(fine) and fine > 0
    assert coarse == pytest.approx(fine, rel=1e-2)
