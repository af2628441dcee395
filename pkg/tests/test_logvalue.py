import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gapgraph.logvalue import LogValue, logsumexp

reals = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda x: abs(x) > 1e-6 or x == 0)


def test_zero_normalisation():
    z = LogValue.zero()
    assert z.is_zero and z.to_float() == 0.0
    assert LogValue(float("-inf"), 1) == z
    assert LogValue(3.0, 0).log == float("-inf")
    assert LogValue.of(0) == z


def test_rejects_bad_state():
    with pytest.raises(ValueError):
        LogValue(1.0, 2)
    with pytest.raises(ValueError):
        LogValue(float("nan"))


@given(reals, reals)
@settings(max_examples=500)
def test_arithmetic_matches_floats(a, b):
    A, B = LogValue.of(a), LogValue.of(b)
    assert (A + B).to_float() == pytest.approx(a + b, rel=1e-9, abs=1e-6)
    assert (A - B).to_float() == pytest.approx(a - b, rel=1e-9, abs=1e-6)
    assert (A * B).to_float() == pytest.approx(a * b, rel=1e-12)
    if b:
        assert (A / B).to_float() == pytest.approx(a / b, rel=1e-12)
    assert (A < B) == (a < b)


def test_cancellation_to_zero():
    x = LogValue.exp(1234.5)
    assert (x - x).is_zero


def test_huge_magnitudes():
    # x = e^(e^30.5) is far outside float range; x**0.999 / x is not
    x = LogValue.exp(math.exp(30.5))
    r = x**0.999 / x
    assert r.ln() == pytest.approx(-0.001 * math.exp(30.5), rel=1e-12)
    assert x.to_float() == math.inf
    assert (x + 1) == x


def test_pow_and_ln_domain():
    with pytest.raises(ValueError):
        LogValue.of(-2) ** 0.5
    with pytest.raises(ZeroDivisionError):
        LogValue.zero() ** 0
    with pytest.raises(ValueError):
        LogValue.of(-1).ln()
    with pytest.raises(ZeroDivisionError):
        LogValue.of(1) / 0


def test_logsumexp_against_mpmath():
    logs = [5000.0, 4999.0, 4990.5, 10.0]
    got = logsumexp(LogValue.exp(v) for v in logs)
    with mpmath.workdps(50):
        want = mpmath.log(mpmath.fsum(mpmath.exp(v) for v in logs))
    assert got.ln() == pytest.approx(float(want), rel=1e-15)


def test_ordering_and_mixed_types():
    assert LogValue.of(-3) < LogValue.zero() < LogValue.of(2)
    assert LogValue.of(-3) < -2
    assert 2 * LogValue.of(3) == 6
    assert (10 - LogValue.of(4)).to_float() == pytest.approx(6)
    assert (1 / LogValue.of(4)).to_float() == pytest.approx(0.25)
    assert abs(LogValue.of(-5)) == 5


def test_json():
    assert LogValue.zero().to_json() == {"sign": 0, "log": None}
    assert LogValue.of(-math.e).to_json() == {"sign": -1, "log": pytest.approx(1.0)}
