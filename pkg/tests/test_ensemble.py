import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from specnorm import ensemble as e
from specnorm.errors import ArgumentError
from specnorm.norms import schatten


def test_constants():
    assert e.rands_constant(1) == pytest.approx(4 / (3 * math.pi), rel=1e-13)
    assert e.rands_constant(2) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert e.rands_constant(3) == 0.5
    with pytest.raises(ArgumentError):
        e.rands_constant(0.5)


@given(st.floats(1, 1.999))
def test_gamma_expression_against_mpmath(p):
    mp = (mpmath.gamma(p / 2 + 0.5) / (mpmath.sqrt(mpmath.pi) * mpmath.gamma(p / 2 + 2))) ** (1 / mpmath.mpf(p))
    assert e.gamma_expression(p) == pytest.approx(float(mp), rel=1e-12)


def test_gamma_expression_is_semicircle_moment():
    # E|x|^p for the semicircle on [-1, 1] with density (2/pi) sqrt(1 - x^2)
    for p in (1, 1.5):
        m = mpmath.quad(lambda x: 2 / mpmath.pi * abs(x) ** p * mpmath.sqrt(1 - x * x), [-1, 0, 1])
        assert e.gamma_expression(p) == pytest.approx(float(m ** (1 / mpmath.mpf(p))), rel=1e-10)


def test_gamma_limit_mismatch_reported():
    r = e.gamma_limit_report()
    assert r["limit_from_below"] == pytest.approx(0.5, abs=1e-6)
    assert r["mismatch"] and r["difference"] == pytest.approx(1 / math.sqrt(2) - 0.5, abs=1e-6)


def test_sample_gnp():
    assert e.sample_gnp(1, 0).m == 0
    a, b = e.sample_gnp(30, 5), e.sample_gnp(30, 5)
    assert np.array_equal(a.adjacency, b.adjacency)
    assert not np.array_equal(a.adjacency, e.sample_gnp(30, 6).adjacency)
    with pytest.raises(ArgumentError):
        e.sample_gnp(0, 1)


def test_edge_frequency_n2():
    freq = np.mean([e.sample_gnp(2, s).m for s in range(10_000)])
    assert abs(freq - 0.5) <= 0.02


def test_report_values_match_norms():
    r = e.ensemble_check(60, 1.5, 3, 9)
    for t, v in enumerate(r.values):
        g = e.sample_gnp(60, 9 + t)
        assert v == pytest.approx(schatten(g, 1.5) / 60 ** (1 / 1.5 + 0.5), rel=1e-10)
    assert r.mean == pytest.approx(np.mean(r.values))
    assert r.relative_deviation == pytest.approx(abs(r.mean - r.predicted) / r.predicted)
    assert all(v > 0 and math.isfinite(v) for v in r.values)


def test_deviation_shrinks_with_n():
    for p in (1, 3):
        small = e.ensemble_check(500, p, 5, 2024).relative_deviation
        large = e.ensemble_check(1000, p, 5, 2024).relative_deviation
        assert large <= small
