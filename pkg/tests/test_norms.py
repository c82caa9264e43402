import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from specnorm.errors import ArgumentError, RecoveryFailed
from specnorm.graphs import (complete_bipartite, complete_graph, cycle, empty_graph, path,
                             petersen, star)
from specnorm.norms import (NormSubject, closed_walks_2k, energy, frobenius, ky_fan, max_norm,
                            operator_norm, recover_spectrum, schatten, schatten_curve,
                            singularly_cospectral, spectra_match, trace_norm)
from strategies import graphs, matrices


def test_examples():
    assert trace_norm(complete_graph(4)) == pytest.approx(6)
    assert energy(cycle(5)) == pytest.approx(2 + 2 * math.sqrt(5))
    assert ky_fan(cycle(5), 2) == pytest.approx(2 + (1 + math.sqrt(5)) / 2)
    assert operator_norm(star(5)) == pytest.approx(2)
    assert schatten(complete_bipartite(2, 3), 2) == pytest.approx(math.sqrt(12))
    assert max_norm([[1, -3], [2, 0]]) == 3


@given(matrices())
def test_frobenius_identity(a):
    # ||A||_2 computed from entries equals the Schatten 2-norm from singular values
    assert frobenius(a) == pytest.approx(schatten(a, 2), rel=1e-9, abs=1e-12)


@given(matrices())
def test_kyfan_endpoints(a):
    m = min(a.shape)
    assert ky_fan(a, 1) == pytest.approx(operator_norm(a), abs=1e-12)
    assert ky_fan(a, m) == pytest.approx(trace_norm(a), abs=1e-12)


@given(matrices(), st.floats(1, 6), st.floats(1, 6))
def test_schatten_monotone_in_p(a, p, q):
    p, q = min(p, q), max(p, q)
    assert schatten(a, q) <= schatten(a, p) * (1 + 1e-12) + 1e-12


@given(matrices(), matrices())
def test_triangle_inequality(a, b):
    if a.shape != b.shape:
        b = np.resize(b, a.shape)
    for norm in (lambda x: schatten(x, 1.5), trace_norm, lambda x: ky_fan(x, 1)):
        assert norm(a + b) <= norm(a) + norm(b) + 1e-9 * (1 + norm(a) + norm(b))


@given(matrices())
def test_unitary_invariance(a):
    q, _ = np.linalg.qr(np.random.default_rng(0).normal(size=(a.shape[0], a.shape[0])))
    assert trace_norm(q @ a) == pytest.approx(trace_norm(a), rel=1e-9, abs=1e-9)


def test_argument_errors():
    with pytest.raises(ArgumentError):
        ky_fan(complete_graph(3), 4)
    with pytest.raises(ArgumentError):
        ky_fan(complete_graph(3), 1.5)
    with pytest.raises(ArgumentError):
        schatten(complete_graph(3), 0.5)
    with pytest.raises(ArgumentError):
        schatten_curve(complete_graph(3), [0.9])
    assert schatten(complete_graph(3), math.inf) == pytest.approx(2)


@given(graphs(max_n=7), st.integers(1, 4))
def test_closed_walks_match_matrix_power(g, k):
    a = g.adjacency.astype(object)
    power = np.linalg.matrix_power(a, 2 * k) if g.n else a
    assert closed_walks_2k(g, k) == int(np.trace(power))


def test_closed_walks_example():
    # K_3: tr A^4 = 2^4 + 2 = 18
    assert closed_walks_2k(complete_graph(3), 2) == 18


def mp_curve_samples(groups, xs):
    with mp.workdps(50):
        return [mp.fsum(k * mp.mpf(v) ** x for v, k in groups) ** (mp.mpf(1) / x) for x in xs]


@pytest.mark.parametrize("g", [complete_graph(4), cycle(5), complete_bipartite(3, 3), path(8), petersen()],
                         ids=["K4", "C5", "K33", "P8", "petersen"])
def test_recover_spectrum(g):
    s = NormSubject.of(g)
    rec = recover_spectrum(s.curve_oracle(dps=60))
    direct = s.spectrum.nonzero_groups()
    got = rec.nonzero_groups()
    assert [k for _, k in got] == [k for _, k in direct]
    assert max(abs(a - b) for (a, _), (b, _) in zip(got, direct)) <= 1e-3


def test_recover_from_independent_oracle():
    # an oracle built by hand rather than from a matrix
    groups = [(3.0, 1), (2.0, 2), (0.5, 4)]
    rec = recover_spectrum(lambda x: mp_curve_samples(groups, [mp.mpf(x)])[0])
    assert spectra_match(rec.nonzero_groups(), groups, rel=1e-6)


def test_recover_float_oracle():
    s = NormSubject.of(complete_bipartite(2, 3))
    rec = recover_spectrum(s.curve_oracle())
    assert spectra_match(rec.nonzero_groups(), s.spectrum.nonzero_groups(), rel=1e-6)


def test_recover_too_many_values():
    groups = [(1 + 0.1 * i, 1) for i in range(10)]
    with pytest.raises(RecoveryFailed):
        recover_spectrum(lambda x: mp_curve_samples(groups, [mp.mpf(x)])[0], max_x=24, step=4)


def test_recover_empty_graph():
    rec = recover_spectrum(NormSubject.of(empty_graph(3)).curve_oracle(dps=30))
    assert rec.nonzero_groups() == []


def test_singular_cospectrality():
    # K_{1,4} and C_4 + K_1 share nonzero singular values (2, 2)
    from specnorm.graphs import disjoint_union
    assert singularly_cospectral(star(5), disjoint_union(cycle(4), empty_graph(1)))
    assert not singularly_cospectral(star(5), path(5))
