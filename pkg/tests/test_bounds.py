import math

import numpy as np
import pytest
from hypothesis import given

from specnorm import constructions as c
from specnorm.bounds import Features, characterization_holds, equality_verdict, evaluate_all, evaluate_bound
from specnorm.errors import ApplicabilityError, ArgumentError
from specnorm.graphs import (complete_bipartite, complete_graph, complete_multipartite, cycle,
                             disjoint_union, empty_graph, path, petersen, star)
from specnorm.norms import closed_walks_2k, energy
from specnorm.search import enumerate_graphs

from strategies import scaled_matrices

# regular Hadamard of order 16 with row sums 4
REG16 = np.kron(np.ones((4, 4), int) - 2 * np.eye(4, dtype=int), np.ones((4, 4), int) - 2 * np.eye(4, dtype=int))


def constructed_objects():
    objs = [c.paley_conference(5), c.paley_conference(13), c.symmetric_hadamard_double(5),
            c.paley_hadamard(7), (c.paley_hadamard(7) + 1) // 2, c.sylvester(3), (c.sylvester(2) + 1) // 2,
            c.ng_extremal_matrix(3, 2, 1, 1), c.kyfan_extremal_matrix(2, 2, 3, 2), c.partial_hadamard(3, 4),
            (c.partial_hadamard(4, 8) + 1) // 2,
            c.rpartite_extremal_matrix(c.paley_conference(5), c.sylvester(2)),
            c.paley_graph(13), c.paley_graph(17), rook_graph_4(), petersen(),
            c.sk_blowup_graph(np.ones((4, 4), int) - 2 * np.eye(4, dtype=int), 2),
            c.rpartite_extremal_graph(c.paley_conference(5), c.sylvester(2))]
    return objs


def rook_graph_4():
    from specnorm.graphs import rook_graph
    return rook_graph(4)


def check_reports(reports, where):
    for r in reports:
        assert r.satisfied, (where, r)
        assert not r.details.get("inconsistent"), (where, r)


# ---- catalog examples ----

def test_km_graph_k4():
    r = evaluate_bound("KM_GRAPH", complete_graph(4))
    assert r.lhs == pytest.approx(6, abs=1e-9) and r.rhs == pytest.approx(6, abs=1e-9)
    assert r.equality and r.equality_verdict == "holds"


def test_cap_k23():
    r = evaluate_bound("CAP", complete_bipartite(2, 3))
    assert r.lhs == pytest.approx(2 * math.sqrt(6)) and r.equality
    assert r.equality_verdict == "holds"


def test_ng_paley13():
    r = evaluate_bound("NG_TRACE_GRAPH", c.paley_graph(13))
    assert r.rhs == pytest.approx(12 * math.sqrt(13) + 12)
    assert r.equality and r.equality_verdict == "holds"


def test_km1_complete_graph():
    assert equality_verdict("KM1", complete_graph(6)) == "holds"


def test_holder_union_of_bipartite():
    g = disjoint_union(complete_bipartite(2, 3), star(7))
    r = evaluate_bound("HOLDER", g)
    assert r.equality and r.equality_verdict == "holds"
    # tr A^4 * E^2 >= (2m)^3
    assert closed_walks_2k(g, 2) * energy(g) ** 2 >= (2 * g.m) ** 3 - 1e-6


def test_kyfan_graph_equality_only_at_squares():
    g = complete_multipartite(3, 3, 3, 3)
    r = evaluate_bound("KYFAN_GRAPH", g, {"k": 4})
    assert r.equality and r.details["k_is_square"]
    assert evaluate_bound("KYFAN_LOWER_SK", g, {"k": 4}).satisfied
    assert not evaluate_bound("KYFAN_GRAPH", g, {"k": 3}).equality


def test_complement_diff_uses_2n_minus_2():
    for n in range(2, 9):
        g = complete_graph(n)
        r = evaluate_bound("COMPLEMENT_DIFF", g)
        assert r.equality and r.rhs == 2 * n - 2
        # the constant 2n - 4 would fail on every complete graph
        assert r.lhs > 2 * n - 4


def test_stanley_attained_by_k2():
    for g in (complete_graph(2), disjoint_union(complete_graph(2), empty_graph(3))):
        r = evaluate_bound("SCH_STANLEY", g, {"p": 3, "variant": "edges"})
        assert r.equality and r.equality_verdict == "holds"
    r = evaluate_bound("SCH_STANLEY", complete_graph(2), {"p": 3, "variant": "order"})
    assert r.equality and r.equality_verdict == "holds"


def test_ng1_order_hypothesis():
    with pytest.raises(ApplicabilityError, match="n >= 7"):
        evaluate_bound("NG_TRACE_GRAPH", cycle(5))
    r = evaluate_bound("NG_TRACE_GRAPH", cycle(5), observational=True)
    assert r.observational and r.equality


def test_applicability_errors():
    with pytest.raises(ApplicabilityError, match="bipartite"):
        evaluate_bound("KMB_BIPARTITE", complete_graph(4))
    with pytest.raises(ApplicabilityError, match="graph"):
        evaluate_bound("KM_GRAPH", np.ones((2, 3)))
    with pytest.raises(ApplicabilityError, match="nonnegative"):
        evaluate_bound("NONNEG_SQ", -np.eye(3))
    with pytest.raises(ArgumentError):
        evaluate_bound("SCH_ABS_LT2", np.ones((2, 2)), {"p": 2})
    with pytest.raises(ArgumentError):
        evaluate_bound("KYFAN_FROB", np.ones((2, 2)), {"k": 3})
    with pytest.raises(ArgumentError):
        evaluate_bound("NOT_AN_ID", np.ones((2, 2)))
    with pytest.raises(ArgumentError):
        evaluate_bound("KM_GRAPH", complete_graph(3), {"zzz": 1})


def test_rpartite_entries_on_construction():
    a = c.rpartite_extremal_matrix(c.paley_conference(5), c.sylvester(2))
    for p in (1, 1.5):
        r = evaluate_bound("RPART_SCH", a, {"p": p})
        assert r.equality and r.equality_verdict == "holds" and r.params["r"] == 6
    assert evaluate_bound("RPART_TRACE", a).equality


def test_rpart_frob_turan():
    g = c.turan_graph(7, 3)
    r = evaluate_bound("RPART_FROB", g, {"r": 3})
    assert r.equality and r.equality_verdict == "holds"
    assert not evaluate_bound("RPART_FROB", g, {"r": 3, "variant": "cor"}).equality


def test_multipartite_schatten():
    r = evaluate_bound("MULTIPARTITE_SCH", complete_multipartite(2, 2, 2), {"p": 1})
    assert r.satisfied and r.equality_verdict == "not-characterized"
    with pytest.raises(ApplicabilityError):
        evaluate_bound("MULTIPARTITE_SCH", cycle(5))


def test_kmax_variant_needs_maximal_energy():
    r = evaluate_bound("SCH_ORDER_UP", complete_graph(4), {"p": 1.5, "variant": "kmax"})
    assert r.satisfied and r.slack > 0
    with pytest.raises(ApplicabilityError):
        evaluate_bound("SCH_ORDER_UP", cycle(4), {"p": 1.5, "variant": "kmax"})


def test_report_serialises():
    import json
    d = evaluate_bound("B1", np.arange(6.0).reshape(2, 3)).as_dict()
    assert json.loads(json.dumps(d))["id"] == "B1"


# ---- soundness and equality completeness over corpora ----

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_graphs_sound_and_consistent(n):
    for g in enumerate_graphs(n):
        check_reports(evaluate_all(g), g)


def test_constructed_objects_sound_and_consistent():
    for obj in constructed_objects():
        check_reports(evaluate_all(obj), getattr(obj, "shape", obj))


def test_random_nonnegative_matrices():
    rng = np.random.default_rng(7)
    for _ in range(120):
        m, n = rng.integers(1, 11), rng.integers(1, 13)
        for a in (rng.uniform(0, 1, (m, n)), rng.integers(0, 2, (m, n)).astype(float)):
            check_reports(evaluate_all(a), a.shape)


@given(scaled_matrices())
def test_random_matrices_property(a):
    check_reports(evaluate_all(a), a)


def test_equality_predicates_force_equality():
    # reverse direction of the characterisations on objects built to satisfy them
    cases = [("KM_GRAPH", complete_graph(4), {}),
             ("NONNEG_SQ", (REG16 + 1) / 2, {}),
             ("HAD_SQ", c.sylvester(3), {}),
             ("PART_HAD", c.partial_hadamard(3, 4), {}),
             ("CONF", c.paley_conference(13), {}),
             ("GZ", c.paley_graph(13), {"variant": "conference"}),
             ("NG_TRACE_GRAPH", c.paley_graph(17), {}),
             ("KM0", rook_graph_4(), {}),
             ("SCH_EDGE_UP", rook_graph_4(), {"p": 1.5}),
             ("NG_KYFAN", c.ng_extremal_matrix(3, 2, 1, 1), {"k": 3}),
             ("KYFAN_HAD", c.kyfan_extremal_matrix(2, 2, 3, 2), {"k": 2})]
    for bid, subj, params in cases:
        assert characterization_holds(bid, subj, params), bid
        r = evaluate_bound(bid, subj, params)
        assert r.equality and r.equality_verdict == "holds", (bid, r)


# ---- converter monotonicity and chains ----

@given(scaled_matrices(2, 6, 0.0, 1.0))
def test_converter_monotone(a):
    f = Features(a)
    if f.sv[0] == 0:
        return
    base_b1 = evaluate_bound("B1", a).rhs
    base_kmm = evaluate_bound("SCH_CONV_UP", a, {"p": 1.5, "q": 3}).rhs
    for variant in ("rows", "cols", "abs_rows"):
        lower = evaluate_bound("SIGMA1_LOWER", a, {"variant": variant}).lhs
        lower = min(lower, f.sv[0])
        try:
            b1 = evaluate_bound("B1", a, {"c": lower}).rhs
        except ApplicabilityError:
            pass
        else:
            assert b1 >= base_b1 - 1e-9 * max(1, base_b1)
        try:
            kmm = evaluate_bound("SCH_CONV_UP", a, {"p": 1.5, "q": 3, "c": lower}).rhs
        except ApplicabilityError:
            pass
        else:
            assert kmm >= base_kmm - 1e-9 * max(1, base_kmm)


@given(scaled_matrices(1, 7, -2.0, 2.0))
def test_b1_implies_mcclelland(a):
    b1 = evaluate_bound("B1", a).rhs
    mc = evaluate_bound("MCCLELLAND", a).rhs
    assert b1 <= mc + 1e-9 * max(1, mc)


def test_gz_upper_is_sound_for_small_graphs():
    for n in range(2, 7):
        for g in (path(n), cycle(max(n, 3)), complete_graph(n)):
            assert evaluate_bound("GZ", g).satisfied
