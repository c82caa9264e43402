import itertools
import json
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from specnorm.errors import ArgumentError, BudgetExceeded
from specnorm.graphs import (Graph, complete_graph, cycle, disjoint_union, emit_graph6, parse_graph6,
                             petersen, star)
from specnorm.norms import energy, ky_fan, schatten
from specnorm import search as s

from strategies import graphs


def brute_chromatic(g):
    edges = g.edges()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return 0


def test_counts():
    assert sum(1 for _ in s.enumerate_graphs(3)) == 8
    assert sum(1 for _ in s.enumerate_graphs(4)) == 64
    assert sum(len(m) for m, _ in s.graph_batches(7)) == 2 ** 21
    assert [sum(1 for _ in s.enumerate_trees(n)) for n in (3, 4, 5)] == [3, 16, 125]


def test_enumeration_distinct_and_complete():
    seen = {emit_graph6(g) for g in s.enumerate_graphs(4)}
    assert len(seen) == 64


def test_trees_match_networkx():
    ours = {frozenset(map(frozenset, t.edges())) for t in s.enumerate_trees(6)}
    assert len(ours) == 6 ** 4
    for t in ours:
        g = nx.Graph(list(map(tuple, t)))
        g.add_nodes_from(range(6))
        assert nx.is_tree(g)


def test_enumerator_graph6_round_trip_sampled():
    rng = np.random.default_rng(3)
    for n in range(1, 9):
        masks = rng.integers(0, 1 << s.num_pairs(n), size=100_000 // 8) if n > 1 else np.zeros(1, np.int64)
        for mk in masks:
            g = Graph.from_mask(n, int(mk))
            t = emit_graph6(g)
            assert emit_graph6(parse_graph6(t)) == t and parse_graph6(t).mask() == int(mk)


def test_refuses_large_exhaustive():
    with pytest.raises(ArgumentError, match="--sample"):
        s.extremal_search(9, "energy")
    with pytest.raises(ArgumentError):
        list(s.enumerate_graphs(9))
    with pytest.raises(ArgumentError):
        s.extremal_search(10, "schatten_tree(4)")


# ---- exact colouring and cliques ----

def test_chromatic_clique_examples():
    assert (s.chromatic_number(cycle(5)), s.clique_number(cycle(5))) == (3, 2)
    assert (s.chromatic_number(complete_graph(4)), s.clique_number(complete_graph(4))) == (4, 4)
    assert (s.chromatic_number(petersen()), s.clique_number(petersen())) == (3, 2)


@given(graphs(1, 7))
def test_chromatic_brute_force(g):
    assert s.chromatic_number(g) == brute_chromatic(g)


@given(graphs(1, 9))
def test_clique_networkx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    assert s.clique_number(g) == max(len(c) for c in nx.find_cliques(h))


def test_order_cap():
    with pytest.raises(ArgumentError):
        s.chromatic_number(cycle(17))


def test_batch_helpers_agree_with_single():
    masks, adj = next(s.graph_batches(6, chunk=1 << 15))
    chi, om, conn = s.batch_chromatic(adj), s.batch_clique(adj), s.batch_connected(adj)
    for i in range(0, len(masks), 97):
        g = Graph.from_mask(6, int(masks[i]))
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(6))
        assert chi[i] == s.chromatic_number(g)
        assert om[i] == s.clique_number(g)
        assert conn[i] == nx.is_connected(h)


def test_prufer_decoding_is_bijective():
    adj = s.prufer_to_adjacency(5, s.prufer_sequences(5))
    assert len(set(s.adjacency_to_masks(adj).tolist())) == 125
    assert np.all(adj.sum(axis=(1, 2)) == 8)


# ---- extremal search ----

def test_energy_n4():
    r = s.extremal_search(4, "energy")
    assert abs(r.best - 6) <= 1e-9 and r.witnesses == ["C~"] and r.examined == 64


def test_ng_n5():
    r = s.extremal_search(5, "ng_energy_sum")
    assert abs(r.best - (4 * math.sqrt(5) + 4)) <= 1e-9
    c5 = {emit_graph6(g) for g in s.enumerate_graphs(5)
          if nx.is_isomorphic(nx.Graph(g.edges()), nx.cycle_graph(5))}
    assert c5 & set(r.witnesses)
    # ties are pentagons only
    assert set(r.witnesses) == c5


def test_kyfan2_n2():
    r = s.extremal_search(2, "kyfan(2)")
    assert r.best == pytest.approx(2) and r.witnesses == ["A_"]


def test_witnesses_attain_best():
    for obj in ("energy", "kyfan(2)", "schatten(3)", "spread", "ng_energy_sum", "energy_krfree(2)"):
        r = s.extremal_search(5, obj)
        o = s.Objective.parse(obj)
        for g in r.witness_graphs():
            v = o.evaluate(g.adjacency[None].astype(np.uint8))[0]
            assert abs(v - r.best) <= 1e-9 * max(1, abs(r.best)), obj
        assert r.witnesses == sorted(r.witnesses)


def test_objective_values_match_norms():
    g = disjoint_union(cycle(5), complete_graph(2))
    a = g.adjacency[None]
    assert s.Objective.parse("energy").evaluate(a)[0] == pytest.approx(energy(g))
    assert s.Objective.parse("kyfan:3").evaluate(a)[0] == pytest.approx(ky_fan(g, 3))
    assert s.Objective.parse("schatten(1.5)").evaluate(a)[0] == pytest.approx(schatten(g, 1.5))


def test_krfree_and_rpartite():
    for n in (4, 5):
        gs = list(s.enumerate_graphs(n))
        nxg = [nx.Graph(g.edges()) for g in gs]
        tri_free = max(energy(g) for g, h in zip(gs, nxg) if sum(nx.triangles(h).values()) == 0)
        three_col = max(energy(g) for g in gs if brute_chromatic(g) <= 3)
        assert s.extremal_search(n, "energy_krfree(2)").best == pytest.approx(tri_free, abs=1e-9)
        assert s.extremal_search(n, "energy_rpartite(3)").best == pytest.approx(three_col, abs=1e-9)


def test_minimize_and_connected():
    r = s.extremal_search(5, "energy", minimize=True, connected_only=True)
    assert r.best == pytest.approx(energy(star(5)))


def test_trees_star_maximises_four_norm():
    r = s.extremal_search(6, "schatten_tree(4)")
    assert r.best == pytest.approx(schatten(star(6), 4))
    assert r.examined == 6 ** 4


def test_partition_determinism():
    for obj in ("energy", "kyfan(3)", "spread"):
        a = s.extremal_search(6, obj, partitions=1).to_json(timing=False)
        b = s.extremal_search(6, obj, partitions=5, threads=3).to_json(timing=False)
        assert a == b


def test_sampled_determinism():
    a = s.extremal_search(9, "energy", mode="sampled", trials=500, seed=11)
    b = s.extremal_search(9, "energy", mode="sampled", trials=500, seed=11)
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert a.seed == 11 and a.examined == 500
    t = s.extremal_search(12, "kyfan_tree(2)", mode="sampled", trials=200, seed=1)
    assert t.best <= schatten(star(12), 2) * math.sqrt(2) + 1e-9
    with pytest.raises(ArgumentError):
        s.extremal_search(9, "energy", mode="sampled", trials=10)


def test_budget_exceeded_carries_partial_result():
    with pytest.raises(BudgetExceeded) as e:
        s.extremal_search(7, "energy", max_graphs=1000, chunk=512)
    part = e.value.partial
    assert not part.complete and 0 < part.examined < 2 ** 21
    assert part.best > 0 and part.witnesses


def test_bad_objectives():
    for bad in ("energy(2)", "kyfan", "kyfan(0)", "nope", "schatten(0.5)"):
        with pytest.raises(ArgumentError):
            s.extremal_search(4, bad)


def test_result_json():
    r = s.extremal_search(3, "energy")
    d = json.loads(r.to_json())
    assert {"n", "objective", "best", "witnesses", "examined", "wall_time"} <= set(d)


# ---- hunts, probes and sweeps ----

def test_flat_tail_hunt():
    got4 = {x.graph6 for x in s.flat_tail_hunt(4)}
    assert "C~" in got4
    two_k2 = {emit_graph6(g) for g in s.enumerate_graphs(4)
              if g.m == 2 and all(d == 1 for d in g.degrees)}
    assert two_k2 <= got4
    got5 = {x.graph6: x for x in s.flat_tail_hunt(5)}
    assert emit_graph6(complete_graph(5)) in got5
    assert emit_graph6(cycle(5)) not in got5
    # K_{n-2r} + rK_2 qualifies only when n - 2r != 1: K_1 + 2K_2 has sigma = (1,1,1,1,0)
    k3_k2 = emit_graph6(Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]))
    assert k3_k2 in got5 and not got5[k3_k2].connected and not got5[k3_k2].regular
    assert emit_graph6(Graph.from_edges(5, [(0, 1), (2, 3)])) not in got5


def test_flat_tail_hunt_agrees_with_objective():
    r = s.extremal_search(5, "flat_tail")
    assert r.best == 1 and r.witness_count == len(s.flat_tail_hunt(5))


def test_spread_probe():
    for n in range(2, 7):
        p = s.spread_vs_kyfan2(n)
        # lambda_1 - lambda_n <= |lambda_1| + |lambda_n| <= sigma_1 + sigma_2
        assert p["max_spread"] <= p["xi_2"] + 1e-9


def test_search_maxima_below_catalog_bounds():
    for n in range(2, 7):
        assert s.extremal_search(n, "energy").best <= n * math.sqrt(n) / 2 + n / 2 + 1e-9
        for k in range(1, n + 1):
            assert s.extremal_search(n, f"kyfan({k})").best <= n * math.sqrt(k) / 2 + n / 2 + 1e-9
        # observational below n = 7
        assert s.extremal_search(n, "ng_energy_sum").best <= (n - 1) * math.sqrt(n) + n - 1 + 1e-9


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_soundness_sweep_small(n):
    for t in s.soundness_sweep(n):
        assert t.violations == 0, t
        assert t.nonsquare_equalities == 0, t


def test_sweep_matches_single_evaluation():
    from specnorm.bounds import evaluate_bound
    tallies = {t.label: t for t in s.soundness_sweep(4)}
    for c in s.default_sweep_checks(4):
        eq = 0
        for g in s.enumerate_graphs(4):
            try:
                r = evaluate_bound(c.bound_id, g, dict(c.params))
            except Exception:
                continue
            eq += r.equality
        assert tallies[c.label].equalities == eq, c.label
