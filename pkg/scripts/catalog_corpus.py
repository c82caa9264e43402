"""Full soundness and equality-completeness corpus for the whole bound catalog.

Every entry with its sample parameter sets is run on
  - every labeled graph of order <= graph_order (one subject at a time),
  - matrices_per_shape random nonnegative matrices of every shape up to max_rows x max_cols,
  - the constructed extremal objects.
A report counts as a problem when the inequality fails or when its equality flag
disagrees with the equality characterisation.  The test suite runs a reduced
version of the same corpus.
"""
from collections import Counter
from dataclasses import dataclass
import time

import numpy as np

from _config import parse_config
from specnorm import constructions as c
from specnorm.bounds import evaluate_all
from specnorm.graphs import petersen, rook_graph
from specnorm.search import enumerate_graphs


@dataclass
class Config:
    graph_order: int = 6
    matrices_per_shape: int = 500
    max_rows: int = 10
    max_cols: int = 12
    seed: int = 462


def constructed():
    s_k = np.ones((4, 4), int) - 2 * np.eye(4, dtype=int)
    return [c.paley_conference(5), c.paley_conference(13), c.symmetric_hadamard_double(5),
            c.paley_hadamard(7), c.sylvester(3), c.ng_extremal_matrix(3, 2, 1, 1),
            c.kyfan_extremal_matrix(2, 2, 3, 2), c.partial_hadamard(3, 4),
            c.rpartite_extremal_matrix(c.paley_conference(5), c.sylvester(2)),
            c.rpartite_extremal_graph(c.paley_conference(5), c.sylvester(2)),
            c.paley_graph(13), c.paley_graph(17), rook_graph(4), petersen(), c.turan_graph(7, 3),
            c.sk_blowup_graph(s_k, 2)]


class Tally:
    def __init__(self):
        self.reports = Counter()
        self.equalities = Counter()
        self.problems = []

    def add(self, reports, where):
        for r in reports:
            self.reports[r.id] += 1
            self.equalities[r.id] += bool(r.equality)
            if not r.satisfied or r.details.get("inconsistent"):
                self.problems.append((where, r.id, r.params, r.slack, r.equality_verdict))


def main():
    cfg = parse_config(Config)
    tally = Tally()
    t0 = time.perf_counter()
    for n in range(1, cfg.graph_order + 1):
        for g in enumerate_graphs(n):
            tally.add(evaluate_all(g), f"graph n={n} mask={g.mask()}")
        print(f"graphs of order {n} done ({time.perf_counter() - t0:.0f}s)", flush=True)
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    for m in range(1, cfg.max_rows + 1):
        for n in range(1, cfg.max_cols + 1):
            for i in range(cfg.matrices_per_shape):
                a = rng.uniform(0, 1, (m, n)) if i % 2 else rng.integers(0, 2, (m, n)).astype(float)
                tally.add(evaluate_all(a), f"matrix {m}x{n} #{i}")
        print(f"matrices with {m} rows done ({time.perf_counter() - t0:.0f}s)", flush=True)
    for obj in constructed():
        tally.add(evaluate_all(obj), f"constructed {getattr(obj, 'shape', None) or obj.n}")
    print(f"{sum(tally.reports.values())} reports, {len(tally.problems)} problems, "
          f"{time.perf_counter() - t0:.0f}s")
    for bid in sorted(tally.reports):
        print(f"   {bid:<20} reports={tally.reports[bid]:>8} equalities={tally.equalities[bid]:>7}")
    for p in tally.problems[:50]:
        print("PROBLEM", p)


if __name__ == "__main__":
    main()
