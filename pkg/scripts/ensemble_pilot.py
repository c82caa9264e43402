"""Pilot for the random-graph tolerances: normalised Schatten norms of G(n, 1/2)."""
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from specnorm.ensemble import ensemble_values, gamma_limit_report, rands_constant


@dataclass
class Config:
    orders: tuple = (250, 500, 1000)
    ps: tuple = (1.0, 1.5, 2.0, 3.0, 4.0)
    trials: int = 5
    seed: int = 2024


def main():
    cfg = parse_config(Config)
    ps = [float(p) for p in cfg.ps]
    print(f"{'n':>6} " + " ".join(f"p={p:<5}" for p in ps))
    for n in cfg.orders:
        vals = ensemble_values(int(n), ps, cfg.trials, cfg.seed)
        devs = [abs(np.mean(vals[p]) - rands_constant(p)) / rands_constant(p) for p in ps]
        print(f"{int(n):>6} " + " ".join(f"{d:7.4f}" for d in devs))
    print("constants:", {p: round(rands_constant(p), 6) for p in ps})
    print("p -> 2- limit:", gamma_limit_report())


if __name__ == "__main__":
    main()
