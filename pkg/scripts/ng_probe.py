"""Nordhaus-Gaddum maxima of E(G) + E(complement) against (n-1)sqrt(n) + n - 1."""
from dataclasses import dataclass
import math

from _config import parse_config
from specnorm.search import extremal_search


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 7


def main():
    cfg = parse_config(Config)
    for n in range(cfg.n_min, cfg.n_max + 1):
        r = extremal_search(n, "ng_energy_sum")
        rhs = (n - 1) * math.sqrt(n) + n - 1
        tag = "" if n >= 7 else " (below the n >= 7 hypothesis: observational)"
        print(f"n={n}: max={r.best:.9f} bound={rhs:.9f} ratio={r.best / rhs:.6f} "
              f"witnesses={r.witness_count}{tag}")


if __name__ == "__main__":
    main()
