"""Maximal spread next to xi_2(n) = max ||G||_[2] for small n.  Reports only."""
from dataclasses import dataclass

from _config import parse_config
from specnorm.search import spread_vs_kyfan2


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 7
    partitions: int = 1


def main():
    cfg = parse_config(Config)
    for n in range(cfg.n_min, cfg.n_max + 1):
        r = spread_vs_kyfan2(n, partitions=cfg.partitions)
        flag = "DIFFER" if r["differ"] else "equal"
        print(f"n={n}: max spread={r['max_spread']:.9f} xi_2={r['xi_2']:.9f} {flag} "
              f"spread witnesses={r['spread_witnesses'][:3]} kyfan2 witnesses={r['kyfan2_witnesses'][:3]}")


if __name__ == "__main__":
    main()
