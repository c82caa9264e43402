"""Exhaustive soundness sweep of the graph bounds over every labeled graph of order <= n_max."""
from dataclasses import asdict, dataclass
import json
import time

from _config import parse_config
from specnorm.search import soundness_sweep


@dataclass
class Config:
    n_min: int = 1
    n_max: int = 7
    chunk: int = 1 << 17
    out: str = ""


def main():
    cfg = parse_config(Config)
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        tallies = soundness_sweep(n, chunk=cfg.chunk)
        dt = time.perf_counter() - t0
        bad = sum(t.violations for t in tallies)
        print(f"n={n}: {len(tallies)} checks, {bad} violations, {dt:.1f}s")
        for t in tallies:
            print(f"   {t.label:<40} checked={t.checked:>8} equal={t.equalities:>7} "
                  f"min_rel_slack={t.min_rel_slack:.3e} violations={t.violations}")
            rows.append({"n": n, **asdict(t)})
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
