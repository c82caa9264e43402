"""List graphs whose singular values after the first all coincide."""
from collections import Counter
from dataclasses import dataclass

from _config import parse_config
from specnorm.graphs import parse_graph6
from specnorm.norms import NormSubject
from specnorm.search import flat_tail_hunt


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 6
    show: int = 20


def main():
    cfg = parse_config(Config)
    for n in range(cfg.n_min, cfg.n_max + 1):
        hits = flat_tail_hunt(n)
        kinds = Counter((h.regular, h.connected) for h in hits)
        print(f"n={n}: {len(hits)} labeled graphs; (regular, connected) counts {dict(kinds)}")
        seen = set()
        for h in hits:
            g = parse_graph6(h.graph6)
            key = (tuple(round(float(v), 9) for v in NormSubject.of(g).sv), tuple(sorted(g.degrees)))
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cfg.show:
                break
            print(f"   {h.graph6:<6} regular={h.regular!s:<5} connected={h.connected!s:<5} "
                  f"edges={g.m} sigma={[round(float(v), 6) for v in NormSubject.of(g).sv]}")


if __name__ == "__main__":
    main()
