"""Schatten norms of uniform random graphs G(n, 1/2) against their limiting constants."""
from dataclasses import dataclass, asdict
import json
import math

import numpy as np

from .errors import ArgumentError
from .graphs import Graph


def sample_gnp(n, seed):
    """G(n, 1/2): every pair joined independently with probability 1/2."""
    if n < 1:
        raise ArgumentError("n must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8)
    a = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    a[iu] = bits
    a.T[iu] = bits
    return Graph(a, check=False)


def gamma_expression(p):
    """((1/sqrt(pi)) Gamma(p/2 + 1/2) / Gamma(p/2 + 2))^(1/p): the semicircle moment."""
    return (math.gamma(p / 2 + 0.5) / (math.sqrt(math.pi) * math.gamma(p / 2 + 2))) ** (1 / p)


def rands_constant(p):
    """Limit of ||G||_p / normaliser(n, p) for almost every graph."""
    if not p >= 1:
        raise ArgumentError(f"p must be >= 1, got {p}")
    if p < 2:
        return gamma_expression(p)
    if p == 2:
        return 1 / math.sqrt(2)
    return 0.5


def normaliser(n, p):
    return n ** (1 / p + 0.5) if p < 2 else float(n)


def gamma_limit_report(eps=1e-9):
    """Compare the p -> 2- limit of the Gamma expression with the p = 2 constant.

    The two differ (1/2 versus 1/sqrt 2): below p = 2 only the semicircle bulk
    counts, while at p = 2 the top eigenvalue n/2 contributes as much as the bulk.
    """
    left = gamma_expression(2 - eps)
    at2 = rands_constant(2)
    return {"limit_from_below": left, "constant_at_2": at2, "difference": at2 - left,
            "mismatch": abs(at2 - left) > 1e-6}


@dataclass
class EnsembleReport:
    n: int
    p: float
    trials: int
    seed: int
    values: list
    mean: float
    predicted: float
    relative_deviation: float

    def as_dict(self):
        return asdict(self)

    def to_json(self, **kw):
        return json.dumps(self.as_dict(), **kw)


def _schatten_from_eigs(eig, p):
    a = np.abs(eig)
    if math.isinf(p):
        return float(a.max())
    top = a.max()
    if top == 0:
        return 0.0
    return float(top * np.sum((a / top) ** p) ** (1 / p))


def ensemble_values(n, ps, trials, seed):
    """Normalised Schatten norms per p for trials with seeds seed, seed+1, ..."""
    out = {p: [] for p in ps}
    for t in range(trials):
        g = sample_gnp(n, seed + t)
        eig = np.linalg.eigvalsh(g.adjacency.astype(float))
        for p in ps:
            out[p].append(_schatten_from_eigs(eig, p) / normaliser(n, p))
    return out


def ensemble_check(n, p, trials, seed):
    if trials < 1:
        raise ArgumentError("trials must be positive")
    if not p >= 1:
        raise ArgumentError(f"p must be >= 1, got {p}")
    vals = ensemble_values(n, [p], trials, seed)[p]
    mean = float(np.mean(vals))
    c = rands_constant(p)
    return EnsembleReport(n, float(p), trials, seed, vals, mean, c, abs(mean - c) / c)
