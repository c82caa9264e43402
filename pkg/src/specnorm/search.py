"""Exhaustive and sampled extremal search over small graphs and trees."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, field
import json
import math
import os
import re
import time

import numpy as np

from .errors import ArgumentError, BudgetExceeded
from .graphs import Graph, emit_graph6, pair_index

MAX_EXHAUSTIVE_GRAPHS = 8
MAX_EXHAUSTIVE_TREES = 9
WITNESS_CAP = 64
TIE_REL = 1e-9
CHUNK = 1 << 16


def default_threads():
    env = os.environ.get("SPECNORM_THREADS")
    if env:
        try:
            t = int(env)
        except ValueError:
            raise ArgumentError(f"SPECNORM_THREADS must be an integer, got {env!r}") from None
        if t < 1:
            raise ArgumentError("SPECNORM_THREADS must be positive")
        return t
    return os.cpu_count() or 1


# ---- enumeration ----

def num_pairs(n):
    return n * (n - 1) // 2


def enumerate_graphs(n):
    """Every labeled graph of order n, in mask order."""
    if n > MAX_EXHAUSTIVE_GRAPHS:
        raise ArgumentError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_GRAPHS}; "
                            "use sampled mode for larger orders")
    if n < 1:
        raise ArgumentError("n must be positive")
    for start in range(0, 1 << num_pairs(n), CHUNK):
        stop = min(start + CHUNK, 1 << num_pairs(n))
        adj = masks_to_adjacency(n, np.arange(start, stop, dtype=np.int64))
        for a in adj:
            yield Graph(a, check=False)


def prufer_sequences(n, start=0, stop=None):
    """Prufer sequences with index in [start, stop) as an int array (count, n-2)."""
    total = n ** (n - 2)
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    seq = np.empty((len(idx), max(n - 2, 0)), dtype=np.int64)
    for pos in range(n - 3, -1, -1):
        seq[:, pos] = idx % n
        idx //= n
    return seq


def prufer_to_adjacency(n, seq):
    """Decode a batch of Prufer sequences into adjacency matrices (vectorised)."""
    count = seq.shape[0]
    adj = np.zeros((count, n, n), dtype=np.uint8)
    rows = np.arange(count)
    if n == 1:
        return adj
    deg = np.ones((count, n), dtype=np.int64)
    for i in range(seq.shape[1]):
        np.add.at(deg, (rows, seq[:, i]), 1)
    for i in range(seq.shape[1]):
        leaf = np.argmax(deg == 1, axis=1)
        other = seq[:, i]
        adj[rows, leaf, other] = 1
        adj[rows, other, leaf] = 1
        deg[rows, leaf] = 0
        deg[rows, other] -= 1
    ends = np.argsort(deg != 1, axis=1, kind="stable")[:, :2]
    adj[rows, ends[:, 0], ends[:, 1]] = 1
    adj[rows, ends[:, 1], ends[:, 0]] = 1
    return adj


def enumerate_trees(n):
    """All n^(n-2) labeled trees of order n via Prufer sequences."""
    if n < 2:
        raise ArgumentError("trees need n >= 2")
    if n > MAX_EXHAUSTIVE_TREES:
        raise ArgumentError(f"exhaustive tree enumeration is limited to n <= {MAX_EXHAUSTIVE_TREES}")
    total = n ** (n - 2)
    for start in range(0, total, CHUNK):
        for a in prufer_to_adjacency(n, prufer_sequences(n, start, start + CHUNK)):
            yield Graph(a, check=False)


# ---- vectorised helpers over batches of graphs ----

def masks_to_adjacency(n, masks):
    masks = np.asarray(masks, dtype=np.int64)
    adj = np.zeros((len(masks), n, n), dtype=np.uint8)
    for t, (i, j) in enumerate(pair_index(n)):
        bit = ((masks >> t) & 1).astype(np.uint8)
        adj[:, i, j] = bit
        adj[:, j, i] = bit
    return adj


def adjacency_to_masks(adj):
    n = adj.shape[1]
    out = np.zeros(adj.shape[0], dtype=np.int64)
    for t, (i, j) in enumerate(pair_index(n)):
        out |= adj[:, i, j].astype(np.int64) << t
    return out


def batch_eigenvalues(adj):
    """Descending eigenvalues of each adjacency matrix in the batch."""
    return np.linalg.eigvalsh(adj.astype(np.float64))[:, ::-1]


def batch_complement(adj):
    n = adj.shape[1]
    return (1 - adj - np.eye(n, dtype=np.uint8)[None]).astype(np.uint8)


def neighbour_masks(adj):
    n = adj.shape[1]
    w = (1 << np.arange(n, dtype=np.int64))
    return (adj.astype(np.int64) * w[None, None, :]).sum(axis=2)


def _independent_subsets(nb):
    """indep[b, S] for every vertex subset S (bitmask), from neighbour masks."""
    count, n = nb.shape
    size = 1 << n
    indep = np.zeros((count, size), dtype=bool)
    indep[:, 0] = True
    for s in range(1, size):
        v = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        indep[:, s] = indep[:, rest] & ((nb[:, v] & rest) == 0)
    return indep


def batch_chromatic(adj):
    """Exact chromatic numbers by counting k-covers with independent sets.

    The number of ordered k-tuples of independent sets covering V is
    sum_S (-1)^{n-|S|} i(S)^k, where i(S) counts independent subsets of S.
    """
    count, n = adj.shape[0], adj.shape[1]
    if n == 0:
        return np.zeros(count, dtype=np.int64)
    indep = _independent_subsets(neighbour_masks(adj)).astype(np.int64)
    size = 1 << n
    # zeta transform over subsets
    for v in range(n):
        bit = 1 << v
        idx = np.array([s for s in range(size) if s & bit])
        indep[:, idx] += indep[:, idx ^ bit]
    pop = np.array([bin(s).count("1") for s in range(size)])
    sign = np.where((n - pop) % 2 == 0, 1, -1).astype(object if n > 9 else np.int64)
    chi = np.full(count, n, dtype=np.int64)
    done = np.zeros(count, dtype=bool)
    power = np.ones_like(indep)
    for k in range(1, n + 1):
        power = power * indep
        covers = (power * sign[None, :]).sum(axis=1)
        hit = (covers > 0) & ~done
        chi[hit] = k
        done |= hit
        if done.all():
            break
    return chi


def batch_clique(adj):
    """Clique numbers as largest independent sets of the complements."""
    count, n = adj.shape[0], adj.shape[1]
    if n == 0:
        return np.zeros(count, dtype=np.int64)
    indep = _independent_subsets(neighbour_masks(batch_complement(adj)))
    pop = np.array([bin(s).count("1") for s in range(1 << n)])
    return np.max(np.where(indep, pop[None, :], 0), axis=1)


def batch_connected(adj):
    count, n = adj.shape[0], adj.shape[1]
    nb = neighbour_masks(adj)
    reach = np.ones(count, dtype=np.int64)
    for _ in range(n - 1):
        grow = reach.copy()
        for v in range(n):
            grow |= np.where((reach >> v) & 1 == 1, nb[:, v], 0)
        if np.array_equal(grow, reach):
            break
        reach = grow
    return reach == (1 << n) - 1


# ---- exact single-graph chromatic and clique numbers ----

def clique_number(g):
    """Bron-Kerbosch with pivoting on bitmask neighbourhoods."""
    if g.n > 16:
        raise ArgumentError("clique_number is limited to order <= 16")
    return _clique(g)


def _clique(g):
    n = g.n
    if n == 0:
        return 0
    nb = [sum(1 << int(u) for u in np.nonzero(row)[0]) for row in g.adjacency]
    best = 0

    def expand(size, cand, excl):
        nonlocal best
        if cand == 0:
            if excl == 0:
                best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        pivot_pool = cand | excl
        u = max((v for v in range(n) if pivot_pool >> v & 1), key=lambda v: bin(cand & nb[v]).count("1"))
        rest = cand & ~nb[u]
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            expand(size + 1, cand & nb[v], excl & nb[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << n) - 1, 0)
    return best


def chromatic_number(g):
    """Branch and bound colouring (DSATUR order), seeded with the clique bound."""
    if g.n > 16:
        raise ArgumentError("chromatic_number is limited to order <= 16")
    return colouring_number(g)


def colouring_number(g):
    """Exact chromatic number without the order cap; fast on structured inputs
    such as the supports of r-partite matrices."""
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    adj = [np.nonzero(g.adjacency[v])[0].tolist() for v in range(n)]
    lower = _clique(g)
    colour = [-1] * n
    best = n

    def greedy_bound():
        col = [-1] * n
        for v in sorted(range(n), key=lambda v: -len(adj[v])):
            used = {col[u] for u in adj[v]}
            c = 0
            while c in used:
                c += 1
            col[v] = c
        return max(col) + 1

    best = greedy_bound()

    def pick():
        best_v, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                sat = len({colour[u] for u in adj[v] if colour[u] >= 0})
                k = (sat, len(adj[v]))
                if key is None or k > key:
                    best_v, key = v, k
        return best_v

    def solve(coloured, used):
        nonlocal best
        if best == lower:
            return
        if coloured == n:
            best = min(best, used)
            return
        v = pick()
        forbidden = {colour[u] for u in adj[v]}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colour[v] = c
            solve(coloured + 1, max(used, c + 1))
            colour[v] = -1

    solve(0, 0)
    return best


# ---- objectives ----

_OBJ_RE = re.compile(r"^([a-z_]+)(?:[(:]\s*([-+0-9.eE]+)\s*\)?)?$")
_PARAM_OBJECTIVES = {"kyfan": int, "schatten": float, "energy_krfree": int, "energy_rpartite": int,
                     "kyfan_tree": int, "schatten_tree": float}
_PLAIN_OBJECTIVES = {"energy", "ng_energy_sum", "spread", "flat_tail"}


@dataclass(frozen=True)
class Objective:
    id: str
    param: float | int | None = None

    @classmethod
    def parse(cls, text):
        if isinstance(text, Objective):
            return text
        m = _OBJ_RE.match(str(text).strip())
        if not m:
            raise ArgumentError(f"cannot parse objective {text!r}")
        name, arg = m.group(1), m.group(2)
        if name in _PLAIN_OBJECTIVES:
            if arg is not None:
                raise ArgumentError(f"objective {name} takes no parameter")
            return cls(name)
        if name not in _PARAM_OBJECTIVES:
            raise ArgumentError(f"unknown objective {name!r}")
        if arg is None:
            raise ArgumentError(f"objective {name} needs a parameter, e.g. {name}(2)")
        conv = _PARAM_OBJECTIVES[name]
        try:
            val = conv(arg) if conv is float else int(float(arg))
        except ValueError:
            raise ArgumentError(f"bad parameter {arg!r} for {name}") from None
        if conv is int and float(arg) != val:
            raise ArgumentError(f"{name} needs an integer parameter")
        obj = cls(name, val)
        obj.validate()
        return obj

    def validate(self, n=None):
        if self.id in ("kyfan", "kyfan_tree") and (self.param < 1 or (n is not None and self.param > n)):
            raise ArgumentError(f"kyfan index must lie in [1, n], got {self.param}")
        if self.id in ("schatten", "schatten_tree") and not self.param >= 1:
            raise ArgumentError("Schatten exponent must be >= 1")
        if self.id in ("energy_krfree", "energy_rpartite") and self.param < 1:
            raise ArgumentError("r must be positive")

    @property
    def trees(self):
        return self.id.endswith("_tree")

    def __str__(self):
        return self.id if self.param is None else f"{self.id}({self.param})"

    def evaluate(self, adj):
        """Objective values for a batch of adjacency matrices (-inf when excluded)."""
        eig = batch_eigenvalues(adj)
        sv = np.sort(np.abs(eig), axis=1)[:, ::-1]
        name, p = self.id, self.param
        if name in ("energy",):
            return sv.sum(axis=1)
        if name in ("kyfan", "kyfan_tree"):
            return sv[:, :p].sum(axis=1)
        if name in ("schatten", "schatten_tree"):
            return batch_schatten(sv, p)
        if name == "ng_energy_sum":
            ce = batch_eigenvalues(batch_complement(adj))
            return sv.sum(axis=1) + np.abs(ce).sum(axis=1)
        if name == "spread":
            return eig[:, 0] - eig[:, -1]
        if name == "energy_krfree":
            ok = batch_clique(adj) <= p
            return np.where(ok, sv.sum(axis=1), -np.inf)
        if name == "energy_rpartite":
            ok = batch_chromatic(adj) <= p
            return np.where(ok, sv.sum(axis=1), -np.inf)
        if name == "flat_tail":
            return batch_flat_tail(sv).astype(float)
        raise ArgumentError(f"unknown objective {name}")


def batch_schatten(sv, p):
    if math.isinf(p):
        return sv[:, 0]
    top = sv[:, :1]
    safe = np.where(top > 0, top, 1.0)
    return np.where(top[:, 0] > 0, safe[:, 0] * np.sum((sv / safe) ** p, axis=1) ** (1.0 / p), 0.0)


def batch_flat_tail(sv, rel=1e-8):
    if sv.shape[1] <= 2:
        return np.ones(sv.shape[0], dtype=bool)
    tail = sv[:, 1:]
    return (tail.max(axis=1) - tail.min(axis=1)) <= rel * sv[:, 0]


# ---- results ----

@dataclass
class SearchResult:
    n: int
    objective: str
    mode: str
    best: float | None
    witnesses: list
    examined: int
    seed: int | None = None
    minimize: bool = False
    connected_only: bool = False
    witness_count: int = 0
    wall_time: float = 0.0
    partitions: int = 1
    complete: bool = True

    def as_dict(self, timing=True):
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
            d.pop("partitions")
        return d

    def to_json(self, timing=True, **kw):
        return json.dumps(self.as_dict(timing), sort_keys=True, **kw)

    def witness_graphs(self):
        from .graphs import parse_graph6
        return [parse_graph6(s) for s in self.witnesses]


def _bit_reverse_keys(masks, npairs):
    """Integer key whose order equals graph6 string order for a fixed n."""
    rev = np.zeros_like(masks)
    for t in range(npairs):
        rev |= ((masks >> t) & 1) << (npairs - 1 - t)
    return rev


class _Frontier:
    """Best value so far with every tying candidate (as masks or adjacency)."""

    def __init__(self):
        self.best = -np.inf
        self.cands = []  # list of (values, items)
        self.examined = 0

    def tol(self, best):
        return TIE_REL * max(abs(best), 1.0) if np.isfinite(best) else 0.0

    def add(self, values, items):
        self.examined += len(values)
        if len(values) == 0:
            return
        top = float(np.max(values))
        if not np.isfinite(top) or top < self.best - self.tol(self.best):
            return
        keep = values >= top - self.tol(top)
        self.cands.append((values[keep], items[keep]))
        if top > self.best:
            self.best = top
            self._prune()

    def _prune(self):
        lim = self.best - self.tol(self.best)
        out = []
        for v, it in self.cands:
            keep = v >= lim
            if keep.any():
                out.append((v[keep], it[keep]))
        self.cands = out

    def merge(self, other):
        self.examined += other.examined
        if other.best > self.best:
            self.best = other.best
        self.cands.extend(other.cands)
        self._prune()


def _finish(front, n, objective, mode, seed, minimize, connected_only, t0, parts, complete=True):
    best = front.best
    wit = []
    count = 0
    if np.isfinite(best):
        items = np.concatenate([it for _, it in front.cands])
        count = len(items)
        if items.ndim == 1:
            keys = _bit_reverse_keys(items, num_pairs(n))
            order = np.argsort(keys, kind="stable")[:WITNESS_CAP]
            wit = [emit_graph6(Graph.from_mask(n, int(items[i]))) for i in order]
        else:
            strings = sorted({emit_graph6(Graph(a, check=False)) for a in items})
            count = len(strings)
            wit = strings[:WITNESS_CAP]
    value = None if not np.isfinite(best) else (-best if minimize else best)
    return SearchResult(n, str(objective), mode, value, wit, front.examined, seed, minimize,
                        connected_only, count, time.perf_counter() - t0, parts, complete)


def _partition_ranges(total, partitions):
    """Split [0, total) by the leading mask bits into `partitions` contiguous blocks."""
    bits = max(0, math.ceil(math.log2(max(partitions, 1))))
    blocks = 1 << bits
    size = max(1, total // blocks)
    edges = [min(i * size, total) for i in range(blocks)] + [total]
    per = [[] for _ in range(partitions)]
    for b in range(blocks):
        if edges[b] < edges[b + 1]:
            per[b % partitions].append((edges[b], edges[b + 1]))
    return per


class _Budget:
    def __init__(self, max_graphs=None, max_seconds=None):
        self.max_graphs = max_graphs
        self.deadline = None if max_seconds is None else time.perf_counter() + max_seconds

    def exceeded(self, examined):
        if self.max_graphs is not None and examined >= self.max_graphs:
            return True
        return self.deadline is not None and time.perf_counter() > self.deadline


def _score(objective, adj, minimize, connected_only):
    vals = objective.evaluate(adj)
    if minimize:
        vals = np.where(np.isfinite(vals), -vals, -np.inf)
    if connected_only:
        vals = np.where(batch_connected(adj), vals, -np.inf)
    return vals


def extremal_search(n, objective, mode="exhaustive", trials=None, seed=None, partitions=1,
                    threads=None, minimize=False, connected_only=False, max_graphs=None,
                    max_seconds=None, chunk=CHUNK):
    """Maximum (or minimum) of an objective over labeled graphs (or trees) of order n.

    Exhaustive mode splits the mask space by its leading bits into `partitions`
    blocks; the merged result does not depend on the partition count.  Sampled
    mode draws `trials` uniform graphs (or Prufer sequences) from PCG64(seed).
    """
    obj = Objective.parse(objective)
    obj.validate(n)
    if n < 1:
        raise ArgumentError("n must be positive")
    if mode not in ("exhaustive", "sampled"):
        raise ArgumentError("mode must be 'exhaustive' or 'sampled'")
    if partitions < 1:
        raise ArgumentError("partitions must be positive")
    threads = default_threads() if threads is None else threads
    t0 = time.perf_counter()
    budget = _Budget(max_graphs, max_seconds)
    if mode == "exhaustive":
        limit = MAX_EXHAUSTIVE_TREES if obj.trees else MAX_EXHAUSTIVE_GRAPHS
        if n > limit:
            raise ArgumentError(f"exhaustive search is limited to n <= {limit}; use --sample")
        if obj.trees and n < 2:
            raise ArgumentError("tree objectives need n >= 2")
        total = n ** (n - 2) if obj.trees else 1 << num_pairs(n)

        def run(ranges):
            front = _Frontier()
            for lo, hi in ranges:
                for s in range(lo, hi, chunk):
                    e = min(s + chunk, hi)
                    if obj.trees:
                        adj = prufer_to_adjacency(n, prufer_sequences(n, s, e))
                        items = adjacency_to_masks(adj)
                    else:
                        items = np.arange(s, e, dtype=np.int64)
                        adj = masks_to_adjacency(n, items)
                    front.add(_score(obj, adj, minimize, connected_only), items)
                    if budget.exceeded(front.examined):
                        return front, False
            return front, True

        groups = _partition_ranges(total, partitions)
        with ThreadPoolExecutor(max_workers=max(1, min(threads, partitions))) as pool:
            outs = list(pool.map(run, groups))
        front = _Frontier()
        complete = True
        for f, ok in outs:
            front.merge(f)
            complete &= ok
        res = _finish(front, n, obj, mode, None, minimize, connected_only, t0, partitions, complete)
        if not complete:
            raise BudgetExceeded(f"budget exhausted after {front.examined} graphs", res)
        return res

    if trials is None or trials < 1:
        raise ArgumentError("sampled mode needs trials >= 1")
    if seed is None:
        raise ArgumentError("sampled mode needs a seed")
    rng = np.random.Generator(np.random.PCG64(seed))
    front = _Frontier()
    npairs = num_pairs(n)
    done = 0
    complete = True
    while done < trials:
        cnt = min(chunk, trials - done)
        if obj.trees:
            seq = rng.integers(0, n, size=(cnt, max(n - 2, 0)))
            adj = prufer_to_adjacency(n, seq)
        else:
            bits = rng.integers(0, 2, size=(cnt, npairs), dtype=np.uint8)
            adj = np.zeros((cnt, n, n), dtype=np.uint8)
            iu = np.array(pair_index(n)).reshape(-1, 2)
            if npairs:
                adj[:, iu[:, 0], iu[:, 1]] = bits
                adj[:, iu[:, 1], iu[:, 0]] = bits
        front.add(_score(obj, adj, minimize, connected_only), adj)
        done += cnt
        if budget.exceeded(front.examined):
            complete = done >= trials
            break
    res = _finish(front, n, obj, mode, seed, minimize, connected_only, t0, 1, complete)
    if not complete:
        raise BudgetExceeded(f"budget exhausted after {front.examined} samples", res)
    return res


# ---- structural hunts and sweeps ----

def graph_batches(n, chunk=CHUNK, connected_only=False):
    """(masks, adjacency) batches covering every labeled graph of order n."""
    if n > MAX_EXHAUSTIVE_GRAPHS:
        raise ArgumentError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_GRAPHS}")
    total = 1 << num_pairs(n)
    for s in range(0, total, chunk):
        masks = np.arange(s, min(s + chunk, total), dtype=np.int64)
        adj = masks_to_adjacency(n, masks)
        if connected_only:
            keep = batch_connected(adj)
            masks, adj = masks[keep], adj[keep]
        yield masks, adj


def tree_batches(n, chunk=CHUNK):
    if not 2 <= n <= MAX_EXHAUSTIVE_TREES:
        raise ArgumentError(f"tree enumeration needs 2 <= n <= {MAX_EXHAUSTIVE_TREES}")
    total = n ** (n - 2)
    for s in range(0, total, chunk):
        yield prufer_to_adjacency(n, prufer_sequences(n, s, s + chunk))


@dataclass
class FlatTailGraph:
    graph6: str
    regular: bool
    connected: bool


def flat_tail_hunt(n, rel=1e-8):
    """All labeled graphs of order n with sigma_2 = ... = sigma_n, tagged."""
    if n > 7:
        raise ArgumentError("flat_tail_hunt is exhaustive and limited to n <= 7")
    out = []
    for masks, adj in graph_batches(n):
        sv = np.sort(np.abs(batch_eigenvalues(adj)), axis=1)[:, ::-1]
        hit = batch_flat_tail(sv, rel)
        if not hit.any():
            continue
        conn = batch_connected(adj[hit])
        deg = adj[hit].sum(axis=2)
        reg = np.all(deg == deg[:, :1], axis=1)
        for mk, c, r in zip(masks[hit], conn, reg):
            out.append(FlatTailGraph(emit_graph6(Graph.from_mask(n, int(mk))), bool(r), bool(c)))
    out.sort(key=lambda x: x.graph6)
    return out


def spread_vs_kyfan2(n, partitions=1):
    """Probe: maximal spread next to xi_2(n) = max ||G||_[2].  Reports, never asserts."""
    s = extremal_search(n, "spread", partitions=partitions)
    k = extremal_search(n, "kyfan(2)", partitions=partitions) if n >= 2 else s
    return {"n": n, "max_spread": s.best, "xi_2": k.best,
            "differ": bool(abs(s.best - k.best) > TIE_REL * max(abs(k.best), 1.0)),
            "spread_witnesses": s.witnesses[:5], "kyfan2_witnesses": k.witnesses[:5]}


# ---- exhaustive soundness sweep of graph bounds ----

@dataclass
class SweepCheck:
    bound_id: str
    params: dict = field(default_factory=dict)

    @property
    def label(self):
        if not self.params:
            return self.bound_id
        return self.bound_id + "(" + ",".join(f"{k}={v}" for k, v in sorted(self.params.items())) + ")"


@dataclass
class SweepTally:
    label: str
    checked: int = 0
    violations: int = 0
    equalities: int = 0
    min_rel_slack: float = math.inf
    first_violation: str | None = None
    nonsquare_equalities: int = 0


def default_sweep_checks(n):
    """The graph bound checks of the exhaustive soundness sweep for order n."""
    checks = [SweepCheck("KM_GRAPH")]
    checks += [SweepCheck("KYFAN_GRAPH", {"k": k}) for k in range(2, n + 1)]
    checks += [SweepCheck("CAP"), SweepCheck("HOFFMAN_KYFAN")]
    checks += [SweepCheck("GHK_SPREAD", {"variant": v}) for v in ("mid", "edges", "triangle_free")] if n >= 2 else []
    checks += [SweepCheck("SCH_GRAPH_UP", {"p": p}) for p in (1.0, 1.5)]
    checks += [SweepCheck("SCH_EDGE_LO", {"p": p, "variant": "lambda"}) for p in (3.0, 4.0)]
    checks += [SweepCheck("HOLDER", {"p": 4.0, "q": 1.0, "alpha": 1 / 3, "beta": 2 / 3})]
    checks += [SweepCheck("COMPLEMENT_DIFF", {"variant": v}) for v in ("abs", "radius", "radius_comp")]
    return checks


def soundness_sweep(n, checks=None, chunk=1 << 17):
    """Evaluate graph bounds over every labeled graph of order n with array formulas."""
    from .bounds import BatchFeatures, evaluate_batch, tolerance
    checks = default_sweep_checks(n) if checks is None else checks
    tallies = {c.label: SweepTally(c.label) for c in checks}
    for masks, adj in graph_batches(n, chunk):
        eig = batch_eigenvalues(adj)
        comp_eig = batch_eigenvalues(batch_complement(adj))
        edges = adj.sum(axis=(1, 2)) // 2
        feats = BatchFeatures(n, eig, edges, comp_eig, batch_chromatic(adj), batch_clique(adj))
        for c in checks:
            lhs, rhs, ok = evaluate_batch(c.bound_id, feats, c.params)
            t = tallies[c.label]
            slack = rhs - lhs
            tol = tolerance(rhs)
            t.checked += int(ok.sum())
            bad = ok & (slack < -tol)
            eq = ok & (np.abs(slack) <= tol)
            t.violations += int(bad.sum())
            t.equalities += int(eq.sum())
            if ok.any():
                t.min_rel_slack = min(t.min_rel_slack, float(np.min((slack / np.maximum(1, np.abs(rhs)))[ok])))
            if bad.any() and t.first_violation is None:
                t.first_violation = emit_graph6(Graph.from_mask(n, int(masks[bad][0])))
            if c.bound_id == "KYFAN_GRAPH":
                k = c.params["k"]
                if math.isqrt(k) ** 2 != k:
                    t.nonsquare_equalities += int(eq.sum())
    return list(tallies.values())
