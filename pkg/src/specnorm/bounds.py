"""Catalog of Ky Fan / Schatten norm inequalities with equality verdicts.

Every inequality is stored in the form lhs <= rhs.  For lower bounds on a norm
the bound expression is the lhs and the norm is the rhs, so slack = rhs - lhs
is nonnegative exactly when the inequality holds.

Formulas read their inputs from a feature object: either ``Features`` (one
subject, computed lazily) or ``BatchFeatures`` (arrays over many graphs, used by
the exhaustive sweeps).  The same lambdas serve both.
"""
from dataclasses import dataclass, asdict, field
from functools import cached_property
import math

import numpy as np

from . import constructions as cons
from .errors import ApplicabilityError, ArgumentError
from .graphs import Graph, complement
from .norms import NormSubject
from .spectra import singular_value_array

FLAT_REL = 1e-8
ZERO_REL = 1e-10


def tolerance(rhs):
    return 1e-9 * np.maximum(1.0, np.abs(rhs))


def _sqrt(x):
    return np.sqrt(np.maximum(x, 0.0))


def _pow(x, p):
    return np.power(np.maximum(x, 0.0), p)


def kf(sv, k):
    return np.sum(sv[..., :k], axis=-1)


def psum(sv, p):
    """sum sigma_i^p, scaled for stability."""
    top = sv[..., :1]
    safe = np.where(top > 0, top, 1.0)
    return np.where(top[..., 0] > 0, safe[..., 0] ** p * np.sum((sv / safe) ** p, axis=-1), 0.0)


def pnorm(sv, p):
    return _pow(psum(sv, p), 1.0 / p)


def is_flat(values, top, rel=FLAT_REL):
    """All given values equal within rel * top."""
    if len(values) <= 1:
        return True
    return float(np.max(values) - np.min(values)) <= rel * max(float(top), 1e-300)


# ---- features ----

class Features:
    """Spectral and structural data of one subject, computed on demand."""

    def __init__(self, subject, partition=None):
        self.subject = NormSubject.of(subject)
        a = self.subject.matrix
        self.transposed = a.shape[0] > a.shape[1]
        self.M = a.T if self.transposed else a
        self.m, self.n = self.M.shape
        self.graph = self.subject.graph
        self.partition = partition

    @cached_property
    def sv(self):
        return np.asarray(self.subject.sv)

    @cached_property
    def fro2(self):
        return float(np.sum(self.M ** 2))

    @cached_property
    def trace(self):
        return float(np.sum(self.sv))

    @cached_property
    def rowsum(self):
        return self.M.sum(axis=1)

    @cached_property
    def colsum(self):
        return self.M.sum(axis=0)

    @cached_property
    def total(self):
        return float(self.M.sum())

    @cached_property
    def e(self):
        return self.graph.m

    @cached_property
    def eig(self):
        return np.asarray(self.subject.eigenvalues)

    @cached_property
    def lam1(self):
        return float(self.eig[0])

    @cached_property
    def chi(self):
        from .search import chromatic_number
        return chromatic_number(self.graph)

    @cached_property
    def omega(self):
        from .search import clique_number
        return clique_number(self.graph)

    @cached_property
    def comp(self):
        return complement(self.graph)

    @cached_property
    def comp_sv(self):
        return singular_value_array(self.comp.adjacency.astype(float))

    @cached_property
    def comp_lam1(self):
        return float(np.linalg.eigvalsh(self.comp.adjacency.astype(float))[-1])

    def sv_of(self, mat):
        return singular_value_array(np.asarray(mat, dtype=float))

    @cached_property
    def J(self):
        return np.ones_like(self.M)

    @cached_property
    def sv_jma(self):
        return self.sv_of(self.J - self.M)

    @cached_property
    def sv_jima(self):
        return self.sv_of(self.J - np.eye(self.n) - self.M)

    @cached_property
    def sv_shift(self):
        return self.sv_of(self.M + np.eye(self.n) / 2)

    @cached_property
    def sv_shiftc(self):
        return self.sv_of(self.J - self.M - np.eye(self.n) / 2)

    def walks(self, k):
        from .norms import closed_walks_2k
        return closed_walks_2k(self.subject, k)

    # structural predicates (single subject only)
    @cached_property
    def int01(self):
        a = self.M
        return bool(np.all((np.abs(a) <= 1e-6) | (np.abs(a - 1) <= 1e-6)))

    @cached_property
    def nonneg(self):
        return bool(np.all(self.M >= -1e-12))

    @cached_property
    def max_abs(self):
        return float(np.max(np.abs(self.M)))

    @cached_property
    def rank(self):
        return int(np.sum(self.sv > ZERO_REL * max(self.sv[0], 1.0)))

    def support_chi(self):
        """Least r such that the (square) matrix is r-partite."""
        a = self.subject.matrix
        supp = ((np.abs(a) > 1e-12) | (np.abs(a.T) > 1e-12)).astype(np.uint8)
        np.fill_diagonal(supp, 0)
        from .search import colouring_number
        return colouring_number(Graph(supp, check=False))

    @cached_property
    def support_chi_value(self):
        return self.support_chi()


class BatchFeatures:
    """Arrays over a batch of graphs of one order (rows = graphs)."""

    def __init__(self, n, eig, edges, comp_eig=None, chi=None, omega=None):
        self.m = self.n = n
        self.graph = True
        self.eig = eig
        self.sv = np.sort(np.abs(eig), axis=1)[:, ::-1]
        self.e = edges.astype(float)
        self.fro2 = 2.0 * self.e
        self.trace = self.sv.sum(axis=1)
        self.lam1 = eig[:, 0]
        if comp_eig is not None:
            self.comp_sv = np.sort(np.abs(comp_eig), axis=1)[:, ::-1]
            self.comp_lam1 = comp_eig[:, 0]
        self.chi = chi
        self.omega = omega

    def walks(self, k):
        return np.rint(np.sum(self.eig ** (2 * k), axis=1))


# ---- structural characterisations ----

def flat_tail(f, start=1, stop=None):
    sv = f.sv
    stop = len(sv) if stop is None else stop
    return is_flat(sv[start:stop], sv[0] if len(sv) else 0.0)


def nonzero_flat(f, start=0):
    """All nonzero singular values from index start on are equal."""
    sv = f.sv
    if len(sv) == 0 or sv[0] == 0:
        return True
    nz = sv[start:][sv[start:] > ZERO_REL * sv[0]]
    return is_flat(nz, sv[0])


def exactly_k_equal(f, k, value=None):
    sv = f.sv
    top = max(float(sv[0]), 1e-300)
    nz = int(np.sum(sv > ZERO_REL * max(top, 1.0)))
    if nz != k:
        return False
    if value is not None and abs(sv[0] - value) > FLAT_REL * max(value, 1.0):
        return False
    return is_flat(sv[:k], top)


def _h(f):
    """2A - J as an integer matrix, or None when A is not 0/1."""
    if not f.int01:
        return None
    return 2 * np.rint(f.M).astype(np.int64) - 1


def complete_multipartite_parts(g):
    """Number of parts if the non-isolated part of g is complete multipartite, else None."""
    a = g.adjacency.astype(bool)
    keep = a.any(axis=1)
    a = a[np.ix_(keep, keep)]
    n = a.shape[0]
    if n == 0:
        return 0
    label = -np.ones(n, dtype=int)
    parts = 0
    for u in range(n):
        if label[u] >= 0:
            continue
        same = ~a[u]
        if np.any(label[same] >= 0):
            return None
        label[same] = parts
        parts += 1
    for u in range(n):
        for v in range(u + 1, n):
            if (label[u] == label[v]) == bool(a[u, v]):
                return None
    return parts


def is_complete_multipartite(g):
    """Complete multipartite with every vertex in a part (no isolated vertices unless g = K_1)."""
    if g.n == 1:
        return True
    if np.any(g.degrees == 0):
        return False
    return complete_multipartite_parts(g) is not None


def _sigma1_rows_equality(f):
    """sigma_1 = sum|r_i| / sqrt(mn) exactly when |r_i| is constant, r = rho*s for a
    sign vector s, and A^T s is constant."""
    r = f.rowsum
    scale = max(1.0, f.max_abs) * f.n
    if np.all(np.abs(r) <= 1e-9 * scale):
        return f.max_abs <= 1e-12
    if np.ptp(np.abs(r)) > 1e-9 * scale:
        return False
    s = np.where(r >= 0, 1.0, -1.0)
    return bool(np.ptp(f.M.T @ s) <= 1e-9 * scale)


def _ks_matrix(f):
    """|A| equals the adjacency of T_r(n) under some labelling."""
    a = np.abs(f.M)
    if not np.all((np.abs(a) <= 1e-6) | (np.abs(a - 1) <= 1e-6)):
        return None
    b = np.rint(a).astype(np.uint8)
    if not np.array_equal(b, b.T) or np.any(np.diag(b)):
        return None
    g = Graph(b, check=False)
    parts = complete_multipartite_parts(g)
    if parts is None or np.any(g.degrees == 0) and g.n > 1:
        return None
    return g


def _is_turan(f, r):
    g = _ks_matrix(f)
    if g is None:
        return False
    return (complete_multipartite_parts(g) == r and g.m == cons.turan_edges(f.n, r)) or (
        r >= f.n and g.m == cons.turan_edges(f.n, f.n))


def _km0_char(f):
    g = f.graph
    n = g.n
    if g == _perfect_matching(n):
        return True
    if g.m == n * (n - 1) // 2:
        return True
    return cons.design_graph_check(g) is not None


def _perfect_matching(n):
    if n % 2:
        return None
    return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


# ---- entry and report types ----

@dataclass(frozen=True)
class BoundEntry:
    id: str
    statement: str
    name: str
    lhs: object
    rhs: object
    requires: tuple = ()
    domain: object = None
    domain_text: str = ""
    defaults: dict = field(default_factory=dict)
    check_params: object = None
    characterization: object = None
    universal: bool = True
    observational_domain: bool = False
    note: str = ""


@dataclass
class BoundReport:
    id: str
    params: dict
    statement: str
    lhs: float
    rhs: float
    slack: float
    satisfied: bool
    equality: bool
    equality_verdict: str
    observational: bool = False
    details: dict = field(default_factory=dict)

    def as_dict(self):
        return asdict(self)


# ---- requirement predicates ----

def _req_graph(f, P):
    return f.graph is not None


def _req_square(f, P):
    return f.m == f.n


def _req_nonneg(f, P):
    return f.nonneg


def _req_max1(f, P):
    return f.max_abs <= 1 + 1e-12


def _req_zero_diag(f, P):
    return f.m == f.n and bool(np.all(np.abs(np.diag(f.M)) <= 1e-12))


def _req_symmetric(f, P):
    return f.m == f.n and bool(np.all(np.abs(f.M - f.M.T) <= 1e-12))


def _req_01(f, P):
    return f.int01


def _req_rpartite(f, P):
    if not (f.m == f.n and np.all(np.abs(np.diag(f.M)) <= 1e-12)):
        return False
    r = P["r"]
    return 2 <= r <= f.n and f.support_chi_value <= r


def _req_bipartite(f, P):
    return f.graph is not None and f.chi <= 2


def _req_complete_multipartite(f, P):
    return f.graph is not None and is_complete_multipartite(f.graph)


def _req_conference_graph(f, P):
    return f.graph is not None and cons.is_conference_graph(f.graph)


def _req_complete(f, P):
    return f.graph is not None and f.graph.n >= 2 and f.graph.m == f.graph.n * (f.graph.n - 1) // 2


REQUIREMENTS = {
    "graph": (_req_graph, "subject must be a graph"),
    "square": (_req_square, "matrix must be square"),
    "nonneg": (_req_nonneg, "matrix must be nonnegative"),
    "max1": (_req_max1, "max-norm must be at most 1"),
    "zero_diag": (_req_zero_diag, "matrix must have zero diagonal"),
    "symmetric": (_req_symmetric, "matrix must be symmetric"),
    "01": (_req_01, "matrix must be a (0,1)-matrix"),
    "rpartite": (_req_rpartite, "matrix must be r-partite with 2 <= r <= n"),
    "bipartite": (_req_bipartite, "graph must be bipartite"),
    "complete_multipartite": (_req_complete_multipartite, "graph must be complete multipartite"),
    "conference_graph": (_req_conference_graph, "graph must be a conference graph"),
    "complete": (_req_complete, "graph must be complete of order >= 2"),
}


# ---- parameter checks ----

def _need_k(f, P):
    k = P.get("k")
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= f.m:
        raise ArgumentError(f"k must be an integer in [1, {f.m}], got {k}")


def _need_p_range(lo, hi, lo_open=False, hi_open=True):
    def check(f, P):
        p = P["p"]
        ok_lo = p > lo if lo_open else p >= lo
        ok_hi = True if hi is None else (p < hi if hi_open else p <= hi)
        if not (ok_lo and ok_hi):
            raise ArgumentError(f"p={p} outside the admissible range")
    return check


def _need_q_gt_p(f, P):
    if not (P["q"] > P["p"] >= 1):
        raise ArgumentError("need q > p >= 1")


def _need_p_gt_q(f, P):
    if not (P["p"] > P["q"] >= 1):
        raise ArgumentError("need p > q >= 1")


def _need_holder(f, P):
    a, b = P["alpha"], P["beta"]
    if not (P["p"] > 0 and P["q"] > 0 and a > 0 and b > 0 and abs(a + b - 1) <= 1e-12):
        raise ArgumentError("need p, q, alpha, beta > 0 and alpha + beta = 1")


def _variant(*names):
    def check(f, P):
        if P.get("variant") not in names:
            raise ArgumentError(f"variant must be one of {names}")
    return check


def _all(*checks):
    def check(f, P):
        for c in checks:
            c(f, P)
    return check


# ---- formulas shared by several entries ----

def _conv(x, m, S, p, q, rest=None):
    """x^p + (m-1)^{1-p/q} (S - x^q)^{p/q}: the flat-tail power-mean expression.

    rest, when given, is S - x^q computed without cancellation."""
    coef = (m - 1) ** (1 - p / q) if m > 1 else 0.0
    rest = S - _pow(x, q) if rest is None else rest
    return _pow(x, p) + coef * _pow(rest, p / q)


def tail_psum(sv, q):
    """sum_{i >= 2} sigma_i^q straight from the spectrum."""
    return np.sum(sv[..., 1:] ** q, axis=-1)


def _tail_minus(f, x, q):
    """||A||_q^q - x^q written as tail + (sigma_1^q - x^q).

    A rounding-level gap between x and sigma_1 is treated as zero, since the
    fractional power taken afterwards would inflate it to about 1e-8."""
    s1 = f.sv[..., 0]
    close = np.abs(s1 - x) <= 1e-12 * np.maximum(s1, 1)
    gap = np.where(close, 0.0, s1 ** q - np.abs(x) ** q)
    return np.maximum(tail_psum(f.sv, q) + gap, 0.0)


def _fro2_minus(f, c):
    return _tail_minus(f, c, 2)


def _c_abs_rows(f):
    return np.sum(np.abs(f.rowsum)) / math.sqrt(f.m * f.n)


def _c_total(f):
    return abs(f.total) / math.sqrt(f.m * f.n)


def _rpart_r(f, P):
    return P["r"]


def _kyfan_graph_char(f, P):
    k = P["k"]
    g = f.graph
    h = 2 * g.adjacency.astype(np.int64) - 1
    n = g.n
    if not cons.is_regular_matrix(h):
        return False
    target = n / math.sqrt(k)
    if abs(h[0].sum() - target) > 1e-9 * n:
        return False
    hf = Features(h)
    return exactly_k_equal(hf, k, target)


def _kyfan_nonneg_char(f, P):
    k = P["k"]
    h = _h(f)
    if h is None or not cons.is_regular_matrix(h):
        return False
    target = f.n / math.sqrt(k)
    if abs(h[0].sum() - target) > 1e-9 * f.n:
        return False
    return exactly_k_equal(Features(h), k, math.sqrt(f.m * f.n / k))


def _ng_kyfan_char(f, P):
    k = P["k"]
    if not f.int01 or not cons.is_regular_matrix(f.M):
        return False
    mn = f.m * f.n
    top, rest = math.sqrt(mn) / 2, 0.5 * math.sqrt(mn / (k - 1))
    for sv in (f.sv, f.sv_jma):
        if abs(sv[0] - top) > FLAT_REL * top:
            return False
        if np.any(np.abs(sv[1:k] - rest) > FLAT_REL * top):
            return False
    return True


def _ng_operator_char(f, P):
    m, n = f.m, f.n
    if (m * n) % 2 or not f.int01:
        return False
    a = np.rint(f.M).astype(int)
    if a.sum() != m * n // 2:
        return False
    cols = a.any(axis=0).sum()
    rows = a.any(axis=1).sum()
    return (n % 2 == 0 and cols == n // 2 and np.all(a[:, a.any(axis=0)] == 1)) or (
        m % 2 == 0 and rows == m // 2 and np.all(a[a.any(axis=1), :] == 1))


def _ng_rect_char(f, P):
    h = _h(f)
    if h is None:
        return False
    if np.any(h.sum(axis=0) != 0) or np.any(h.sum(axis=1) != 0):
        return False
    m, n = f.m, f.n
    sv = singular_value_array(h.astype(float))
    t = math.sqrt(m * n / (m - 1))
    return bool(np.all(np.abs(sv[: m - 1] - t) <= FLAT_REL * t))


def _ng2_char(f, P):
    if not f.int01:
        return False
    n = f.n
    a = np.rint(f.M).astype(int)
    if np.any(2 * a.sum(axis=0) != n - 1) or np.any(2 * a.sum(axis=1) != n - 1):
        return False
    t = math.sqrt(n) / 2
    return bool(np.all(np.abs(f.sv_shift[1:] - t) <= FLAT_REL * max(t, 1)))


def _holder_char(f, P):
    if abs(P["alpha"] * P["p"] - P["beta"] * P["q"]) <= 1e-12:
        return True
    return nonzero_flat(f)


def _rank2(f, P):
    if f.m < 2:
        return False
    return f.sv[..., 1] > ZERO_REL * np.maximum(f.sv[..., 0], 1)


# ---- the catalog ----

def _entries():
    E = []

    def add(**kw):
        E.append(BoundEntry(**kw))

    add(id="KM_GRAPH", statement="E(G) <= n sqrt(n)/2 + n/2",
        name="Koolen-Moulton energy bound",
        requires=("graph",),
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: f.n * math.sqrt(f.n) / 2 + f.n / 2,
        characterization=lambda f, P: cons.is_regular_symmetric_hadamard_minus_diag(
            2 * f.graph.adjacency.astype(np.int64) - 1, positive=True))

    add(id="NONNEG_SQ", statement="||A||_* <= n sqrt(n)/2 + n/2 for nonnegative A, ||A||_max <= 1",
        name="Koolen-Moulton bound for nonnegative matrices", requires=("square", "nonneg", "max1"),
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: f.n * math.sqrt(f.n) / 2 + f.n / 2,
        characterization=lambda f, P: _h(f) is not None and cons.is_regular_hadamard(_h(f), positive=True))

    add(id="HAD_SQ", statement="||A||_* <= n sqrt(n) for ||A||_max <= 1",
        name="Hadamard trace-norm bound", requires=("square", "max1"),
        lhs=lambda f, P: f.trace, rhs=lambda f, P: f.n * math.sqrt(f.n),
        characterization=lambda f, P: cons.is_hadamard(f.M))

    add(id="PART_HAD", statement="||A||_* <= m sqrt(n) for m x n, m <= n, ||A||_max <= 1",
        name="partial Hadamard trace-norm bound", requires=("max1",),
        lhs=lambda f, P: f.trace, rhs=lambda f, P: f.m * math.sqrt(f.n),
        characterization=lambda f, P: cons.is_partial_hadamard(f.M))

    add(id="CONF", statement="||A||_* <= n sqrt(n-1) for zero diagonal, ||A||_max <= 1",
        name="conference trace-norm bound", requires=("square", "zero_diag", "max1"),
        domain=lambda f, P: f.n >= 2, domain_text="n >= 2",
        lhs=lambda f, P: f.trace, rhs=lambda f, P: f.n * math.sqrt(f.n - 1),
        characterization=lambda f, P: cons.is_conference(f.M))

    add(id="MCCLELLAND", statement="||A||_* <= sqrt(m) ||A||_2",
        name="McClelland bound",
        lhs=lambda f, P: f.trace, rhs=lambda f, P: _sqrt(f.m * f.fro2),
        characterization=lambda f, P: flat_tail(f, 0),
        note="the bound is sqrt(m) ||A||_2, not sqrt(m ||A||_2)")

    def b1_x(f, P):
        return f.sv[..., 0] if P.get("c") is None else P["c"]

    def b1_domain(f, P):
        c = P.get("c")
        if c is None:
            return True
        return (c <= f.sv[0] * (1 + 1e-12)) and (c >= _sqrt(f.fro2 / f.m) * (1 - 1e-12))

    add(id="B1", statement="||A||_* <= s + sqrt((m-1)(||A||_2^2 - s^2)) with s = sigma_1 (or a lower bound c)",
        name="sigma_1 refinement of McClelland", defaults={"c": None},
        domain=b1_domain, domain_text="c must satisfy ||A||_2/sqrt(m) <= c <= sigma_1",
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: b1_x(f, P) + _sqrt((f.m - 1) * (
            tail_psum(f.sv, 2) if P.get("c") is None else _fro2_minus(f, P["c"]))),
        characterization=lambda f, P: flat_tail(f) and (
            P.get("c") is None or abs(P["c"] - f.sv[0]) <= FLAT_REL * f.sv[0]))

    def s1_lhs(f, P):
        v = P["variant"]
        if v == "rows":
            return _sqrt(np.sum(f.rowsum ** 2) / f.n)
        if v == "cols":
            return _sqrt(np.sum(f.colsum ** 2) / f.m)
        return _c_abs_rows(f)

    add(id="SIGMA1_LOWER", statement="sigma_1 >= sqrt(sum r_i^2 / n), sqrt(sum c_j^2 / m), sum |r_i| / sqrt(mn)",
        name="row/column lower bounds on sigma_1", defaults={"variant": "abs_rows"}, check_params=_variant("rows", "cols", "abs_rows"),
        lhs=s1_lhs, rhs=lambda f, P: f.sv[0],
        characterization=lambda f, P: (_sigma1_rows_equality(f) if P["variant"] == "abs_rows" else None))

    add(id="B2", statement="||A||_* <= C + sqrt((m-1)(||A||_2^2 - C^2)), C = sum |r_i| / sqrt(mn)",
        name="row-sum converter for the trace norm", domain=lambda f, P: f.m >= 2 and _c_abs_rows(f) >= _sqrt(f.fro2 / f.m) * (1 - 1e-12),
        domain_text="m >= 2 and sum|r_i|/sqrt(mn) >= ||A||_2/sqrt(m)",
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: _c_abs_rows(f) + _sqrt((f.m - 1) * _fro2_minus(f, _c_abs_rows(f))),
        characterization=lambda f, P: flat_tail(f) and _sigma1_rows_equality(f),
        note="requires C >= ||A||_2/sqrt(m); the hypothesis C >= sqrt(n)||A||_2 is the wrong direction")

    b3_rhs = lambda f, P: f.m * math.sqrt(f.n) / 2 + math.sqrt(f.m * f.n) / 2
    add(id="B3", statement="||A||_* <= m sqrt(n)/2 + sqrt(mn)/2 for nonnegative A, ||A||_max <= 1",
        name="rectangular Koolen-Moulton bound", requires=("nonneg", "max1"), domain=lambda f, P: f.m >= 2, domain_text="m >= 2",
        lhs=lambda f, P: f.trace, rhs=b3_rhs,
        characterization=lambda f, P: _h(f) is not None and cons.is_regular_partial_hadamard(_h(f), positive=True))

    add(id="KTR", statement="||A||_* <= m sqrt(n)/2 + sqrt(mn)/2 for (0,1)-matrices",
        name="Kharaghani-Tayfeh-Rezaie bound", requires=("01",), domain=lambda f, P: f.m >= 2,
        domain_text="m >= 2", lhs=lambda f, P: f.trace, rhs=b3_rhs,
        characterization=lambda f, P: cons.bibd_params_check(np.rint(f.M).astype(int)) is not None)

    add(id="KMB_BIPARTITE", statement="E(G) <= n sqrt(n)/(2 sqrt 2) + n/2 for bipartite G",
        name="bipartite Koolen-Moulton bound", requires=("graph", "bipartite"),
        lhs=lambda f, P: f.trace, rhs=lambda f, P: f.n * math.sqrt(f.n) / (2 * math.sqrt(2)) + f.n / 2)

    add(id="LOBO", statement="||A||_* >= sigma_1 + (||A||_2^2 - sigma_1^2) / sigma_2",
        name="trace norm lower bound from sigma_1, sigma_2", domain=_rank2,
        domain_text="rank >= 2",
        lhs=lambda f, P: f.sv[..., 0] + tail_psum(f.sv, 2) / f.sv[..., 1],
        rhs=lambda f, P: f.trace,
        characterization=lambda f, P: nonzero_flat(f, 1),
        note="equality read at spectrum level: nonzero sigma_2, sigma_3, ... all equal")

    rp = lambda f, P: 1 - 1 / P["r"]
    add(id="RPART_TRACE", statement="||A||_* <= n^{3/2} sqrt(1 - 1/r) for r-partite A, ||A||_max <= 1",
        name="r-partite trace-norm bound", requires=("square", "max1", "rpartite"), defaults={"r": None},
        lhs=lambda f, P: f.trace, rhs=lambda f, P: f.n ** 1.5 * math.sqrt(rp(f, P)),
        characterization=lambda f, P: bool(np.all(np.abs(f.sv - math.sqrt(rp(f, P) * f.n))
                                                   <= FLAT_REL * math.sqrt(f.n))))

    add(id="RPART_NONNEG", statement="||A||_* <= n^{3/2}/2 sqrt(1 - 1/r) + (1 - 1/r) n, nonnegative r-partite",
        name="r-partite trace-norm bound, nonnegative entries", requires=("square", "nonneg", "max1", "rpartite"), defaults={"r": None},
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: f.n ** 1.5 / 2 * math.sqrt(rp(f, P)) + rp(f, P) * f.n)

    def cd_lhs(f, P):
        v = P["variant"]
        if v == "abs":
            return np.abs(np.sum(f.comp_sv, axis=-1) - f.trace)
        if v == "radius":
            return f.trace - np.sum(f.comp_sv, axis=-1)
        return np.sum(f.comp_sv, axis=-1) - f.trace

    def cd_rhs(f, P):
        v = P["variant"]
        if v == "abs":
            return 2.0 * f.n - 2 + 0 * f.trace
        if v == "radius":
            return 2 * f.lam1
        return 2 * f.comp_lam1

    add(id="COMPLEMENT_DIFF", statement="|E(G') - E(G)| <= 2n - 2;  E(G) - E(G') <= 2 lambda_1(G);  E(G') - E(G) <= 2 lambda_1(G')",
        name="complement energy difference", requires=("graph",),
        defaults={"variant": "abs"}, check_params=_variant("abs", "radius", "radius_comp"),
        lhs=cd_lhs, rhs=cd_rhs,
        characterization=lambda f, P: (f.graph.m in (0, f.n * (f.n - 1) // 2)) if P["variant"] == "abs" else None,
        note="the constant is 2n-2, attained by K_n; 2n-4 fails for every complete graph")

    add(id="NG_TRACE_GRAPH", statement="||A||_* + ||J - I - A||_* <= (n-1) sqrt(n) + n - 1",
        name="Nordhaus-Gaddum energy bound", requires=("square", "symmetric", "nonneg", "zero_diag", "max1"),
        domain=lambda f, P: f.n >= 7, domain_text="n >= 7", observational_domain=True,
        lhs=lambda f, P: f.trace + np.sum(f.sv_jima),
        rhs=lambda f, P: (f.n - 1) * math.sqrt(f.n) + f.n - 1,
        characterization=lambda f, P: f.int01 and cons.is_conference_graph(
            Graph(np.rint(f.M).astype(np.uint8), check=False)))

    add(id="NG2_SHIFTED", statement="||A + I/2||_* + ||J - A - I/2||_* <= (n-1) sqrt(n) + n",
        name="Nordhaus-Gaddum bound for the shifted pair", requires=("square", "nonneg", "zero_diag", "max1"),
        lhs=lambda f, P: np.sum(f.sv_shift) + np.sum(f.sv_shiftc),
        rhs=lambda f, P: (f.n - 1) * math.sqrt(f.n) + f.n,
        characterization=_ng2_char)

    add(id="NG_TRACE_RECT", statement="||A||_* + ||J - A||_* <= sqrt(m(m-1)n) + sqrt(mn)",
        name="Nordhaus-Gaddum trace bound for 0/1 matrices", requires=("nonneg", "max1"), domain=lambda f, P: f.m >= 2, domain_text="m >= 2",
        lhs=lambda f, P: f.trace + np.sum(f.sv_jma),
        rhs=lambda f, P: math.sqrt(f.m * (f.m - 1) * f.n) + math.sqrt(f.m * f.n),
        characterization=_ng_rect_char)

    add(id="NG_KYFAN", statement="||A||_[k] + ||J - A||_[k] <= sqrt((k-1)mn) + sqrt(mn)",
        name="Nordhaus-Gaddum Ky Fan bound", requires=("nonneg", "max1"), defaults={"k": 2},
        check_params=lambda f, P: (_need_k(f, P), None if P["k"] >= 2 else (_ for _ in ()).throw(
            ArgumentError("NG_KYFAN needs k >= 2"))),
        lhs=lambda f, P: kf(f.sv, P["k"]) + kf(f.sv_jma, P["k"]),
        rhs=lambda f, P: math.sqrt((P["k"] - 1) * f.m * f.n) + math.sqrt(f.m * f.n),
        characterization=_ng_kyfan_char)

    add(id="NG_OPERATOR", statement="sigma_1(A) + sigma_1(J - A) <= sqrt(2mn)",
        name="Nordhaus-Gaddum operator-norm bound", requires=("nonneg", "max1"),
        lhs=lambda f, P: f.sv[0] + f.sv_jma[0], rhs=lambda f, P: math.sqrt(2 * f.m * f.n),
        characterization=_ng_operator_char)

    def gz_lhs(f, P):
        if P["variant"] == "upper":
            return f.trace + np.sum(f.comp_sv, axis=-1)
        return (f.n - 1) * math.sqrt(f.n) + f.n - 1 + 0 * f.trace

    def gz_rhs(f, P):
        if P["variant"] == "upper":
            return (f.n - 1) * math.sqrt(f.n - 1) + math.sqrt(2) * f.n + 0 * f.trace
        return f.trace + np.sum(f.comp_sv, axis=-1)

    def gz_params(f, P):
        _variant("upper", "conference")(f, P)
        if P["variant"] == "conference" and not _req_conference_graph(f, P):
            raise ApplicabilityError("GZ", "conference variant needs a conference graph")

    add(id="GZ", statement="E(G) + E(G') <= (n-1) sqrt(n-1) + sqrt(2) n;  conference graphs reach (n-1) sqrt(n) + n - 1",
        name="Gutman-Zhou Nordhaus-Gaddum energy bound", requires=("graph",), defaults={"variant": "upper"},
        check_params=gz_params, lhs=gz_lhs, rhs=gz_rhs,
        characterization=lambda f, P: True if P["variant"] == "conference" else None)

    add(id="KYFAN_FROB", statement="||A||_[k] <= sqrt(k) ||A||_2",
        name="Ky Fan versus Frobenius", defaults={"k": 1}, check_params=_need_k,
        lhs=lambda f, P: kf(f.sv, P["k"]), rhs=lambda f, P: _sqrt(P["k"] * f.fro2),
        characterization=lambda f, P: f.fro2 == 0 or exactly_k_equal(f, P["k"]))

    add(id="KYFAN_HAD", statement="||A||_[k] <= sqrt(kmn) for ||A||_max <= 1",
        name="Ky Fan bound for bounded entries", requires=("max1",), defaults={"k": 1}, check_params=_need_k,
        lhs=lambda f, P: kf(f.sv, P["k"]), rhs=lambda f, P: math.sqrt(P["k"] * f.m * f.n),
        characterization=lambda f, P: bool(np.all(np.abs(np.abs(f.M) - 1) <= 1e-12))
        and exactly_k_equal(f, P["k"], math.sqrt(f.m * f.n / P["k"])))

    add(id="KYFAN_NONNEG", statement="||A||_[k] <= sqrt(kmn)/2 + sqrt(mn)/2 for nonnegative A, ||A||_max <= 1",
        name="Ky Fan bound for nonnegative bounded entries", requires=("nonneg", "max1"), defaults={"k": 2}, check_params=_need_k,
        lhs=lambda f, P: kf(f.sv, P["k"]),
        rhs=lambda f, P: math.sqrt(P["k"] * f.m * f.n) / 2 + math.sqrt(f.m * f.n) / 2,
        characterization=_kyfan_nonneg_char)

    add(id="KYFAN_GRAPH", statement="||G||_[k] <= n sqrt(k)/2 + n/2",
        name="Nikiforov Ky Fan bound for graphs", requires=("graph",), defaults={"k": 2}, check_params=_need_k,
        lhs=lambda f, P: kf(f.sv, P["k"]),
        rhs=lambda f, P: f.n * math.sqrt(P["k"]) / 2 + f.n / 2,
        characterization=_kyfan_graph_char)

    add(id="KYFAN_LOWER_SK", statement="||G||_[k] >= n sqrt(k)/2 + n/2 - k (witness check)",
        name="Ky Fan lower bound on S_k blow-ups", requires=("graph",), defaults={"k": 4}, check_params=_need_k, universal=False,
        domain=lambda f, P: cons.is_sk_witness(f.graph, P["k"]),
        domain_text="graph must be the blow-up (B (x) J_t + J)/2 of a regular S_k member B with nonzero row sums",
        lhs=lambda f, P: f.n * math.sqrt(P["k"]) / 2 + f.n / 2 - P["k"],
        rhs=lambda f, P: kf(f.sv, P["k"]))

    add(id="KM0", statement="E(G) <= 2m/n + sqrt((n-1)(2m - (2m/n)^2)) for m >= n/2",
        name="average-degree Koolen-Moulton bound", requires=("graph",),
        domain=lambda f, P: 2 * f.e >= f.n, domain_text="m >= n/2",
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: 2 * f.e / f.n + _sqrt((f.n - 1) * (2 * f.e - (2 * f.e / f.n) ** 2)),
        characterization=lambda f, P: _km0_char(f))

    add(id="KM1", statement="E(G) <= lambda_1 + sqrt((n-1)(2m - lambda_1^2))",
        name="lambda_1 Koolen-Moulton bound", requires=("graph",),
        lhs=lambda f, P: f.trace,
        rhs=lambda f, P: f.lam1 + _sqrt((f.n - 1) * (2 * f.e - f.lam1 ** 2)),
        characterization=lambda f, P: flat_tail(f))

    add(id="CAP", statement="E(G) >= 2 lambda_1",
        name="energy at least twice the spectral radius", requires=("graph",),
        lhs=lambda f, P: 2 * f.lam1, rhs=lambda f, P: f.trace,
        characterization=lambda f, P: complete_multipartite_parts(f.graph) is not None)

    add(id="HOFFMAN_KYFAN", statement="||G||_[chi] >= 2 lambda_1 for chromatic number chi >= 2",
        name="Ky Fan form of Hoffman's bound", requires=("graph",),
        domain=lambda f, P: f.chi >= 2, domain_text="chromatic number >= 2",
        lhs=lambda f, P: 2 * f.lam1,
        rhs=lambda f, P: _kf_chi(f))

    def ghk_rhs(f, P):
        v = P["variant"]
        if v == "mid":
            return f.lam1 + _sqrt(2 * f.e - f.lam1 ** 2)
        if v == "edges":
            return 2 * _sqrt(f.e)
        return 2 * math.sqrt(f.n * f.n // 4) + 0 * f.lam1

    def ghk_char(f, P):
        parts = complete_multipartite_parts(f.graph)
        if P["variant"] == "triangle_free":
            g = f.graph
            return (parts == 2 and not np.any(g.degrees == 0)
                    and g.m == (g.n // 2) * ((g.n + 1) // 2))
        return parts is not None and parts <= 2

    add(id="GHK_SPREAD", statement="||G||_[2] <= lambda + sqrt(2m - lambda^2) <= 2 sqrt(m); triangle-free: <= 2 sqrt(floor(n^2/4))",
        name="Ky Fan 2-norm and spread bounds", requires=("graph",), defaults={"variant": "mid"},
        check_params=_variant("mid", "edges", "triangle_free"),
        domain=lambda f, P: (f.n >= 2) & ((f.omega <= 2) if P["variant"] == "triangle_free" else True),
        domain_text="n >= 2 (and triangle-free for that variant)",
        lhs=lambda f, P: kf(f.sv, 2), rhs=ghk_rhs, characterization=ghk_char)

    add(id="SCH_PM", statement="m^{-1/p} ||A||_p <= m^{-1/q} ||A||_q for 1 <= p < q",
        name="power-mean inequality for Schatten norms", defaults={"p": 1.0, "q": 2.0}, check_params=_need_q_gt_p,
        lhs=lambda f, P: f.m ** (-1 / P["p"]) * pnorm(f.sv, P["p"]),
        rhs=lambda f, P: f.m ** (-1 / P["q"]) * pnorm(f.sv, P["q"]),
        characterization=lambda f, P: flat_tail(f, 0))

    add(id="SCH_MONO", statement="||A||_q <= ||A||_p for 1 <= p < q",
        name="Schatten norms decrease in p", defaults={"p": 1.0, "q": 2.0}, check_params=_need_q_gt_p,
        lhs=lambda f, P: pnorm(f.sv, P["q"]), rhs=lambda f, P: pnorm(f.sv, P["p"]),
        characterization=lambda f, P: len(f.sv) < 2 or f.sv[1] <= ZERO_REL * max(f.sv[0], 1.0))

    add(id="SCH_ABS_LT2", statement="||A||_p <= m^{1/p} sqrt(n) for 1 <= p < 2, ||A||_max <= 1",
        name="Schatten bound for bounded entries, p < 2", requires=("max1",), defaults={"p": 1.0},
        check_params=_need_p_range(1, 2), domain=lambda f, P: f.m >= 2, domain_text="m >= 2",
        lhs=lambda f, P: pnorm(f.sv, P["p"]), rhs=lambda f, P: f.m ** (1 / P["p"]) * math.sqrt(f.n),
        characterization=lambda f, P: cons.is_partial_hadamard(f.M))

    def abs_gt2_char(f, P):
        if P["variant"] == "nonneg":
            return bool(np.all(np.abs(f.M - 1) <= 1e-12))
        return (f.sv[1] <= ZERO_REL * f.sv[0]) and bool(np.all(np.abs(np.abs(f.M) - 1) <= 1e-12))

    def abs_gt2_params(f, P):
        _need_p_range(2, None, lo_open=True)(f, P)
        _variant("any", "nonneg")(f, P)
        if P["variant"] == "nonneg" and not f.nonneg:
            raise ApplicabilityError("SCH_ABS_GT2", REQUIREMENTS["nonneg"][1])

    add(id="SCH_ABS_GT2", statement="||A||_p <= sqrt(mn) for p > 2, ||A||_max <= 1",
        name="Schatten bound for bounded entries, p > 2", requires=("max1",),
        defaults={"p": 3.0, "variant": "any"}, check_params=abs_gt2_params,
        domain=lambda f, P: f.m >= 2, domain_text="m >= 2",
        lhs=lambda f, P: pnorm(f.sv, P["p"]), rhs=lambda f, P: math.sqrt(f.m * f.n),
        characterization=abs_gt2_char)

    def bo3_lhs(f, P):
        if P["variant"] == "upper":
            return pnorm(f.sv, P["p"])
        return f.m ** (1 / P["p"]) * math.sqrt(f.n) / 2

    def bo3_rhs(f, P):
        if P["variant"] == "upper":
            return f.m ** (1 / P["p"]) * math.sqrt(f.n) / 2 + math.sqrt(f.m * f.n) / 2
        return pnorm(f.sv, P["p"])

    def bo3_domain(f, P):
        if P["variant"] == "upper":
            return f.m >= 2
        h = _h(f)
        return f.m >= 4 and h is not None and cons.is_regular_partial_hadamard(h)

    add(id="SCH_NONNEG_LT2", statement="||A||_p <= m^{1/p} sqrt(n)/2 + sqrt(mn)/2; >= m^{1/p} sqrt(n)/2 when 2A - J is regular partial Hadamard",
        name="Schatten bounds for nonnegative bounded entries", requires=("nonneg", "max1"), defaults={"p": 1.0, "variant": "upper"},
        check_params=_all(_need_p_range(1, 2), _variant("upper", "lower")),
        domain=bo3_domain, domain_text="m >= 2 (upper); n >= m >= 4 and 2A - J regular partial Hadamard (lower)",
        lhs=bo3_lhs, rhs=bo3_rhs)

    def conv_x(f, P, sum_based=False):
        if sum_based:
            return _c_total(f)
        return f.sv[..., 0] if P.get("c") is None else P["c"]

    def conv_domain(sum_based):
        def dom(f, P):
            q = P["q"]
            if sum_based:
                return f.m >= 2 and _c_total(f) >= f.m ** (-1 / q) * pnorm(f.sv, q) * (1 - 1e-12)
            c = P.get("c")
            if c is None:
                return True
            return c <= f.sv[0] * (1 + 1e-12) and c >= f.m ** (-1 / q) * pnorm(f.sv, q) * (1 - 1e-12)
        return dom

    def conv_expr(sum_based):
        def expr(f, P):
            x = conv_x(f, P, sum_based)
            return _conv(x, f.m, psum(f.sv, P["q"]), P["p"], P["q"], _tail_minus(f, x, P["q"]))
        return expr

    def conv_char(sum_based):
        def ch(f, P):
            x = conv_x(f, P, sum_based)
            return flat_tail(f) and abs(x - f.sv[0]) <= FLAT_REL * max(f.sv[0], 1e-300)
        return ch

    add(id="SCH_CONV_UP", statement="||A||_p^p <= s^p + (m-1)^{1-p/q} (||A||_q^q - s^q)^{p/q}, q > p >= 1",
        name="sigma_1 converter, upper", defaults={"p": 1.0, "q": 2.0, "c": None}, check_params=_need_q_gt_p,
        domain=conv_domain(False), domain_text="c must satisfy m^{-1/q}||A||_q <= c <= sigma_1",
        lhs=lambda f, P: psum(f.sv, P["p"]), rhs=conv_expr(False), characterization=conv_char(False))

    add(id="SCH_CONV_LO", statement="||A||_p^p >= s^p + (m-1)^{1-p/q} (||A||_q^q - s^q)^{p/q}, p > q >= 1",
        name="sigma_1 converter, lower", defaults={"p": 3.0, "q": 2.0, "c": None}, check_params=_need_p_gt_q,
        domain=conv_domain(False), domain_text="c must satisfy m^{-1/q}||A||_q <= c <= sigma_1",
        lhs=conv_expr(False), rhs=lambda f, P: psum(f.sv, P["p"]), characterization=conv_char(False))

    add(id="SCH_SUM_UP", statement="sigma_1 converter with sigma_1 replaced by |sum a_ij| / sqrt(mn), q > p >= 1",
        name="sum-based converter, upper", defaults={"p": 1.0, "q": 2.0}, check_params=_need_q_gt_p,
        domain=conv_domain(True), domain_text="m >= 2 and |sum a_ij| >= m^{1/2-1/q} n^{1/2} ||A||_q",
        lhs=lambda f, P: psum(f.sv, P["p"]), rhs=conv_expr(True), characterization=conv_char(True))

    add(id="SCH_SUM_LO", statement="mirror with |sum a_ij| / sqrt(mn), p > q >= 1",
        name="sum-based converter, lower", defaults={"p": 3.0, "q": 2.0}, check_params=_need_p_gt_q,
        domain=conv_domain(True), domain_text="m >= 2 and |sum a_ij| >= m^{1/2-1/q} n^{1/2} ||A||_q",
        lhs=conv_expr(True), rhs=lambda f, P: psum(f.sv, P["p"]), characterization=conv_char(True))

    add(id="SCH_LOM", statement="||A||_p^p >= sigma_1^p + (||A||_2^2 - sigma_1^2) / sigma_2^{2-p}, 1 <= p < 2",
        name="Schatten lower bound from sigma_1, sigma_2", defaults={"p": 1.5}, check_params=_need_p_range(1, 2),
        domain=_rank2, domain_text="rank >= 2",
        lhs=lambda f, P: f.sv[..., 0] ** P["p"] + tail_psum(f.sv, 2) / f.sv[..., 1] ** (2 - P["p"]),
        rhs=lambda f, P: psum(f.sv, P["p"]), characterization=lambda f, P: nonzero_flat(f, 1))

    add(id="SCH_GRAPH_UP", statement="||G||_p^p <= lambda^p + (n-1)^{1-p/2} (2m - lambda^2)^{p/2}, 1 <= p < 2",
        name="Schatten Koolen-Moulton bound for graphs", requires=("graph",), defaults={"p": 1.0}, check_params=_need_p_range(1, 2),
        lhs=lambda f, P: psum(f.sv, P["p"]),
        rhs=lambda f, P: _conv(f.lam1, f.n, f.fro2, P["p"], 2.0),
        characterization=lambda f, P: flat_tail(f))

    add(id="SCH_EDGE_UP", statement="||G||_p^p <= (2m/n)^p + (n-1)^{1-p/2} (2m - (2m/n)^2)^{p/2}, 1 <= p < 2, m >= n/2",
        name="Schatten bound from edges and order", requires=("graph",), defaults={"p": 1.0}, check_params=_need_p_range(1, 2),
        domain=lambda f, P: 2 * f.e >= f.n, domain_text="m >= n/2",
        lhs=lambda f, P: psum(f.sv, P["p"]),
        rhs=lambda f, P: _conv(2 * f.e / f.n, f.n, f.fro2, P["p"], 2.0),
        characterization=lambda f, P: _km0_char(f))

    def bo5_lhs(f, P):
        if P["variant"] == "upper":
            return pnorm(f.sv, P["p"])
        return f.n ** (1 / P["p"] + 0.5) / 2

    def bo5_rhs(f, P):
        if P["variant"] == "upper":
            return f.n ** (1 / P["p"] + 0.5) / 2 + f.n / 2
        return pnorm(f.sv, P["p"])

    def bo5_domain(f, P):
        if P["variant"] == "upper":
            return True
        return abs(f.trace - (f.n * math.sqrt(f.n) / 2 + f.n / 2)) <= tolerance(f.trace)

    def bo5_char(f, P):
        if P["variant"] != "upper":
            return None
        if P["p"] != 1:
            return False
        return cons.is_regular_symmetric_hadamard_minus_diag(2 * f.graph.adjacency.astype(np.int64) - 1, positive=True)

    add(id="SCH_ORDER_UP", statement="||G||_p <= n^{1/p+1/2}/2 + n/2, 1 <= p < 2; maximal-energy graphs have ||G||_p > n^{1/p+1/2}/2",
        name="Schatten bound from the order", requires=("graph",), defaults={"p": 1.5, "variant": "upper"},
        check_params=_all(_need_p_range(1, 2), _variant("upper", "kmax")),
        domain=bo5_domain, domain_text="kmax variant needs a graph of maximal energy n sqrt(n)/2 + n/2",
        lhs=bo5_lhs, rhs=bo5_rhs, characterization=bo5_char,
        note="stated as never attained; at p = 1 it is the Koolen-Moulton bound, which is attained")

    def ssp_lhs(f, P):
        if P["variant"] == "complete":
            b = P.get("budget") or f.e
            return -1.5 + math.sqrt(2 * b + 0.25)
        return psum(f.sv, P["p"])

    def ssp_rhs(f, P):
        v = P["variant"]
        if v == "edges":
            return 2 * f.e * _pow(-0.5 + _sqrt(2 * f.e + 0.25), P["p"] - 2)
        if v == "order":
            return (f.n - 1) ** P["p"] + (f.n - 1) ** (P["p"] - 1) + 0 * f.e
        return pnorm(f.sv, P["p"])

    def ssp_domain(f, P):
        if P["variant"] == "complete":
            s = f.n
            b = P.get("budget") or f.e
            return s * (s - 1) // 2 <= b < s * (s + 1) // 2
        return f.e >= 1

    def ssp_char(f, P):
        v = P["variant"]
        if v == "edges":
            return f.graph.m == 1
        if v == "order":
            return f.graph.n == 2 and f.graph.m == 1
        return None

    def ssp_params(f, P):
        _need_p_range(2, None, lo_open=True)(f, P)
        _variant("edges", "order", "complete")(f, P)
        if P["variant"] == "complete" and not _req_complete(f, P):
            raise ApplicabilityError("SCH_STANLEY", REQUIREMENTS["complete"][1])

    add(id="SCH_STANLEY", statement="||G||_p^p <= 2m(-1/2 + sqrt(2m + 1/4))^{p-2};  <= (n-1)^p + (n-1)^{p-1};  ||K_s||_p > -3/2 + sqrt(2m + 1/4)",
        name="Stanley-type Schatten bounds", requires=("graph",), defaults={"p": 3.0, "variant": "edges", "budget": None},
        check_params=ssp_params, domain=ssp_domain,
        domain_text="at least one edge (complete variant: C(s,2) <= budget < C(s+1,2))",
        lhs=ssp_lhs, rhs=ssp_rhs, characterization=ssp_char,
        note="stated strict; K_2 (plus isolated vertices) attains both upper forms")

    def nlo_lhs(f, P):
        v = P["variant"]
        if v == "lambda":
            return _conv(f.lam1, f.n, f.fro2, P["p"], 2.0)
        if v == "edges":
            return _conv(2 * f.e / f.n, f.n, f.fro2, P["p"], 2.0)
        k = P["k"]
        d = 2 * f.e / f.n
        return d ** (2 * k) + (f.n - 1.0) ** (1 - k) * _pow(2 * f.e - d * d, k)

    def nlo_rhs(f, P):
        if P["variant"] == "walks":
            return f.walks(P["k"])
        return psum(f.sv, P["p"])

    def nlo_params(f, P):
        _variant("lambda", "edges", "walks")(f, P)
        if P["variant"] == "walks":
            k = P.get("k")
            if not isinstance(k, (int, np.integer)) or k < 2:
                raise ArgumentError("walks variant needs an integer k >= 2")
        else:
            _need_p_range(2, None, lo_open=True)(f, P)

    def nlo_char(f, P):
        if P["variant"] == "lambda":
            return flat_tail(f)
        return _km0_char(f)

    add(id="SCH_EDGE_LO", statement="||G||_p^p >= lambda^p + (n-1)^{1-p/2}(2m - lambda^2)^{p/2}; same with 2m/n for m >= n/2; tr A^{2k} >= (2m/n)^{2k} + (n-1)^{1-k}(2m - (2m/n)^2)^k",
        name="Schatten lower bounds, closed walks", requires=("graph",),
        defaults={"p": 3.0, "variant": "lambda", "k": None}, check_params=nlo_params,
        domain=lambda f, P: True if P["variant"] == "lambda" else (2 * f.e >= f.n),
        domain_text="m >= n/2 for the edges and walks variants",
        lhs=nlo_lhs, rhs=nlo_rhs, characterization=nlo_char,
        note="walk count is tr A^{2k}, with no 1/(4k) factor")

    add(id="HOLDER", statement="sum sigma^{ap+bq} <= (sum sigma^p)^a (sum sigma^q)^b, a + b = 1",
        name="Holder inequality for singular values",
        defaults={"p": 4.0, "q": 1.0, "alpha": 1 / 3, "beta": 2 / 3}, check_params=_need_holder,
        lhs=lambda f, P: psum(f.sv, P["alpha"] * P["p"] + P["beta"] * P["q"]),
        rhs=lambda f, P: _pow(psum(f.sv, P["p"]), P["alpha"]) * _pow(psum(f.sv, P["q"]), P["beta"]),
        characterization=_holder_char)

    def te_rhs(f, P):
        r = P["r"]
        if P["variant"] == "te":
            return math.sqrt(2 * cons.turan_edges(f.n, r))
        return f.n * math.sqrt(1 - 1 / r)

    def te_char(f, P):
        r = P["r"]
        if P["variant"] == "cor" and f.n % r:
            return False
        return _is_turan(f, r)

    add(id="RPART_FROB", statement="||A||_2 <= sqrt(2 t_r(n)) <= n sqrt(1 - 1/r) for r-partite A, ||A||_max <= 1",
        name="Frobenius bound for r-partite matrices", requires=("square", "max1", "rpartite"), defaults={"r": None, "variant": "te"},
        check_params=_variant("te", "cor"),
        lhs=lambda f, P: math.sqrt(f.fro2), rhs=te_rhs, characterization=te_char)

    add(id="RPART_SCH", statement="||A||_p <= n^{1/2+1/p} sqrt(1 - 1/r) for r-partite A, ||A||_max <= 1, 1 <= p < 2",
        name="r-partite Schatten bound", requires=("square", "max1", "rpartite"),
        defaults={"r": None, "p": 1.0}, check_params=_need_p_range(1, 2),
        lhs=lambda f, P: pnorm(f.sv, P["p"]),
        rhs=lambda f, P: f.n ** (0.5 + 1 / P["p"]) * math.sqrt(rp(f, P)),
        characterization=lambda f, P: bool(np.all(np.abs(f.sv - math.sqrt(rp(f, P) * f.n))
                                                   <= FLAT_REL * math.sqrt(f.n))))

    def sth_lhs(f, P):
        base = 0.5 * f.n ** (0.5 + 1 / P["p"]) * math.sqrt(rp(f, P))
        if P["variant"] == "upper":
            return pnorm(f.sv, P["p"])
        return base - rp(f, P) * f.n

    def sth_rhs(f, P):
        base = 0.5 * f.n ** (0.5 + 1 / P["p"]) * math.sqrt(rp(f, P))
        if P["variant"] == "upper":
            return base + rp(f, P) * f.n
        return pnorm(f.sv, P["p"])

    add(id="RPART_SCH_NONNEG", statement="||A||_p <= n^{1/2+1/p}/2 sqrt(1 - 1/r) + (1 - 1/r) n, nonnegative r-partite; construction reaches the same minus the linear term",
        name="r-partite Schatten bound, nonnegative entries", requires=("square", "nonneg", "max1", "rpartite"),
        defaults={"r": None, "p": 1.0, "variant": "upper"},
        check_params=_all(_need_p_range(1, 2), _variant("upper", "construction")),
        lhs=sth_lhs, rhs=sth_rhs)

    add(id="MULTIPARTITE_SCH", statement="||K||_p <= 2(1 - 1/r) n for complete r-partite K",
        name="Schatten bound for complete multipartite graphs", requires=("graph", "complete_multipartite"), defaults={"p": 1.0},
        check_params=_need_p_range(1, None),
        lhs=lambda f, P: pnorm(f.sv, P["p"]),
        rhs=lambda f, P: 2 * (1 - 1 / max(complete_multipartite_parts(f.graph), 1)) * f.n)

    return {e.id: e for e in E}


def _kf_chi(f):
    chi = f.chi
    if np.ndim(chi) == 0:
        return float(np.sum(f.sv[: int(chi)]))
    csum = np.cumsum(f.sv, axis=1)
    idx = np.clip(np.asarray(chi, dtype=int) - 1, 0, f.sv.shape[1] - 1)
    return np.take_along_axis(csum, idx[:, None], axis=1)[:, 0]


CATALOG = _entries()

# entries whose rhs only makes sense for a specific family or witness
NON_UNIVERSAL = {k for k, e in CATALOG.items() if not e.universal}


# representative parameter sets per entry, used by the corpus sweeps; entries
# not listed run with their defaults
SAMPLE_PARAMS = {
    "KYFAN_FROB": [{"k": k} for k in (1, 2, 3)],
    "KYFAN_HAD": [{"k": 1}, {"k": 2}],
    "KYFAN_NONNEG": [{"k": 1}, {"k": 2}, {"k": 4}],
    "KYFAN_GRAPH": [{"k": k} for k in (1, 2, 3, 4)],
    "KYFAN_LOWER_SK": [{"k": 4}],
    "NG_KYFAN": [{"k": 2}, {"k": 3}],
    "SIGMA1_LOWER": [{"variant": v} for v in ("rows", "cols", "abs_rows")],
    "COMPLEMENT_DIFF": [{"variant": v} for v in ("abs", "radius", "radius_comp")],
    "GHK_SPREAD": [{"variant": v} for v in ("mid", "edges", "triangle_free")],
    "GZ": [{"variant": "upper"}, {"variant": "conference"}],
    "SCH_PM": [{"p": 1, "q": 2}, {"p": 1.5, "q": 3}, {"p": 2, "q": 4}],
    "SCH_MONO": [{"p": 1, "q": 2}, {"p": 1.5, "q": 3}],
    "SCH_ABS_LT2": [{"p": 1}, {"p": 1.5}],
    "SCH_ABS_GT2": [{"p": 3, "variant": "any"}, {"p": 3, "variant": "nonneg"}],
    "SCH_NONNEG_LT2": [{"p": 1, "variant": "upper"}, {"p": 1.5, "variant": "upper"},
                       {"p": 1.5, "variant": "lower"}],
    "SCH_CONV_UP": [{"p": 1, "q": 2}, {"p": 1.5, "q": 3}],
    "SCH_CONV_LO": [{"p": 3, "q": 2}, {"p": 4, "q": 1.5}],
    "SCH_SUM_UP": [{"p": 1, "q": 2}],
    "SCH_SUM_LO": [{"p": 3, "q": 2}],
    "SCH_LOM": [{"p": 1}, {"p": 1.5}],
    "SCH_GRAPH_UP": [{"p": 1}, {"p": 1.5}],
    "SCH_EDGE_UP": [{"p": 1}, {"p": 1.5}],
    "SCH_ORDER_UP": [{"p": 1, "variant": "upper"}, {"p": 1.5, "variant": "upper"},
                     {"p": 1.5, "variant": "kmax"}],
    "SCH_STANLEY": [{"p": 3, "variant": v} for v in ("edges", "order", "complete")],
    "SCH_EDGE_LO": [{"p": 3, "variant": "lambda"}, {"p": 3, "variant": "edges"},
                    {"variant": "walks", "k": 2}, {"variant": "walks", "k": 3}],
    "HOLDER": [{}, {"p": 2, "q": 2, "alpha": .5, "beta": .5}, {"p": 3, "q": 1, "alpha": .5, "beta": .5}],
    "RPART_FROB": [{"variant": "te"}, {"variant": "cor"}],
    "RPART_SCH": [{"p": 1}, {"p": 1.5}],
    "RPART_SCH_NONNEG": [{"p": 1, "variant": "upper"}, {"p": 1.5, "variant": "upper"}],
    "MULTIPARTITE_SCH": [{"p": 1}, {"p": 2}],
}


def get_entry(bound_id):
    try:
        return CATALOG[bound_id]
    except KeyError:
        raise ArgumentError(f"unknown bound id {bound_id!r}; known: {', '.join(CATALOG)}") from None


def resolve_params(entry, f, params):
    P = dict(entry.defaults)
    for k, v in (params or {}).items():
        if k not in P and k not in ("r",):
            raise ArgumentError(f"{entry.id} takes no parameter {k!r}")
        P[k] = v
    if "r" in P and P["r"] is None:
        if f.m == f.n and np.all(np.abs(np.diag(f.M)) <= 1e-12):
            P["r"] = max(2, f.support_chi_value)
    return P


def check_applicable(entry, f, P, observational=False):
    for tag in entry.requires:
        pred, text = REQUIREMENTS[tag]
        if tag == "rpartite" and P.get("r") is None:
            raise ApplicabilityError(entry.id, text)
        if not pred(f, P):
            raise ApplicabilityError(entry.id, text)
    if entry.check_params is not None:
        entry.check_params(f, P)
    if entry.domain is not None and not bool(entry.domain(f, P)):
        if not (observational and entry.observational_domain):
            raise ApplicabilityError(entry.id, entry.domain_text)


def evaluate_bound(bound_id, subject, params=None, observational=False, partition=None):
    """Evaluate one catalog inequality on a graph or matrix and judge equality."""
    entry = get_entry(bound_id)
    f = subject if isinstance(subject, Features) else Features(subject, partition)
    P = resolve_params(entry, f, params)
    check_applicable(entry, f, P, observational)
    lhs = float(entry.lhs(f, P))
    rhs = float(entry.rhs(f, P))
    slack = rhs - lhs
    tol = float(tolerance(rhs))
    satisfied = slack >= -tol
    equality = abs(slack) <= tol
    obs = bool(observational and entry.observational_domain and entry.domain is not None
               and not bool(entry.domain(f, P)))
    details = {}
    # the characterisation is an "if and only if" statement, so it is run on
    # every subject: "holds" must coincide with equality
    verdict = equality_verdict(entry, f, P)
    if verdict != "not-characterized" and (verdict == "holds") != equality:
        details["inconsistent"] = True
    if equality and entry.id == "KYFAN_GRAPH":
        k = P["k"]
        details["k_is_square"] = math.isqrt(k) ** 2 == k
        if not details["k_is_square"]:
            raise AssertionError(f"KYFAN_GRAPH equality at non-square k={k}")
    if entry.note:
        details["note"] = entry.note
    return BoundReport(entry.id, _jsonable(P), entry.statement, lhs, rhs, slack,
                       bool(satisfied), bool(equality), verdict, obs, details)


def equality_verdict(entry, f, P=None):
    """holds / fails / not-characterized: the entry's equality predicate on f."""
    if isinstance(entry, str):
        entry = get_entry(entry)
    if not isinstance(f, Features):
        f = Features(f)
    if P is None:
        P = resolve_params(entry, f, None)
    if entry.characterization is None:
        return "not-characterized"
    res = entry.characterization(f, P)
    if res is None:
        return "not-characterized"
    return "holds" if res else "fails"


def characterization_holds(bound_id, subject, params=None):
    """Run the equality predicate directly (None when the entry has none)."""
    entry = get_entry(bound_id)
    f = subject if isinstance(subject, Features) else Features(subject)
    P = resolve_params(entry, f, params)
    if entry.characterization is None:
        return None
    return entry.characterization(f, P)


def _jsonable(P):
    out = {}
    for k, v in P.items():
        if isinstance(v, (np.integer,)):
            v = int(v)
        elif isinstance(v, (np.floating,)):
            v = float(v)
        out[k] = v
    return out


# ---- batch evaluation for sweeps ----

def evaluate_all(subject, param_sets=None):
    """Reports for every catalog entry (and each sample parameter set) that applies."""
    param_sets = SAMPLE_PARAMS if param_sets is None else param_sets
    out = []
    for bid in CATALOG:
        for params in param_sets.get(bid, [{}]):
            try:
                out.append(evaluate_bound(bid, subject, dict(params)))
            except (ApplicabilityError, ArgumentError):
                pass
    return out


def evaluate_batch(bound_id, feats, params=None):
    """lhs, rhs, applicable-mask arrays for a BatchFeatures of graphs.

    Only graph entries whose requirements are 'graph' (plus data-dependent
    domains) are supported here; the domain mask replaces the exception path.
    """
    entry = get_entry(bound_id)
    if any(t != "graph" for t in entry.requires):
        raise ArgumentError(f"{bound_id} needs structural checks; use evaluate_bound")
    P = dict(entry.defaults)
    P.update(params or {})
    if entry.check_params is not None:
        entry.check_params(_ParamView(feats), P)
    count = feats.sv.shape[0]
    lhs = np.broadcast_to(np.asarray(entry.lhs(feats, P), dtype=float), (count,))
    rhs = np.broadcast_to(np.asarray(entry.rhs(feats, P), dtype=float), (count,))
    mask = np.ones(count, dtype=bool)
    if entry.domain is not None:
        mask &= np.broadcast_to(np.asarray(entry.domain(feats, P), dtype=bool), (count,))
    return lhs, rhs, mask


class _ParamView:
    """Minimal stand-in so parameter checks can read the dimensions of a batch."""

    def __init__(self, feats):
        self.m = feats.m
        self.n = feats.n
