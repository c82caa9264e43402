"""Hadamard, conference and extremal constructions, and exact certification."""
from dataclasses import dataclass, field, asdict
import math

import numpy as np

from .errors import ArgumentError, ConstructionUnavailable, DomainError
from .graphs import Graph, complete_multipartite
from .spectra import as_int_matrix, as_matrix, gram_exact, singular_value_array, is_symmetric

REL = 1e-9


def is_prime(q):
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    return all(q % d for d in range(3, math.isqrt(q) + 1, 2))


def _check_prime(q, residue):
    if not isinstance(q, (int, np.integer)) or not is_prime(int(q)):
        raise ArgumentError(f"q={q} is not prime (prime-power fields are not supported)")
    if q % 4 != residue:
        raise ArgumentError(f"q={q} is not {residue} mod 4")


def quadratic_character(q):
    """chi[d] for d in 0..q-1: 0, +1 for nonzero squares, -1 otherwise."""
    chi = -np.ones(q, dtype=np.int64)
    chi[0] = 0
    chi[sorted({(x * x) % q for x in range(1, q)})] = 1
    return chi


def jacobsthal(q):
    """Q[i, j] = chi(j - i); symmetric for q = 1 mod 4, skew for q = 3 mod 4."""
    chi = quadratic_character(q)
    idx = np.arange(q)
    return chi[(idx[None, :] - idx[:, None]) % q]


def paley_conference(q):
    """Symmetric conference matrix of order q + 1 (q prime, q = 1 mod 4)."""
    _check_prime(q, 1)
    c = np.zeros((q + 1, q + 1), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = 1
    c[1:, 1:] = jacobsthal(q)
    return c


def paley_hadamard(q):
    """Hadamard matrix of order q + 1 (q prime, q = 3 mod 4): I + skew conference."""
    _check_prime(q, 3)
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jacobsthal(q)
    return s + np.eye(q + 1, dtype=np.int64)


def symmetric_hadamard_double(q):
    """Symmetric Hadamard matrix of order 2(q + 1) from the Paley conference matrix."""
    c = paley_conference(q)
    i = np.eye(q + 1, dtype=np.int64)
    return np.block([[c + i, c - i], [c - i, -c - i]])


def sylvester(k):
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ArgumentError("sylvester order exponent must be a nonnegative integer")
    if k > 14:
        raise ArgumentError("sylvester order above 2^14 exceeds the memory budget")
    h = np.ones((1, 1), dtype=np.int64)
    h2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    for _ in range(k):
        h = np.kron(h2, h)
    return h


def kronecker(a, b):
    return np.kron(np.asarray(a), np.asarray(b))


def hadamard_of_order(q):
    """Some Hadamard matrix of order q from Sylvester, Paley I/II and Kronecker products."""
    if q == 1:
        return np.ones((1, 1), dtype=np.int64)
    if q == 2:
        return sylvester(1)
    if q % 4:
        raise ConstructionUnavailable(f"no Hadamard matrix of order {q} (order must be 1, 2 or 0 mod 4)")
    if q & (q - 1) == 0:
        return sylvester(q.bit_length() - 1)
    if is_prime(q - 1) and (q - 1) % 4 == 3:
        return paley_hadamard(q - 1)
    if q % 2 == 0 and is_prime(q // 2 - 1) and (q // 2 - 1) % 4 == 1:
        return symmetric_hadamard_double(q // 2 - 1)
    if q % 2 == 0:
        try:
            return np.kron(sylvester(1), hadamard_of_order(q // 2))
        except ConstructionUnavailable:
            pass
    raise ConstructionUnavailable(f"no generator available for a Hadamard matrix of order {q}")


def partial_hadamard(rows, cols):
    """First `rows` rows of a Hadamard matrix of order `cols`."""
    if rows > cols:
        raise ConstructionUnavailable(f"a {rows}x{cols} partial Hadamard matrix needs rows <= cols")
    return hadamard_of_order(cols)[:rows].copy()


# ---- graphs ----

def paley_graph(q):
    _check_prime(q, 1)
    return Graph((jacobsthal(q) == 1).astype(np.uint8), check=False)


def turan_graph(n, r):
    if not 1 <= r <= n:
        raise ArgumentError(f"need 1 <= r <= n, got n={n}, r={r}")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    return complete_multipartite(*sizes)


def turan_edges(n, r):
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    return (n * n - sum(s * s for s in sizes)) // 2


def srg_parameters(g):
    """(n, k, lambda, mu) if g is strongly regular (mu undefined -> None for complete graphs)."""
    a = g.adjacency.astype(np.int64)
    n = g.n
    d = a.sum(axis=1)
    if n == 0 or np.any(d != d[0]):
        return None
    common = a @ a
    off = ~np.eye(n, dtype=bool)
    adj = (a == 1) & off
    non = (a == 0) & off
    lam = set(common[adj].tolist())
    mu = set(common[non].tolist())
    if len(lam) > 1 or len(mu) > 1:
        return None
    return (n, int(d[0]), lam.pop() if lam else None, mu.pop() if mu else None)


def design_graph_check(g):
    """(n, k, a) when g is k-regular and every two vertices have exactly a common neighbours."""
    p = srg_parameters(g)
    if p is None:
        return None
    n, k, lam, mu = p
    vals = {v for v in (lam, mu) if v is not None}
    if len(vals) > 1:
        return None
    a = vals.pop() if vals else 0
    return (n, k, a)


def is_conference_graph(g):
    n = g.n
    if n < 5 or n % 4 != 1:
        return False
    return srg_parameters(g) == (n, (n - 1) // 2, (n - 5) // 4, (n - 1) // 4)


def bibd_params_check(b):
    """The displayed BIBD parameters (m, n, r, k, lambda) if b realises them, else None."""
    b = as_int_matrix(b, allowed=(0, 1))
    m, n = b.shape
    s = math.isqrt(m)
    if s * s != m or m < 2:
        return None
    rnum, knum, lnum = n * (m + s), m + s, n * (m + 2 * s)
    if rnum % (2 * m) or knum % 2 or lnum % (4 * m):
        return None
    r, k, lam = rnum // (2 * m), knum // 2, lnum // (4 * m)
    rows = b.sum(axis=1)
    cols = b.sum(axis=0)
    if np.any(rows != r) or np.any(cols != k):
        return None
    inner = b @ b.T
    if np.any(inner[~np.eye(m, dtype=bool)] != lam):
        return None
    return (m, n, r, k, lam)


# ---- certification ----

@dataclass
class ConstructionCertificate:
    kind: str
    shape: tuple
    verdict: str
    regular: bool
    exact_evidence: object = None
    numeric_evidence: float | None = None
    transposed: bool = False
    conditions: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"

    def as_dict(self):
        d = asdict(self)
        d["shape"] = list(self.shape)
        return d


def is_regular_matrix(a, tol=1e-9):
    a = np.asarray(a, dtype=float)
    r = a.sum(axis=1)
    c = a.sum(axis=0)
    scale = max(1.0, float(np.abs(a).max(initial=0)))
    return bool(np.ptp(r) <= tol * scale * a.shape[1] and np.ptp(c) <= tol * scale * a.shape[0])


def _int_pattern(a):
    try:
        return as_int_matrix(a)
    except DomainError:
        return None


def singular_value_conditions(a, target):
    """Singular-value conditions equivalent to the Gram condition, for a square matrix and common value target."""
    sv = singular_value_array(as_matrix(a))
    n = len(sv)
    ok = lambda x, y: abs(x - y) <= REL * max(abs(y), 1.0)
    return {
        "all_equal": bool(np.all(np.abs(sv - target) <= REL * max(target, 1.0))),
        "trace_norm": ok(float(sv.sum()), n * target),
        "largest": ok(float(sv[0]), target),
        "smallest": ok(float(sv[-1]), target),
    }


def certify(mat):
    """Classify a matrix as Hadamard, partial Hadamard, conference or none."""
    raw = np.asarray(mat)
    a = as_matrix(raw)
    transposed = a.shape[0] > a.shape[1]
    if transposed:
        a = a.T
    m, n = a.shape
    regular = is_regular_matrix(a)
    sv = singular_value_array(a)
    ints = _int_pattern(a)
    modulus_one = bool(np.all(np.abs(np.abs(a) - 1) <= 1e-12))
    off = ~np.eye(m, n, dtype=bool)
    conf_pattern = (m == n and m >= 2 and bool(np.all(np.abs(np.diag(a)) <= 1e-12))
                    and bool(np.all(np.abs(np.abs(a[off]) - 1) <= 1e-12)))
    if modulus_one:
        kind = "hadamard" if m == n else "partial_hadamard"
        target = math.sqrt(n)
        expect = n
    elif conf_pattern:
        kind, target, expect = "conference", math.sqrt(n - 1), n - 1
    else:
        return ConstructionCertificate("none", (m, n), "fail", regular,
                                       numeric_evidence=None, transposed=transposed)
    numeric = float(np.max(np.abs(sv - target)) / target)
    exact = None
    exact_ok = True
    if ints is not None:
        resid = gram_exact(ints) - expect * np.eye(m, dtype=np.int64)
        exact = int(np.abs(resid).max())
        exact_ok = exact == 0
    conditions = singular_value_conditions(a, target) if m == n else {}
    verdict = "pass" if exact_ok and numeric <= REL else "fail"
    if verdict == "fail":
        kind_out = "none"
    else:
        kind_out = kind
    return ConstructionCertificate(kind_out, (m, n), verdict, regular, exact, numeric,
                                   transposed, conditions)


def is_hadamard(a):
    c = certify(a)
    return c.passed and c.kind == "hadamard"


def is_partial_hadamard(a):
    """m x n (+-1) with H H^T = n I_m, in either orientation; includes square Hadamard."""
    c = certify(a)
    return c.passed and c.kind in ("hadamard", "partial_hadamard")


def is_conference(a):
    c = certify(a)
    return c.passed and c.kind == "conference"


def _positive_sums(r):
    return int(r.sum()) > 0


def is_regular_symmetric_hadamard_minus_diag(h, positive=False):
    """Regular symmetric Hadamard with -1 along the main diagonal (exact).

    With positive=True the common row sum must be +sqrt(n), which is the sign
    that makes (H + J)/2 extremal."""
    try:
        r = as_int_matrix(h)
    except DomainError:
        return False
    n = r.shape[0]
    if r.shape[0] != r.shape[1] or not np.all(np.abs(r) == 1):
        return False
    if not np.array_equal(r, r.T) or not np.all(np.diag(r) == -1):
        return False
    if not np.array_equal(gram_exact(r), n * np.eye(n, dtype=np.int64)):
        return False
    return is_regular_matrix(r) and (not positive or _positive_sums(r))


def is_regular_hadamard(h, positive=False):
    try:
        r = as_int_matrix(h)
    except DomainError:
        return False
    n, k = r.shape
    if n != k or not np.all(np.abs(r) == 1):
        return False
    return (np.array_equal(gram_exact(r), n * np.eye(n, dtype=np.int64))
            and is_regular_matrix(r) and (not positive or _positive_sums(r)))


def is_regular_partial_hadamard(h, positive=False):
    try:
        r = as_int_matrix(h)
    except DomainError:
        return False
    if r.shape[0] > r.shape[1]:
        r = r.T
    m, n = r.shape
    if not np.all(np.abs(r) == 1):
        return False
    return (np.array_equal(gram_exact(r), n * np.eye(m, dtype=np.int64))
            and is_regular_matrix(r) and (not positive or _positive_sums(r)))


# ---- the S_k class ----

@dataclass
class SkWitness:
    member: bool
    k: int
    n: int
    nonzero: int
    n_plus: int
    n_minus: int
    trace: int
    k_is_square: bool
    dichotomy: str | None

    def as_dict(self):
        return asdict(self)


def sk_membership(a, k):
    """Is a symmetric (-1,1)-matrix a member of S_k (sigma_k = n / sqrt k)?"""
    r = as_int_matrix(a)
    n = r.shape[0]
    if r.shape[0] != r.shape[1] or not np.array_equal(r, r.T):
        raise DomainError("S_k membership needs a symmetric matrix")
    if not np.all(np.abs(r) == 1):
        raise DomainError("S_k membership needs entries +-1")
    if not 1 <= k <= n:
        raise ArgumentError(f"k must lie in [1, {n}]")
    ev = np.linalg.eigvalsh(r.astype(float))[::-1]
    sv = np.sort(np.abs(ev))[::-1]
    target = n / math.sqrt(k)
    zero = 1e-9 * n
    nonzero = int(np.sum(sv > zero))
    member = nonzero == k and bool(np.all(np.abs(sv[:k] - target) <= REL * target))
    n_plus = int(np.sum(ev > zero))
    n_minus = int(np.sum(ev < -zero))
    trace = int(np.trace(r))
    ksq = math.isqrt(k) ** 2 == k
    dichotomy = None
    if member:
        if trace != 0:
            if not ksq:
                raise AssertionError(f"S_k member with nonzero trace but k={k} is not a square")
            dichotomy = "k_square"
        else:
            if n_plus != n_minus:
                raise AssertionError("S_k member with zero trace but n_+ != n_-")
            dichotomy = "balanced_inertia"
    return SkWitness(member, k, n, nonzero, n_plus, n_minus, trace, ksq, dichotomy)


# ---- extremal constructions ----

def kyfan_extremal_matrix(k, q, r, s):
    """B (x) J_{r,s} with B a k x q partial Hadamard matrix: attains the Ky Fan bound sqrt(kmn)."""
    if min(k, q, r, s) < 1 or k > q:
        raise ArgumentError("need k <= q and positive k, q, r, s")
    b = partial_hadamard(k, q)
    return np.kron(b, np.ones((r, s), dtype=np.int64))


def ng_extremal_matrix(k, t, p, q):
    """0/1 matrix of shape 2(k-1)p x 2tq attaining the Ky Fan Nordhaus-Gaddum bound."""
    if k < 3 or t < k - 1 or p < 1 or q < 1:
        raise ArgumentError("need k >= 3, t >= k - 1, p, q >= 1")
    b = partial_hadamard(k - 1, t)
    h = np.block([[b, -b], [-b, b]])
    big = np.kron(h, np.ones((p, q), dtype=np.int64))
    return (big + 1) // 2


def _require_certified(c, kinds, what):
    cert = certify(c)
    if not cert.passed or cert.kind not in kinds or cert.transposed or cert.shape[0] != cert.shape[1]:
        raise ArgumentError(f"{what} does not certify as {' or '.join(kinds)}")
    return as_int_matrix(c)


def rpartite_extremal_matrix(c, h):
    """C (x) H: r-partite with classes of size k and all singular values sqrt((1-1/r) n)."""
    c = _require_certified(c, ("conference",), "first factor")
    h = _require_certified(h, ("hadamard",), "second factor")
    return np.kron(c, h)


def rpartite_extremal_graph(c, h):
    """(C (x) H + K_r (x) J_k) / 2 for symmetric certified C and H."""
    c = _require_certified(c, ("conference",), "first factor")
    h = _require_certified(h, ("hadamard",), "second factor")
    if not (is_symmetric(c.astype(float)) and is_symmetric(h.astype(float))):
        raise ArgumentError("both factors must be symmetric to give a graph")
    r, k = c.shape[0], h.shape[0]
    kr = np.ones((r, r), dtype=np.int64) - np.eye(r, dtype=np.int64)
    a = (np.kron(c, h) + np.kron(kr, np.ones((k, k), dtype=np.int64))) // 2
    return Graph(a.astype(np.uint8))


def sk_blowup_graph(b, t):
    """Graph with adjacency (B (x) J_t + J)/2, diagonal cleared.

    For a regular member B of S_k with nonzero row sums this is the witness of
    the lower bound ||G||_[k] >= n sqrt(k)/2 + n/2 - k, n = kt."""
    r = as_int_matrix(b)
    k = r.shape[0]
    if r.shape != (k, k) or not np.array_equal(r, r.T) or not np.all(np.abs(r) == 1):
        raise DomainError("B must be a symmetric (+-1)-matrix")
    if t < 1:
        raise ArgumentError("t must be positive")
    a = (np.kron(r, np.ones((t, t), dtype=np.int64)) + 1) // 2
    np.fill_diagonal(a, 0)
    return Graph(a.astype(np.uint8), check=False)


def sk_blowup_source(g, k):
    """Recover B when g = sk_blowup_graph(B, n/k) in its natural labelling, else None."""
    n = g.n
    if k < 1 or n % k:
        return None
    t = n // k
    a = g.adjacency.astype(np.int64)
    b = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            blk = a[i * t:(i + 1) * t, j * t:(j + 1) * t]
            if i == j:
                off = blk[~np.eye(t, dtype=bool)]
                val = int(off[0]) if t > 1 else None
                if t > 1 and not np.all(off == val):
                    return None
                b[i, i] = 2 * val - 1 if val is not None else -1
            else:
                if not np.all(blk == blk[0, 0]):
                    return None
                b[i, j] = 2 * int(blk[0, 0]) - 1
    return b


def is_sk_witness(g, k):
    """g is a blow-up of a regular S_k member with positive row sums.

    The sign matters: -B is in S_k with B, and only the positive-sum one gives
    the lower bound (B = 2I - J, t = 1 blows up to the empty graph)."""
    b = sk_blowup_source(g, k)
    if b is None:
        return False
    if g.n // k == 1:
        # with t = 1 the diagonal of B is not visible; try the forced choices
        cands = [b.copy()]
        plus = b.copy()
        np.fill_diagonal(plus, 1)
        cands.append(plus)
    else:
        cands = [b]
    for c in cands:
        if sk_membership(c, k).member and is_regular_matrix(c) and int(c[0].sum()) > 0:
            return True
    return False


def class_partition(r, k):
    return np.repeat(np.arange(r), k)
