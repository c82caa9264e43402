"""Simple graphs, standard families and the graph6 format."""
from functools import lru_cache
import itertools

import numpy as np

from .errors import DimensionError, DomainError, ParseError


@lru_cache(maxsize=None)
def pair_index(n):
    """Upper-triangle pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


class Graph:
    """Simple undirected graph stored as an immutable 0/1 adjacency matrix."""

    __slots__ = ("adjacency", "_key")

    def __init__(self, adjacency, check=True):
        if check:
            raw = np.asarray(adjacency)
            if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
                raise DimensionError(f"adjacency must be square, got {raw.shape}")
            if not np.all((raw == 0) | (raw == 1)):
                raise DomainError("adjacency entries must be 0 or 1")
        a = np.array(adjacency, dtype=np.uint8, copy=True)
        if check:
            if np.any(a != a.T):
                raise DomainError("adjacency is not symmetric")
            if np.any(np.diag(a)):
                raise DomainError("adjacency has a nonzero diagonal")
        a.setflags(write=False)
        self.adjacency = a
        self._key = None

    @property
    def n(self):
        return self.adjacency.shape[0]

    order = n

    @property
    def m(self):
        return int(self.adjacency.sum()) // 2

    @property
    def degrees(self):
        return self.adjacency.sum(axis=1).astype(int)

    def edges(self):
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(i.tolist(), j.tolist()))

    def key(self):
        if self._key is None:
            self._key = (self.n, self.adjacency.tobytes())
        return self._key

    def __eq__(self, other):
        return isinstance(other, Graph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, graph6={emit_graph6(self)!r})"

    @classmethod
    def from_edges(cls, n, edges):
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            a[u, v] = a[v, u] = 1
        return cls(a, check=False)

    @classmethod
    def from_mask(cls, n, mask):
        a = np.zeros((n, n), dtype=np.uint8)
        for t, (i, j) in enumerate(pair_index(n)):
            if mask >> t & 1:
                a[i, j] = a[j, i] = 1
        return cls(a, check=False)

    def mask(self):
        return sum(1 << t for t, (i, j) in enumerate(pair_index(self.n)) if self.adjacency[i, j])

    def is_connected(self):
        n = self.n
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in np.nonzero(self.adjacency[u])[0].tolist():
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == n

    def is_regular(self):
        d = self.degrees
        return bool(np.all(d == d[0]))


# ---- families ----

def empty_graph(n):
    return Graph(np.zeros((n, n), dtype=np.uint8), check=False)


def complete_graph(n):
    return Graph(np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8), check=False)


def complete_multipartite(*sizes):
    labels = np.repeat(np.arange(len(sizes)), sizes)
    return Graph((labels[:, None] != labels[None, :]).astype(np.uint8), check=False)


def complete_bipartite(a, b):
    return complete_multipartite(a, b)


def star(n):
    return complete_bipartite(1, n - 1)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def rook_graph(k):
    """K_k x K_k: cells of a k x k board, adjacent when in the same row or column."""
    cells = list(itertools.product(range(k), repeat=2))
    edges = [(a, b) for a, b in itertools.combinations(range(k * k), 2)
             if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]]
    return Graph.from_edges(k * k, edges)


def disjoint_union(*graphs):
    n = sum(g.n for g in graphs)
    a = np.zeros((n, n), dtype=np.uint8)
    at = 0
    for g in graphs:
        a[at:at + g.n, at:at + g.n] = g.adjacency
        at += g.n
    return Graph(a, check=False)


def complement(g):
    n = g.n
    return Graph(1 - g.adjacency - np.eye(n, dtype=np.uint8), check=False)


def biadjacency_embed(b):
    """Bipartite graph with biadjacency matrix b (0/1, m x n)."""
    b = np.asarray(b)
    if b.ndim != 2:
        raise DimensionError("biadjacency must be 2-d")
    if not np.all((b == 0) | (b == 1)):
        raise DomainError("biadjacency entries must be 0 or 1")
    m, n = b.shape
    a = np.zeros((m + n, m + n), dtype=np.uint8)
    a[:m, m:] = b
    a[m:, :m] = b.T
    return Graph(a, check=False)


def relabel(g, perm):
    p = np.asarray(perm)
    return Graph(g.adjacency[np.ix_(p, p)], check=False)


# ---- graph6 ----

def _encode_n(n):
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g):
    n = g.n
    a = g.adjacency
    bits = [int(a[i, j]) for i, j in pair_index(n)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[t:t + 6])), 2))
                   for t in range(0, len(bits), 6))
    return _encode_n(n) + body


def parse_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", off)
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte order field", len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte order field", len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    pairs = pair_index(n)
    need = -(-len(pairs) // 6)
    have = len(vals) - pos
    if have < need:
        raise ParseError(f"bit stream truncated: need {need} bytes, found {have}", len(vals))
    if have > need:
        raise ParseError(f"{have - need} trailing bytes after the bit stream", pos + need)
    a = np.zeros((n, n), dtype=np.uint8)
    for t, (i, j) in enumerate(pairs):
        if vals[pos + t // 6] >> (5 - t % 6) & 1:
            a[i, j] = a[j, i] = 1
    return Graph(a, check=False)
