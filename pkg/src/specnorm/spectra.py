"""Eigenvalues, singular values and exact integer Gram products."""
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError, ArgumentError

SYM_TOL = 1e-12


def as_matrix(x):
    """Float copy of a Graph (its adjacency), array or nested list."""
    adj = getattr(x, "adjacency", None)
    a = np.asarray(adj if adj is not None else x, dtype=float)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionError(f"expected a nonempty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    return a


def is_symmetric(a, tol=SYM_TOL):
    return a.shape[0] == a.shape[1] and bool(np.all(np.abs(a - a.T) <= tol))


def sym_eigenvalues(x):
    """Descending eigenvalues of a symmetric matrix or graph."""
    a = as_matrix(x)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix is not square: {a.shape}")
    if not is_symmetric(a):
        raise DimensionError("matrix is not symmetric")
    # LAPACK syevd: Householder tridiagonalisation + stable tridiagonal solve
    return np.linalg.eigvalsh((a + a.T) / 2)[::-1].copy()


def group_values(values, gap):
    """Split a descending sequence wherever two neighbours differ by more than gap."""
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > gap:
            chunk = values[start:i]
            groups.append((float(np.mean(chunk)), i - start))
            start = i
    return groups


def default_gap(values):
    top = float(values[0]) if len(values) else 0.0
    return max(1e-6 * top, 1e-12)


@dataclass(frozen=True)
class SingularSpectrum:
    values: tuple
    grouping_gap: float
    groups: tuple = field(default=())

    @classmethod
    def from_values(cls, values, gap=None):
        v = np.sort(np.clip(np.asarray(values, dtype=float), 0.0, None))[::-1]
        g = default_gap(v) if gap is None else gap
        return cls(tuple(float(t) for t in v), g, tuple(group_values(v, g)))

    def __len__(self):
        return len(self.values)

    def array(self):
        return np.array(self.values)

    def nonzero_groups(self):
        return [(v, k) for v, k in self.groups if v > self.grouping_gap]

    def as_dict(self):
        return {"values": list(self.values), "groups": [list(g) for g in self.groups],
                "grouping_gap": self.grouping_gap}


def singular_value_array(a):
    """Descending singular values of a float matrix as an ndarray.

    Symmetric input uses |eigenvalues|; rectangular input goes through the
    symmetric embedding [[0, A], [A^T, 0]] whose spectrum is +-sigma plus zeros.
    That keeps small singular values accurate to eps*sigma_1, which the Gram
    route (sqrt of an eigenvalue of A A^T) does not.
    """
    m, n = a.shape
    if m == n and is_symmetric(a):
        return np.sort(np.abs(np.linalg.eigvalsh((a + a.T) / 2)))[::-1]
    big = np.zeros((m + n, m + n))
    big[:m, m:] = a
    big[m:, :m] = a.T
    ev = np.linalg.eigvalsh(big)[::-1]
    return np.clip(ev[: min(m, n)], 0.0, None)


def singular_values(x, gap=None):
    return SingularSpectrum.from_values(singular_value_array(as_matrix(x)), gap)


def as_int_matrix(x, allowed=(-1, 0, 1)):
    """Exact integer copy; raises if any entry is not (close to) an allowed integer."""
    a = np.asarray(getattr(x, "adjacency", x))
    if a.ndim != 2:
        raise DimensionError("expected a 2-d matrix")
    r = np.rint(a.astype(float))
    if np.any(np.abs(a - r) > 1e-6):
        raise DomainError("entries are not integers")
    r = r.astype(np.int64)
    if allowed is not None and not np.all(np.isin(r, allowed)):
        raise DomainError(f"entries outside {set(allowed)}")
    return r


def gram_exact(h):
    """H H^T in exact integer arithmetic for a {-1,0,1} matrix."""
    r = as_int_matrix(h)
    # int64 products of {-1,0,1} entries cannot overflow below 2^62 columns
    return r @ r.T


@dataclass(frozen=True)
class WeylRecord:
    i: int
    j: int
    lhs: float
    rhs: float
    holds: bool
    equality: bool


def weyl_check(a, b, i, j):
    """sigma_{i+j-1}(A+B) <= sigma_i(A) + sigma_j(B)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    m = min(a.shape)
    if i < 1 or j < 1 or i + j > m + 1:
        raise ArgumentError(f"need i, j >= 1 and i + j <= {m + 1}, got ({i}, {j})")
    sab = singular_value_array(a + b)
    lhs = float(sab[i + j - 2])
    rhs = float(singular_value_array(a)[i - 1] + singular_value_array(b)[j - 1])
    tol = 1e-9 * max(float(sab[0]), 1.0)
    return WeylRecord(i, j, lhs, rhs, lhs <= rhs + tol, abs(rhs - lhs) <= tol)
