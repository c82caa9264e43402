"""Ky Fan and Schatten norms, the Schatten curve, and spectrum recovery from it."""
from dataclasses import dataclass
from functools import cached_property
import math

import mpmath as mp
import numpy as np

from .errors import ArgumentError, PrecisionError, RecoveryFailed
from .graphs import Graph
from .spectra import (SingularSpectrum, as_matrix, group_values, is_symmetric,
                      singular_value_array, sym_eigenvalues)


@dataclass(frozen=True, eq=False)
class NormSubject:
    """A graph or a real matrix together with its (lazily cached) spectrum."""

    matrix: np.ndarray
    graph: Graph | None = None

    @classmethod
    def of(cls, x):
        if isinstance(x, NormSubject):
            return x
        if isinstance(x, Graph):
            return cls(as_matrix(x), x)
        return cls(as_matrix(x))

    @property
    def is_graph(self):
        return self.graph is not None

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def rank_dim(self):
        """min(m, n): the number of singular values."""
        return min(self.matrix.shape)

    @cached_property
    def sv(self):
        v = singular_value_array(self.matrix)
        v.setflags(write=False)
        return v

    @cached_property
    def spectrum(self):
        return SingularSpectrum.from_values(self.sv)

    @cached_property
    def eigenvalues(self):
        if not is_symmetric(self.matrix):
            raise ArgumentError("eigenvalues requested for a non-symmetric matrix")
        ev = sym_eigenvalues(self.matrix)
        ev.setflags(write=False)
        return ev

    def curve_oracle(self, dps=None):
        """x -> f(x) built from the grouped spectrum.

        With dps set, values are mpmath numbers at that working precision, so
        f(x)^x keeps every term's contribution even when it is tiny relative to
        sigma_1^x.
        """
        groups = self.spectrum.nonzero_groups()
        if dps is None:
            vals = np.array([v for v, _ in groups])
            mult = np.array([k for _, k in groups], dtype=float)
            return lambda x: _power_mean(vals, mult, float(x))
        with mp.workdps(dps):
            g = [(mp.mpf(v), k) for v, k in groups]

        def oracle(x):
            with mp.workdps(dps):
                if not g:
                    return mp.mpf(0)
                x = mp.mpf(x)
                return mp.fsum(k * v ** x for v, k in g) ** (1 / x)

        return oracle


def _subject(s):
    return NormSubject.of(s)


def _power_mean(vals, mult, p):
    if len(vals) == 0 or vals[0] == 0:
        return 0.0
    top = vals.max()
    return float(top * (np.sum(mult * (vals / top) ** p)) ** (1.0 / p))


def ky_fan(subject, k):
    s = _subject(subject)
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= s.rank_dim:
        raise ArgumentError(f"Ky Fan index k must be an integer in [1, {s.rank_dim}], got {k}")
    return float(np.sum(s.sv[:k]))


def schatten(subject, p):
    s = _subject(subject)
    if not p >= 1:
        raise ArgumentError(f"Schatten exponent must be >= 1, got {p}")
    sv = s.sv
    if math.isinf(p):
        return float(sv[0])
    return _power_mean(sv, np.ones_like(sv), float(p))


def trace_norm(subject):
    return float(np.sum(_subject(subject).sv))


def energy(g):
    return trace_norm(g)


def operator_norm(subject):
    return float(_subject(subject).sv[0])


def frobenius(subject):
    return float(np.sqrt(np.sum(_subject(subject).matrix ** 2)))


def max_norm(subject):
    return float(np.max(np.abs(_subject(subject).matrix)))


def schatten_curve(subject, xs):
    s = _subject(subject)
    xs = list(xs)
    if not xs:
        raise ArgumentError("xs must be nonempty")
    bad = [x for x in xs if not x >= 1]
    if bad:
        raise ArgumentError(f"curve points must be >= 1, got {bad[0]}")
    return [(float(x), schatten(s, x)) for x in xs]


# ---- spectrum recovery ----

def _numeric_rank(rows, rel_tol):
    """Rank by Gaussian elimination with complete pivoting (rank revealing enough
    for the small Hankel matrices used here)."""
    a = [list(r) for r in rows]
    nr, nc = len(a), len(a[0])
    first = None
    rank = 0
    for step in range(min(nr, nc)):
        best, bi, bj = 0, step, step
        for i in range(step, nr):
            row = a[i]
            for j in range(step, nc):
                v = abs(row[j])
                if v > best:
                    best, bi, bj = v, i, j
        if first is None:
            first = best
        if best == 0 or best <= rel_tol * first:
            break
        a[step], a[bi] = a[bi], a[step]
        for r in a:
            r[step], r[bj] = r[bj], r[step]
        piv = a[step]
        for i in range(step + 1, nr):
            f = a[i][step] / piv[step]
            if f:
                ri = a[i]
                for j in range(step, nc):
                    ri[j] -= f * piv[j]
        rank += 1
    return rank


def _real_roots(coeffs, dps):
    """Roots of a real polynomial expected to have distinct positive real roots.

    Float companion-matrix roots polished by Newton steps at working precision;
    returns None when that does not give distinct converged real roots, so the
    caller can fall back to a general complex root finder.
    """
    try:
        guess = np.roots([float(c) for c in coeffs])
    except (OverflowError, np.linalg.LinAlgError):
        return None
    if len(guess) != len(coeffs) - 1 or np.any(np.abs(guess.imag) > 1e-6 * np.maximum(np.abs(guess), 1e-300)):
        return None
    eps = mp.mpf(10) ** (5 - dps)
    roots = []
    for g in sorted(guess.real, reverse=True):
        z = mp.mpf(g)
        for _ in range(60):
            val, der = mp.mpf(0), mp.mpf(0)
            for c in coeffs:
                der = der * z + val
                val = val * z + c
            if der == 0:
                return None
            dz = val / der
            z -= dz
            if abs(dz) <= eps * abs(z):
                break
        else:
            return None
        roots.append(z)
    for a, b in zip(roots, roots[1:]):
        if abs(a - b) <= mp.mpf(10) ** (-dps // 3) * abs(a):
            return None
    return roots


def recover_spectrum(oracle, max_x=60.0, tol=1e-3, step=4.0, dps=60):
    """Nonzero singular values and multiplicities from samples of a Schatten curve.

    y(x) = f(x)^x = sum_i k_i s_i^x is an exponential sum in x.  Sampling it at
    x = step, 2 step, ..., max_x and fitting the exponentials (Prony's method on
    the Hankel matrix of samples) yields every s_i at once, which is far more
    robust than peeling one value at a time off f at large x when two values are
    close.  The oracle should return mpmath numbers (see NormSubject.curve_oracle);
    plain floats work for well separated spectra.
    """
    if step <= 0 or max_x < step:
        raise ArgumentError("need 0 < step <= max_x")
    with mp.workdps(dps):
        xs = [mp.mpf(step) * j for j in range(1, int(math.floor(max_x / step + 1e-9)) + 1)]
        raw = [oracle(x) for x in xs]
        precise = isinstance(raw[0], mp.mpf)
        fx = [mp.mpf(v) for v in raw]
        if fx[-1] <= 0:
            return SingularSpectrum.from_values([])
        scale = fx[-1]
        u = [(fx[j] / scale) ** xs[j] for j in range(len(xs))]
        nsamp = len(u)
        half = nsamp // 2
        hankel = [[u[a + b] for b in range(half + 1)] for a in range(nsamp - half)]
        rank_tol = mp.mpf(10) ** (-(dps // 2)) if precise else mp.mpf("1e-11")
        r = _numeric_rank(hankel, rank_tol)
        if r == 0:
            raise RecoveryFailed("curve samples carry no signal")
        if r >= min(len(hankel), len(hankel[0])):
            raise RecoveryFailed(
                f"{r} or more distinct values exceed what {nsamp} samples can resolve; "
                "reduce step or raise max_x")
        try:
            lp = mp.lu_solve(mp.matrix([[u[j + i] for i in range(r)] for j in range(r)]),
                             mp.matrix([-u[j + r] for j in range(r)]))
            coeffs = [mp.mpf(1)] + [lp[r - 1 - i] for i in range(r)]
            roots = _real_roots(coeffs, dps)
            if roots is None:
                roots = mp.polyroots(coeffs, maxsteps=200, extraprec=dps)
        except (ZeroDivisionError, mp.NoConvergence) as exc:
            raise RecoveryFailed(f"exponential fit failed: {exc}") from None
        roots = roots if isinstance(roots, list) else [roots]
        w = []
        for z in roots:
            z = mp.mpc(z)
            if abs(z.imag) > mp.mpf("1e-8") * max(abs(z), 1) or z.real <= 0:
                raise RecoveryFailed(f"fitted base {mp.nstr(z, 8)} is not a positive real")
            w.append(z.real)
        w.sort(reverse=True)
        vand = mp.matrix([[wi ** (j + 1) for wi in w] for j in range(r)])
        try:
            c = mp.lu_solve(vand, mp.matrix(u[:r]))
        except ZeroDivisionError:
            raise RecoveryFailed("coincident fitted values") from None
        mults = []
        for ci in c:
            k = int(mp.nint(ci))
            if abs(ci - k) > 0.25 or k < 1:
                raise RecoveryFailed(f"multiplicity estimate {float(ci):.4f} is not near a positive integer")
            mults.append(k)
        values = [scale * wi ** (1 / mp.mpf(step)) for wi in w]
        # rebuilt(x_j) / f(x_j) = (sum_i k_i w_i^(j+1) / u_j)^(1/x_j), using powers of w
        powers = list(w)
        for j, x in enumerate(xs):
            ratio = (mp.fsum(k * pw for pw, k in zip(powers, mults)) / u[j]) ** (1 / x)
            if abs(ratio - 1) > tol:
                raise RecoveryFailed(f"reconstruction misses the curve at x={float(x)} "
                                     f"(relative error {float(ratio - 1):.3e})")
            powers = [pw * wi for pw, wi in zip(powers, w)]
    out = []
    for v, k in zip(values, mults):
        out.extend([float(v)] * k)
    return SingularSpectrum.from_values(out)


def spectra_match(a, b, rel=1e-9):
    """Compare two lists of (value, multiplicity)."""
    if len(a) != len(b):
        return False
    for (va, ka), (vb, kb) in zip(a, b):
        if ka != kb or abs(va - vb) > rel * max(abs(va), abs(vb), 1e-300):
            return False
    return True


def singularly_cospectral(g, h):
    sg = _subject(g).spectrum.nonzero_groups()
    sh = _subject(h).spectrum.nonzero_groups()
    return spectra_match(sg, sh)


def closed_walks_2k(g, k):
    """tr A^{2k} from the eigenvalues, rounded to the nearest integer."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k}")
    s = _subject(g)
    ev = s.eigenvalues
    exact = math.fsum(float(v) ** (2 * k) for v in ev)
    r = round(exact)
    if abs(exact - r) >= 0.4:
        raise PrecisionError(f"tr A^{2 * k} = {exact!r} is too far from an integer to round")
    return int(r)


def grouped(values, gap=None):
    v = np.sort(np.asarray(values, dtype=float))[::-1]
    g = max(1e-6 * v[0], 1e-12) if gap is None else gap
    return group_values(v, g)
