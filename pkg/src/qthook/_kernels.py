"""Enumeration kernels over sign vectors.

Two histograms carry all the brute-force sums in the package:

* ``signed_maj_histogram(perms)``: for each permutation sigma (row of an
  int array) and each of the 2^n sign vectors eps, count (m(eps),
  maj(sigma, eps)), descents taken on the keys eps_i * sigma_i;
* ``spack_histogram(evals)``: for each evaluation vector (c_1..c_k) of a
  packed word and each choice of signed values, count (parity of m',
  m, maj of the evaluation of the super-packed word).

The numba versions are used unless QTHOOK_DISABLE_NUMBA is set to a true
value (or numba is missing); the numpy versions are the reference.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


def backend() -> str:
    """Which implementation the public functions dispatch to right now."""
    if _HAVE_NUMBA and not _flag("QTHOOK_DISABLE_NUMBA"):
        return "numba"
    return "numpy"


def max_maj(n: int) -> int:
    return n * (n - 1) // 2


# -- signed maj over all sign vectors -----------------------------------------------

@njit(cache=True)
def _signed_maj_hist_nb(perms):
    N, n = perms.shape
    H = np.zeros((N, n + 1, n * (n - 1) // 2 + 1), dtype=np.int64)
    keys = np.empty(n, dtype=np.int64)
    for r in range(N):
        for mask in range(1 << n):
            m = 0
            for i in range(n):
                if (mask >> i) & 1:
                    keys[i] = -perms[r, i]
                    m += 1
                else:
                    keys[i] = perms[r, i]
            mj = 0
            for i in range(n - 1):
                if keys[i] > keys[i + 1]:
                    mj += i + 1
            H[r, m, mj] += 1
    return H


def _sign_matrix(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
    return bits


def _signed_maj_hist_np(perms: np.ndarray) -> np.ndarray:
    N, n = perms.shape
    H = np.zeros((N, n + 1, max_maj(n) + 1), dtype=np.int64)
    if N == 0:
        return H
    bits = _sign_matrix(n)
    signs = 1 - 2 * bits                                   # (2^n, n)
    m = bits.sum(axis=1)                                   # (2^n,)
    keys = signs[None, :, :] * perms[:, None, :]           # (N, 2^n, n)
    desc = keys[:, :, :-1] > keys[:, :, 1:]
    mj = desc.astype(np.int64) @ np.arange(1, n, dtype=np.int64)   # (N, 2^n)
    rows = np.repeat(np.arange(N), 1 << n)
    np.add.at(H, (rows, np.tile(m, N), mj.ravel()), 1)
    return H


def signed_maj_histogram(perms) -> np.ndarray:
    """H[r, m, j] = #{eps : m(eps) = m, maj(perms[r], eps) = j}."""
    P = np.ascontiguousarray(np.asarray(perms, dtype=np.int64))
    if P.ndim != 2:
        raise ValueError("expected a 2-d array of permutations")
    if backend() == "numba":
        return _signed_maj_hist_nb(P)
    return _signed_maj_hist_np(P)


# -- regular sign choices on packed words ----------------------------------------------

@njit(cache=True)
def _spack_hist_nb(evals, ks, n):
    N = evals.shape[0]
    H = np.zeros((N, 2, n + 1, n * (n - 1) // 2 + 1), dtype=np.int64)
    partial = np.empty(n + 1, dtype=np.int64)
    for r in range(N):
        k = ks[r]
        s = 0
        for j in range(k):
            s += evals[r, j]
            partial[j] = s
        for mask in range(1 << k):
            m = 0
            mp = 0
            mj = 0
            for j in range(k):
                if (mask >> j) & 1:
                    m += evals[r, j]
                    mp += 1
                elif j < k - 1:
                    mj += partial[j]
            H[r, mp & 1, m, mj] += 1
    return H


def _spack_hist_np(evals: np.ndarray, ks: np.ndarray, n: int) -> np.ndarray:
    N = evals.shape[0]
    H = np.zeros((N, 2, n + 1, max_maj(n) + 1), dtype=np.int64)
    for r in range(N):
        k = int(ks[r])
        c = evals[r, :k]
        bits = _sign_matrix(k)
        m = bits @ c
        mp = bits.sum(axis=1) & 1
        partial = np.cumsum(c)[: k - 1]
        mj = (1 - bits[:, : k - 1]) @ partial if k > 1 else np.zeros(1 << k, dtype=np.int64)
        np.add.at(H[r], (mp, m, mj), 1)
    return H


def spack_histogram(evals) -> np.ndarray:
    """H[r, p, m, j] over the regular sign choices of a word with evaluation
    evals[r]: p = m' mod 2, m = number of signed positions, j = maj of the
    evaluation of the super-packed word."""
    rows = [tuple(int(x) for x in e) for e in evals]
    n = max((sum(e) for e in rows), default=0)
    E = np.zeros((len(rows), max(n, 1)), dtype=np.int64)
    ks = np.zeros(len(rows), dtype=np.int64)
    for r, e in enumerate(rows):
        if sum(e) != n:
            raise ValueError("all evaluations in a batch must have the same size")
        E[r, : len(e)] = e
        ks[r] = len(e)
    if backend() == "numba":
        return _spack_hist_nb(E, ks, n)
    return _spack_hist_np(E, ks, n)
