"""The numba kernels against their numpy reference and a plain-Python count."""

from collections import Counter
from itertools import product

import numpy as np
import pytest

from qthook import _kernels
from qthook.combinat import maj, permutations

pytestmark = pytest.mark.skipif(not _kernels._HAVE_NUMBA, reason="numba not installed")


def _signed_maj_python(sigma):
    out = Counter()
    for e in product((1, -1), repeat=len(sigma)):
        keys = [a * b for a, b in zip(e, sigma)]
        out[(e.count(-1), maj(keys))] += 1
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_signed_maj_backends_agree(n):
    P = np.array(list(permutations(n)), dtype=np.int64)
    assert np.array_equal(_kernels._signed_maj_hist_nb(P), _kernels._signed_maj_hist_np(P))


def test_signed_maj_matches_python():
    perms = list(permutations(4))
    H = _kernels._signed_maj_hist_np(np.array(perms))
    for r, s in enumerate(perms):
        want = _signed_maj_python(s)
        got = {(m, j): int(H[r, m, j]) for m, j in zip(*np.nonzero(H[r]))}
        assert got == dict(want)


@pytest.mark.parametrize("evals", [[(1,)], [(2,), (1, 1)], [(2, 1, 1), (1, 3), (4,), (1, 1, 1, 1)],
                                   [(2, 1, 4, 2), (3, 3, 3), (1, 1, 1, 1, 1, 1, 1, 1, 1)]])
def test_spack_backends_agree(evals, monkeypatch):
    monkeypatch.delenv("QTHOOK_DISABLE_NUMBA", raising=False)
    fast = _kernels.spack_histogram(evals)
    monkeypatch.setenv("QTHOOK_DISABLE_NUMBA", "1")
    slow = _kernels.spack_histogram(evals)
    assert np.array_equal(fast, slow)


def test_env_flag_switches_backend(monkeypatch):
    monkeypatch.delenv("QTHOOK_DISABLE_NUMBA", raising=False)
    assert _kernels.backend() == "numba"
    for value in ("1", "true", "YES"):
        monkeypatch.setenv("QTHOOK_DISABLE_NUMBA", value)
        assert _kernels.backend() == "numpy"
    monkeypatch.setenv("QTHOOK_DISABLE_NUMBA", "0")
    assert _kernels.backend() == "numba"


def test_public_values_same_on_both_backends(numpy_backend, monkeypatch):
    from qthook import fqsym, wqsym
    perms = list(permutations(5))
    words = [(1, 2, 1, 3), (2, 2, 1), (1, 1, 2, 3, 3, 3, 3, 4, 4)]
    slow = (fqsym.F_at_X_many(perms, "signed_sum"), [wqsym.M_at_X(u, "signed_sum") for u in words])
    monkeypatch.delenv("QTHOOK_DISABLE_NUMBA")
    fast = (fqsym.F_at_X_many(perms, "signed_sum"), [wqsym.M_at_X(u, "signed_sum") for u in words])
    assert slow == fast


def test_bad_input():
    with pytest.raises(ValueError):
        _kernels.signed_maj_histogram(np.arange(3))
    with pytest.raises(ValueError):
        _kernels.spack_histogram([(1, 2), (1,)])
