import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import R, lc
from qthook import wqsym
from qthook.combinat import compositions, evaluation, pack, packed_words
from qthook.lincomb import LinComb
from qthook.qt import qt_sum

SIGMA_SHARP_3 = {
    (-1, -1, -1): 1, (1, 1, 1): 1,
    (-1, -1, -2): -1, (-1, -1, 2): -1, (-1, -2, -1): -1, (-1, 2, -1): -1,
    (-2, -1, -1): -1, (2, -1, -1): -1,
    (-2, -2, -1): -1, (2, 2, -1): 1, (-2, -1, -2): -1, (2, -1, 2): 1,
    (-1, -2, -2): -1, (-1, 2, 2): 1,
    (-1, -2, -3): 1, (-1, -2, 3): 1, (-1, -3, -2): 1, (-1, 3, -2): 1,
    (-2, -1, -3): 1, (-2, -1, 3): 1, (-2, -3, -1): 1, (-2, 3, -1): 1,
    (-3, -1, -2): 1, (3, -1, -2): 1, (-3, -2, -1): 1, (3, -2, -1): 1,
}

packed = st.integers(1, 5).flatmap(lambda n: st.sampled_from(packed_words(n)))


def test_sigma_sharp():
    assert wqsym.sigma_sharp_N(2) == lc({(-1, -1): -1, (1, 1): 1, (-1, -2): 1, (-1, 2): 1,
                                         (-2, -1): 1, (2, -1): 1})
    assert wqsym.sigma_sharp_N(3) == lc(SIGMA_SHARP_3)


def test_internal_product():
    assert wqsym.N_internal((1, 2, 1), (2, 1, 1)) == (2, 3, 1)
    assert wqsym.N_internal((1, 1, 2), (2, 1, 2)) == (2, 1, 3)
    # signs multiply componentwise
    assert wqsym.N_internal((-1, 2), (-1, -1)) == (1, -2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_superize_two_ways(n):
    for u in packed_words(n):
        assert wqsym.N_superize(u, "theorem") == wqsym.N_superize(u, "internal")


def test_superize_sign_count():
    # 1bar 1bar has two barred letters but one barred value: sign (-1)^(m + m') = -1
    x = dict(wqsym.N_superize((1, 1)).items())
    assert x[(-1, -1)] == -1 and x[(2, -1)] == 1


def test_finer_words():
    assert set(wqsym.finer_words((1, 2, 1))) == {(1, 2, 1), (1, 3, 2), (2, 3, 1)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_N_1mt_closed(n):
    for u in packed_words(n):
        assert wqsym.N_1mt(u, "closed") == wqsym.N_1mt(u, "enumerative")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_M_dual_is_transpose(n):
    for u in packed_words(n):
        assert wqsym.M_dual_1mt(u, "spack") == wqsym.M_dual_1mt(u, "transpose")


@settings(max_examples=100, deadline=None)
@given(packed)
def test_M_at_X_modes(u):
    assert wqsym.M_at_X(u, "closed") == wqsym.M_at_X(u, "signed_sum")


@settings(max_examples=100, deadline=None)
@given(packed)
def test_M_at_X_depends_on_evaluation(u):
    # any packed word with the same evaluation, e.g. the nondecreasing one
    I = evaluation(u)
    w = pack(tuple(k + 1 for k, c in enumerate(I) for _ in range(c)))
    assert wqsym.M_at_X(u) == wqsym.M_at_X(w)


def test_M_at_X_small():
    assert wqsym.M_at_X((1,)) == R("(1-t)/(1-q)")
    assert wqsym.M_at_X((2, 1)) == R("(1-t)*(q-t)/((1-q^2)*(1-q))")
    assert wqsym.M_at_X((1, 1)) == R("(1-t^2)/(1-q^2)")


@settings(max_examples=100, deadline=None)
@given(packed)
def test_signed_gf_closed(u):
    assert wqsym.signed_gf(u) == wqsym.signed_gf_closed(u)


def test_convolution():
    got = set(wqsym.convolution((1,), (1,)))
    assert got == {(1, 1), (1, 2), (2, 1)}
    assert wqsym.M_product((1,), (1,)) == lc({(1, 1): 1, (1, 2): 1, (2, 1): 1})


@pytest.mark.parametrize("seed", range(5))
def test_tridendriform_parts_sum_to_product(seed):
    rng = random.Random(seed)
    a = rng.choice(packed_words(rng.randint(1, 3)))
    b = rng.choice(packed_words(rng.randint(1, 3)))
    parts = LinComb()
    for p in wqsym.PARTS:
        parts = parts + wqsym.M_tridendriform(a, b, p)
    assert parts == wqsym.M_product(a, b)
    total = qt_sum(wqsym.tridendriform_at_X(a, b, p) for p in wqsym.PARTS)
    assert total == wqsym.M_at_X(a) * wqsym.M_at_X(b)
    for p in wqsym.PARTS:
        assert wqsym.tridendriform_at_X(a, b, p, "closed") == wqsym.tridendriform_at_X(a, b, p, "expand")


def test_delannoy():
    assert [wqsym.central_delannoy(k) for k in range(6)] == [1, 3, 13, 63, 321, 1683]
    # M_1 M_1: the word 11 is the only term whose maxima coincide
    assert wqsym.delannoy_term(1, 1, 1) == 1
    for a1 in range(1, 4):
        for a2 in range(1, 4):
            want = {a1 + a2 - d: wqsym.delannoy_term(a1, a2, d) for d in range(min(a1, a2) + 1)}
            got = wqsym.delannoy_count_enumerate(tuple(range(1, a1 + 1)), tuple(range(1, a2 + 1)))
            assert dict(got) == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_embedding(n):
    comps = list(compositions(n))
    for I in comps:
        for J in comps:
            assert wqsym.embedding_check(I, J)


def test_errors():
    with pytest.raises(ValueError):
        wqsym.M_at_X((1, 3))
    with pytest.raises(ValueError):
        wqsym.M_tridendriform((1,), (1,), "top")
