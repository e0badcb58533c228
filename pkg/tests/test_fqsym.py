import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import R, lc
from qthook import fqsym
from qthook.combinat import descent_composition, maj, permutations, signed_permutations
from qthook.lincomb import LinComb
from qthook.qt import QTPoly, QTRational, q_pochhammer

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_small_superizations():
    assert fqsym.specialize_bar_tA((1, 2)) == lc({(1, 2): "1+t", (2, 1): "t+t^2"})
    assert fqsym.specialize_bar_tA((2, 1)) == lc({(2, 1): "1+t", (1, 2): "t+t^2"})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_superize_matches_bruteforce(n):
    for s in permutations(n):
        assert fqsym.superize_G(s) == fqsym.superize_G_bruteforce(s)


def test_identity_class():
    assert fqsym.identity_class(2) == [(1, 2), (-1, 2), (-2, 1), (-2, -1)]
    assert len(fqsym.identity_class(5)) == 32


def test_internal_product_is_associative():
    rng = random.Random(3)
    signed = list(signed_permutations(4))
    for _ in range(50):
        a, b, c = (rng.choice(signed) for _ in range(3))
        ab = fqsym.internal_product_signed(a, b)
        bc = fqsym.internal_product_signed(b, c)
        assert fqsym.internal_product_signed(ab, c) == fqsym.internal_product_signed(a, bc)


def test_internal_product_identity():
    for s in signed_permutations(3):
        assert fqsym.internal_product_signed(s, (1, 2, 3)) == s


def test_product_G_sizes():
    x = fqsym.product_G(LinComb.basis((2, 1)), LinComb.basis((1, 3, 2)))
    assert len(x) == comb(5, 2)
    assert fqsym.product_G(LinComb.basis((1,)), LinComb.basis((1,))) == lc({(1, 2): 1, (2, 1): 1})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_one_minus_t_transforms_are_adjoint(n):
    P = list(permutations(n))
    F = {s: dict(fqsym.F_times_1mt(s).items()) for s in P}
    G = {s: dict(fqsym.G_times_1mt(s).items()) for s in P}
    for s in P:
        for t in P:
            assert F[s].get(t, 0) == G[t].get(s, 0)


def test_F_times_1mt_small():
    assert fqsym.F_times_1mt((1, 2)) == lc({(1, 2): "1-t", (2, 1): "-t+t^2"})


@settings(max_examples=80, deadline=None)
@given(perms)
def test_F_at_X_modes_agree(s):
    vals = {fqsym.F_at_X(s, m) for m in fqsym.F_MODES}
    assert len(vals) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_F_at_X_by_enumeration(n):
    for s in permutations(n):
        assert fqsym.F_at_X_enumerate(s) == fqsym.F_at_X(s)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_F_at_X_depends_on_descents_only(n):
    seen = {}
    for s in permutations(n):
        v = fqsym.F_at_X(s)
        assert seen.setdefault(descent_composition(s), v) == v


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_F_at_X_at_t_zero(n):
    for s in permutations(n):
        v = fqsym.F_at_X(s)
        at0 = QTRational(QTPoly({k: c for k, c in v.num.terms.items() if k[1] == 0}),
                         QTPoly({k: c for k, c in v.den.terms.items() if k[1] == 0}))
        assert at0 == QTRational(QTPoly.monomial(maj(s)), q_pochhammer(n))


def test_single_letter():
    assert fqsym.F_at_X((1,)) == R("(1-t)/(1-q)")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_zigzag_factors_are_tree_factors(n):
    assert all(fqsym.zigzag_check(s) for s in permutations(n))


@settings(max_examples=40, deadline=None)
@given(perms, perms)
def test_half_products_at_X(s, t):
    if len(s) + len(t) > 7:
        return
    a, b = LinComb.basis(s), LinComb.basis(t)
    both = fqsym.F_at_X(s) * fqsym.F_at_X(t)
    for side in ("left", "right"):
        x = fqsym.dendriform_half(a, b, side, basis="F")
        assert fqsym.lincomb_at_X(x) == fqsym.half_product_at_X(s, t, side)
    assert fqsym.half_product_at_X(s, t, "left") + fqsym.half_product_at_X(s, t, "right") == both


def test_bad_keys():
    with pytest.raises(ValueError):
        fqsym.F_at_X((1, 1))
    with pytest.raises(ValueError):
        fqsym.F_at_X((2, 1), "nope")
    with pytest.raises(ValueError):
        fqsym.half_product_at_X((1,), (1,), "middle")
