import json

import pytest

from qthook import fqsym, oracle, wqsym
from qthook.combinat import packed_words, permutations
from qthook.lincomb import LinComb


def _passed(reports):
    if isinstance(reports, dict):
        reports = [reports]
    return all(r["passed"] for r in reports), [r["check"] for r in reports if not r["passed"]]


def test_report_shape():
    r = oracle._report("demo", 20, list(range(15)))
    assert r == {"check": "demo", "passed": False, "cases": 20, "failures": 15,
                 "mismatches": [str(i) for i in range(10)]}
    json.dumps(r)


def test_realize_single_letter():
    # G_1 on the alphabet {1, 2} up to degree 2 is 1 + 2: the two one-letter words
    R = oracle.realize((1,), m=2, max_degree=2)
    assert sorted(R.terms.items()) == [((1,), 1), ((2,), 1)]


def test_realization_of_product():
    a = oracle.realize((2, 1), 3, 4)
    b = oracle.realize((1,), 3, 4)
    prod = oracle.realize_lincomb(fqsym.product_G(LinComb.basis((2, 1)), LinComb.basis((1,))), 3, 4)
    assert a * b == prod


def test_realization_suite():
    ok, bad = _passed(oracle.check_product_realization(2, 3))
    assert ok, bad


def test_half_shuffle():
    left = oracle.half_shuffle((6, 3, 4), (1, 2, 5), "left")
    right = oracle.half_shuffle((6, 3, 4), (1, 2, 5), "right")
    assert len(left) + len(right) == 20
    assert all(w[-1] == 4 for w in left) and all(w[-1] == 5 for w in right)


def test_halfshuffle_checks():
    assert _passed(oracle.check_halfshuffle_descents((2,), (5,)))[0]
    assert _passed(oracle.check_halfshuffle_random(6, 50, seed=1))[0]


def test_sequences():
    ok, bad = _passed(oracle.sequence_checks())
    assert ok, bad


def test_raw_values_match_closed_forms():
    for s in permutations(4):
        assert oracle.F_raw(s) == fqsym.F_at_X(s)
    for u in packed_words(3):
        assert oracle.M_raw(u) == wqsym.M_at_X(u)
    words = packed_words(3)
    assert oracle.M_raw_sum(words) == sum((wqsym.M_at_X(u) for u in words[1:]), wqsym.M_at_X(words[0]))


@pytest.mark.parametrize("check", [
    oracle.check_F_at_X, oracle.check_P_at_X, oracle.check_signed_maj_gf,
    oracle.check_half_product_at_X, oracle.check_ribbons, oracle.check_interval_sums,
    oracle.check_N_1mt, oracle.check_M_at_X, oracle.check_tridendriform_at_X,
    oracle.check_MM_at_X,
])
def test_checks_pass_small(check):
    ok, bad = _passed(check(4))
    assert ok, bad


def test_t_zero():
    ok, bad = _passed(oracle.check_t_zero(5))
    assert ok, bad


def test_laws():
    ok, bad = _passed(oracle.check_dendriform_axioms(4, 20, 5) + oracle.check_tridendriform_axioms(4, 20, 5))
    assert ok, bad


def test_laws_catch_a_broken_product(monkeypatch):
    # swapping the two halves breaks the laws, and the check must notice
    real = fqsym.dendriform_half
    monkeypatch.setattr(fqsym, "dendriform_half",
                        lambda a, b, side, basis="G": real(a, b, "right" if side == "left" else "left", basis))
    assert not oracle.check_dendriform_axioms(4, 0, 4)[0]["passed"]


def test_run_all():
    reports = oracle.run_all(4)
    assert len(reports) > 15
    ok, bad = _passed(reports)
    assert ok, bad
