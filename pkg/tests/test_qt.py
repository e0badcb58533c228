from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qthook.qt import (ONE, Q, T, ZERO, PoleError, QTPoly, QTRational, binomial, q_comp_pochhammer,
                       q_integer, q_pochhammer, qt_sum)

q_s, t_s = sympy.symbols("q t")

polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 3)),
                        st.integers(-4, 4), max_size=5).map(QTPoly)
nonzero = polys.filter(bool)
rationals = st.builds(QTRational, polys, nonzero)


def to_sympy(p: QTPoly):
    return sum(c * q_s ** a * t_s ** b for (a, b), c in p.items())


# -- ring laws ---------------------------------------------------------------------------------

@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_rational_field_laws(x, y, z):
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x / x == QTRational(1)


@settings(max_examples=60, deadline=None)
@given(nonzero, nonzero)
def test_gcd_agrees_with_sympy(a, b):
    g = a.gcd(b)
    ref = sympy.Poly(sympy.gcd(to_sympy(a), to_sympy(b)), q_s, t_s)
    assert sympy.expand(to_sympy(g) - ref.as_expr()) == 0 or sympy.expand(to_sympy(g) + ref.as_expr()) == 0


@settings(max_examples=60, deadline=None)
@given(polys, nonzero)
def test_reduced_fraction_matches_sympy(a, b):
    x = QTRational(a, b)
    assert sympy.simplify(to_sympy(x.num) / to_sympy(x.den) - to_sympy(a) / to_sympy(b)) == 0
    # reduced: no common factor left
    assert x.num.gcd(x.den) in (ONE, -ONE) or not x.num


@given(rationals)
def test_parse_roundtrip(x):
    assert QTRational.parse(str(x)) == x


# -- unit values -------------------------------------------------------------------------------

def test_docstring_example():
    x = QTRational(1 - T, 1 - Q)
    assert str(x + T * x) == "(1 - t^2) / (1 - q)"
    assert x.evaluate(0, 0) == Fraction(1)


def test_pochhammers():
    assert q_pochhammer(3) == (1 - Q) * (1 - Q ** 2) * (1 - Q ** 3)
    assert q_integer(4) == 1 + Q + Q ** 2 + Q ** 3
    # (q)_I = (1-q^n) prod over Des(I) of (1-q^d)
    assert q_comp_pochhammer((2, 1, 3)) == (1 - Q ** 6) * (1 - Q ** 2) * (1 - Q ** 3)


def test_binomial_and_sum():
    assert binomial(2, 0, 0, 1) == Q ** 2 - T
    assert qt_sum([QTRational(1, 1 - Q)] * 3) == QTRational(3, 1 - Q)
    assert qt_sum([]) == QTRational(0)


def test_negate_t():
    assert QTRational(Q - T, 1 - T).negate_t() == QTRational(Q + T, 1 + T)


def test_pole_and_zero_division():
    with pytest.raises(ZeroDivisionError):
        QTRational(1, 0)
    with pytest.raises(PoleError):
        QTRational(1, 1 - Q).evaluate(1, 0)


def test_hash_is_canonical():
    a = QTRational((1 - Q) * (1 + T), (1 - Q) * (1 - Q ** 2))
    b = QTRational(1 + T, 1 - Q ** 2)
    assert a == b and hash(a) == hash(b)
