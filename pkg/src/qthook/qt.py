"""Exact arithmetic in Z[q,t] and its fraction field.

>>> x = QTRational(1 - T, 1 - Q)
>>> str(x + T * x)
'(1 - t^2) / (1 - q)'
>>> x.evaluate(0, 0)
Fraction(1, 1)
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable

from . import _dense

__all__ = [
    "QTPoly", "QTRational", "PoleError", "Q", "T", "ONE", "ZERO",
    "binomial", "q_pochhammer", "q_comp_pochhammer", "q_integer",
    "product", "qt_sum",
]

Monomial = tuple  # (degree_q, degree_t)


class PoleError(ZeroDivisionError):
    """Raised when evaluating a rational function at a zero of its denominator."""


def _order_key(m: Monomial):
    # graded, then q before t: 1, q, t, q^2, q*t, t^2, ...
    return (m[0] + m[1], -m[0])


class QTPoly:
    """Sparse polynomial in q and t with integer coefficients.

    Immutable; ``terms`` maps ``(deg_q, deg_t)`` to a nonzero int.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        else:
            terms = {m: c for m, c in dict(terms).items() if c}
        self._terms = terms
        self._hash = None

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, coeff: int = 1) -> "QTPoly":
        if a < 0 or b < 0:
            raise ValueError("negative exponent")
        return cls({(a, b): coeff})

    @classmethod
    def _coerce(cls, x) -> "QTPoly":
        if isinstance(x, QTPoly):
            return x
        if isinstance(x, int):
            return cls(x)
        return NotImplemented

    # -- structure --------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded, q-first) order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def leading(self):
        """The canonically first term ``(monomial, coeff)``."""
        return min(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant(self) -> int:
        return self._terms.get((0, 0), 0)

    def degree_q(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    def degree_t(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def content(self) -> int:
        return reduce(gcd, self._terms.values(), 0)

    # -- dense conversion ----------------------------------------------------

    def _to_dense(self):
        if not self._terms:
            return []
        dt = self.degree_t()
        rows = [[] for _ in range(dt + 1)]
        for (a, b), c in self._terms.items():
            row = rows[b]
            if len(row) <= a:
                row.extend([0] * (a + 1 - len(row)))
            row[a] = c
        return rows

    @classmethod
    def _from_dense(cls, rows) -> "QTPoly":
        out = {}
        for b, row in enumerate(rows):
            for a, c in enumerate(row):
                if c:
                    out[(a, b)] = c
        p = cls.__new__(cls)
        p._terms = out
        p._hash = None
        return p

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = QTPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return QTPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = QTPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QTPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exquo(self, other: "QTPoly") -> "QTPoly":
        """Exact division; raises ValueError when ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        quo = _dense.b_exquo(self._to_dense(), other._to_dense())
        if quo is None:
            raise ValueError(f"{other} does not divide {self}")
        return QTPoly._from_dense(quo)

    def divides(self, other: "QTPoly") -> bool:
        return _dense.b_exquo(other._to_dense(), self._to_dense()) is not None

    def gcd(self, other: "QTPoly") -> "QTPoly":
        g = QTPoly._from_dense(_dense.b_gcd(self._to_dense(), other._to_dense()))
        if g and g.leading()[1] < 0:
            g = -g
        return g

    def negate_t(self) -> "QTPoly":
        """The substitution t -> -t."""
        return QTPoly({(a, b): (-c if b & 1 else c) for (a, b), c in self._terms.items()})

    def evaluate(self, q0, t0) -> Fraction:
        q0, t0 = Fraction(q0), Fraction(t0)
        return sum((c * q0 ** a * t0 ** b for (a, b), c in self._terms.items()), Fraction(0))

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other):
        other = QTPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text ---------------------------------------------------------------------

    def __repr__(self):
        return f"QTPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            mono = "*".join(
                s for s in (_pow_txt("q", a), _pow_txt("t", b)) if s
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, ((a, b), c) in enumerate(self.items()):
            mono = _pow_tex("q", a) + _pow_tex("t", b)
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            if i == 0:
                out += ("-" if c < 0 else "") + body
            else:
                out += ("-" if c < 0 else "+") + body
        return out


def _pow_txt(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _pow_tex(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e < 10 else f"{var}^{{{e}}}"


ZERO = QTPoly()
ONE = QTPoly(1)
Q = QTPoly.monomial(1, 0)
T = QTPoly.monomial(0, 1)


class QTRational:
    """A reduced fraction of two QTPoly values.

    The denominator is nonzero, shares no nonunit factor with the numerator,
    and its canonically first term has a positive coefficient.  Equality is
    tested by cross-multiplication.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, QTRational):
            if den == 1:
                self.num, self.den, self._hash = num.num, num.den, num._hash
                return
            num, den = num.num, num.den * QTPoly._coerce(den)
            if isinstance(den, QTRational):
                raise TypeError("use division for rational denominators")
        num, den = QTPoly._coerce(num), QTPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QTRational needs QTPoly or int arguments")
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: QTPoly, den: QTPoly) -> "QTRational":
        x = cls.__new__(cls)
        x.num, x.den, x._hash = num, den, None
        return x

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, QTRational):
            return x
        if isinstance(x, (QTPoly, int)):
            return cls._raw(QTPoly._coerce(x), ONE)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QTRational(self.num + other.num, self.den)
        return QTRational(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QTRational._raw(-self.num, self.den)

    def __sub__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.den == ONE and self.den == ONE:
            return QTRational._raw(self.num * other.num, ONE)
        return QTRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return QTRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return QTRational(1) / (self ** -k)
        return QTRational._raw(self.num ** k, self.den ** k)

    def negate_t(self) -> "QTRational":
        return QTRational(self.num.negate_t(), self.den.negate_t())

    def evaluate(self, q0, t0) -> Fraction:
        d = self.den.evaluate(q0, t0)
        if d == 0:
            raise PoleError(f"pole of {self} at q={q0}, t={t0}")
        return self.num.evaluate(q0, t0) / d

    def canonicalize(self) -> "QTRational":
        return QTRational(self.num, self.den)

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other):
        other = QTRational._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- text ---------------------------------------------------------------------

    def __repr__(self):
        return f"QTRational({str(self)!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"{_paren(self.num)} / {_paren(self.den, True)}"

    def latex(self) -> str:
        if self.den == ONE:
            return self.num.latex()
        return f"\\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    @classmethod
    def parse(cls, text: str) -> "QTRational":
        return _Parser(text).parse()


def _paren(p: QTPoly, divisor: bool = False) -> str:
    # a product in the divisor binds looser than the slash
    s = str(p)
    return f"({s})" if len(p._terms) > 1 or (divisor and not p.is_constant() and "*" in s) else s


@lru_cache(maxsize=1 << 16)
def _reduce(num: QTPoly, den: QTPoly):
    # memoized: the same fractions recur constantly across enumerations
    if not num:
        return ZERO, ONE
    if den.is_constant():
        c = den.constant()
        g = gcd(num.content(), c)
        if c < 0:
            g = -g
        if g != 1:
            num = QTPoly({m: v // g for m, v in num._terms.items()})
            den = QTPoly(c // g)
        return num, den
    g = num.gcd(den)
    if not g.is_constant() or g.constant() != 1:
        num, den = num.exquo(g), den.exquo(g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def binomial(a: int, b: int, c: int, d: int) -> QTPoly:
    """The polynomial q^a t^b - q^c t^d."""
    return QTPoly.monomial(a, b) - QTPoly.monomial(c, d)


def q_integer(n: int) -> QTPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QTPoly({(k, 0): 1 for k in range(n)})


def q_pochhammer(n: int) -> QTPoly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = ONE
    for k in range(1, n + 1):
        r = r * binomial(0, 0, k, 0)
    return r


def q_comp_pochhammer(comp) -> QTPoly:
    """(q)_I = (1 - q^n) * prod over descents d of I of (1 - q^d)."""
    parts = tuple(comp)
    if not parts or any(p <= 0 for p in parts):
        raise ValueError(f"not a composition: {comp!r}")
    n = sum(parts)
    r = binomial(0, 0, n, 0)
    s = 0
    for p in parts[:-1]:
        s += p
        r = r * binomial(0, 0, s, 0)
    return r


def product(nums: Iterable = (), dens: Iterable = ()) -> QTRational:
    """prod(nums) / prod(dens), reduced once at the end."""
    n, d = ONE, ONE
    for x in nums:
        n = n * x
    for x in dens:
        d = d * x
    return QTRational(n, d)


def qt_sum(values: Iterable) -> QTRational:
    """Sum of QTRational values, sharing denominators before reducing."""
    by_den: dict = {}
    for v in values:
        v = QTRational._coerce(v)
        by_den[v.den] = by_den.get(v.den, ZERO) + v.num
    total = QTRational(0)
    for den, num in by_den.items():
        if num:
            total = total + QTRational(num, den)
    return total


# -- parsing ------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qt])|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for expressions in q, t with + - * / ^ ( )."""

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at offset {pos}")
            num, var, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                self.tokens.append(("var", var))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> QTRational:
        if not self.tokens:
            raise ValueError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input at token {self.i}")
        return value

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        value = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                value = value * rhs if val == "*" else value / rhs
            elif kind in ("var", "num") or (kind == "op" and val == "("):
                value = value * self.power()  # juxtaposition, as in "q^2t"
            else:
                return value

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** exp
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return QTRational(val)
        if kind == "var":
            return QTRational(Q if val == "q" else T)
        if kind == "op" and val == "(":
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return value
        raise ValueError(f"unexpected token {val!r}")
