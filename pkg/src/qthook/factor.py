"""Hook factors kept in the unexpanded form they are drawn in.

A factor is a ratio of products of binomials q^a t^b - q^c t^d.  Keeping the
binomials apart (instead of expanding) lets the renderers print ``q^5-t``
rather than ``-t+q^5``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qt import QTRational, binomial, product

Binom = tuple  # (a, b, c, d) for q^a t^b - q^c t^d


def _mono_tex(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "1"
    s = ""
    if a:
        s += "q" if a == 1 else (f"q^{a}" if a < 10 else f"q^{{{a}}}")
    if b:
        s += "t" if b == 1 else (f"t^{b}" if b < 10 else f"t^{{{b}}}")
    return s


def _mono_txt(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    return "*".join(parts)


def binom_tex(x: Binom) -> str:
    a, b, c, d = x
    return f"{_mono_tex(a, b)}-{_mono_tex(c, d)}"


def binom_txt(x: Binom) -> str:
    a, b, c, d = x
    return f"{_mono_txt(a, b)} - {_mono_txt(c, d)}"


def one_minus_q(k: int) -> Binom:
    return (0, 0, k, 0)


@dataclass(frozen=True)
class Factor:
    nums: tuple
    dens: tuple

    def value(self) -> QTRational:
        return product([binomial(*x) for x in self.nums],
                       [binomial(*x) for x in self.dens])

    def latex(self) -> str:
        return f"\\frac{{{_prod_tex(self.nums)}}}{{{_prod_tex(self.dens)}}}"

    def text(self) -> str:
        return f"{_prod_txt(self.nums)} / {_prod_txt(self.dens)}"

    def numerator_latex(self) -> str:
        return _prod_tex(self.nums)


def _prod_tex(xs) -> str:
    if not xs:
        return "1"
    if len(xs) == 1:
        return binom_tex(xs[0])
    return "".join(f"({binom_tex(x)})" for x in xs)


def _prod_txt(xs) -> str:
    if not xs:
        return "1"
    if len(xs) == 1:
        return f"({binom_txt(xs[0])})"
    return "".join(f"({binom_txt(x)})" for x in xs)


def product_of(factors) -> QTRational:
    """Multiply factors, reducing once."""
    nums, dens = [], []
    for f in factors:
        nums.extend(binomial(*x) for x in f.nums)
        dens.extend(binomial(*x) for x in f.dens)
    return product(nums, dens)
