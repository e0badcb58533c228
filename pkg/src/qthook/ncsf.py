"""Ribbons, the level-2 complete functions S^(I,eps), and QSym values at 1/(1-q).

Signed compositions are tuples with signed parts negative: (-2, 1) is S^{2-bar 1}.
Signed ribbon keys are pairs (J, eps) with one sign per cell.
"""

from __future__ import annotations

from collections import defaultdict

from .combinat import (b_exponent, comp_descents, comp_finer, comp_interval, comp_maj,
                       compositions, descent_composition, num_signed,
                       peak_valley_condition, permutations, signs_of, unsigned,
                       valleys, attach_signs)
from .fqsym import superize_G
from .lincomb import LinComb
from .qt import QTRational, T, binomial, product, qt_sum, QTPoly


def descent_class(I) -> list:
    n = sum(I)
    return [p for p in permutations(n) if descent_composition(p) == tuple(I)]


def ribbon_to_G(I) -> LinComb:
    return LinComb((p, 1) for p in descent_class(I))


def S_sharp(n: int) -> LinComb:
    """Degree-n part of lambda-bar_1 sigma_1 on the S^(I,eps) basis."""
    terms = []
    for k in range(n + 1):
        tail = (n - k,) if n - k else ()
        for I in compositions(k):
            sign = (-1) ** (k - len(I))
            terms.append((tuple(-p for p in I) + tail, sign))
    return LinComb(terms)


def C_signed(J, eps, check: bool = True):
    """Descent composition of (sigma, eps) for sigma of shape J.

    With ``check`` the value is compared across the whole descent class.
    """
    cls = descent_class(J)
    vals = {descent_composition(attach_signs(s, eps)) for s in (cls if check else cls[:1])}
    if len(vals) != 1:
        raise AssertionError(f"C{(J, eps)} depends on the representative: {vals}")
    return vals.pop()


def ribbon_superize(I) -> LinComb:
    """R_I(A|A-bar) on signed ribbons R_{J,eps}, pushed through descent classes."""
    n = sum(I)
    groups: dict = defaultdict(set)
    for sigma in descent_class(I):
        for w in superize_G(sigma).keys():
            groups[(descent_composition(unsigned(w)), signs_of(w))].add(unsigned(w))
    out = []
    for (J, eps), taus in groups.items():
        if len(taus) != len(descent_class(J)):
            raise AssertionError(f"signed ribbon {(J, eps)} only partially present")
        if n <= 5:
            C_signed(J, eps)
        out.append(((J, eps), 1))
    return LinComb(out)


def ribbon_at_bar_tA(I, method: str = "enumerative", b_variant: str = "verified") -> LinComb:
    """R_I(A|tA) on the ribbon basis R_J."""
    if method == "enumerative":
        return LinComb((J, QTRational(T ** num_signed(eps)))
                       for (J, eps), _ in ribbon_superize(I).items())
    if method == "closed":
        n = sum(I)
        out = []
        for J in compositions(n):
            if peak_valley_condition(I, J):
                c = (1 + T) ** len(valleys(J)) * T ** b_exponent(I, J, b_variant)
                out.append((J, QTRational(c)))
        return LinComb(out)
    raise ValueError(f"unknown method {method!r}")


def M_at_geometric(J) -> QTRational:
    """M_J(1/(1-q)) = 1/(1-q^n) prod_{d in Des J} q^d/(1-q^d)."""
    n = sum(J)
    d = comp_descents(J)
    return product([QTPoly.monomial(sum(d), 0)],
                   [binomial(0, 0, n, 0)] + [binomial(0, 0, x, 0) for x in d])


def interval_sum_M(I, K) -> QTRational:
    """Closed form of the sum of M_J(1/(1-q)) over K >= J >= I."""
    if not comp_finer(K, I):
        raise ValueError(f"{K!r} does not refine {I!r}")
    n = sum(I)
    return product([QTPoly.monomial(comp_maj(I), 0)],
                   [binomial(0, 0, n, 0)] + [binomial(0, 0, x, 0) for x in comp_descents(K)])


def interval_sum_M_enumerate(I, K) -> QTRational:
    return qt_sum(M_at_geometric(J) for J in comp_interval(I, K))
