"""Word quasi-symmetric functions on packed words.

M-keys and N-keys are packed words (tuples).  Signed N-keys are signed
tuples, a negative letter being a barred one: ``(-1, 2)`` is NW_{1-bar 2}.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import combinations, product as iproduct
from math import comb

import numpy as np

from . import _kernels
from .combinat import (attach_signs, biword_pack, comp_maj, evaluation,
                       finer, is_packed, num_signed, num_signed_values,
                       packed_words, refinement_interval, regular_sign_vectors,
                       signs_of, spack, unsigned)
from .lincomb import LinComb
from .qt import QTPoly, QTRational, T, binomial, product, q_comp_pochhammer, qt_sum

M_MODES = ("closed", "signed_sum")
PARTS = ("left", "middle", "right")


def _check_packed(u):
    if not is_packed(unsigned(u)):
        raise ValueError(f"{tuple(u)!r} is not a packed word")


def nmax(w) -> int:
    """Number of occurrences of the maximal letter."""
    return Counter(w)[max(w)] if w else 0


# -- internal product on N ------------------------------------------------------------------

def N_internal(a, b) -> tuple:
    """NW_{u,eps} * NW_{v,rho} = NW_{pack(u,v), eps.rho}."""
    if len(a) != len(b):
        raise ValueError("internal product needs words of the same length")
    _check_packed(a)
    _check_packed(b)
    w = biword_pack(unsigned(a), unsigned(b))
    return attach_signs(w, tuple(x * y for x, y in zip(signs_of(a), signs_of(b))))


def N_internal_lc(x: LinComb, y: LinComb) -> LinComb:
    return x.bilinear(y, lambda a, b: LinComb.basis(N_internal(a, b)))


def sigma_sharp_N(n: int) -> LinComb:
    """Degree-n part of sigma_1^# on the signed N basis."""
    terms = []
    for u in packed_words(n):
        k = max(u)
        terms.append((tuple(-x for x in u), (-1) ** (n - k)))
        eps = tuple(1 if x == k else -1 for x in u)
        terms.append((attach_signs(u, eps), (-1) ** (num_signed(eps) - (k - 1))))
    return LinComb(terms)


# -- superization -----------------------------------------------------------------------------

def _value_map(v, u) -> dict:
    """value of v -> value of u, for v finer than u."""
    return dict(zip(v, u))


def finer_words(u) -> list:
    """Packed words v >= u, i.e. u is a nondecreasing image of v."""
    return [v for v in packed_words(len(u)) if max(v) >= max(u) and finer(v, u)]


def _allowed_signs(v, u):
    """Regular sign choices on v: inside each fiber over a letter of u all
    values but the greatest are signed, the greatest is free."""
    g = _value_map(v, u)
    fib = defaultdict(list)
    for a in sorted(g):
        fib[g[a]].append(a)
    tops = [vals[-1] for _, vals in sorted(fib.items())]
    for choice in iproduct((1, -1), repeat=len(tops)):
        sg = {a: -1 for a in g}
        sg.update(zip(tops, choice))
        yield tuple(sg[x] for x in v)


def N_superize(u, method: str = "theorem") -> LinComb:
    """NW_u(A|A-bar) on the signed N basis."""
    u = tuple(u)
    _check_packed(u)
    if method == "internal":
        return N_internal_lc(LinComb.basis(u), sigma_sharp_N(len(u)))
    if method != "theorem":
        raise ValueError(f"unknown method {method!r}")
    terms = []
    for v in finer_words(u):
        for eps in _allowed_signs(v, u):
            w = attach_signs(v, eps)
            terms.append((w, (-1) ** (num_signed(w) + num_signed_values(w))))
    return LinComb(terms)


def project_signs(x: LinComb) -> LinComb:
    """Send A-bar to -tA: NW_{v,eps} -> (-t)^m(eps) NW_v."""
    return LinComb((unsigned(k), c * QTRational((-T) ** num_signed(k))) for k, c in x.items())


# -- (1-t) specializations ----------------------------------------------------------------------

def _blocks(u, v) -> list:
    """For each letter k of u, the counts of the letters of v above it, by increasing value."""
    g = _value_map(v, u)
    ev = evaluation(v)
    out = [[] for _ in range(max(u))]
    for a in sorted(g):
        out[g[a] - 1].append(ev[a - 1])
    return out


def N_1mt(u, method: str = "closed") -> LinComb:
    """NW_u((1-t)A) on the N basis."""
    u = tuple(u)
    _check_packed(u)
    if method == "enumerative":
        return project_signs(N_superize(u))
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    terms = []
    for v in finer_words(u):
        blocks = _blocks(u, v)
        f = sum(sum(b[:-1]) for b in blocks)
        c = QTPoly.monomial(0, f, (-1) ** (max(v) - max(u)))
        for b in blocks:
            c = c * binomial(0, 0, 0, b[-1])
        terms.append((v, QTRational(c)))
    return LinComb(terms)


def M_dual_1mt(u, method: str = "spack") -> LinComb:
    """M_u(A.(1-t)) on the M basis."""
    u = tuple(u)
    _check_packed(u)
    if method == "transpose":
        return LinComb((v, N_1mt(v)[u]) for v in packed_words(len(u)) if N_1mt(v)[u])
    if method != "spack":
        raise ValueError(f"unknown method {method!r}")
    terms = []
    for eps in regular_sign_vectors(u):
        w = attach_signs(u, eps)
        c = QTRational(QTPoly.monomial(0, num_signed(w), (-1) ** num_signed_values(w)))
        for x in refinement_interval(spack(w), u):
            terms.append((x, c))
    return LinComb(terms)


# -- specialization at X = (1-t)/(1-q) ------------------------------------------------------------

def M_at_X_closed(u) -> QTRational:
    I = evaluation(u)
    n, p = sum(I), len(I)
    nums = [binomial(0, 0, 0, I[-1])]
    dens = [binomial(0, 0, n, 0)]
    s = 0
    for k in range(p - 1):
        s += I[k]
        nums.append(binomial(s, 0, 0, I[k]))
        dens.append(binomial(0, 0, s, 0))
    return product(nums, dens)


def _signed_numerators(words, signed: bool = True) -> list:
    """sum over regular eps of [(-1)^m'] t^m q^maj(spack), batched per length."""
    out = [None] * len(words)
    by_n = defaultdict(list)
    for i, u in enumerate(words):
        by_n[len(u)].append(i)
    for n, idxs in by_n.items():
        if n == 0:
            for i in idxs:
                out[i] = QTPoly(1)
            continue
        H = _kernels.spack_histogram([evaluation(words[i]) for i in idxs])
        for r, i in enumerate(idxs):
            terms = {}
            for p, m, j in zip(*np.nonzero(H[r])):
                c = int(H[r, p, m, j])
                if signed and p:
                    c = -c
                terms[(int(j), int(m))] = terms.get((int(j), int(m)), 0) + c
            out[i] = QTPoly(terms)
    return out


def M_at_X_many(words, mode: str = "closed") -> list:
    words = [tuple(u) for u in words]
    for u in words:
        _check_packed(u)
    if mode == "closed":
        return [M_at_X_closed(u) if u else QTRational(1) for u in words]
    if mode == "signed_sum":
        nums = _signed_numerators(words)
        return [QTRational(num, q_comp_pochhammer(tuple(evaluation(u)))) if u else QTRational(1)
                for num, u in zip(nums, words)]
    raise ValueError(f"unknown mode {mode!r}; expected one of {M_MODES}")


def M_at_X(u, mode: str = "closed") -> QTRational:
    return M_at_X_many([u], mode)[0]


def signed_gf(u) -> QTPoly:
    """sum over regular eps of t^m(eps) q^maj(spack(u,eps))."""
    _check_packed(u)
    return _signed_numerators([tuple(u)], signed=False)[0]


def signed_gf_closed(u) -> QTPoly:
    I = evaluation(u)
    out = QTPoly.monomial(0, 0) + QTPoly.monomial(0, I[-1])
    s = 0
    for k in range(len(I) - 1):
        s += I[k]
        out = out * (QTPoly.monomial(s, 0) + QTPoly.monomial(0, I[k]))
    return out


def lincomb_at_X(x: LinComb) -> QTRational:
    keys = x.keys()
    vals = M_at_X_many(keys, "closed")
    return qt_sum(c * v for (_, c), v in zip(x.items(), vals))


# -- tridendriform structure ------------------------------------------------------------------

def convolution(a, b) -> list:
    """All packed words u.v with pack(u) = a and pack(v) = b."""
    a, b = tuple(a), tuple(b)
    ka, kb = max(a, default=0), max(b, default=0)
    out = []
    for K in range(max(ka, kb), ka + kb + 1):
        full = range(1, K + 1)
        for S in combinations(full, ka):
            rest = [x for x in full if x not in S]
            need = kb - len(rest)
            if need < 0:
                continue
            for extra in combinations(S, need):
                S2 = sorted(rest + list(extra))
                out.append(tuple(S[x - 1] for x in a) + tuple(S2[x - 1] for x in b))
    return out


_CMP = {"left": lambda x, y: x > y, "middle": lambda x, y: x == y,
        "right": lambda x, y: x < y}


def _tri_keys(a, b, part):
    if not a or not b:
        raise ValueError("tridendriform products need nonempty arguments")
    keep = _CMP[part]
    n = len(a)
    return [w for w in convolution(a, b) if keep(max(w[:n]), max(w[n:]))]


def M_tridendriform(a, b, part: str) -> LinComb:
    """M_a < M_b, M_a o M_b or M_a > M_b on keys, or on LinCombs of keys."""
    if part not in PARTS:
        raise ValueError(f"part must be one of {PARTS}, not {part!r}")
    if isinstance(a, LinComb):
        return a.bilinear(b, lambda x, y: M_tridendriform(x, y, part))
    return LinComb((w, 1) for w in _tri_keys(tuple(a), tuple(b), part))


def M_product(a, b) -> LinComb:
    if isinstance(a, LinComb):
        return a.bilinear(b, M_product)
    return LinComb((w, 1) for w in convolution(a, b))


def tridendriform_factor(u1, u2, part: str) -> QTRational:
    """Ratio (M_u1 part M_u2)(X) / (M_u1(X) M_u2(X))."""
    n, m = len(u1), len(u2)
    a, b = nmax(u1), nmax(u2)
    if part == "left":
        return product([binomial(0, 0, n, 0), binomial(m, 0, 0, b)],
                       [binomial(0, 0, n + m, 0), binomial(0, 0, 0, b)])
    if part == "middle":
        return product([binomial(0, 0, n, 0), binomial(0, 0, m, 0), binomial(0, 0, 0, a + b)],
                       [binomial(0, 0, n + m, 0), binomial(0, 0, 0, a), binomial(0, 0, 0, b)])
    if part == "right":
        return product([binomial(0, 0, m, 0), binomial(n, 0, 0, a)],
                       [binomial(0, 0, n + m, 0), binomial(0, 0, 0, a)])
    raise ValueError(f"part must be one of {PARTS}, not {part!r}")


def tridendriform_at_X(u1, u2, part: str, method: str = "closed") -> QTRational:
    u1, u2 = tuple(u1), tuple(u2)
    _check_packed(u1)
    _check_packed(u2)
    if method == "closed":
        return tridendriform_factor(u1, u2, part) * M_at_X(u1) * M_at_X(u2)
    if method == "expand":
        return lincomb_at_X(M_tridendriform(u1, u2, part))
    raise ValueError(f"unknown method {method!r}")


# -- counts and embeddings ----------------------------------------------------------------------

def delannoy_term(a1: int, a2: int, d: int) -> int:
    """Words of max a1+a2-d in M_w1 M_w2 when max(w1)=a1, max(w2)=a2."""
    return comb(a1, d) * comb(a1 + a2 - d, a1)


def delannoy_count_enumerate(w1, w2) -> Counter:
    return Counter(max(w) for w in convolution(w1, w2))


def central_delannoy(k: int) -> int:
    return sum(delannoy_term(k, k, d) for d in range(k + 1))


def S_in_N(I) -> LinComb:
    """S^I = sum of NW_u over ev(u) = I."""
    n = sum(I)
    return LinComb((u, 1) for u in packed_words(n) if evaluation(u) == tuple(I))


def _matrices(rows, cols):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if all(c == 0 for c in cols):
            yield ()
        return
    r = rows[0]

    def fill(i, left, cur):
        if i == len(cols) - 1:
            if left <= cols[i]:
                yield cur + (left,)
            return
        for x in range(min(left, cols[i]) + 1):
            yield from fill(i + 1, left - x, cur + (x,))

    for row in fill(0, r, ()):
        rest = tuple(c - x for c, x in zip(cols, row))
        for tail in _matrices(rows[1:], rest):
            yield (row,) + tail


def embedding_check(I, J) -> bool:
    """S^I * S^J computed in N agrees with the descent-algebra rule
    (sum over matrices with row sums I and column sums J, read by rows)."""
    lhs = N_internal_lc(S_in_N(I), S_in_N(J))
    rhs = LinComb()
    for M in _matrices(tuple(I), tuple(J)):
        rhs = rhs + S_in_N(tuple(x for row in M for x in row if x))
    return lhs == rhs


def maj_of_spack(w) -> int:
    return comp_maj(evaluation(spack(w)))
