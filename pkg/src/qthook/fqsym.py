"""Free quasi-symmetric functions.

Keys are permutations (tuples) in the G basis; F_sigma = G_{sigma^-1}.
Signed keys are signed permutations written as signed tuples, e.g.
``(4, -1, 3, 2)`` for the letter 1 barred.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import _kernels
from .combinat import (attach_signs, compose, descents, inverse, is_permutation,
                       maj, num_signed, permutations, sign_vectors, signed_std,
                       signs_of, unsigned, zigzag_tree)
from .factor import Factor, one_minus_q, product_of
from .lincomb import LinComb
from .qt import T, QTPoly, QTRational, binomial, product, q_pochhammer, qt_sum

F_MODES = ("signed_sum", "hook_direct", "hook_recursive", "hook_simplified")


def _check_perm(p):
    if not is_permutation(unsigned(p)):
        raise ValueError(f"{p!r} is not a (signed) permutation")


def to_F(x: LinComb) -> LinComb:
    """Re-express G-keys as F-keys (and back: the map is an involution)."""
    return x.map_keys(lambda k: _inv_signed(k))


def _inv_signed(k):
    # (sigma, eps) -> inverse in the wreath product only matters unsigned here
    if all(v > 0 for v in k):
        return inverse(k)
    raise ValueError("F/G conversion is only used on unsigned keys")


# -- products ------------------------------------------------------------------------------

def _convolution(alpha, beta, keep=None):
    """gamma = u.v with std(u) = alpha, std(v) = beta (signs travel with letters)."""
    n, m = len(alpha), len(beta)
    a_abs, b_abs = unsigned(alpha), unsigned(beta)
    a_sg, b_sg = signs_of(alpha), signs_of(beta)
    full = range(1, n + m + 1)
    out = []
    for S in combinations(full, n):
        rest = [v for v in full if v not in S]
        u = tuple(S[x - 1] for x in a_abs)
        v = tuple(rest[x - 1] for x in b_abs)
        if keep is not None and not keep(u, v):
            continue
        out.append(attach_signs(u + v, a_sg + b_sg))
    return out


def product_G(a: LinComb, b: LinComb) -> LinComb:
    """Product in the G basis (signed keys allowed)."""
    return a.bilinear(b, lambda x, y: LinComb((g, 1) for g in _convolution(x, y)))


def product_F(a: LinComb, b: LinComb) -> LinComb:
    return to_F(product_G(to_F(a), to_F(b)))


def _half_keep(side):
    if side == "left":
        return lambda u, v: max(v) < max(u)
    if side == "right":
        return lambda u, v: max(v) > max(u)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def dendriform_half(a: LinComb, b: LinComb, side: str, basis: str = "G") -> LinComb:
    """a < b (left) or a > b (right) on unsigned keys of the G or F basis."""
    keep = _half_keep(side)

    def op(x, y):
        if not x or not y:
            raise ValueError("dendriform half-products need nonempty arguments")
        return LinComb((g, 1) for g in _convolution(x, y, keep))

    if basis == "G":
        return a.bilinear(b, op)
    if basis == "F":
        return to_F(to_F(a).bilinear(to_F(b), op))
    raise ValueError(f"unknown basis {basis!r}")


def internal_product_signed(a, b) -> tuple:
    """G_{alpha,eps} * G_{beta,eta} = G_{beta o alpha, (eta alpha).eps}."""
    if len(a) != len(b):
        raise ValueError("internal product needs keys of the same size")
    _check_perm(a)
    _check_perm(b)
    alpha, eps = unsigned(a), signs_of(a)
    beta, eta = unsigned(b), signs_of(b)
    gamma = compose(beta, alpha)
    signs = tuple(eta[alpha[i] - 1] * eps[i] for i in range(len(a)))
    return attach_signs(gamma, signs)


def internal_product(a: LinComb, b: LinComb) -> LinComb:
    return a.bilinear(b, lambda x, y: LinComb.basis(internal_product_signed(x, y)))


# -- superization ------------------------------------------------------------------------------

def identity_class(n: int) -> list:
    """Signed permutations standardizing to 12...n: a decreasing barred
    prefix followed by an increasing unbarred suffix."""
    out = []
    for k in range(n + 1):
        for S in combinations(range(1, n + 1), k):
            rest = [v for v in range(1, n + 1) if v not in S]
            out.append(tuple(-v for v in sorted(S, reverse=True)) + tuple(rest))
    return out


def superize_G(sigma) -> LinComb:
    """G_sigma(A|A-bar) on the signed G basis."""
    _check_perm(sigma)
    n = len(sigma)
    terms = []
    for w in identity_class(n):
        tau, eps = unsigned(w), signs_of(w)
        # (tau o sigma, eps o sigma)
        terms.append((attach_signs(compose(tau, sigma),
                                   tuple(eps[s - 1] for s in sigma)), 1))
    return LinComb(terms)


def superize_G_bruteforce(sigma) -> LinComb:
    n = len(sigma)
    sigma = tuple(sigma)
    return LinComb((attach_signs(p, e), 1) for p in permutations(n)
                   for e in sign_vectors(n) if signed_std(attach_signs(p, e)) == sigma)


def project_signs(x: LinComb, t_weight: bool = True) -> LinComb:
    """Send barred letters to t times unbarred ones (t = 1 if not t_weight)."""
    return LinComb((unsigned(k), c * (QTRational(T ** num_signed(k)) if t_weight else 1))
                   for k, c in x.items())


def specialize_bar_tA(sigma) -> LinComb:
    """G_sigma(A|tA) on the G basis."""
    return project_signs(superize_G(sigma))


def F_times_1mt(sigma) -> LinComb:
    """F_sigma(A.(1-t)) on the F basis."""
    _check_perm(sigma)
    n = len(sigma)
    terms = []
    for e in sign_vectors(n):
        m = num_signed(e)
        terms.append((signed_std(attach_signs(sigma, e)),
                      QTRational((-T) ** m)))
    return LinComb(terms)


def G_times_1mt(beta) -> LinComb:
    """G_beta((1-t)A) = sum_k (1-t)(-t)^k sum_{Des(tau)={1..k}} G_{tau o beta}."""
    n = len(beta)
    terms = []
    for tau in permutations(n):
        d = descents(tau)
        k = len(d)
        if d != tuple(range(1, k + 1)) or k >= n:
            continue
        terms.append((compose(tau, beta), QTRational((1 - T) * (-T) ** k)))
    return LinComb(terms)


# -- X specialization ------------------------------------------------------------------------

def _xy(sigma):
    n = len(sigma)
    x = [0] * (n + 1)
    y = [0] * (n + 1)
    for i in range(1, n + 1):
        x[i] = 1 if i > 1 and sigma[i - 2] < sigma[i - 1] else 0
        y[i] = 1 if i < n and sigma[i - 1] > sigma[i] else 0
    return x, y


def hook_factors(sigma, mode: str = "hook_direct") -> list:
    """Per-letter factors, letter 1 first (bottom of the drawing)."""
    _check_perm(sigma)
    n = len(sigma)
    s = list(sigma)
    out = []
    if mode == "hook_direct":
        x, y = _xy(s)
        for i in range(1, n + 1):
            out.append(Factor(((i * y[i], 0, (i - 1) * x[i], 1),), (one_minus_q(i),)))
    elif mode == "hook_recursive":
        # three-case form, sigma_0 = +infinity
        for k in range(1, n + 1):
            if k == 1 or s[k - 2] < s[k - 1]:
                out.append(Factor(((0, 0, k - 1, 1),), (one_minus_q(k),)))
            elif k == 2 or s[k - 3] > s[k - 2]:
                out.append(Factor(((k - 1, 0, 0, 1),), (one_minus_q(k),)))
            else:
                out.append(Factor(((k - 1, 0, k - 2, 1), (0, 0, 0, 1)),
                                  ((0, 0, k - 2, 1), one_minus_q(k))))
    elif mode == "hook_recursive_unified":
        for k in range(1, n + 1):
            a = 1 if k >= 2 and s[k - 2] > s[k - 1] else 0
            b = 1 if k >= 3 and s[k - 3] < s[k - 2] > s[k - 1] else 0
            out.append(Factor((((k - 1) * a, 0, (k - 2) * b if k >= 2 else 0, 1),
                               (0, 0, (k - 1) * (1 - a), 1)),
                              ((0, 0, (k - 2) * b if k >= 2 else 0, 1), one_minus_q(k))))
    elif mode == "hook_simplified":
        ext = [0] + s + [float("inf")]       # sigma_0 = 0, sigma_{n+1} = +infinity
        for i in range(1, n + 1):
            prev, cur, nxt = ext[i - 1], ext[i], ext[i + 1]
            if prev < cur:
                num = (0, 0, i - 1, 1) if cur < nxt else (0, 0, 0, 1)
            elif i >= 2 and ext[i - 2] > prev:
                num = (i - 1, 0, 0, 1)
            else:
                num = (i - 1, 0, i - 2, 1)
            out.append(Factor((num,), (one_minus_q(i),)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return out


def signed_sum_numerator(hist_row: np.ndarray) -> QTPoly:
    """sum over (m, maj) of count * (-t)^m q^maj from a kernel histogram row."""
    terms = {}
    for m, j in zip(*np.nonzero(hist_row)):
        c = int(hist_row[m, j])
        terms[(int(j), int(m))] = -c if m & 1 else c
    return QTPoly(terms)


def F_at_X_many(perms, mode: str = "hook_direct") -> list:
    perms = [tuple(p) for p in perms]
    if mode == "signed_sum":
        by_n: dict = {}
        for idx, p in enumerate(perms):
            by_n.setdefault(len(p), []).append(idx)
        res = [None] * len(perms)
        for n, idxs in by_n.items():
            if n == 0:
                for i in idxs:
                    res[i] = QTRational(1)
                continue
            H = _kernels.signed_maj_histogram(np.array([perms[i] for i in idxs]))
            den = q_pochhammer(n)
            for r, i in enumerate(idxs):
                res[i] = QTRational(signed_sum_numerator(H[r]), den)
        return res
    if mode == "hook_recursive":
        mode = "hook_recursive_unified"
    return [product_of(hook_factors(p, mode)) for p in perms]


def F_at_X(sigma, mode: str = "hook_direct") -> QTRational:
    """F_sigma at the alphabet (1-t)/(1-q)."""
    if mode not in F_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {F_MODES}")
    _check_perm(sigma)
    return F_at_X_many([sigma], mode)[0]


def F_at_X_enumerate(sigma) -> QTRational:
    """Raw enumeration of the 2^n signed maj values, no kernel."""
    n = len(sigma)
    num = QTPoly()
    for e in sign_vectors(n):
        m = num_signed(e)
        num = num + QTPoly.monomial(maj(attach_signs(sigma, e)), m, (-1) ** m)
    return QTRational(num, q_pochhammer(n))


def half_product_factor(n: int, tau, side: str) -> QTRational:
    m = len(tau)
    d = 1 if m >= 2 and tau[m - 2] < tau[m - 1] else 0
    e = (m - 1) * d
    if side == "left":
        return product([binomial(0, 0, n, 0), binomial(m, 0, e, 1)],
                       [binomial(0, 0, n + m, 0), binomial(0, 0, e, 1)])
    if side == "right":
        return product([binomial(0, 0, m, 0), binomial(0, 0, n + e, 1)],
                       [binomial(0, 0, n + m, 0), binomial(0, 0, e, 1)])
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def half_product_at_X(sigma, tau, side: str) -> QTRational:
    """(F_sigma < F_tau)(X) or (F_sigma > F_tau)(X) in closed form."""
    return half_product_factor(len(sigma), tau, side) * F_at_X(sigma) * F_at_X(tau)


def lincomb_at_X(x: LinComb, basis: str = "F") -> QTRational:
    """Specialize a combination of F (or G) keys at X, term by term."""
    keys = x.keys() if basis == "F" else [inverse(k) for k in x.keys()]
    vals = F_at_X_many(keys, "hook_direct")
    return qt_sum(c * v for (_, c), v in zip(x.items(), vals))


def zigzag_check(sigma) -> bool:
    """Factors of hook_direct equal the tree factors of the zig-zag shape."""
    from .pbt import hook_factors as tree_factors
    mine = [f.value() for f in hook_factors(sigma, "hook_direct")]
    theirs = [f.value() for f in tree_factors(zigzag_tree(sigma), "hook_PT1")]
    # tree factors come in preorder (top first); letters are numbered from the bottom
    return mine == list(reversed(theirs))
