"""Brute-force checks at the level of words and signed words.

Nothing here calls the closed form it is checking: values are rebuilt from
word sums, sign enumerations and fibers, and compared afterwards.  Every
check returns a plain report dict::

    {"check": name, "passed": bool, "cases": int, "failures": int,
     "mismatches": [first ten offending items]}
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import product as iproduct

from . import fqsym, ncsf, pbt, planetree, wqsym
from .combinat import (attach_signs, bst_insert, comp_descents, comp_finer, comp_interval, comp_maj,
                       compositions, decreasing_plane_tree, descent_composition, evaluation, inverse,
                       maj, num_signed, num_signed_values, pack, packed_words,
                       permutations, refinement_interval, regular_sign_vectors,
                       regular_signed_packed_words, shuffles, sign_vectors, signed_std,
                       signs_of, spack, std, unsigned)
from .lincomb import LinComb
from .qt import QTPoly, QTRational, q_comp_pochhammer, q_pochhammer, qt_sum

MAX_SHOWN = 10


def _report(name: str, cases: int, mismatches: list) -> dict:
    return {"check": name, "passed": not mismatches, "cases": cases,
            "failures": len(mismatches), "mismatches": [str(m) for m in mismatches[:MAX_SHOWN]]}


# -- realizations ---------------------------------------------------------------------------

@dataclass
class TruncatedRealization:
    m: int
    barred: bool
    max_degree: int
    terms: dict = field(default_factory=dict)

    def __add__(self, other):
        c = Counter(self.terms)
        c.update(other.terms)
        return self._new({w: k for w, k in c.items() if k})

    def __mul__(self, other):
        """Concatenation product, truncated at max_degree."""
        out = Counter()
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                if len(u) + len(v) <= self.max_degree:
                    out[u + v] += a * b
        return self._new({w: k for w, k in out.items() if k})

    def _new(self, terms):
        return TruncatedRealization(self.m, self.barred, self.max_degree, terms)

    def __eq__(self, other):
        return self.terms == other.terms


def _letters(m: int, barred: bool):
    pos = list(range(1, m + 1))
    return [-x for x in reversed(pos)] + pos if barred else pos


def _words(m: int, n: int, barred: bool):
    return iproduct(_letters(m, barred), repeat=n)


def realize(key, m: int, max_degree: int, basis: str = "G") -> TruncatedRealization:
    """Word sum of one basis element over a_1..a_m (and the barred letters
    a-bar_m < ... < a-bar_1 < a_1 < ... for signed keys).

    basis: ``G`` (std(w) = key), ``F`` (std(w) = key^-1), ``M`` (pack(w) = key),
    ``G#`` (signed words whose signed standardization is key).  A G key with
    negative letters realizes sum of w with std(|w|) = |key| and signs(w) = signs(key).
    """
    key = tuple(key)
    n = len(key)
    if n > max_degree:
        raise ValueError("max_degree is smaller than the key")
    signed = basis == "G#" or any(x < 0 for x in key)
    terms = {}
    if basis == "G" and signed:
        tau, eps = unsigned(key), signs_of(key)
        for w in _words(m, n, True):
            if signs_of(w) == eps and std(unsigned(w)) == tau:
                terms[w] = 1
    elif basis in ("G", "F"):
        target = key if basis == "G" else inverse(key)
        for w in _words(m, n, False):
            if std(w) == target:
                terms[w] = 1
    elif basis == "M":
        for w in _words(m, n, False):
            if pack(w) == key:
                terms[w] = 1
    elif basis == "G#":
        for w in _words(m, n, True):
            if signed_std(w) == key:
                terms[w] = 1
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return TruncatedRealization(m, signed, max_degree, terms)


def realize_lincomb(x: LinComb, m: int, max_degree: int, basis: str = "G") -> TruncatedRealization:
    out = Counter()
    barred = False
    for k, c in x.items():
        r = realize(k, m, max_degree, basis)
        barred = barred or r.barred
        for w, a in r.terms.items():
            out[w] += c * a
    return TruncatedRealization(m, barred, max_degree, {w: k for w, k in out.items() if k})


def check_product_realization(m: int = 3, max_degree: int = 4) -> list:
    """Product rule of G, superization of G, and the tridendriform splits on words."""
    reports = []

    bad, cases = [], 0
    for n in range(1, max_degree):
        for k in range(1, max_degree - n + 1):
            for a in permutations(n):
                for b in permutations(k):
                    cases += 1
                    lhs = realize(a, m, max_degree) * realize(b, m, max_degree)
                    rhs = realize_lincomb(fqsym.product_G(LinComb.basis(a), LinComb.basis(b)),
                                          m, max_degree)
                    if lhs != rhs:
                        bad.append((a, b))
    reports.append(_report("realization.product_G", cases, bad))

    bad, cases = [], 0
    for n in range(1, max_degree + 1):
        for s in permutations(n):
            cases += 1
            if realize(s, m, max_degree, "G#") != realize_lincomb(fqsym.superize_G(s), m, max_degree):
                bad.append(s)
    reports.append(_report("realization.superize_G", cases, bad))

    bad, cases = [], 0
    cmp = {"left": lambda x, y: x > y, "middle": lambda x, y: x == y,
           "right": lambda x, y: x < y}
    for n in range(1, max_degree):
        for k in range(1, max_degree - n + 1):
            for a in packed_words(n):
                for b in packed_words(k):
                    ra, rb = realize(a, m, max_degree, "M"), realize(b, m, max_degree, "M")
                    for part, keep in cmp.items():
                        cases += 1
                        lhs = {u + v: 1 for u in ra.terms for v in rb.terms
                               if keep(max(u), max(v))}
                        rhs = realize_lincomb(wqsym.M_tridendriform(a, b, part), m, max_degree, "M")
                        if lhs != rhs.terms:
                            bad.append((a, b, part))
    reports.append(_report("realization.tridendriform", cases, bad))
    return reports


# -- half-shuffles ----------------------------------------------------------------------------

def half_shuffle(u, v, side: str = "left") -> list:
    """u < v = (u' sh v) a with u = u'a;  u > v = (u sh v') b with v = v'b."""
    u, v = tuple(u), tuple(v)
    if side == "left":
        return [w + u[-1:] for w in shuffles(u[:-1], v)]
    return [w + v[-1:] for w in shuffles(u, v[:-1])]


def _shift(w, k):
    return tuple(x + k for x in w)


def predicted_pair(u, v):
    """(sigma, tau) with <u < v> = <sigma < tau> for disjoint alphabets."""
    k, l = len(u), len(v)
    if u[-1] < v[-1]:
        return std(u), _shift(std(v), k)
    return _shift(std(u), l), std(v)


def check_halfshuffle_descents(u, v) -> dict:
    u, v = tuple(u), tuple(v)
    if set(u) & set(v):
        raise ValueError("the two words must use disjoint letters")
    bad = []
    full = Counter(descent_composition(w) for w in shuffles(u, v))
    prod = Counter(descent_composition(w) for w in shuffles(std(u), _shift(std(v), len(u))))
    if full != prod:
        bad.append(("shuffle", u, v))
    s, t = predicted_pair(u, v)
    mine = half_shuffle(u, v)
    pred = half_shuffle(s, t)
    if Counter(map(descent_composition, mine)) != Counter(map(descent_composition, pred)):
        bad.append(("half", u, v, s, t))
    if Counter(map(maj, mine)) != Counter(map(maj, pred)):
        bad.append(("maj", u, v, s, t))
    return _report(f"halfshuffle {u}<{v}", 3, bad)


def check_halfshuffle_random(max_total: int = 7, samples: int = 200, seed: int = 0) -> dict:
    rng = random.Random(seed)
    bad, cases = [], 0
    for _ in range(samples):
        n = rng.randint(2, max_total)
        k = rng.randint(1, n - 1)
        letters = rng.sample(range(1, 3 * n), n)
        u, v = tuple(letters[:k]), tuple(letters[k:])
        r = check_halfshuffle_descents(u, v)
        cases += 1
        if not r["passed"]:
            bad.append((u, v))
    return _report("halfshuffle.random", cases, bad)


# -- dendriform and tridendriform laws --------------------------------------------------------

def _dend_ops():
    lt = lambda x, y: fqsym.dendriform_half(x, y, "left")
    gt = lambda x, y: fqsym.dendriform_half(x, y, "right")
    return lt, gt, fqsym.product_G


DENDRIFORM_LAWS = ("(x<y)<z = x<(yz)", "(x>y)<z = x>(y<z)", "(xy)>z = x>(y>z)")
TRIDENDRIFORM_LAWS = DENDRIFORM_LAWS + ("(x>y)oz = x>(yoz)", "(x<y)oz = xo(y>z)",
                                        "(xoy)<z = xo(y<z)", "(xoy)oz = xo(yoz)")


def _dendriform_sides(x, y, z):
    lt, gt, dot = _dend_ops()
    return ((lt(lt(x, y), z), lt(x, dot(y, z))),
            (lt(gt(x, y), z), gt(x, lt(y, z))),
            (gt(dot(x, y), z), gt(x, gt(y, z))))


def _tridendriform_sides(x, y, z):
    op = lambda part: (lambda a, b: wqsym.M_tridendriform(a, b, part))
    lt, mid, gt = op("left"), op("middle"), op("right")
    dot = wqsym.M_product
    return ((lt(lt(x, y), z), lt(x, dot(y, z))),
            (lt(gt(x, y), z), gt(x, lt(y, z))),
            (gt(dot(x, y), z), gt(x, gt(y, z))),
            (mid(gt(x, y), z), gt(x, mid(y, z))),
            (mid(lt(x, y), z), mid(x, gt(y, z))),
            (lt(mid(x, y), z), mid(x, lt(y, z))),
            (mid(mid(x, y), z), mid(x, mid(y, z))))


def _size_triples(max_total: int):
    for a in range(1, max_total + 1):
        for b in range(1, max_total - a + 1):
            for c in range(1, max_total - a - b + 1):
                yield a, b, c


def _law_check(name, laws, sides, triples):
    bad, cases = [], 0
    for x, y, z in triples:
        X, Y, Z = (LinComb.basis(k) for k in (x, y, z))
        for law, (lhs, rhs) in zip(laws, sides(X, Y, Z)):
            cases += 1
            if lhs != rhs:
                bad.append((law, x, y, z))
    return _report(name, cases, bad)


def _exhaustive(keys_of, max_total):
    for a, b, c in _size_triples(max_total):
        yield from iproduct(keys_of(a), keys_of(b), keys_of(c))


def _random_triples(keys_of, max_total, samples, seed):
    rng = random.Random(seed)
    sizes = list(_size_triples(max_total))
    for _ in range(samples):
        yield tuple(rng.choice(keys_of(n)) for n in rng.choice(sizes))


def check_dendriform_axioms(max_total: int = 5, samples: int = 100,
                            random_total: int = 6, seed: int = 0) -> list:
    """The three dendriform laws on G keys: all triples up to max_total, then random ones."""
    keys = lambda n: list(permutations(n))
    return [_law_check("dendriform.exhaustive", DENDRIFORM_LAWS, _dendriform_sides,
                       _exhaustive(keys, max_total)),
            _law_check("dendriform.random", DENDRIFORM_LAWS, _dendriform_sides,
                       _random_triples(keys, random_total, samples, seed))]


def check_tridendriform_axioms(max_total: int = 5, samples: int = 100,
                               random_total: int = 6, seed: int = 0) -> list:
    """The seven tridendriform laws on M keys of packed words."""
    keys = lambda n: list(packed_words(n))
    return [_law_check("tridendriform.exhaustive", TRIDENDRIFORM_LAWS, _tridendriform_sides,
                       _exhaustive(keys, max_total)),
            _law_check("tridendriform.random", TRIDENDRIFORM_LAWS, _tridendriform_sides,
                       _random_triples(keys, random_total, samples, seed))]


# -- sequences --------------------------------------------------------------------------------

A004123 = (1, 2, 10, 74, 730)


def sequence_checks() -> list:
    counts = tuple(sum(1 for _ in regular_signed_packed_words(n)) for n in range(5))
    bad = [] if counts == A004123 else [("regular signed packed words", counts)]
    reports = [_report("sequence.A004123", 5, bad)]
    bad, cases = [], 0
    for a1 in range(1, 4):
        for a2 in range(1, 4):
            w1, w2 = tuple(range(1, a1 + 1)), tuple(range(1, a2 + 1))
            got = Counter(max(w) for w in packed_words(a1 + a2)
                          if pack(w[:a1]) == w1 and pack(w[a1:]) == w2)
            for d in range(0, min(a1, a2) + 1):
                cases += 1
                if got[a1 + a2 - d] != wqsym.delannoy_term(a1, a2, d):
                    bad.append((a1, a2, d, got[a1 + a2 - d]))
    reports.append(_report("sequence.delannoy", cases, bad))
    return reports


# -- raw specializations ---------------------------------------------------------------------

def F_raw(sigma) -> QTRational:
    """(1/(q)_n) sum over eps of (-t)^m q^maj(sigma, eps), no kernel."""
    n = len(sigma)
    terms = Counter()
    for e in sign_vectors(n):
        w = attach_signs(sigma, e)
        mm = num_signed(w)
        terms[(maj(w), mm)] += (-1) ** mm
    return QTRational(QTPoly(dict(terms)), q_pochhammer(n))


def M_raw(u) -> QTRational:
    return QTRational(*_M_raw_parts(u))


def _M_raw_parts(u):
    """(numerator, (q)_ev(u)) of the raw value, unreduced.

    The value is the sum over regular eps of (-1)^m' t^m sum over [spack, u] of M_w(1/(1-q)).

    Each M_w(1/(1-q)) = q^maj(ev w) / ((1-q^n) prod over Des(ev w) of (1-q^d)) is put
    over the common denominator (q)_ev(u); coarsenings only lose descents.
    """
    I = evaluation(u)
    top = set(comp_descents(I))
    num = QTPoly()
    for e in regular_sign_vectors(u):
        w = attach_signs(u, e)
        inner = QTPoly()
        for x in refinement_interval(spack(w), u):
            J = evaluation(x)
            term = QTPoly.monomial(comp_maj(J), 0)
            for d in top - set(comp_descents(J)):
                term = term * QTPoly({(0, 0): 1, (d, 0): -1})
            inner = inner + term
        num = num + inner * QTPoly.monomial(0, num_signed(w), (-1) ** num_signed_values(w))
    return num, q_comp_pochhammer(I)


def M_raw_sum(words) -> QTRational:
    """Sum of raw values over words of one length, on the denominator (q)_n."""
    total, n = QTPoly(), None
    for u in words:
        n = len(u)
        num, _ = _M_raw_parts(u)
        des = set(comp_descents(evaluation(u)))
        for d in range(1, n):
            if d not in des:
                num = num * QTPoly({(0, 0): 1, (d, 0): -1})
        total = total + num
    return QTRational(total, q_pochhammer(n)) if n else QTRational(0)


def _t0(x: QTRational) -> QTRational:
    keep = lambda p: QTPoly({k: c for k, c in p.items() if k[1] == 0})
    return QTRational(keep(x.num), keep(x.den))


def check_F_at_X(max_n: int = 6) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        perms = list(permutations(n))
        vals = fqsym.F_at_X_many(perms, "hook_direct")
        for p, v in zip(perms, vals):
            cases += 1
            if v != F_raw(p):
                bad.append(p)
    return _report("fqsym.F_at_X", cases, bad)


def _sylvester_fibers(n: int) -> dict:
    fib = defaultdict(list)
    for p in permutations(n):
        fib[bst_insert(p)].append(p)
    return fib


def check_P_at_X(max_n: int = 6) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for T, cls in _sylvester_fibers(n).items():
            cases += 1
            if pbt.P_at_X(T, "hook_PT1") != qt_sum(F_raw(p) for p in cls):
                bad.append(T)
    return _report("pbt.P_at_X", cases, bad)


def check_signed_maj_gf(max_n: int = 6) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for T, cls in _sylvester_fibers(n).items():
            cases += 1
            raw = Counter()
            for p in cls:
                for e in sign_vectors(n):
                    w = attach_signs(p, e)
                    raw[(maj(w), num_signed(w))] += 1
            if pbt.signed_maj_gf(T) != QTPoly(dict(raw)):
                bad.append(T)
    return _report("pbt.signed_maj_gf", cases, bad)


def check_half_product_at_X(max_total: int = 6) -> dict:
    bad, cases = [], 0
    for n in range(1, max_total):
        for k in range(1, max_total - n + 1):
            for s in permutations(n):
                for t in permutations(k):
                    for side in ("left", "right"):
                        cases += 1
                        raw = qt_sum(F_raw(w) for w in half_shuffle(s, _shift(t, n), side))
                        if fqsym.half_product_at_X(s, t, side) != raw:
                            bad.append((s, t, side))
    return _report("fqsym.half_product_at_X", cases, bad)


def check_ribbons(max_n: int = 5) -> dict:
    """R_I(A|tA) from the signed words of every sigma in the class of I."""
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        reps = {}
        for p in permutations(n):
            reps.setdefault(descent_composition(p), p)
        for I in compositions(n):
            cases += 1
            raw = Counter()
            for s in permutations(n):
                if descent_composition(s) == I:
                    for w in fqsym.superize_G_bruteforce(s).keys():
                        raw[(unsigned(w), num_signed(w))] += 1
            got = LinComb((J, QTRational(QTPoly({(0, mm): c for (tau, mm), c in raw.items()
                                                 if tau == rep})))
                          for J, rep in reps.items())
            if got != ncsf.ribbon_at_bar_tA(I, "closed"):
                bad.append(I)
    return _report("ncsf.ribbon_at_bar_tA", cases, bad)


def check_interval_sums(max_n: int = 6) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for I in compositions(n):
            for K in compositions(n):
                if comp_finer(K, I):
                    cases += 1
                    raw = qt_sum(ncsf.M_at_geometric(J) for J in comp_interval(I, K))
                    if ncsf.interval_sum_M(I, K) != raw:
                        bad.append((I, K))
    return _report("ncsf.interval_sum_M", cases, bad)


def check_N_1mt(max_n: int = 4) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for u in packed_words(n):
            cases += 1
            raw = LinComb((unsigned(k), c * QTRational(QTPoly.monomial(0, num_signed(k),
                                                                        (-1) ** num_signed(k))))
                          for k, c in wqsym.N_superize(u, "internal").items())
            if wqsym.N_1mt(u) != raw:
                bad.append(u)
    return _report("wqsym.N_1mt", cases, bad)


def check_M_at_X(max_n: int = 5) -> dict:
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        words = packed_words(n)
        vals = wqsym.M_at_X_many(words, "closed")
        for u, v in zip(words, vals):
            cases += 1
            if v != M_raw(u):
                bad.append(u)
    return _report("wqsym.M_at_X", cases, bad)


def check_tridendriform_at_X(max_total: int = 5) -> dict:
    bad, cases = [], 0
    cmp = {"left": lambda x, y: x > y, "middle": lambda x, y: x == y,
           "right": lambda x, y: x < y}
    for N in range(2, max_total + 1):
        groups = defaultdict(list)
        for w in packed_words(N):
            for n in range(1, N):
                a, b = w[:n], w[n:]
                for part, keep in cmp.items():
                    if keep(max(a), max(b)):
                        groups[(pack(a), pack(b), part)].append(w)
        for (a, b, part), ws in groups.items():
            cases += 1
            if wqsym.tridendriform_at_X(a, b, part) != M_raw_sum(ws):
                bad.append((a, b, part))
    return _report("wqsym.tridendriform_at_X", cases, bad)


def check_MM_at_X(max_regions: int = 5) -> dict:
    bad, cases = [], 0
    for n in range(1, max_regions + 1):
        fib = defaultdict(list)
        for u in packed_words(n):
            fib[decreasing_plane_tree(u)].append(u)
        for T, ws in fib.items():
            cases += 1
            if planetree.MM_at_X(T) != M_raw_sum(ws):
                bad.append(T)
    return _report("planetree.MM_at_X", cases, bad)


# -- t = 0 --------------------------------------------------------------------------------------

def check_t_zero(max_n: int = 6) -> list:
    """At t = 0 the (q,t) values collapse to q^maj generating functions."""
    reports = []
    bad, cases = [], 0
    for n in range(1, max_n + 1):
        perms = list(permutations(n))
        for p, v in zip(perms, fqsym.F_at_X_many(perms, "hook_direct")):
            cases += 1
            if _t0(v) != QTRational(QTPoly.monomial(maj(p), 0), q_pochhammer(n)):
                bad.append(p)
    reports.append(_report("t0.F_at_X", cases, bad))

    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for T, cls in _sylvester_fibers(n).items():
            cases += 1
            gf = QTPoly(dict(Counter((maj(p), 0) for p in cls)))
            if _t0(pbt.P_at_X(T, "hook_PT1")) != QTRational(gf, q_pochhammer(n)):
                bad.append(T)
    reports.append(_report("t0.P_at_X", cases, bad))

    bad, cases = [], 0
    for n in range(1, max_n + 1):
        for u in packed_words(n):
            cases += 1
            I = evaluation(u)
            want = QTRational(QTPoly.monomial(comp_maj(I), 0), q_comp_pochhammer(I))
            if _t0(wqsym.M_at_X(u)) != want:
                bad.append(u)
    reports.append(_report("t0.M_at_X", cases, bad))
    return reports


def run_all(max_n: int = 5) -> list:
    reports = []
    reports += check_product_realization(3, 4)
    reports.append(check_halfshuffle_descents((6, 3, 4), (1, 2, 5)))
    reports.append(check_halfshuffle_random())
    reports += sequence_checks()
    reports += check_dendriform_axioms()
    reports += check_tridendriform_axioms()
    reports.append(check_F_at_X(max_n))
    reports.append(check_P_at_X(max_n))
    reports.append(check_signed_maj_gf(max_n))
    reports.append(check_half_product_at_X(max_n))
    reports.append(check_ribbons(max_n))
    reports.append(check_interval_sums(max_n))
    reports.append(check_N_1mt(min(max_n, 4)))
    reports.append(check_M_at_X(max_n))
    reports.append(check_tridendriform_at_X(max_n))
    reports.append(check_MM_at_X(max_n))
    reports += check_t_zero(max_n)
    return reports
