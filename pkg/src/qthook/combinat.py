"""Words, permutations, compositions and trees, with the maps between them.

Conventions
-----------
* words and permutations are tuples of ints, one-line notation, 1-based values;
* a signed word is a tuple of nonzero ints, a negative entry -a standing for
  the barred letter a-bar.  The total order on signed letters is the integer
  order of the entries, so  ...< -2 < -1 < 1 < 2 < ...;
* a composition is a tuple of positive ints;
* a binary tree is ``None`` (empty) or a pair ``(left, right)``;
* a plane tree is a tuple of children, ``None`` marking a leaf slot.  A node
  of arity a has a - 1 regions.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import combinations, permutations as _perms, product
from typing import Iterable, Iterator, Optional, Sequence

Word = tuple
Composition = tuple


# -- standardization and packing -----------------------------------------------------

def std(w: Sequence) -> tuple:
    """Standardize: rank letters, equal letters numbered left to right.

    >>> std("bbacab")
    (3, 4, 1, 6, 2, 5)
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def signed_std(w: Sequence[int]) -> tuple:
    """Standardization of a signed word under ...<-2<-1<1<2<...

    Equal barred letters are numbered right to left, equal unbarred letters
    left to right.
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i if w[i] > 0 else -i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def signs_of(w: Sequence[int]) -> tuple:
    return tuple(1 if x > 0 else -1 for x in w)


def unsigned(w: Sequence[int]) -> tuple:
    return tuple(abs(x) for x in w)


def attach_signs(w: Sequence[int], eps: Sequence[int]) -> tuple:
    if len(w) != len(eps):
        raise ValueError("word and sign vector have different lengths")
    return tuple(e * x for x, e in zip(w, eps))


def signed_Std(w: Sequence[int]):
    """The pair (std of the unsigned word, sign vector)."""
    return std(unsigned(w)), signs_of(w)


def pack(w: Sequence[int]) -> tuple:
    """Replace the k-th smallest letter by k."""
    rank = {v: k for k, v in enumerate(sorted(set(w)), 1)}
    return tuple(rank[x] for x in w)


def biword_pack(u: Sequence[int], v: Sequence[int]) -> tuple:
    """Pack the columns (u_i, v_i) under lexicographic order."""
    if len(u) != len(v):
        raise ValueError("biword rows have different lengths")
    return pack(list(zip(u, v)))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def is_packed(w: Sequence[int]) -> bool:
    return set(w) == set(range(1, len(w) and max(w) + 1))


def num_signed(w: Sequence[int]) -> int:
    """m(eps): the number of barred positions."""
    return sum(1 for x in w if x < 0)


def value_signs(w: Sequence[int]) -> dict:
    """value -> sign for a regular signed word; ValueError otherwise."""
    out: dict = {}
    for x in w:
        s = 1 if x > 0 else -1
        if out.setdefault(abs(x), s) != s:
            raise ValueError(f"signed word {w!r} is not regular")
    return out


def is_regular(w: Sequence[int]) -> bool:
    try:
        value_signs(w)
    except ValueError:
        return False
    return True


def num_signed_values(w: Sequence[int]) -> int:
    """m'(w): the number of *distinct* signed letters."""
    return len({x for x in w if x < 0})


def spack(w: Sequence[int]) -> tuple:
    """Super-packed word of a regular signed packed word.

    >>> spack((5, -1, -2, -1, 3, 5, -4, -4, 6, -1))
    (2, 1, 1, 1, 1, 2, 2, 2, 3, 1)
    """
    sg = value_signs(w)
    u = unsigned(w)
    if not is_packed(u):
        raise ValueError(f"{u!r} is not packed")
    f = {1: 1}
    for i in range(2, max(u, default=0) + 1):
        f[i] = f[i - 1] + (0 if sg[i - 1] < 0 else 1)
    return tuple(f[x] for x in u)


# -- descents and compositions --------------------------------------------------------

def descents(w: Sequence) -> tuple:
    """Positions i (1-based) with w_i > w_{i+1}; signed words compare by entry."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence) -> int:
    return sum(descents(w))


def signed_maj(perm: Sequence[int], eps: Sequence[int]) -> int:
    return maj(attach_signs(perm, eps))


def comp_from_descents(des: Iterable[int], n: int) -> Composition:
    if n == 0:
        return ()
    cuts = [0] + sorted(set(des)) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_composition(w: Sequence) -> Composition:
    return comp_from_descents(descents(w), len(w))


def comp_descents(comp: Sequence[int]) -> tuple:
    out, s = [], 0
    for p in comp[:-1]:
        s += p
        out.append(s)
    return tuple(out)


def comp_maj(comp: Sequence[int]) -> int:
    return sum(comp_descents(comp))


def conjugate(comp: Sequence[int]) -> Composition:
    n = sum(comp)
    d = set(comp_descents(comp))
    # complement, then reverse
    return comp_from_descents([n - i for i in range(1, n) if i not in d], n)


def mirror(comp: Sequence[int]) -> Composition:
    return tuple(reversed(comp))


def mirror_shape(perm: Sequence[int]) -> Composition:
    return mirror(descent_composition(perm))


def evaluation(u: Sequence[int]) -> tuple:
    """Letter counts of 1..max(u), zeros kept."""
    c = Counter(u)
    return tuple(c[i] for i in range(1, max(u, default=0) + 1))


def ipack(u: Sequence[int]) -> Composition:
    """The evaluation with zero entries removed."""
    return tuple(k for k in evaluation(u) if k)


def signed_evaluation(w: Sequence[int]) -> tuple:
    """sev of a regular signed packed word, signed parts as negative ints."""
    sg = value_signs(w)
    ev = evaluation(unsigned(w))
    return tuple(sg.get(i + 1, 1) * k for i, k in enumerate(ev))


def is_composition(comp) -> bool:
    return all(isinstance(p, int) and p > 0 for p in comp)


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, in the order of their descent-set bitmask."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        yield comp_from_descents([i + 1 for i in range(n - 1) if mask >> i & 1], n)


def comp_finer(K: Sequence[int], I: Sequence[int]) -> bool:
    """True when K refines I (K >= I)."""
    return sum(K) == sum(I) and set(comp_descents(I)) <= set(comp_descents(K))


def comp_interval(I: Sequence[int], K: Sequence[int]) -> list:
    """All J with K >= J >= I, in bitmask order."""
    if not comp_finer(K, I):
        raise ValueError(f"{K!r} does not refine {I!r}")
    n = sum(I)
    base = set(comp_descents(I))
    free = sorted(set(comp_descents(K)) - base)
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            out.append(comp_from_descents(base | set(extra), n))
    return sorted(out, key=lambda J: sum(1 << (d - 1) for d in comp_descents(J)))


def peaks(comp: Sequence[int]) -> frozenset:
    """Cells (1..n) with no cell to their right nor on top of them."""
    n, d = sum(comp), set(comp_descents(comp))
    return frozenset(i for i in range(1, n + 1)
                     if (i in d or i == n) and (i == 1 or i - 1 not in d))


def valleys(comp: Sequence[int]) -> frozenset:
    """Cells with no cell to their left nor below them."""
    n, d = sum(comp), set(comp_descents(comp))
    return frozenset(i for i in range(1, n + 1)
                     if (i == 1 or i - 1 in d) and (i == n or i not in d))


def b_exponent(I: Sequence[int], J: Sequence[int], variant: str = "verified") -> int:
    """Power of t in the ribbon closed form.

    ``verified``: descents of J not in I, plus descents d of I with neither d
    nor d+1 a descent of J.  ``prose`` uses d-1 in place of d+1; it does not
    agree with the enumeration and is kept for comparison only.
    """
    dI, dJ = set(comp_descents(I)), set(comp_descents(J))
    step = {"verified": 1, "prose": -1}[variant]
    return len(dJ - dI) + sum(1 for d in dI if d not in dJ and d + step not in dJ)


def peak_valley_condition(I: Sequence[int], J: Sequence[int]) -> bool:
    """I has a peak or a valley at each peak of J."""
    pv = peaks(I) | valleys(I)
    return peaks(J) <= pv


def stats(x: Sequence[int], kind: str = "word") -> dict:
    """Statistics record of a word/signed word or of a composition."""
    if kind == "composition":
        return {
            "descents": comp_descents(x), "maj": comp_maj(x), "size": sum(x),
            "peaks": tuple(sorted(peaks(x))), "valleys": tuple(sorted(valleys(x))),
            "v": len(valleys(x)), "mirror": mirror(x), "conjugate": conjugate(x),
        }
    rec = {
        "descents": descents(x), "maj": maj(x), "D": descent_composition(x),
        "m": num_signed(x), "mirror": mirror(descent_composition(x)),
    }
    u = unsigned(x)
    rec["ev"] = evaluation(u)
    rec["ipack"] = ipack(u)
    if is_regular(x):
        rec["m_prime"] = num_signed_values(x)
        if is_packed(u):
            rec["sev"] = signed_evaluation(x)
    return rec


# -- packed words and refinement ---------------------------------------------------------

@lru_cache(maxsize=None)
def _packed_words(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    # assign each position to a block; iterate over words in {1..n}^n that are packed
    for k in range(1, n + 1):
        for w in product(range(1, k + 1), repeat=n):
            if len(set(w)) == k:
                out.append(w)
    return tuple(out)


def packed_words(n: int) -> tuple:
    """All packed words of length n, grouped by max, lexicographic inside."""
    return _packed_words(n)


def finer(v: Sequence[int], u: Sequence[int]) -> bool:
    """True iff u = g(v) for a nondecreasing map g on values."""
    if len(u) != len(v):
        return False
    g: dict = {}
    for a, b in zip(v, u):
        if g.setdefault(a, b) != b:
            return False
    vals = sorted(g)
    return all(g[a] <= g[b] for a, b in zip(vals, vals[1:]))


def coarsenings(v: Sequence[int]) -> list:
    """All packed w with finer(v, w): merge runs of consecutive values of v."""
    k = max(v, default=0)
    out = []
    for mask in range(1 << max(k - 1, 0)):
        g, cur = {1: 1}, 1
        for i in range(2, k + 1):
            if mask >> (i - 2) & 1:
                cur += 1
            g[i] = cur
        out.append(tuple(g[x] for x in v))
    return sorted(set(out))


def refinement_interval(v: Sequence[int], u: Sequence[int]) -> set:
    """Packed words lying between u and v in the refinement order.

    Accepts the endpoints in either order.
    """
    if finer(u, v):
        u, v = v, u
    if not finer(v, u):
        raise ValueError(f"{v!r} and {u!r} are not comparable")
    return {w for w in coarsenings(v) if finer(w, u)}


# -- binary trees ----------------------------------------------------------------------

BinaryTree = Optional[tuple]


def tree_size(T: BinaryTree) -> int:
    return 0 if T is None else 1 + tree_size(T[0]) + tree_size(T[1])


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    return tuple((L, R) for k in range(n)
                 for L in binary_trees(k) for R in binary_trees(n - 1 - k))


def bst_insert(perm: Sequence[int]) -> BinaryTree:
    """P(perm): insert letters from right to left into a binary search tree."""
    # build with mutable nodes then freeze
    nodes: dict = {}
    root = None
    for x in reversed(perm):
        if root is None:
            root = x
            nodes[x] = [None, None]
            continue
        cur = root
        while True:
            side = 0 if x < cur else 1
            nxt = nodes[cur][side]
            if nxt is None:
                nodes[cur][side] = x
                nodes[x] = [None, None]
                break
            cur = nxt

    def freeze(x):
        if x is None:
            return None
        L, R = nodes[x]
        return (freeze(L), freeze(R))

    return freeze(root)


def bst_labelling(T: BinaryTree, offset: int = 0):
    """Labelled tree (label, left, right) with in-order labels offset+1..."""
    if T is None:
        return None
    nl = tree_size(T[0])
    return (offset + nl + 1, bst_labelling(T[0], offset), bst_labelling(T[1], offset + nl + 1))


def _linear_extensions(forest: list) -> Iterator[tuple]:
    # forest: list of labelled subtrees whose roots are available
    if not forest:
        yield ()
        return
    for i, node in enumerate(forest):
        label, L, R = node
        rest = forest[:i] + forest[i + 1:] + [c for c in (L, R) if c is not None]
        for tail in _linear_extensions(rest):
            yield (label,) + tail


def sylvester_class(T: BinaryTree) -> list:
    """All permutations sigma with P(sigma) = T, sorted."""
    if T is None:
        return [()]
    lab = bst_labelling(T)
    # sigma read backwards inserts the root first: reversed sigma is a linear extension
    return sorted(tuple(reversed(e)) for e in _linear_extensions([lab]))


def zigzag_tree(perm: Sequence[int]) -> BinaryTree:
    """The one-child-per-node tree drawn for the mirror shape of perm.

    Nodes are numbered from the bottom; node i is the right child of node
    i+1 when i is a descent of perm, the left child otherwise.
    """
    n = len(perm)
    des = set(descents(perm))
    T: BinaryTree = None
    for i in range(1, n + 1):
        if T is None:
            T = (None, None)
        elif (i - 1) in des:
            T = (None, T)
        else:
            T = (T, None)
    return T


# -- plane trees ---------------------------------------------------------------------

PlaneTree = Optional[tuple]


def decreasing_plane_tree(u: Sequence[int]) -> PlaneTree:
    """T(u): the occurrences of max(u) cut u into segments, recursively."""
    if not u:
        return None
    top = max(u)
    segs, cur = [], []
    for x in u:
        if x == top:
            segs.append(cur)
            cur = []
        else:
            cur.append(x)
    segs.append(cur)
    return tuple(decreasing_plane_tree(s) for s in segs)


def regions(T: PlaneTree) -> int:
    if T is None:
        return 0
    return len(T) - 1 + sum(regions(c) for c in T)


@lru_cache(maxsize=None)
def plane_trees(n: int) -> tuple:
    """All plane trees with n regions (little Schroeder numbers)."""
    if n == 0:
        return (None,)
    out = []
    for arity in range(2, n + 2):
        rest = n - (arity - 1)
        for split in _weak_compositions(rest, arity):
            for kids in product(*(plane_trees(k) for k in split)):
                out.append(tuple(kids))
    return tuple(out)


def _weak_compositions(n: int, k: int) -> Iterator[tuple]:
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _weak_compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _plane_fibers(n: int) -> dict:
    fib = defaultdict(list)
    for u in packed_words(n):
        fib[decreasing_plane_tree(u)].append(u)
    return dict(fib)


def plane_class(T: PlaneTree) -> list:
    """All packed words u with T(u) = T."""
    return list(_plane_fibers(regions(T)).get(T, []))


def region_stats(T: PlaneTree) -> list:
    """Per internal node in preorder: (arity, regions in its subtree)."""
    out = []

    def walk(node):
        if node is None:
            return
        out.append((len(node), regions(node)))
        for c in node:
            walk(c)

    walk(T)
    return out


# -- enumeration of signed objects ---------------------------------------------------------

def permutations(n: int) -> Iterator[tuple]:
    return _perms(range(1, n + 1))


def sign_vectors(n: int) -> Iterator[tuple]:
    return product((1, -1), repeat=n)


def signed_permutations(n: int) -> Iterator[tuple]:
    for p in permutations(n):
        for e in sign_vectors(n):
            yield attach_signs(p, e)


def regular_sign_vectors(u: Sequence[int]) -> Iterator[tuple]:
    """Sign vectors making the packed word u regular (one sign per value)."""
    k = max(u, default=0)
    for vs in product((1, -1), repeat=k):
        yield tuple(vs[x - 1] for x in u)


def regular_signed_packed_words(n: int) -> Iterator[tuple]:
    for u in packed_words(n):
        for e in regular_sign_vectors(u):
            yield attach_signs(u, e)


def shuffles(u: Sequence, v: Sequence) -> Iterator[tuple]:
    n, m = len(u), len(v)
    for pos in combinations(range(n + m), n):
        ps = set(pos)
        out, i, j = [], 0, 0
        for k in range(n + m):
            if k in ps:
                out.append(u[i])
                i += 1
            else:
                out.append(v[j])
                j += 1
        yield tuple(out)


def inverse(perm: Sequence[int]) -> tuple:
    out = [0] * len(perm)
    for i, x in enumerate(perm, 1):
        out[x - 1] = i
    return tuple(out)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[x - 1] for x in b)
