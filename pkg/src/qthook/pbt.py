"""Planar binary trees inside FQSym: P_T = sum of F_sigma over a sylvester class."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .combinat import binary_trees, sylvester_class, tree_size
from .factor import Factor, one_minus_q, product_of
from .fqsym import dendriform_half, signed_sum_numerator
from .lincomb import LinComb
from .qt import QTRational, q_pochhammer

P_MODES = ("signed_sum", "hook_PT1", "hook_recursive", "hook_simplified")

ONE_NODE = (None, None)


def P_T_expand(T) -> LinComb:
    return LinComb((s, 1) for s in sylvester_class(T))


def P_T_dendriform(T) -> LinComb:
    """P_T = P_{T1} > P_1 < P_{T2}, empty subtrees acting as the unit."""
    if T is None:
        return LinComb.basis((), 1)
    L, R = T
    x = LinComb.basis((1,), 1)
    if L is not None:
        x = dendriform_half(P_T_dendriform(L), x, "right", basis="F")
    if R is not None:
        x = dendriform_half(x, P_T_dendriform(R), "left", basis="F")
    return x


def _nodes(T, parent_side=None, up=()):
    """Preorder walk yielding (node, side-of-parent, ancestors path).

    ``up`` lists (ancestor, side taken from it) from the root down.
    """
    if T is None:
        return
    yield T, parent_side, up
    L, R = T
    yield from _nodes(L, "L", up + ((T, "L"),))
    yield from _nodes(R, "R", up + ((T, "R"),))


def hook_factors(T, mode: str = "hook_PT1") -> list:
    """Node factors in preorder (root first)."""
    out = []
    for node, side, up in _nodes(T):
        L, R = node
        n, nl, nr = tree_size(node), tree_size(L), tree_size(R)
        if mode == "hook_PT1":
            num = (n, 0, nl, 1) if side == "R" else (0, 0, nl, 1)
            out.append(Factor((num,), (one_minus_q(n),)))
        elif mode == "hook_recursive":
            nrl = tree_size(R[0]) if R is not None else 0
            out.append(Factor(((nr, 0, nrl, 1), (0, 0, nl, 1)),
                              ((0, 0, nrl, 1), one_minus_q(n))))
        elif mode == "hook_simplified":
            if R is not None:
                num = (nr, 0, tree_size(R[0]), 1)
            elif side != "R":
                num = (0, 0, n - 1, 1)
            else:
                # climb while the current node is a right child
                k = len(up)
                while k > 0 and up[k - 1][1] == "R":
                    k -= 1
                top = up[k][0] if k < len(up) else node
                num = (0, 0, tree_size(top[0]), 1)
            out.append(Factor((num,), (one_minus_q(n),)))
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return out


def _signed_sum_numerator(T):
    cls = sylvester_class(T)
    H = _kernels.signed_maj_histogram(np.array(cls, dtype=np.int64))
    return signed_sum_numerator(H.sum(axis=0))


def P_at_X(T, mode: str = "hook_PT1") -> QTRational:
    if mode not in P_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {P_MODES}")
    if T is None:
        return QTRational(1)
    if mode == "signed_sum":
        return QTRational(_signed_sum_numerator(T), q_pochhammer(tree_size(T)))
    return product_of(hook_factors(T, mode))


def signed_maj_gf(T):
    """(q)_n P_T(X) with t -> -t; must come out a polynomial."""
    v = (P_at_X(T, "hook_PT1") * q_pochhammer(tree_size(T))).negate_t()
    if not v.is_polynomial():
        raise ArithmeticError(f"signed maj generating function of {T} is not a polynomial: {v}")
    return v.num


def all_trees(max_n: int):
    for n in range(max_n + 1):
        yield from binary_trees(n)
