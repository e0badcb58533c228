"""Plane trees inside WQSym: MM_T = sum of M_u over the words u with T(u) = T.

A plane tree is a tuple of children, ``None`` standing for a leaf; a node of
arity a holds a - 1 regions.
"""

from __future__ import annotations

from .combinat import decreasing_plane_tree, plane_class, plane_trees, regions
from .factor import Factor, one_minus_q, product_of
from .lincomb import LinComb
from .qt import QTRational, qt_sum
from .wqsym import M_at_X_many, M_tridendriform

ONE_REGION = (None, None)
S_RULES = ("regions", "regions_plus_one")


def _check(T):
    if T is None or not isinstance(T, tuple) or len(T) < 2:
        raise ValueError(f"{T!r} is not a plane tree with at least one region")


def MM_expand(T) -> LinComb:
    _check(T)
    return LinComb((u, 1) for u in plane_class(T))


def _unit_or(T):
    return None if T is None else MM_dendriform(T)


def MM_dendriform(T) -> LinComb:
    """(MM_T1 > MM_1 < MM_T2) o (MM_1 < MM_T3) o ... o (MM_1 < MM_Tk), leaves as units."""
    _check(T)
    one = LinComb.basis((1,))
    x = one
    first = _unit_or(T[0])
    if first is not None:
        x = M_tridendriform(first, x, "right")
    second = _unit_or(T[1])
    if second is not None:
        x = M_tridendriform(x, second, "left")
    for child in T[2:]:
        y = one
        sub = _unit_or(child)
        if sub is not None:
            y = M_tridendriform(one, sub, "left")
        x = M_tridendriform(x, y, "middle")
    return x


def _internal(T):
    """Preorder (arity, regions below) for the non-root internal nodes."""
    out = []

    def walk(node):
        for c in node:
            if c is not None:
                out.append((len(c), regions(c)))
                walk(c)

    walk(T)
    return out


def hook_factors(T, s_rule: str = "regions") -> list:
    """Root factor first, then the other internal nodes in preorder.

    ``s_rule`` fixes the denominator exponent s(i) - 1: ``regions`` uses
    r(i), the rule that matches the fiber sums; the other is kept for the
    fit only.
    """
    _check(T)
    if s_rule not in S_RULES:
        raise ValueError(f"unknown s_rule {s_rule!r}")
    n = regions(T)
    out = [Factor(((0, 0, 0, len(T) - 1),), (one_minus_q(n),))]
    for a, r in _internal(T):
        d = r if s_rule == "regions" else r + 1
        out.append(Factor(((r, 0, 0, a - 1),), (one_minus_q(d),)))
    return out


def MM_at_X(T, method: str = "hook", s_rule: str = "regions") -> QTRational:
    if method == "hook":
        return product_of(hook_factors(T, s_rule))
    if method == "fiber":
        _check(T)
        return qt_sum(M_at_X_many(plane_class(T), "signed_sum"))
    raise ValueError(f"unknown method {method!r}")


def numerators_latex(T) -> list:
    return [f.numerator_latex() for f in hook_factors(T)]


def fit_s_rule(max_regions: int = 6) -> dict:
    """For each candidate rule, the number of trees where hook != fiber sum."""
    out = {}
    for rule in S_RULES:
        bad = 0
        for n in range(1, max_regions + 1):
            for T in plane_trees(n):
                if MM_at_X(T, "hook", rule) != MM_at_X(T, "fiber"):
                    bad += 1
        out[rule] = bad
    return out


def tree_of(u) -> tuple:
    return decreasing_plane_tree(tuple(u))


def all_plane_trees(max_regions: int):
    for n in range(1, max_regions + 1):
        yield from plane_trees(n)
