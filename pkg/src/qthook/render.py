"""Decorated diagrams: zig-zag trees of permutations, binary trees, plane trees.

LaTeX output uses xymatrix in the layout of the usual hook-content pictures;
ASCII output is an indented outline, one node per line.
"""

from __future__ import annotations

from . import fqsym, pbt, planetree
from .combinat import bst_labelling, descents, regions

FORMATS = ("latex", "ascii")


def _xymatrix(rows, spacing: str) -> str:
    """rows: list of rows, each a dict column -> entry text."""
    lines = []
    for row in rows:
        width = max(row) + 1
        cells = [row.get(c, "*{}") for c in range(width)]
        lines.append(" & ".join(cells) + " \\\\")
    return "\\vcenter{\\xymatrix" + spacing + "{\n" + "\n".join(lines) + "\n}}"


def _arrow(dx: int) -> str:
    return "\\ar@{-}[d" + ("l" * -dx if dx < 0 else "r" * dx) + "]"


# -- permutations as zig-zag trees ------------------------------------------------------------

def zigzag_columns(sigma) -> list:
    """Column of node i (index i-1), node n on top, node 1 at the bottom.

    Node i hangs to the lower right of node i+1 when i is a descent of sigma.
    """
    n = len(sigma)
    des = set(descents(sigma))
    col = [0] * (n + 1)
    for i in range(n - 1, 0, -1):
        col[i] = col[i + 1] + (1 if i in des else -1)
    low = min(col[1:])
    return [c - low for c in col[1:]]


def zigzag(sigma, mode: str = "hook_direct", fmt: str = "latex") -> str:
    factors = fqsym.hook_factors(tuple(sigma), mode)
    cols = zigzag_columns(sigma)
    n = len(sigma)
    if fmt == "latex":
        rows = []
        for i in range(n, 0, -1):
            entry = factors[i - 1].latex()
            if i > 1:
                entry += _arrow(cols[i - 2] - cols[i - 1])
            rows.append({cols[i - 1]: entry})
        return _xymatrix(rows, "@C=-5mm@R=+4mm")
    if fmt == "ascii":
        return "\n".join("    " * cols[i - 1] + f"[{i}] " + factors[i - 1].text()
                         for i in range(n, 0, -1))
    raise ValueError(f"unknown format {fmt!r}")


# -- binary trees -----------------------------------------------------------------------------

def _binary_layout(T):
    """Preorder list of (node, depth, column); columns follow the in-order."""
    cols, out = {}, []
    counter = [0]

    def inorder(node):
        if node is None:
            return
        inorder(node[0])
        cols[id(node)] = counter[0]
        counter[0] += 1
        inorder(node[1])

    def pre(node, depth):
        if node is None:
            return
        out.append((node, depth, cols[id(node)]))
        pre(node[0], depth + 1)
        pre(node[1], depth + 1)

    inorder(T)
    pre(T, 0)
    return out, cols


def binary(T, mode: str = "hook_PT1", fmt: str = "latex") -> str:
    """mode: one of the hook modes of the pbt module, or ``labels`` for the
    binary search tree labelling."""
    if mode == "labels":
        labels = _bst_labels(T)
    else:
        labels = [f.latex() if fmt == "latex" else f.text() for f in pbt.hook_factors(T, mode)]
    layout, cols = _binary_layout(T)
    if fmt == "latex":
        depth = max(d for _, d, _ in layout) + 1
        rows = [dict() for _ in range(depth)]
        for (node, d, c), lab in zip(layout, labels):
            entry = str(lab)
            for child in node:
                if child is not None:
                    entry += _arrow(cols[id(child)] - c)
            rows[d][c] = entry
        return _xymatrix(rows, "@C=-1mm@R=+3mm")
    if fmt == "ascii":
        return "\n".join("  " * d + str(lab) for (_, d, _), lab in zip(layout, labels))
    raise ValueError(f"unknown format {fmt!r}")


def _bst_labels(T) -> list:
    out = []

    def walk(x):
        if x is None:
            return
        label, L, R = x
        out.append(label)
        walk(L)
        walk(R)

    walk(bst_labelling(T))
    return out


# -- plane trees ------------------------------------------------------------------------------

def plane(T, fmt: str = "latex") -> str:
    """Plane tree with the numerator of each internal node's factor."""
    nums = planetree.numerators_latex(T)
    if fmt == "ascii":
        lines, k = [], [0]

        def walk(node, depth):
            if node is None:
                lines.append("  " * depth + ".")
                return
            lines.append("  " * depth + nums[k[0]])
            k[0] += 1
            for c in node:
                walk(c, depth + 1)

        walk(T, 0)
        return "\n".join(lines)
    if fmt != "latex":
        raise ValueError(f"unknown format {fmt!r}")
    # leaves take consecutive even columns; an inner node sits over its middle child slot
    rows, k = {}, [0]
    nxt = [0]

    def place(node, depth):
        if node is None:
            c = nxt[0]
            nxt[0] += 2
            return c, []
        kids = [place(ch, depth + 1) for ch in node]
        cs = [c for c, _ in kids]
        c = (cs[0] + cs[-1]) // 2
        return c, kids

    def emit(node, depth, c, kids):
        row = rows.setdefault(depth, {})
        if node is None:
            row[c] = "{}"
            return
        entry = "{" + nums[k[0]] + "}"
        k[0] += 1
        for cc, _ in kids:
            entry += _arrow(cc - c)
        row[c] = entry
        for ch, (cc, sub) in zip(node, kids):
            emit(ch, depth + 1, cc, sub)

    c0, kids0 = place(T, 0)
    emit(T, 0, c0, kids0)
    return _xymatrix([rows[d] for d in sorted(rows)], "@C=0.5mm@R=4mm")


def decorate(obj, kind: str, mode: str | None = None, fmt: str = "latex") -> str:
    if kind == "permutation":
        return zigzag(obj, mode or "hook_direct", fmt)
    if kind == "binary":
        return binary(obj, mode or "hook_PT1", fmt)
    if kind == "plane":
        if regions(obj) < 1:
            raise ValueError("plane tree without regions")
        return plane(obj, fmt)
    raise ValueError(f"cannot render a {kind!r}")
