"""Dense integer polynomial kernels used by the q,t arithmetic.

Univariate polynomials are lists of ints, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Bivariate polynomials in
``q`` and ``t`` are lists indexed by the ``t`` degree whose entries are
univariate polynomials in ``q``.

The gcd is the heuristic integer-evaluation gcd (evaluate, take the integer
gcd, interpolate back, verify by exact division), with a primitive
pseudo-remainder sequence as the fallback when the heuristic gives up.
"""

from __future__ import annotations

from math import gcd
from functools import reduce

UPoly = list  # list[int]
BPoly = list  # list[UPoly], index = t-degree


# -- univariate ---------------------------------------------------------------

def u_trim(f: UPoly) -> UPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def u_add(f: UPoly, g: UPoly) -> UPoly:
    if len(f) < len(g):
        f, g = g, f
    r = list(f)
    for i, c in enumerate(g):
        r[i] += c
    return u_trim(r)


def u_sub(f: UPoly, g: UPoly) -> UPoly:
    r = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        r[i] -= c
    return u_trim(r)


def u_mul(f: UPoly, g: UPoly) -> UPoly:
    if not f or not g:
        return []
    r = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                r[i + j] += a * b
    return u_trim(r)


def u_scale(f: UPoly, c: int) -> UPoly:
    if c == 0:
        return []
    return [c * a for a in f]


def u_content(f: UPoly) -> int:
    return reduce(gcd, f, 0)


def u_exquo_int(f: UPoly, c: int) -> UPoly:
    return [a // c for a in f]


def u_divmod(f: UPoly, g: UPoly):
    """Division over Z; returns (quotient, remainder) or None if a
    non-integral quotient coefficient would be needed."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    if len(r) - 1 < dg:
        return [], r
    qt = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if c == 0:
            continue
        if c % lc:
            return None
        c //= lc
        qt[k] = c
        for j, b in enumerate(g):
            r[k + j] -= c * b
    return u_trim(qt), u_trim(r)


def u_exquo(f: UPoly, g: UPoly):
    """Exact quotient f/g, or None if g does not divide f in Z[q]."""
    res = u_divmod(f, g)
    if res is None or res[1]:
        return None
    return res[0]


def u_eval(f: UPoly, x: int) -> int:
    r = 0
    for c in reversed(f):
        r = r * x + c
    return r


def _u_interpolate(h: int, xi: int) -> UPoly:
    # symmetric xi-adic digits
    out = []
    half = xi // 2
    while h:
        d = h % xi
        if d > half:
            d -= xi
        out.append(d)
        h = (h - d) // xi
    return out


def u_primitive(f: UPoly) -> UPoly:
    c = u_content(f)
    if c == 0:
        return []
    if f[-1] < 0:
        c = -c
    return u_exquo_int(f, c) if c != 1 else list(f)


def _u_prem(f: UPoly, g: UPoly) -> UPoly:
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        c = r[-1]
        r = [lc * a for a in r]
        for j, b in enumerate(g):
            r[k + j] -= c * b
        u_trim(r)
    return r


def _u_gcd_prs(f: UPoly, g: UPoly) -> UPoly:
    f, g = u_primitive(f), u_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        f, g = g, u_primitive(r)
    return u_primitive(f)


def u_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Gcd in Z[q], normalised to a positive leading coefficient."""
    if not f:
        return u_primitive(g) if not g else _sign_fix(g)
    if not g:
        return _sign_fix(f)
    cf, cg = u_content(f), u_content(g)
    c = gcd(cf, cg)
    f, g = u_exquo_int(f, cf), u_exquo_int(g, cg)
    if len(f) == 1 or len(g) == 1:
        return [c]
    h = _u_gcd_heu(f, g)
    if h is None:
        h = _u_gcd_prs(f, g)
    return u_scale(h, c)


def _sign_fix(f: UPoly) -> UPoly:
    return [-a for a in f] if f[-1] < 0 else list(f)


def _u_gcd_heu(f: UPoly, g: UPoly):
    # f, g primitive and of positive degree
    bound = min(max(abs(a) for a in f), max(abs(a) for a in g))
    xi = 2 * bound + 29
    for _ in range(6):
        hv = gcd(u_eval(f, xi), u_eval(g, xi))
        if hv:
            h = u_primitive(_u_interpolate(hv, xi))
            if h and u_exquo(f, h) is not None and u_exquo(g, h) is not None:
                return h
        xi = xi * 73794 // 27011 + 1
    return None


# -- bivariate ------------------------------------------------------------------

def b_trim(F: BPoly) -> BPoly:
    while F and not F[-1]:
        F.pop()
    return F


def b_content(F: BPoly) -> int:
    return reduce(gcd, (u_content(c) for c in F), 0)


def b_scale_int(F: BPoly, c: int) -> BPoly:
    return [[a // c for a in row] for row in F]


def b_mul(F: BPoly, G: BPoly) -> BPoly:
    if not F or not G:
        return []
    R = [[] for _ in range(len(F) + len(G) - 1)]
    for i, a in enumerate(F):
        if a:
            for j, b in enumerate(G):
                if b:
                    R[i + j] = u_add(R[i + j], u_mul(a, b))
    return b_trim(R)


def b_exquo(F: BPoly, G: BPoly):
    """Exact quotient F/G in Z[q,t], or None."""
    if not G:
        raise ZeroDivisionError("polynomial division by zero")
    R = [list(r) for r in F]
    dg = len(G) - 1
    lc = G[-1]
    if len(R) - 1 < dg:
        return None if b_trim(R) else []
    Q = [[] for _ in range(len(R) - dg)]
    for k in range(len(R) - 1 - dg, -1, -1):
        c = R[k + dg]
        if not c:
            continue
        qc = u_exquo(c, lc)
        if qc is None:
            return None
        Q[k] = qc
        for j, b in enumerate(G):
            if b:
                R[k + j] = u_sub(R[k + j], u_mul(qc, b))
    if any(R):
        return None
    return b_trim(Q)


def _b_eval_t(F: BPoly, xi: int) -> UPoly:
    width = max(len(r) for r in F)
    out = [0] * width
    p = 1
    for row in F:
        for i, c in enumerate(row):
            out[i] += c * p
        p *= xi
    return u_trim(out)


def _b_interpolate(h: UPoly, xi: int) -> BPoly:
    cols = [_u_interpolate(c, xi) for c in h]
    depth = max((len(c) for c in cols), default=0)
    F = [[] for _ in range(depth)]
    for i, col in enumerate(cols):
        for j, d in enumerate(col):
            if d:
                row = F[j]
                row.extend([0] * (i + 1 - len(row)))
                row[i] = d
    return b_trim([u_trim(r) for r in F])


def _b_norm(F: BPoly) -> int:
    return max(abs(a) for row in F for a in row)


def _b_gcd_heu(F: BPoly, G: BPoly):
    bound = min(_b_norm(F), _b_norm(G))
    xi = 2 * bound + 29
    for _ in range(6):
        fv, gv = _b_eval_t(F, xi), _b_eval_t(G, xi)
        if fv and gv:
            hv = u_gcd(fv, gv)
            H = _b_interpolate(hv, xi)
            if H:
                c = b_content(H)
                H = b_scale_int(H, c) if c > 1 else H
                if b_exquo(F, H) is not None and b_exquo(G, H) is not None:
                    return H
        xi = xi * 73794 // 27011 + 1
    return None


def _b_content_t(F: BPoly) -> UPoly:
    c: UPoly = []
    for row in F:
        if row:
            c = u_gcd(c, row) if c else _sign_fix(row)
            if len(c) == 1:
                break
    return c


def _b_primitive_t(F: BPoly) -> BPoly:
    c = _b_content_t(F)
    return [u_exquo(r, c) if r else [] for r in F]


def _b_gcd_prs(F: BPoly, G: BPoly) -> BPoly:
    cf, cg = _b_content_t(F), _b_content_t(G)
    c = u_gcd(cf, cg)
    F, G = _b_primitive_t(F), _b_primitive_t(G)
    if len(F) < len(G):
        F, G = G, F
    while len(G) > 1:
        R = [list(r) for r in F]
        lc = G[-1]
        dg = len(G) - 1
        while len(R) - 1 >= dg:
            k = len(R) - 1 - dg
            top = R[-1]
            R = [u_mul(lc, r) for r in R]
            for j, b in enumerate(G):
                R[k + j] = u_sub(R[k + j], u_mul(top, b))
            b_trim(R)
        if not R:
            break
        F, G = G, _b_primitive_t(R)
    if len(G) == 1:
        return [c]
    return [u_mul(c, r) for r in G]


def b_gcd(F: BPoly, G: BPoly) -> BPoly:
    """Gcd in Z[q,t] up to sign."""
    if not F:
        return G
    if not G:
        return F
    cf, cg = b_content(F), b_content(G)
    c = gcd(cf, cg)
    if cf > 1:
        F = b_scale_int(F, cf)
    if cg > 1:
        G = b_scale_int(G, cg)
    if len(F) == 1 or len(G) == 1:
        # one side is free of t: the gcd lives in Z[q]
        h = _b_content_t(F) if len(G) == 1 else _b_content_t(G)
        other = G[0] if len(G) == 1 else F[0]
        return [u_scale(u_gcd(h, other), c)]
    H = _b_gcd_heu(F, G)
    if H is None:
        H = _b_gcd_prs(F, G)
    return [u_scale(r, c) for r in H]
