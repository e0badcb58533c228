"""Command line: compute, verify, render, sequences.

Objects:
  permutations, words, compositions  ``4132`` or ``10,2,1``; barred letters as ``-1``
  pairs (for products)                ``312|456``
  binary trees                        ``bst:<perm>`` or brackets ``((. .) .)``
  plane trees                         ``tree:<packed word>`` or brackets ``(. (. .) .)``
  integers                            ``3``
An object of ``-`` reads one object per line from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fqsym, ncsf, oracle, pbt, planetree, render, wqsym
from .combinat import bst_insert, decreasing_plane_tree, pack, signed_std, spack, std
from .lincomb import LinComb
from .qt import QTPoly, QTRational

SCHEMA = 1


# -- parsing ------------------------------------------------------------------------------------

def parse_word(s: str) -> tuple:
    s = s.strip()
    if not s:
        return ()
    if "," in s or " " in s:
        return tuple(int(x) for x in s.replace(" ", ",").split(",") if x)
    out, i = [], 0
    while i < len(s):
        sign = 1
        if s[i] == "-":
            sign, i = -1, i + 1
        if i >= len(s) or not s[i].isdigit():
            raise ValueError(f"cannot parse word {s!r}")
        out.append(sign * int(s[i]))
        i += 1
    return tuple(out)


def _brackets(s: str):
    """Nested brackets with '.' for leaves -> nested tuples with None."""
    toks = s.replace("(", " ( ").replace(")", " ) ").replace(",", " ").split()
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"unexpected end of tree {s!r}")
        tok = toks[pos]
        pos += 1
        if tok == ".":
            return None
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r} in {s!r}")
        kids = []
        while pos < len(toks) and toks[pos] != ")":
            kids.append(node())
        if pos >= len(toks):
            raise ValueError(f"unbalanced brackets in {s!r}")
        pos += 1
        return tuple(kids)

    out = node()
    if pos != len(toks):
        raise ValueError(f"trailing input in tree {s!r}")
    return out


def parse_binary(s: str):
    s = s.strip()
    if s.startswith("bst:"):
        return bst_insert(parse_word(s[4:]))
    T = _brackets(s)

    def check(x):
        if x is not None:
            if len(x) != 2:
                raise ValueError("binary tree nodes need exactly two slots")
            check(x[0])
            check(x[1])

    check(T)
    return T


def parse_plane(s: str):
    s = s.strip()
    if s.startswith("tree:"):
        return decreasing_plane_tree(parse_word(s[5:]))
    T = _brackets(s)
    if T is None or len(T) < 2:
        raise ValueError("a plane tree needs a root with at least two slots")
    return T


def parse_pair(s: str):
    if "|" not in s:
        raise ValueError(f"expected two objects separated by '|', got {s!r}")
    a, b = s.split("|", 1)
    return parse_word(a), parse_word(b)


# -- serialization -------------------------------------------------------------------------------

def fmt_key(k) -> str:
    if isinstance(k, tuple) and k and isinstance(k[0], tuple):
        return "|".join(fmt_key(x) for x in k)
    if isinstance(k, tuple):
        if all(isinstance(x, int) and 0 <= x <= 9 for x in k):
            return "".join(map(str, k))
        return ",".join(map(str, k))
    return str(k)


def fmt_tree(T) -> str:
    if T is None:
        return "."
    return "(" + " ".join(fmt_tree(c) for c in T) + ")"


def _coeff(c) -> str:
    return str(c) if isinstance(c, int) else str(coeff_rational(c))


def coeff_rational(c) -> QTRational:
    return c if isinstance(c, QTRational) else QTRational(c)


def to_json(value, basis: str = ""):
    if isinstance(value, LinComb):
        return {"basis": basis, "terms": [{"key": fmt_key(k), "coeff": _coeff(c)}
                                          for k, c in value.items()]}
    if isinstance(value, (QTRational, QTPoly, int)):
        r = coeff_rational(value)
        return {"value": str(r), "num": str(r.num), "den": str(r.den), "latex": r.latex()}
    if isinstance(value, (tuple, list)):
        return [to_json(v, basis) for v in value]
    return value


def to_text(value, basis: str = "") -> str:
    if isinstance(value, LinComb):
        return value.to_text(fmt_key, basis)
    if isinstance(value, tuple):
        return fmt_key(value)
    return str(value)


def to_latex(value, basis: str = "") -> str:
    if isinstance(value, LinComb):
        if not value:
            return "0"
        parts = []
        for k, c in value.items():
            name = f"{basis}_{{{fmt_key(k)}}}"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"\\left({coeff_rational(c).latex()}\\right){name}")
        return " + ".join(parts).replace("+ -", "- ")
    if isinstance(value, (QTRational, QTPoly, int)):
        return coeff_rational(value).latex()
    return str(value)


# -- registry -----------------------------------------------------------------------------------

def _modes(allowed, fn):
    def run(obj, mode):
        if mode == "all":
            return [fn(obj, m) for m in allowed]
        return fn(obj, mode or allowed[0])
    return run


def _pair(fn):
    return lambda s, mode: fn(*parse_pair(s), mode)


REGISTRY = {
    # name: (parser, runner(obj, mode), basis)
    "combinat.std": (parse_word, lambda w, m: std(w), ""),
    "combinat.signed_std": (parse_word, lambda w, m: signed_std(w), ""),
    "combinat.pack": (parse_word, lambda w, m: pack(w), ""),
    "combinat.spack": (parse_word, lambda w, m: spack(w), ""),
    "fqsym.F_at_X": (parse_word, _modes(fqsym.F_MODES, fqsym.F_at_X), ""),
    "fqsym.superize_G": (parse_word, lambda s, m: fqsym.superize_G(s), "G"),
    "fqsym.specialize_bar_tA": (parse_word, lambda s, m: fqsym.specialize_bar_tA(s), "G"),
    "fqsym.F_times_1mt": (parse_word, lambda s, m: fqsym.F_times_1mt(s), "F"),
    "fqsym.product_G": (str, _pair(lambda a, b, m: fqsym.product_G(LinComb.basis(a),
                                                                     LinComb.basis(b))), "G"),
    "fqsym.dendriform_half": (str, _pair(lambda a, b, m: fqsym.dendriform_half(
        LinComb.basis(a), LinComb.basis(b), m or "left", basis="F")), "F"),
    "fqsym.half_product_at_X": (str, _pair(lambda a, b, m: fqsym.half_product_at_X(
        a, b, m or "left")), ""),
    "ncsf.S_sharp": (int, lambda n, m: ncsf.S_sharp(n), "S"),
    "ncsf.ribbon_superize": (parse_word, lambda I, m: ncsf.ribbon_superize(I), "R"),
    "ncsf.ribbon_at_bar_tA": (parse_word, lambda I, m: ncsf.ribbon_at_bar_tA(I, m or "closed"),
                              "R"),
    "ncsf.M_at_geometric": (parse_word, lambda J, m: ncsf.M_at_geometric(J), ""),
    "ncsf.interval_sum_M": (str, _pair(lambda I, K, m: ncsf.interval_sum_M(I, K)), ""),
    "pbt.P_at_X": (parse_binary, _modes(pbt.P_MODES, pbt.P_at_X), ""),
    "pbt.signed_maj_gf": (parse_binary, lambda T, m: pbt.signed_maj_gf(T), ""),
    "pbt.P_T_expand": (parse_binary, lambda T, m: pbt.P_T_expand(T), "F"),
    "wqsym.N_internal": (str, _pair(lambda a, b, m: wqsym.N_internal(a, b)), "N"),
    "wqsym.sigma_sharp_N": (int, lambda n, m: wqsym.sigma_sharp_N(n), "N"),
    "wqsym.N_superize": (parse_word, lambda u, m: wqsym.N_superize(u, m or "theorem"), "N"),
    "wqsym.N_1mt": (parse_word, lambda u, m: wqsym.N_1mt(u, m or "closed"), "N"),
    "wqsym.M_dual_1mt": (parse_word, lambda u, m: wqsym.M_dual_1mt(u, m or "spack"), "M"),
    "wqsym.M_at_X": (parse_word, _modes(wqsym.M_MODES, wqsym.M_at_X), ""),
    "wqsym.signed_gf": (parse_word, lambda u, m: wqsym.signed_gf(u), ""),
    "wqsym.M_tridendriform": (str, _pair(lambda a, b, m: wqsym.M_tridendriform(
        a, b, m or "left")), "M"),
    "wqsym.tridendriform_at_X": (str, _pair(lambda a, b, m: wqsym.tridendriform_at_X(
        a, b, m or "left")), ""),
    "planetree.MM_expand": (parse_plane, lambda T, m: planetree.MM_expand(T), "M"),
    "planetree.MM_dendriform": (parse_plane, lambda T, m: planetree.MM_dendriform(T), "M"),
    "planetree.MM_at_X": (parse_plane, lambda T, m: planetree.MM_at_X(T, m or "hook"), ""),
}


def compute(formula: str, text: str, mode: str | None = None):
    if formula not in REGISTRY:
        raise KeyError(f"unknown formula {formula!r}")
    parse, run, basis = REGISTRY[formula]
    return run(parse(text), mode), basis


# -- verification suites --------------------------------------------------------------------------

def _suite_fqsym_hooks(a):
    from .combinat import permutations
    bad, cases = [], 0
    for n in range(1, a.max_n + 1):
        perms = list(permutations(n))
        cols = [fqsym.F_at_X_many(perms, m) for m in fqsym.F_MODES]
        for i, p in enumerate(perms):
            cases += 1
            if any(c[i] != cols[0][i] for c in cols[1:]):
                bad.append(p)
    return [oracle._report("fqsym.hooks", cases, bad), oracle.check_F_at_X(min(a.max_n, 6))]


def _suite_pbt_hooks(a):
    bad, cases = [], 0
    for T in pbt.all_trees(a.max_n):
        if T is None:
            continue
        cases += 1
        vals = [pbt.P_at_X(T, m) for m in pbt.P_MODES]
        if any(v != vals[0] for v in vals[1:]):
            bad.append(fmt_tree(T))
    return [oracle._report("pbt.hooks", cases, bad), oracle.check_P_at_X(min(a.max_n, 6))]


def _suite_wqsym(a):
    from .combinat import packed_words
    bad, cases = [], 0
    for n in range(1, a.max_n + 1):
        words = packed_words(n)
        for u, x, y in zip(words, wqsym.M_at_X_many(words, "closed"),
                           wqsym.M_at_X_many(words, "signed_sum")):
            cases += 1
            if x != y:
                bad.append(u)
    return [oracle._report("wqsym.M_at_X.modes", cases, bad),
            oracle.check_M_at_X(min(a.max_n, 5)),
            oracle.check_tridendriform_at_X(min(a.max_n, 5)),
            oracle.check_N_1mt(min(a.max_n, 4))]


def _suite_planetree(a):
    fit = planetree.fit_s_rule(a.max_regions)
    r = oracle.check_MM_at_X(a.max_regions)
    r["s_rule_fit"] = fit
    return [r]


SUITES = {
    "fqsym.hooks": _suite_fqsym_hooks,
    "pbt.hooks": _suite_pbt_hooks,
    "wqsym.hooks": _suite_wqsym,
    "planetree.hook": _suite_planetree,
    "ncsf.ribbons": lambda a: [oracle.check_ribbons(min(a.max_n, 5)),
                               oracle.check_interval_sums(a.max_n)],
    "fqsym.half_products": lambda a: [oracle.check_half_product_at_X(a.max_n)],
    "oracle.axioms": lambda a: (oracle.check_dendriform_axioms(min(a.max_n, 5))
                                + oracle.check_tridendriform_axioms(min(a.max_n, 5))),
    "oracle.realization": lambda a: oracle.check_product_realization(a.alphabet_size, a.max_degree),
    "oracle.halfshuffle": lambda a: [oracle.check_halfshuffle_descents((6, 3, 4), (1, 2, 5)),
                                     oracle.check_halfshuffle_random(a.max_n)],
    "sequences": lambda a: oracle.sequence_checks(),
    "t0": lambda a: oracle.check_t_zero(a.max_n),
}


# -- entry point ------------------------------------------------------------------------------------

def _objects(text: str, stdin) -> list:
    if text == "-":
        return [line.strip() for line in stdin if line.strip()]
    return [text]


def _emit(payload, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(payload + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qthook", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", help="evaluate a registered formula on an object")
    c.add_argument("formula", nargs="?", help="module.operation, see --list")
    c.add_argument("object", nargs="?", default=None)
    c.add_argument("--mode", default=None)
    c.add_argument("--format", default="json", choices=("json", "text", "latex"))
    c.add_argument("--list", action="store_true", help="list the registry and exit")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="suite id or 'all'")
    v.add_argument("--max-n", type=int, default=5)
    v.add_argument("--max-regions", type=int, default=5)
    v.add_argument("--alphabet-size", type=int, default=3)
    v.add_argument("--max-degree", type=int, default=4)

    r = sub.add_parser("render", help="decorated diagram")
    r.add_argument("object")
    r.add_argument("formula", choices=("fqsym.F_at_X", "pbt.P_at_X", "pbt.labels",
                                       "planetree.MM_at_X"))
    r.add_argument("--mode", default=None)
    r.add_argument("--format", default="latex", choices=render.FORMATS)

    s = sub.add_parser("sequences", help="A004123 and Delannoy-type counts")
    s.add_argument("--format", default="json", choices=("json", "text"))
    return p


def main(argv=None, stdin=None, out=None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "compute":
            return _cmd_compute(args, stdin, out)
        if args.verb == "verify":
            return _cmd_verify(args, out)
        if args.verb == "render":
            return _cmd_render(args, stdin, out)
        reports = oracle.sequence_checks()
        if args.format == "json":
            _emit({"schema": SCHEMA, "reports": reports}, "json", out)
        else:
            for rep in reports:
                out.write(f"{rep['check']}: {'pass' if rep['passed'] else 'FAIL'}\n")
        return 0 if all(rep["passed"] for rep in reports) else 1
    except (ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        sys.stderr.write(f"qthook: error: {msg}\n")
        return 2


def _cmd_compute(args, stdin, out) -> int:
    if args.list:
        out.write("\n".join(sorted(REGISTRY)) + "\n")
        return 0
    if args.formula is None or args.object is None:
        raise ValueError("compute needs a formula and an object")
    for text in _objects(args.object, stdin):
        value, basis = compute(args.formula, text, args.mode)
        if args.format == "json":
            _emit({"schema": SCHEMA, "formula": args.formula, "object": text,
                   "mode": args.mode, "result": to_json(value, basis)}, "json", out)
        elif args.format == "latex":
            vals = value if isinstance(value, list) else [value]
            _emit("\n".join(to_latex(v, basis) for v in vals), "text", out)
        else:
            vals = value if isinstance(value, list) else [value]
            _emit("\n".join(to_text(v, basis) for v in vals), "text", out)
    return 0


def _cmd_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
        reports += SUITES[name](args)
    ok = all(r["passed"] for r in reports)
    _emit({"schema": SCHEMA, "suite": args.suite, "passed": ok, "reports": reports}, "json", out)
    return 0 if ok else 1


def _cmd_render(args, stdin, out) -> int:
    for text in _objects(args.object, stdin):
        if args.formula == "fqsym.F_at_X":
            s = render.zigzag(parse_word(text), args.mode or "hook_direct", args.format)
        elif args.formula == "pbt.P_at_X":
            s = render.binary(parse_binary(text), args.mode or "hook_PT1", args.format)
        elif args.formula == "pbt.labels":
            s = render.binary(parse_binary(text), "labels", args.format)
        else:
            s = render.plane(parse_plane(text), args.format)
        _emit(s, "text", out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
