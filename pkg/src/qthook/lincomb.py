"""Finite formal linear combinations of basis keys."""

from __future__ import annotations

from typing import Callable, Iterable

from .qt import QTRational, QTPoly


def _key_order(k):
    # shorter keys first, then lexicographic; tuples of tuples sort naturally
    try:
        return (len(k), k)
    except TypeError:
        return (0, k)


class LinComb:
    """Map from hashable basis keys to nonzero coefficients.

    Coefficients are ints or QTRational; zero terms are dropped on construction.
    """

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                v = d.get(k, 0) + c
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
        self._t = d

    @classmethod
    def basis(cls, key, coeff=1) -> "LinComb":
        return cls({key: coeff})

    def items(self):
        return sorted(self._t.items(), key=lambda kv: _key_order(kv[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def __getitem__(self, key):
        return self._t.get(key, 0)

    def __contains__(self, key):
        return key in self._t

    def __len__(self):
        return len(self._t)

    def __iter__(self):
        return iter(self.keys())

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        r = LinComb()
        r._t = out
        return r

    def __neg__(self):
        r = LinComb()
        r._t = {k: -c for k, c in self._t.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LinComb":
        if not c:
            return LinComb()
        return LinComb((k, c * v) for k, v in self._t.items())

    __rmul__ = scale

    def map_keys(self, f: Callable) -> "LinComb":
        return LinComb((f(k), c) for k, c in self._t.items())

    def map_coeffs(self, f: Callable) -> "LinComb":
        return LinComb((k, f(c)) for k, c in self._t.items())

    def bilinear(self, other: "LinComb", op: Callable) -> "LinComb":
        """Extend op(key, key) -> LinComb bilinearly."""
        acc: dict = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                for k, c in op(k1, k2)._t.items():
                    acc[k] = acc.get(k, 0) + c1 * c2 * c
        return LinComb(acc)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._t == other._t
        if other == 0:
            return not self._t
        return NotImplemented

    def __repr__(self):
        return f"LinComb({self.items()!r})"

    def to_text(self, fmt_key: Callable = str, basis: str = "") -> str:
        if not self._t:
            return "0"
        parts = []
        for k, c in self.items():
            name = f"{basis}[{fmt_key(k)}]"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                cs = str(c)
                parts.append(f"({cs})*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def total(items: Iterable[LinComb]) -> LinComb:
    acc: dict = {}
    for lc in items:
        for k, c in lc._t.items():
            acc[k] = acc.get(k, 0) + c
    return LinComb(acc)


def coeff_to_rational(c) -> QTRational:
    if isinstance(c, QTRational):
        return c
    return QTRational(c if isinstance(c, (int, QTPoly)) else int(c))
