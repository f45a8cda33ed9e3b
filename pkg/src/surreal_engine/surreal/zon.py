"""Ordinal polynomials with integer coefficients, sum of w^b * r.

These are the formal differences of ordinals under the natural operations.
"""

from functools import total_ordering

from ..ordinal import (ZERO, as_ordinal, cmp, format_ordinal, hessenberg_add,
                       omega_power)
from .word import MINUS, PLUS, Run, SignWord


class _Desc:
    __slots__ = ("e",)

    def __init__(self, e):
        self.e = e

    def __lt__(self, other):
        return cmp(self.e, other.e) > 0


def _norm(pairs):
    acc = {}
    for e, c in pairs:
        e = as_ordinal(e)
        acc[e] = acc.get(e, 0) + c
    return tuple((e, acc[e]) for e in sorted(acc, key=_Desc) if acc[e])


@total_ordering
class Zon:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, int):
            terms = [(ZERO, terms)]
        self.terms = _norm(terms)

    def __add__(self, other):
        other = _zon(other)
        return Zon(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Zon((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        return self + (-_zon(other))

    def __rsub__(self, other):
        return _zon(other) - self

    def __mul__(self, other):
        other = _zon(other)
        return Zon((hessenberg_add(e, f), c * d) for e, c in self.terms for f, d in other.terms)

    __rmul__ = __mul__

    def sign(self):
        return 0 if not self.terms else (1 if self.terms[0][1] > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Zon(other)
        if not isinstance(other, Zon):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        return (self - _zon(other)).sign() < 0

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.terms:
            mag = abs(c)
            if e.is_zero():
                body = str(mag)
            else:
                base = "w" if e == 1 else (f"w^{format_ordinal(e)}" if e.is_finite() else f"w^({format_ordinal(e)})")
                body = base if mag == 1 else f"{base}*{mag}"
            if not out:
                out = body if c > 0 else "-" + body
            else:
                out += ("+" if c > 0 else "-") + body
        return out

    def __repr__(self):
        return f"Zon('{self}')"


def _zon(x):
    return x if isinstance(x, Zon) else Zon(x)


def monomial(e, c=1):
    return Zon([(e, c)])


def zon_arith(op, a, b):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def zon_to_word(a):
    """Juxtapose one constant block of length w^b * |r| per term."""
    return SignWord(Run(PLUS if c > 0 else MINUS, omega_power(e, abs(c))) for e, c in a.terms)
