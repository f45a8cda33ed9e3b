"""Exact correspondence between Conway reals (short or eventually periodic
sign words) and rational numbers.

A number with a negative sign is read off as
``-m + sum(2**-(p - m))`` over its elements p above its minimum m; a
periodic tail contributes a geometric series.  Positive numbers are
handled through the opposite word.
"""

from fractions import Fraction
from functools import total_ordering
from itertools import groupby
from math import floor

from .errors import NotRepresentable, ParseError
from .ordinal import nat
from .surreal.word import MINUS, PLUS, Rep, Run, SignWord

Rational = Fraction


@total_ordering
class Dyadic:
    """numerator / 2**exponent in lowest terms."""

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator, exponent=0):
        if exponent < 0:
            numerator, exponent = numerator << -exponent, 0
        while exponent and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        if numerator == 0:
            exponent = 0
        self.numerator = numerator
        self.exponent = exponent

    @classmethod
    def from_fraction(cls, r):
        r = Fraction(r)
        d = r.denominator
        if d & (d - 1):
            raise ValueError(f"{r} is not dyadic")
        return cls(r.numerator, d.bit_length() - 1)

    def to_fraction(self):
        return Fraction(self.numerator, 1 << self.exponent)

    def __add__(self, other):
        return Dyadic.from_fraction(self.to_fraction() + _frac(other))

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other):
        return self + (-_dy(other))

    def __mul__(self, other):
        return Dyadic.from_fraction(self.to_fraction() * _frac(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (Dyadic, int, Fraction)):
            return self.to_fraction() == _frac(other)
        return NotImplemented

    def __lt__(self, other):
        return self.to_fraction() < _frac(other)

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self):
        return format_rational(self.to_fraction())

    def __repr__(self):
        return f"Dyadic({self.numerator}, {self.exponent})"


def _frac(x):
    return x.to_fraction() if isinstance(x, Dyadic) else Fraction(x)


def _dy(x):
    return x if isinstance(x, Dyadic) else Dyadic.from_fraction(x)


def _parts(x):
    """(leading sign, length of its run, remaining finite signs, periodic body
    or None) of a Conway real.  The leading run stays compressed so that large
    integers are cheap."""
    segs = list(x.segments)
    lead, count = 0, 0
    if segs and isinstance(segs[0], Run):
        if not segs[0].length.is_finite():
            raise NotRepresentable("transfinite run outside a periodic block")
        lead, count = segs[0].sign, int(segs[0].length)
        segs = segs[1:]
    rest = []
    for idx, seg in enumerate(segs):
        if isinstance(seg, Rep):
            if idx != len(segs) - 1:
                raise NotRepresentable("sign word continues past its periodic block")
            return lead, count, rest, seg.body
        if not seg.length.is_finite():
            raise NotRepresentable("transfinite run outside a periodic block")
        rest.extend([seg.sign] * int(seg.length))
    return lead, count, rest, None


def to_rational(x):
    lead, count, rest, body = _parts(x)
    first = lead or (rest[0] if rest else (body[0] if body else 0))
    if first == 0:
        return Fraction(0)
    if first == PLUS:
        # read the opposite word without building it
        rest = [-s for s in rest]
        body = body and tuple(-s for s in body)
        return -_negative_value(count, rest, body)
    return _negative_value(count, rest, body)


def _negative_value(count, rest, body):
    # positions are counted from the end of the leading minus run; the least
    # element is the first plus, or the birthday if there is none.  Every
    # term is a power of two over 2**e * (2**ell - 1), summed as integers.
    signs = rest + list(body or ())
    k = signs.index(PLUS) if PLUS in signs else len(rest)
    ell = len(body) if body else 1
    period = (1 << ell) - 1
    e = len(rest) + ell - k
    num = 0
    for p in range(k + 1, len(rest)):
        if rest[p] == PLUS:
            num += period << (e - (p - k))
    if body is None:
        if len(rest) > k:
            num += period << (e - (len(rest) - k))
    else:
        start = len(rest)
        for j, s in enumerate(body):
            if s == PLUS and start + j > k:
                num += (1 << ell) << (e - (start + j - k))
            elif s == PLUS and start + j == k:
                # the minimum itself; later copies of this position still count
                num += 1 << e
    return Fraction(num, period << e) - (count + k)


def from_rational(r):
    r = Fraction(r)
    if r == 0:
        return SignWord()
    # build the word of -|r|, flipping every sign when r > 0
    neg, pos = (MINUS, PLUS) if r < 0 else (PLUS, MINUS)
    f = floor(-abs(r))
    r0, frac = -f, -abs(r) - f
    if frac == 0:
        return SignWord([Run(neg, nat(r0))])
    digits, start = _binary(frac)
    # finite expansion: the last 1 is the birthday
    head = [1] + (digits[:-1] if start is None else digits[:start])
    segs = [Run(neg, nat(r0))]
    segs += [Run(pos if d else neg, nat(len(list(g)))) for d, g in groupby(head)]
    if start is not None:
        segs.append(Rep(tuple(pos if d else neg for d in digits[start:])))
    return SignWord(segs)


def _binary(frac):
    """Binary digits of 0 < frac < 1 and the index where the period starts
    (None for a terminating expansion)."""
    num, den = frac.numerator, frac.denominator
    seen = {}
    digits = []
    while num and num not in seen:
        seen[num] = len(digits)
        num *= 2
        digits.append(1 if num >= den else 0)
        if num >= den:
            num -= den
    if not num:
        return digits, None
    return digits, seen[num]


def prefix_repetitor(x):
    """(prefix, repetitor) with x = prefix followed by the repetitor repeated
    omega times; the repetitor is None for short words.  The repetitor is the
    shortest possible and, among those, the prefix is the shortest."""
    _parts(x)
    segs = x.segments
    if not segs or not isinstance(segs[-1], Rep):
        return x, None
    return SignWord(segs[:-1]), SignWord.from_signs(segs[-1].body)


def to_dyadic(x):
    if not x.is_short():
        raise NotRepresentable("only short numbers are dyadic")
    return Dyadic.from_fraction(to_rational(x))


def format_rational(r):
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_rational(text, start=0, whole=True):
    i = start
    n = len(text)
    while i < n and text[i] == " ":
        i += 1
    j = i
    if j < n and text[j] in "+-":
        j += 1
    k = j
    while k < n and text[k].isdigit():
        k += 1
    if k == j:
        raise ParseError(k, "expected an integer")
    value = Fraction(int(text[i:k]))
    if k < n and text[k] == "/":
        m = k + 1
        while m < n and text[m].isdigit():
            m += 1
        if m == k + 1:
            raise ParseError(m, "expected a denominator")
        den = int(text[k + 1:m])
        if den == 0:
            raise ParseError(k + 1, "zero denominator")
        value /= den
        k = m
    if whole:
        while k < n and text[k] == " ":
            k += 1
        if k != n:
            raise ParseError(k, "unexpected character")
        return value
    return value, k
