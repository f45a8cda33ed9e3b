"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
decreasing exponents (themselves ordinals) and positive integer
coefficients.  The empty tuple is 0.  Representations are canonical, so
structural equality is ordinal equality.

The operators ``+``, ``*`` and ``**`` are the (non-commutative) Cantor
operations; the natural (Hessenberg) operations are ``hessenberg_add`` and
``hessenberg_mul``.
"""

from functools import total_ordering

from .config import limits
from .errors import DepthExceeded, DivisionByZero, ParseError, Undefined


@total_ordering
class Ordinal:
    __slots__ = ("terms", "height", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Ordinal):
            terms = value.terms
        elif isinstance(value, int) and not isinstance(value, bool):
            if value < 0:
                raise ValueError("ordinals are nonnegative")
            terms = ((ZERO, value),) if value else ()
        else:
            terms = []
            for e, c in value:
                e = as_ordinal(e)
                if not isinstance(c, int) or c < 1:
                    raise ValueError("coefficients must be positive integers")
                if terms and not e < terms[-1][0]:
                    raise ValueError("exponents must be strictly decreasing")
                terms.append((e, c))
            terms = tuple(terms)
        _init(self, terms)

    # -- inspection ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def finite_part(self):
        if self.terms and not self.terms[-1][0].terms:
            return self.terms[-1][1]
        return 0

    def is_successor(self):
        return self.finite_part() > 0

    def is_limit(self):
        return bool(self.terms) and self.finite_part() == 0

    def leading_exponent(self):
        return self.terms[0][0] if self.terms else None

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is not finite")
        return self.finite_part()

    __index__ = __int__

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Ordinal):
            return self is other or self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_finite() and self.finite_part() == other
        return NotImplemented

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return cmp(self, other) < 0

    def __hash__(self):
        return self._hash

    # -- Cantor arithmetic as operators --------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_add(self, other)

    def __radd__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_add(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_mul(other, self)

    def __pow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_pow(self, other)

    def __rpow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else cantor_pow(other, self)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal('{format_ordinal(self)}')"


def _init(obj, terms):
    obj.terms = terms
    obj.height = 1 + max(e.height for e, _ in terms) if terms else 0
    if obj.is_finite():
        obj._hash = hash(obj.finite_part())
    else:
        obj._hash = hash(terms)


def _mk(terms):
    """Build from already-canonical terms, enforcing the depth bound."""
    terms = tuple(terms)
    if len(terms) == 1 and not terms[0][0].terms and terms[0][1] < len(_SMALL):
        return _SMALL[terms[0][1]]
    obj = Ordinal.__new__(Ordinal)
    _init(obj, terms)
    if obj.height > limits.max_depth:
        raise DepthExceeded(f"CNF nesting {obj.height} exceeds {limits.max_depth}")
    return obj


ZERO = Ordinal.__new__(Ordinal)
_init(ZERO, ())
_SMALL = [ZERO]
for _n in range(1, 257):
    _o = Ordinal.__new__(Ordinal)
    _init(_o, ((ZERO, _n),))
    _SMALL.append(_o)
ONE = _SMALL[1]
OMEGA = _mk(((ONE, 1),))


def _coerce(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return nat(x)
    return None


def as_ordinal(x):
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot interpret {x!r} as an ordinal")
    return o


def nat(n):
    if n < len(_SMALL):
        return _SMALL[n]
    return _mk(((ZERO, n),))


def omega_power(e, c=1):
    """The monomial w^e * c."""
    if c == 0:
        return ZERO
    return _mk(((as_ordinal(e), c),))


def cmp(a, b):
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    if a is b:
        return 0
    ta, tb = a.terms, b.terms
    for (ea, ca), (eb, cb) in zip(ta, tb):
        c = cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(ta) == len(tb):
        return 0
    return -1 if len(ta) < len(tb) else 1


def maximum(*xs):
    best = ZERO
    for x in xs:
        if cmp(x, best) > 0:
            best = x
    return best


# -- Cantor operations --------------------------------------------------------

def cantor_add(a, b):
    if not b.terms:
        return a
    if not a.terms:
        return b
    e = b.terms[0][0]
    out = []
    for ea, ca in a.terms:
        c = cmp(ea, e)
        if c > 0:
            out.append((ea, ca))
        elif c == 0:
            out.append((e, ca + b.terms[0][1]))
            out.extend(b.terms[1:])
            return _mk(out)
        else:
            break
    out.extend(b.terms)
    return _mk(out)


def cantor_mul(a, b):
    if not a.terms or not b.terms:
        return ZERO
    a1, ac = a.terms[0]
    out = []
    for e, c in b.terms:
        if e.terms:
            out.append((cantor_add(a1, e), c))
        else:
            out.append((a1, ac * c))
            out.extend(a.terms[1:])
    return _mk(out)


def cantor_pow(a, b):
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a == 1:
        return ONE
    m = b.finite_part()
    if a.is_finite():
        n = a.finite_part()
        x = []
        for e, c in b.terms:
            if e.terms:
                x.append((left_sub(ONE, e), c))
        if not x:
            return nat(n ** m)
        return _mk((( _mk(x), n ** m),))
    limit_part = _mk(b.terms[:-1] if m else b.terms)
    result = ONE
    if limit_part.terms:
        result = omega_power(cantor_mul(a.terms[0][0], limit_part))
    power, base = m, a
    tail = ONE
    while power:
        if power & 1:
            tail = cantor_mul(tail, base)
        power >>= 1
        if power:
            base = cantor_mul(base, base)
    return cantor_mul(result, tail)


def cantor(op, a, b):
    a, b = as_ordinal(a), as_ordinal(b)
    try:
        fn = {"add": cantor_add, "mul": cantor_mul, "pow": cantor_pow}[op]
    except KeyError:
        raise ValueError(f"unknown Cantor operation {op!r}") from None
    return fn(a, b)


def left_sub(a, b):
    """The unique g with a + g = b (Cantor sum)."""
    a, b = as_ordinal(a), as_ordinal(b)
    ta, tb = a.terms, b.terms
    i = 0
    while i < len(ta) and i < len(tb) and ta[i] == tb[i]:
        i += 1
    if i == len(ta):
        return _mk(tb[i:])
    if i == len(tb):
        raise Undefined(f"{a} > {b}")
    (ea, ca), (eb, cb) = ta[i], tb[i]
    c = cmp(ea, eb)
    if c < 0:
        return _mk(tb[i:])
    if c == 0 and ca < cb:
        return _mk(((eb, cb - ca),) + tb[i + 1:])
    raise Undefined(f"{a} > {b}")


def div_rem_left(a, b):
    """(q, r) with a = b*q + r and r < b."""
    a, b = as_ordinal(a), as_ordinal(b)
    if not b.terms:
        raise DivisionByZero("division by the ordinal 0")
    b1, bc = b.terms[0]
    q = []
    while cmp(a, b) >= 0:
        e, k = a.terms[0]
        if cmp(e, b1) > 0:
            q.append((left_sub(b1, e), k))
            a = _mk(a.terms[1:])
            continue
        n = k // bc
        prod = cantor_mul(b, nat(n))
        if cmp(prod, a) > 0:
            n -= 1
            prod = cantor_mul(b, nat(n))
        q.append((ZERO, n))
        a = left_sub(prod, a)
        break
    return _mk(q), a


# -- natural (Hessenberg) operations ------------------------------------------

def hessenberg_add(a, b):
    if not a.terms:
        return b
    if not b.terms:
        return a
    merged = {}
    for e, c in a.terms + b.terms:
        merged[e] = merged.get(e, 0) + c
    return _mk(sorted(merged.items(), key=_ExpKey, reverse=True))


def hessenberg_mul(a, b):
    if not a.terms or not b.terms:
        return ZERO
    merged = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = hessenberg_add(ea, eb)
            merged[e] = merged.get(e, 0) + ca * cb
    return _mk(sorted(merged.items(), key=_ExpKey, reverse=True))


class _ExpKey:
    __slots__ = ("e",)

    def __init__(self, item):
        self.e = item[0]

    def __lt__(self, other):
        return cmp(self.e, other.e) < 0


def hessenberg(op, a, b):
    a, b = as_ordinal(a), as_ordinal(b)
    if op == "add":
        return hessenberg_add(a, b)
    if op == "mul":
        return hessenberg_mul(a, b)
    raise ValueError(f"unknown Hessenberg operation {op!r}")


def mex(values):
    present = {as_ordinal(v) for v in values}
    n = 0
    while nat(n) in present:
        n += 1
    return nat(n)


# -- text form ----------------------------------------------------------------

def format_ordinal(a):
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        if e == 1:
            s = "w"
        elif e.is_finite() or e == OMEGA:
            s = f"w^{format_ordinal(e)}"
        else:
            s = f"w^({format_ordinal(e)})"
        parts.append(s if c == 1 else f"{s}*{c}")
    return "+".join(parts)


def parse_ordinal(text, start=0, whole=True):
    """Parse the ordinal grammar; returns the ordinal (or (ordinal, end) if not whole)."""
    p = _OrdinalParser(text, start)
    value = p.sum()
    if whole:
        p.skip()
        if p.i != len(text):
            raise ParseError(p.i, "unexpected character")
        return value
    return value, p.i


class _OrdinalParser:
    def __init__(self, text, i):
        self.s, self.i = text, i

    def skip(self):
        while self.i < len(self.s) and self.s[self.i] == " ":
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def nat(self):
        self.skip()
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            raise ParseError(self.i, "expected a natural number")
        n = int(self.s[self.i:j])
        self.i = j
        return n

    def sum(self):
        total = self.term()
        while self.peek() == "+":
            self.i += 1
            total = cantor_add(total, self.term())
        return total

    def term(self):
        ch = self.peek()
        if ch.isdigit():
            return nat(self.nat())
        if ch in ("w", "ω"):
            self.i += 1
            exp = ONE
            if self.peek() == "^":
                self.i += 1
                exp = self.atom()
            coef = 1
            if self.peek() == "*":
                self.i += 1
                coef = self.nat()
            return omega_power(exp, coef)
        if ch == "(":
            self.i += 1
            value = self.sum()
            if self.peek() != ")":
                raise ParseError(self.i, "expected ')'")
            self.i += 1
            return value
        raise ParseError(self.i, "expected an ordinal")

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            return nat(self.nat())
        if ch in ("w", "ω"):
            self.i += 1
            exp = ONE
            if self.peek() == "^":
                self.i += 1
                exp = self.atom()
            return omega_power(exp)
        if ch == "(":
            self.i += 1
            value = self.sum()
            if self.peek() != ")":
                raise ParseError(self.i, "expected ')'")
            self.i += 1
            return value
        raise ParseError(self.i, "expected an exponent")
