"""Hereditarily finite pure sets viewed as impartial games.

Sets are hash-consed: each distinct set exists once, so identity is
equality.  Children are kept in increasing Ackermann-code order, where the
code of a set is the sum of 2**code(child).  Codes of sets built by sums and
products quickly outgrow memory, so the order is decided structurally and a
numeric code is only materialised while it stays small.
"""

import itertools
import threading
from enum import Enum
from functools import lru_cache

from .config import limits
from .errors import ParseError, ResourceLimit, ZeroInverse
from .ordinal import nat

_CODE_BITS = 1 << 12   # keep numeric codes below 2**4096


class OutcomeI(Enum):
    ZERO_TYPE = "zero_type"
    FUZZY = "fuzzy"

    def __str__(self):
        return self.value


class PureSet:
    __slots__ = ("children", "rank", "_id", "_code", "_hash", "__weakref__")

    def __iter__(self):
        return iter(self.children)

    def __len__(self):
        return len(self.children)

    def __contains__(self, item):
        return item in self.children

    def __eq__(self, other):
        if not isinstance(other, PureSet):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.children == other.children)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return _order(self, other) < 0

    def __repr__(self):
        return f"PureSet({format_pureset(self)})"

    def __str__(self):
        return format_pureset(self)


_lock = threading.RLock()
_table = {}
_by_code = {}
_ids = itertools.count()
_sum_memo = {}
_prod_memo = {}


def _order(a, b):
    """Compare two sets in Ackermann-code order without big integers."""
    if a is b:
        return 0
    if a._code is not None and b._code is not None:
        return (a._code > b._code) - (a._code < b._code)
    if a._code is not None:
        return -1
    if b._code is not None:
        return 1
    xs, ys = a.children, b.children
    i, j = len(xs) - 1, len(ys) - 1
    while i >= 0 and j >= 0:
        c = _order(xs[i], ys[j])
        if c:
            return c
        i -= 1
        j -= 1
    return (i >= 0) - (j >= 0)


class _OrderKey:
    __slots__ = ("s",)

    def __init__(self, s):
        self.s = s

    def __lt__(self, other):
        return _order(self.s, other.s) < 0


def _charge():
    # interned sets and cached sums/products both count against the budget
    if len(_table) + len(_sum_memo) + len(_prod_memo) >= limits.node_budget:
        raise ResourceLimit(f"more than {limits.node_budget} pure-set nodes")


def make_set(children=()):
    """The interned set whose elements are ``children``."""
    kids = {c._id: c for c in children}
    ordered = tuple(sorted(kids.values(), key=_OrderKey))
    key = tuple(c._id for c in ordered)
    node = _table.get(key)
    if node is not None:
        return node
    with _lock:
        node = _table.get(key)
        if node is not None:
            return node
        _charge()
        node = PureSet.__new__(PureSet)
        node.children = ordered
        node.rank = 1 + max(c.rank for c in ordered) if ordered else 0
        node._id = next(_ids)
        if all(c._code is not None and c._code < _CODE_BITS for c in ordered):
            node._code = sum(1 << c._code for c in ordered)
            _by_code[node._code] = node
        else:
            node._code = None
        node._hash = hash(node._code) if node._code is not None else hash(("set", key))
        _table[key] = node
    return node


EMPTY = make_set()


def ackermann(code):
    """Decode a natural number into its pure set."""
    if code < 0:
        raise ValueError("codes are natural numbers")
    node = _by_code.get(code)
    if node is not None:
        return node
    if code.bit_length() > _CODE_BITS:
        raise ResourceLimit(f"code with {code.bit_length()} bits")
    kids = []
    bit, rest = 0, code
    while rest:
        if rest & 1:
            kids.append(ackermann(bit))
        rest >>= 1
        bit += 1
    return make_set(kids)


def code_of(s):
    if s._code is None:
        raise ResourceLimit("Ackermann code too large to materialise")
    return s._code


def rank(s):
    return s.rank


def from_ordinal(n):
    """The von Neumann natural n = {0, ..., n-1}."""
    s = EMPTY
    members = []
    for _ in range(int(n)):
        members.append(s)
        s = make_set(members)
    return s


def clear_caches():
    """Forget memoised results and interned sets (the empty set is kept)."""
    with _lock:
        _table.clear()
        _by_code.clear()
        for memo in (_grundy_memo, _class_memo, _sum_memo, _prod_memo):
            memo.clear()
        _table[()] = EMPTY
        _by_code[0] = EMPTY


# -- outcome and Grundy values ------------------------------------------------

_grundy_memo = {}
_class_memo = {}


def _grundy(s):
    g = _grundy_memo.get(s._id)
    if g is None:
        seen = {_grundy(c) for c in s.children}
        g = 0
        while g in seen:
            g += 1
        _grundy_memo[s._id] = g
    return g


def grundy(s):
    return nat(_grundy(s))


def classify(s):
    t = _class_memo.get(s._id)
    if t is None:
        if any(classify(c) is OutcomeI.ZERO_TYPE for c in s.children):
            t = OutcomeI.FUZZY
        else:
            t = OutcomeI.ZERO_TYPE
        _class_memo[s._id] = t
    return t


# -- the five sums and the product --------------------------------------------

def _options(kind, f, g):
    r = _star
    if kind == 1:
        return [r(1, f, y) for y in g] + [r(1, x, y) for x in f for y in g]
    if kind == 2:
        return ([r(2, f, y) for y in g] + [r(2, x, g) for x in f]
                + [r(2, x, y) for x in f for y in g])
    if kind == 3:
        return [r(3, f, y) for y in g] + [r(3, x, g) for x in f]
    if kind == 4:
        return list(f) + [r(4, f, y) for y in g]
    return list(f) + list(g) + [r(5, f, y) for y in g] + [r(5, x, g) for x in f]


def _star(kind, f, g):
    key = (kind, f._id, g._id)
    out = _sum_memo.get(key)
    if out is None:
        _charge()
        out = make_set(_options(kind, f, g))
        _sum_memo[key] = out
    return out


def star_sum(kind, f, g):
    """kind is one of "s1".."s5" (or 1..5); "s3" is the disjunctive sum."""
    k = int(str(kind).lstrip("s"))
    if k not in (1, 2, 3, 4, 5):
        raise ValueError(f"unknown sum {kind!r}")
    return _star(k, f, g)


def iproduct(f, g):
    key = (f._id, g._id)
    out = _prod_memo.get(key)
    if out is None:
        _charge()
        opts = []
        for x in f:
            xg = iproduct(x, g)
            for y in g:
                opts.append(_star(3, _star(3, xg, iproduct(f, y)), iproduct(x, y)))
        out = make_set(opts)
        _prod_memo[key] = out
    return out


# -- nimbers --------------------------------------------------------------------

def nim_add(a, b):
    return a ^ b


@lru_cache(maxsize=None)
def _nim_mul(a, b):
    if a < 2 or b < 2:
        return a * b
    n = max(a, b).bit_length()
    half = 1
    while 2 * half < n:
        half *= 2
    mask = (1 << half) - 1
    a1, a0 = a >> half, a & mask
    b1, b0 = b >> half, b & mask
    c = _nim_mul(a1, b1)
    hi = c ^ _nim_mul(a1, b0) ^ _nim_mul(a0, b1)
    lo = _nim_mul(a0, b0) ^ _nim_mul(c, 1 << (half - 1))
    return (hi << half) ^ lo


def nim_mul(a, b):
    if a < 0 or b < 0:
        raise ValueError("nimbers here are natural numbers")
    if a > b:
        a, b = b, a
    return _nim_mul(a, b)


def nim_arith(op, a, b):
    if op == "add":
        return nim_add(a, b)
    if op == "mul":
        return nim_mul(a, b)
    raise ValueError(f"unknown nimber operation {op!r}")


def nim_inv(a):
    if a == 0:
        raise ZeroInverse("0 has no inverse")
    if a < 0 or a >= 1 << (1 << limits.nim_subfield):
        raise ResourceLimit(f"{a} lies outside the field of size 2^(2^{limits.nim_subfield})")
    k = 0
    while a >= 1 << (1 << k):
        k += 1
    # a^(q-2) is the inverse in the field with q elements
    e = (1 << (1 << k)) - 2
    result, base = 1, a
    while e:
        if e & 1:
            result = nim_mul(result, base)
        base = nim_mul(base, base)
        e >>= 1
    assert nim_mul(a, result) == 1
    return result


# -- text form -------------------------------------------------------------------

def format_pureset(s):
    """Braces around the children's codes, e.g. ``{#2,#0}``; codes descending."""
    parts = []
    for c in reversed(s.children):
        parts.append(f"#{c._code}" if c._code is not None else format_pureset(c))
    return "{" + ",".join(parts) + "}"


def parse_pureset(text, start=0, whole=True):
    i = start

    def skip():
        nonlocal i
        while i < len(text) and text[i] == " ":
            i += 1

    def item():
        nonlocal i
        skip()
        if i < len(text) and text[i] == "#":
            i += 1
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i:
                raise ParseError(i, "expected a code")
            code = int(text[i:j])
            i = j
            return ackermann(code)
        if i < len(text) and text[i] == "{":
            i += 1
            kids = []
            skip()
            if i < len(text) and text[i] == "}":
                i += 1
                return make_set()
            while True:
                kids.append(item())
                skip()
                if i < len(text) and text[i] == ",":
                    i += 1
                    continue
                if i < len(text) and text[i] == "}":
                    i += 1
                    return make_set(kids)
                raise ParseError(i, "expected ',' or '}'")
        raise ParseError(i, "expected '#' or '{'")

    s = item()
    if whole:
        skip()
        if i != len(text):
            raise ParseError(i, "unexpected character")
        return s
    return s, i
