"""Finite partizan game forms.

Forms are hash-consed: a form is a pair of frozensets of forms, and two
structurally identical forms are the same object.  All derived quantities
(outcomes, sums, products, values) are memoised by form id.
"""

import itertools
import sys
import threading
from enum import Enum
from fractions import Fraction
from math import floor

from .config import limits
from .conway_real import Dyadic
from .errors import EmptyIntervalViolation, NotANumber, ParseError, ResourceLimit
from .surreal.arith import canonical_cut

if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


class Outcome(Enum):
    ZERO = "≡0"
    FUZZY = "∥0"
    POSITIVE = ">0"
    NEGATIVE = "<0"

    def __str__(self):
        return self.value


class GameOrder(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUIVALENT = "equivalent"
    CONFUSED = "confused"

    def __str__(self):
        return self.value


class GameForm:
    __slots__ = ("left", "right", "_id", "__weakref__")

    def __repr__(self):
        return f"GameForm({format_game(self)})"

    def __str__(self):
        return format_game(self)

    def __add__(self, other):
        return game_sum(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        return game_sum(self, negate(other))

    def __mul__(self, other):
        return product(self, other)


_lock = threading.RLock()
_table = {}
_ids = itertools.count()
_ge_memo, _le_memo = {}, {}
_sum_memo, _neg_memo, _prod_memo = {}, {}, {}
_value_memo = {}
_MEMOS = (_ge_memo, _le_memo, _sum_memo, _neg_memo, _prod_memo, _value_memo)


def _charge():
    # forms and cached sums/products both count against the budget
    if len(_table) + len(_sum_memo) + len(_prod_memo) >= limits.node_budget:
        raise ResourceLimit(f"more than {limits.node_budget} game nodes")


def make_form(left=(), right=()):
    left, right = frozenset(left), frozenset(right)
    key = (frozenset(g._id for g in left), frozenset(g._id for g in right))
    g = _table.get(key)
    if g is not None:
        return g
    with _lock:
        g = _table.get(key)
        if g is None:
            _charge()
            g = GameForm.__new__(GameForm)
            g.left, g.right = left, right
            g._id = next(_ids)
            _table[key] = g
    return g


ZERO = make_form()
ONE = make_form([ZERO])
NEG_ONE = make_form((), [ZERO])
STAR = make_form([ZERO], [ZERO])
TWO = make_form([ONE])
UP = make_form([ZERO], [STAR])
DOWN = make_form([STAR], [ZERO])

_NAMES = {"0": ZERO, "1": ONE, "-1": NEG_ONE, "*": STAR, "^": UP, "v": DOWN}
_NAME_OF = {g._id: name for name, g in _NAMES.items()}


def clear_caches():
    """Forget all memoised results and interned forms except the named ones."""
    with _lock:
        for memo in _MEMOS:
            memo.clear()
        _surreal_memo.clear()
        _table.clear()
        for g in (ZERO, ONE, NEG_ONE, STAR, TWO, UP, DOWN):
            _table[(frozenset(x._id for x in g.left), frozenset(x._id for x in g.right))] = g


def ge_zero(g):
    """G >= 0: no right option is <= 0."""
    r = _ge_memo.get(g._id)
    if r is None:
        r = not any(le_zero(x) for x in g.right)
        _ge_memo[g._id] = r
    return r


def le_zero(g):
    """G <= 0: no left option is >= 0."""
    r = _le_memo.get(g._id)
    if r is None:
        r = not any(ge_zero(x) for x in g.left)
        _le_memo[g._id] = r
    return r


def outcome(g):
    ge, le = ge_zero(g), le_zero(g)
    if ge and le:
        return Outcome.ZERO
    if ge:
        return Outcome.POSITIVE
    if le:
        return Outcome.NEGATIVE
    return Outcome.FUZZY


def game_sum(g, h):
    key = (g._id, h._id) if g._id <= h._id else (h._id, g._id)
    r = _sum_memo.get(key)
    if r is None:
        _charge()
        r = make_form([game_sum(x, h) for x in g.left] + [game_sum(g, y) for y in h.left],
                      [game_sum(x, h) for x in g.right] + [game_sum(g, y) for y in h.right])
        _sum_memo[key] = r
    return r


def negate(g):
    r = _neg_memo.get(g._id)
    if r is None:
        r = make_form([negate(x) for x in g.right], [negate(x) for x in g.left])
        _neg_memo[g._id] = r
    return r


def opposite(g):
    """Swap the option sets at the top level only."""
    return make_form(g.right, g.left)


def product(g, h):
    key = (g._id, h._id) if g._id <= h._id else (h._id, g._id)
    r = _prod_memo.get(key)
    if r is not None:
        return r
    _charge()

    def term(a, b):
        # G*b + a*H - a*b
        return game_sum(game_sum(product(g, b), product(a, h)), negate(product(a, b)))

    left = [term(a, b) for a in g.left for b in h.left]
    left += [term(a, b) for a in g.right for b in h.right]
    right = [term(a, b) for a in g.right for b in h.left]
    right += [term(a, b) for a in g.left for b in h.right]
    r = make_form(left, right)
    _prod_memo[key] = r
    return r


def arith(op, g, h=None):
    if op == "sum":
        return game_sum(g, h)
    if op == "negate":
        return negate(g)
    if op == "opposite":
        return opposite(g)
    if op == "product":
        return product(g, h)
    raise ValueError(f"unknown operation {op!r}")


def compare_games(g, h):
    o = outcome(game_sum(g, negate(h)))
    return {Outcome.ZERO: GameOrder.EQUIVALENT, Outcome.POSITIVE: GameOrder.GREATER,
            Outcome.NEGATIVE: GameOrder.LESS, Outcome.FUZZY: GameOrder.CONFUSED}[o]


# -- numbers ------------------------------------------------------------------------

def simplest_between(left=(), right=()):
    """The number of least birthday strictly between max(left) and min(right)."""
    lo = max((_as_fraction(v) for v in left), default=None)
    hi = min((_as_fraction(v) for v in right), default=None)
    if lo is not None and hi is not None and not lo < hi:
        raise EmptyIntervalViolation(f"{lo} is not below {hi}")
    return Dyadic.from_fraction(_simplest(lo, hi))


def _simplest(lo, hi):
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if hi is not None and hi <= 0:
        return -_simplest(-hi, None if lo is None else -lo)
    n = floor(lo) + 1
    if hi is None or n < hi:
        return Fraction(n)
    k = 1
    while True:
        m = floor(lo * 2**k) + 1
        if Fraction(m, 2**k) < hi:
            return Fraction(m, 2**k)
        k += 1


def _as_fraction(v):
    return v.to_fraction() if isinstance(v, Dyadic) else Fraction(v)


def _value(g):
    r = _value_memo.get(g._id)
    if r is None:
        try:
            lefts = [_value(x) for x in g.left]
            rights = [_value(x) for x in g.right]
            lo = max(lefts, default=None)
            hi = min(rights, default=None)
            if lo is not None and hi is not None and not lo < hi:
                raise NotANumber(f"left option {lo} is not below right option {hi}")
            r = _simplest(lo, hi)
        except NotANumber as exc:
            r = exc
        _value_memo[g._id] = r
    if isinstance(r, NotANumber):
        raise NotANumber(*r.args)
    return r


def is_number_form(g):
    try:
        _value(g)
    except NotANumber:
        return False
    return True


def value(g):
    return Dyadic.from_fraction(_value(g))


_surreal_memo = {}


def from_surreal(x):
    """The game of a short number, built from its canonical cut."""
    g = _surreal_memo.get(x)
    if g is None:
        left, right = canonical_cut(x)
        g = make_form([from_surreal(y) for y in left], [from_surreal(y) for y in right])
        _surreal_memo[x] = g
    return g


def from_rational(r):
    from .conway_real import from_rational as word_of
    return from_surreal(word_of(r))


def imbed_pure(kind, s):
    memo = {}

    def go(t):
        g = memo.get(t)
        if g is None:
            opts = [go(c) for c in t.children]
            if kind == "left":
                g = make_form(opts, ())
            elif kind == "right":
                g = make_form((), opts)
            elif kind == "diagonal":
                g = make_form(opts, opts)
            else:
                raise ValueError(f"unknown imbedding {kind!r}")
            memo[t] = g
        return g

    return go(s)


def forms_of_rank(n):
    """All forms whose options are forms of rank below n-1 (n=3 gives 256)."""
    level = [ZERO]
    for _ in range(n - 1):
        subsets = _subsets(level)
        level = [make_form(a, b) for a in subsets for b in subsets]
    return level


def _subsets(items):
    out = [()]
    for it in items:
        out += [s + (it,) for s in out]
    return out


# -- text form -------------------------------------------------------------------

def format_game(g):
    name = _NAME_OF.get(g._id)
    if name is not None:
        return name
    left = ",".join(sorted(format_game(x) for x in g.left))
    right = ",".join(sorted(format_game(x) for x in g.right))
    return f"[{left}|{right}]"


def parse_game(text, start=0, whole=True):
    i = start
    n = len(text)

    def skip():
        nonlocal i
        while i < n and text[i] == " ":
            i += 1

    def expect(ch):
        nonlocal i
        skip()
        if i >= n or text[i] != ch:
            raise ParseError(i, f"expected '{ch}'")
        i += 1

    def options(stop):
        nonlocal i
        out = []
        skip()
        if i < n and text[i] == stop:
            return out
        while True:
            out.append(item())
            skip()
            if i < n and text[i] == ",":
                i += 1
                continue
            return out

    def item():
        nonlocal i
        skip()
        if i < n and text[i] == "[":
            i += 1
            left = options("|")
            expect("|")
            right = options("]")
            expect("]")
            return make_form(left, right)
        for name in ("-1", "0", "1", "*", "^", "v"):
            if text.startswith(name, i):
                i += len(name)
                return _NAMES[name]
        raise ParseError(i, "expected a game")

    g = item()
    if whole:
        skip()
        if i != n:
            raise ParseError(i, "unexpected character")
        return g
    return g, i
