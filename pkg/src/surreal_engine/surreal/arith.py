"""Operations on sign words: involutions, Cantor-style arithmetic, the
omega map, quanta, decompositions and canonical cuts."""

from dataclasses import dataclass
from typing import Optional

from ..errors import TransfiniteUnsupported, UnsupportedRep
from ..ordinal import (OMEGA, ZERO, Ordinal, cantor_mul, cantor_pow, cmp,
                       div_rem_left, nat, omega_power)
from .order import compare, first_difference, sign_at, split, tail, truncate
from .word import EMPTY_WORD, MINUS, PLUS, Rep, Run, SignWord, _pred, ordinal_word

ONE_WORD = ordinal_word(1)


# -- involutions ----------------------------------------------------------------

def sharp(x):
    """The opposite: every sign flipped."""
    return SignWord(Run(-s.sign, s.length) if isinstance(s, Run) else Rep(tuple(-t for t in s.body))
                    for s in x.segments)


def star(x):
    """Pseudo-inverse: keep position 0 and the birthday, flip the rest."""
    if x.birthday.is_zero():
        return x
    first = Run(sign_at(x, ZERO), nat(1))
    return SignWord((first,) + sharp(tail(x, nat(1))).segments)


def involution(kind, x):
    if kind == "sharp":
        return sharp(x)
    if kind == "star":
        return star(x)
    raise ValueError(f"unknown involution {kind!r}")


# -- Cantor-style arithmetic ---------------------------------------------------

def concat(x, y):
    return SignWord(x.segments + y.segments)


def _flat(word):
    return word.signs()


def repeat(x, count):
    """x juxtaposed with itself ``count`` (an ordinal) times."""
    if count.is_zero() or x.birthday.is_zero():
        return EMPTY_WORD
    if len(x.segments) == 1 and isinstance(x.segments[0], Run):
        run = x.segments[0]
        return SignWord([Run(run.sign, cantor_mul(run.length, count))])
    q, n = div_rem_left(count, OMEGA)
    segs = []
    if not q.is_zero():
        if not x.is_short() or not q.is_finite():
            raise UnsupportedRep(f"{x} repeated {count} times is not eventually periodic")
        segs.extend([Rep(_flat(x))] * int(q))
    segs.extend(x.segments * n)
    return SignWord(segs)


def _blocks(x, y):
    """x (for +) or its opposite (for -) juxtaposed along the signs of y."""
    xs = sharp(x)
    segs = []
    for seg in y.segments:
        if isinstance(seg, Run):
            segs.extend(repeat(x if seg.sign == PLUS else xs, seg.length).segments)
        else:
            if x.birthday.is_zero():
                continue
            if not x.is_short():
                raise UnsupportedRep("periodic pattern of transfinite blocks")
            fx, fs = _flat(x), _flat(xs)
            body = []
            for s in seg.body:
                body.extend(fx if s == PLUS else fs)
            segs.append(Rep(tuple(body)))
    return SignWord(segs)


def mul(x, y):
    return _blocks(x, y)


def _word_power(f, count):
    """f multiplied by itself ``count`` times (count finite)."""
    result, base = ONE_WORD, f
    while count:
        if count & 1:
            result = mul(result, base)
        count >>= 1
        if count:
            base = mul(base, base)
    return result


def _is_plus_run(w):
    return len(w.segments) == 1 and isinstance(w.segments[0], Run) and w.segments[0].sign == PLUS


def power(x, y):
    """x ⊗⊗ y: product of factors x (for +) or x* (for -) along the signs of y."""
    xs = star(x)
    result = ONE_WORD
    for seg in y.segments:
        if isinstance(seg, Rep):
            raise UnsupportedRep("exponent with a periodic block")
        f = x if seg.sign == PLUS else xs
        if seg.length.is_finite():
            result = mul(result, _word_power(f, int(seg.length)))
        elif f.birthday.is_zero():
            result = EMPTY_WORD
        elif f == ONE_WORD:
            pass
        elif _is_plus_run(f):
            block = SignWord([Run(PLUS, cantor_pow(f.birthday, seg.length))])
            result = mul(result, block)
        else:
            raise UnsupportedRep(f"transfinite power of {f} has no finite description")
    return result


def cantor_word(op, x, y):
    if op == "concat":
        return concat(x, y)
    if op == "mul":
        return mul(x, y)
    if op == "pow":
        return power(x, y)
    raise ValueError(f"unknown operation {op!r}")


# -- omega map -------------------------------------------------------------------

def omega_map(x):
    """The monomial w^x (for words built from runs only)."""
    segs = [Run(PLUS, nat(1))]
    w = ZERO
    for seg in x.segments:
        if isinstance(seg, Rep):
            raise UnsupportedRep("omega map of a periodic word")
        if seg.sign == PLUS:
            w = w + seg.length
            segs.append(Run(PLUS, omega_power(w)))
        else:
            segs.append(Run(MINUS, cantor_mul(omega_power(w + 1), seg.length)))
    return SignWord(segs)


# -- quanta -------------------------------------------------------------------

def width(x):
    w = ZERO
    for seg in x.segments:
        if isinstance(seg, Rep):
            w = w + OMEGA
        elif seg.sign == PLUS:
            w = w + seg.length
    return w


def _expanded_runs(x):
    """(start, sign, length) of each maximal constant block; each Rep is
    unrolled for two periods, which is enough to see its first sign change."""
    pos = ZERO
    out = []
    for seg in x.segments:
        if isinstance(seg, Run):
            out.append((pos, seg.sign, seg.length))
            pos = pos + seg.length
        else:
            start = pos
            body = seg.body * 2
            k = 0
            while k < len(body):
                j = k
                while j < len(body) and body[j] == body[k]:
                    j += 1
                out.append((start + k, body[k], nat(j - k)))
                k = j
            return out
    return out


def tip(x):
    runs = _expanded_runs(x)
    for idx, (start, sign, length) in enumerate(runs):
        if sign != PLUS:
            continue
        if idx > 0 and runs[idx - 1][1] == MINUS and start.is_successor():
            return start
        if length.is_successor() and idx + 1 < len(runs) and runs[idx + 1][1] == MINUS:
            return start + _pred(length)
    return x.birthday


def sign(x):
    if x.birthday.is_zero():
        return 0
    return sign_at(x, ZERO)


def infinite_class(x):
    head = truncate(x, OMEGA)
    if head == _POS_INF:
        return "pos_infinite"
    if head == _NEG_INF:
        return "neg_infinite"
    if x.birthday.is_zero() or head == _EPS or head == _NEG_EPS:
        return "infinitesimal"
    return "finite"


_POS_INF = SignWord([Run(PLUS, OMEGA)])
_NEG_INF = SignWord([Run(MINUS, OMEGA)])
_EPS = SignWord([Run(PLUS, nat(1)), Run(MINUS, OMEGA)])
_NEG_EPS = SignWord([Run(MINUS, nat(1)), Run(PLUS, OMEGA)])


@dataclass(frozen=True)
class Quanta:
    birthday: Ordinal
    tip: Ordinal
    integer_part: SignWord
    sign: int
    width: Ordinal
    infinite_class: str


def quanta(x):
    t = tip(x)
    return Quanta(x.birthday, t, truncate(x, t), sign(x), width(x), infinite_class(x))


def integer_part(x):
    return truncate(x, tip(x))


def is_omnific(x):
    return tip(x) == x.birthday


# -- decompositions -----------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    omnific: Optional[tuple]
    int_frac: tuple


def decompose(x):
    t = tip(x)
    z = truncate(x, t)
    u = tail(x, t)
    omnific = None
    if t == x.birthday:
        q, n = div_rem_left(x.birthday, OMEGA)
        lam = cantor_mul(OMEGA, q)
        x_j = truncate(x, lam)
        in_x = lam == x.birthday or sign_at(x, lam) == PLUS
        rest = SignWord([Run(PLUS if in_x else MINUS, nat(n))]) if not n.is_zero() else EMPTY_WORD
        assert concat(x_j, rest) == x
        omnific = (x_j, rest)
    return Decomposition(omnific, (z, u))


# -- cuts -----------------------------------------------------------------------

def canonical_cut(x):
    """(left, right) truncations at the plus and minus positions, oldest first."""
    if not x.is_short():
        raise TransfiniteUnsupported("canonical cut of a number with infinite birthday")
    left, right = [], []
    for k, s in enumerate(x.signs()):
        (left if s == PLUS else right).append(truncate(x, nat(k)))
    return left, right


def children(x):
    return (concat(x, SignWord([Run(MINUS, nat(1))])), concat(x, ONE_WORD))


def lies_between(x, left, right):
    return all(compare(a, x) < 0 for a in left) and all(compare(x, b) < 0 for b in right)


__all__ = [
    "sharp", "star", "involution", "concat", "repeat", "mul", "power", "cantor_word",
    "omega_map", "width", "tip", "sign", "infinite_class", "Quanta", "quanta",
    "integer_part", "is_omnific", "Decomposition", "decompose", "canonical_cut",
    "children", "lies_between", "first_difference", "split",
]
