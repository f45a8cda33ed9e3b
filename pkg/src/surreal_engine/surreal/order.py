"""Total order, tree order, truncation and chain limits on sign words."""

from math import lcm

from ..errors import EqualInputs, NotAChain
from ..ordinal import OMEGA, ZERO, as_ordinal, cmp, left_sub, nat
from .word import PLUS, Rep, Run, SignWord


def _first_sign(piece):
    return piece[1] if piece[0] == "run" else piece[1][0]


def first_difference(x, y):
    """None if x == y, else (delta, sign of x at delta, sign of y at delta).

    A sign of 0 means the word has ended (delta is its birthday).
    """
    xs = [["run", s.sign, s.length] if isinstance(s, Run) else ["rep", s.body] for s in x.segments]
    ys = [["run", s.sign, s.length] if isinstance(s, Run) else ["rep", s.body] for s in y.segments]
    i = j = 0
    pos = ZERO
    while True:
        a = xs[i] if i < len(xs) else None
        b = ys[j] if j < len(ys) else None
        if a is None and b is None:
            return None
        if a is None:
            return pos, 0, _first_sign(b)
        if b is None:
            return pos, _first_sign(a), 0
        if a[0] == "run" and b[0] == "run":
            if a[1] != b[1]:
                return pos, a[1], b[1]
            m = a[2] if cmp(a[2], b[2]) <= 0 else b[2]
            pos = pos + m
            a[2] = left_sub(m, a[2])
            b[2] = left_sub(m, b[2])
            if a[2].is_zero():
                i += 1
            if b[2].is_zero():
                j += 1
        elif a[0] == "rep" and b[0] == "rep":
            p, q = a[1], b[1]
            for k in range(lcm(len(p), len(q))):
                if p[k % len(p)] != q[k % len(q)]:
                    return pos + k, p[k % len(p)], q[k % len(q)]
            pos = pos + OMEGA
            i += 1
            j += 1
        else:
            run, rep = (a, b) if a[0] == "run" else (b, a)
            body = rep[1]
            steps = len(body)
            if run[2].is_finite():
                steps = min(steps, int(run[2]))
            for k in range(steps):
                if body[k] != run[1]:
                    if run is a:
                        return pos + k, run[1], body[k]
                    return pos + k, body[k], run[1]
            # the whole (finite, shorter than the period) run matched
            pos = pos + steps
            rep[1] = body[steps:] + body[:steps]
            if run is a:
                i += 1
            else:
                j += 1


def compare(x, y):
    """-1, 0 or 1 in the lexicographic order with - < (absent) < +."""
    d = first_difference(x, y)
    if d is None:
        return 0
    return -1 if d[1] < d[2] else 1


def discriminant(x, y):
    d = first_difference(x, y)
    if d is None:
        raise EqualInputs("a number does not discriminate against itself")
    return d[0]


def sign_at(x, a):
    """+1, -1, or 0 when a is at or beyond the birthday."""
    a = as_ordinal(a)
    pos = ZERO
    for seg in x.segments:
        end = pos + seg.size
        if cmp(a, end) < 0:
            if isinstance(seg, Run):
                return seg.sign
            k = int(left_sub(pos, a))
            return seg.body[k % len(seg.body)]
        pos = end
    return 0


def split(x, a):
    """(prefix, suffix) segment lists of x cut at position a."""
    a = as_ordinal(a)
    segs = x.segments
    pos = ZERO
    for idx, seg in enumerate(segs):
        end = pos + seg.size
        if cmp(a, end) < 0:
            off = left_sub(pos, a)
            if isinstance(seg, Run):
                head = [Run(seg.sign, off)]
                tail = [Run(seg.sign, left_sub(off, seg.length))]
            else:
                k = int(off)
                body = seg.body
                head = [Run(body[t % len(body)], nat(1)) for t in range(k)]
                r = k % len(body)
                tail = [Rep(body[r:] + body[:r])]
            return list(segs[:idx]) + head, tail + list(segs[idx + 1:])
        pos = end
    return list(segs), []


def truncate(x, a):
    """[x]_a: x itself if its birthday is at most a, else the prefix of length a."""
    a = as_ordinal(a)
    if cmp(x.birthday, a) <= 0:
        return x
    return SignWord(split(x, a)[0])


def tail(x, a):
    """The word u with x = [x]_a followed by u (empty if a >= birthday)."""
    return SignWord(split(x, a)[1])


def plus(x):
    return SignWord(x.segments + (Run(PLUS, nat(1)),))


def minus(x):
    return SignWord(x.segments + (Run(-PLUS, nat(1)),))


class TreeRelation:
    __slots__ = ("descends", "initial")

    def __init__(self, descends, initial):
        self.descends = descends
        self.initial = initial

    def __repr__(self):
        return f"TreeRelation(descends={self.descends}, initial={self.initial})"


def tree_relate(x, y):
    """x descends-into y (x is an ancestor-or-equal of y) and x is an initial part of y."""
    d = first_difference(x, y)
    if d is None:
        return TreeRelation(True, True)
    descends = d[1] == 0
    return TreeRelation(descends, descends and d[2] == PLUS)


def is_ancestor(x, y):
    return tree_relate(x, y).descends


def yca(x, y):
    """Youngest common ancestor."""
    return truncate(x, discriminant(x, y))


def limit_of_chain(chain):
    """Limit of a finite ascending chain in the tree order."""
    chain = list(chain)
    if not chain:
        return SignWord()
    for a, b in zip(chain, chain[1:]):
        if not is_ancestor(a, b):
            raise NotAChain(f"{a} is not an ancestor of {b}")
    return chain[-1]


def limit_of_periodic_chain(stem, period):
    """Limit of an omega-chain that continues ``stem`` by appending the signs
    of ``period`` cyclically, one per step."""
    stem = list(stem)
    limit_of_chain(stem)
    base = stem[-1] if stem else SignWord()
    body = tuple(PLUS if s in ("+", PLUS) else -PLUS for s in period)
    if not body:
        return base
    return SignWord(base.segments + (Rep(body),))


def truncation_chain(x):
    """All truncations [x]_0, [x]_1, ..., x of a finite-birthday word."""
    return [truncate(x, nat(k)) for k in range(int(x.birthday) + 1)]
