"""Sign words: run-length encoded transfinite sign expansions.

A word is a tuple of segments.  ``Run(sign, length)`` is a constant block of
ordinal length; ``Rep(body)`` is a finite sign tuple repeated omega times.
Words are canonicalised on construction so that equal numbers have equal
segment tuples:

* empty runs are dropped and adjacent runs of one sign merged;
* Rep bodies are primitive, and a one-sign body becomes a run of length w;
* a Rep is rotated backwards while the sign just before it equals the last
  sign of its body (so ``+(-+)^w`` is stored as ``(+-)^w``).
"""

from dataclasses import dataclass

from ..errors import EmptySet, ParseError, ResourceLimit
from ..ordinal import OMEGA, ZERO, Ordinal, as_ordinal, cmp, format_ordinal, left_sub, nat
from ..ordinal import _OrdinalParser

PLUS, MINUS = 1, -1
MAX_SEGMENTS = 100_000


@dataclass(frozen=True)
class Run:
    sign: int
    length: Ordinal

    @property
    def size(self):
        return self.length


@dataclass(frozen=True)
class Rep:
    body: tuple

    @property
    def size(self):
        return OMEGA


def _primitive(body):
    n = len(body)
    for d in range(1, n + 1):
        if n % d == 0 and body == body[:d] * (n // d):
            return body[:d]
    return body


def _pred(a):
    """Predecessor of a successor ordinal."""
    k = a.finite_part()
    if a.is_finite():
        return nat(k - 1)
    head = a.terms[:-1]
    return Ordinal(head + (((ZERO, k - 1),) if k > 1 else ()))


def canonical(segments):
    out = []
    for seg in segments:
        if isinstance(seg, Rep):
            body = _primitive(tuple(seg.body))
            if not body:
                continue
            if len(body) > 1:
                while (out and isinstance(out[-1], Run) and out[-1].sign == body[-1]
                       and out[-1].length.is_successor()):
                    prev = out.pop()
                    rest = _pred(prev.length)
                    if not rest.is_zero():
                        out.append(Run(prev.sign, rest))
                    body = body[-1:] + body[:-1]
                out.append(Rep(body))
                continue
            seg = Run(body[0], OMEGA)
        if seg.sign not in (PLUS, MINUS):
            raise ValueError(f"bad sign {seg.sign!r}")
        if seg.length.is_zero():
            continue
        if out and isinstance(out[-1], Run) and out[-1].sign == seg.sign:
            out[-1] = Run(seg.sign, out[-1].length + seg.length)
        else:
            out.append(seg)
    if len(out) > MAX_SEGMENTS:
        raise ResourceLimit(f"word with more than {MAX_SEGMENTS} segments")
    return tuple(out)


class SignWord:
    """A surreal number given by its sign expansion."""

    __slots__ = ("segments", "_birthday", "_hash")

    def __init__(self, segments=()):
        self.segments = canonical(segments)
        b = ZERO
        for seg in self.segments:
            b = b + seg.size
        self._birthday = b
        self._hash = hash(self.segments)

    @classmethod
    def from_signs(cls, signs):
        """Finite word from a string such as ``"+-+"`` or a sequence of +1/-1."""
        return cls(Run(_sign(s), nat(1)) for s in signs)

    @property
    def birthday(self):
        return self._birthday

    def is_short(self):
        return self._birthday.is_finite()

    def has_rep(self):
        return any(isinstance(s, Rep) for s in self.segments)

    def signs(self):
        """The signs of a finite-birthday word as a tuple of +1/-1."""
        if not self.is_short():
            raise ValueError("word has infinite birthday")
        out = []
        for seg in self.segments:
            out.extend([seg.sign] * int(seg.length))
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, SignWord):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        from .order import compare
        return compare(self, other) < 0

    def __le__(self, other):
        from .order import compare
        return compare(self, other) <= 0

    def __gt__(self, other):
        from .order import compare
        return compare(self, other) > 0

    def __ge__(self, other):
        from .order import compare
        return compare(self, other) >= 0

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"SignWord('{format_word(self)}')"


def _sign(s):
    if s in ("+", PLUS):
        return PLUS
    if s in ("-", "−", MINUS):
        return MINUS
    raise ValueError(f"bad sign {s!r}")


EMPTY_WORD = SignWord()


def ordinal_word(a):
    """alpha_Co: the ordinal a as a number, i.e. a plusses."""
    return SignWord([Run(PLUS, as_ordinal(a))])


def from_ordinal_set(elements):
    elems = sorted({as_ordinal(e) for e in elements})
    if not elems:
        raise EmptySet("the empty set is not a number")
    segs = []
    pos = ZERO
    for e in elems[:-1]:
        if cmp(pos, e) < 0:
            segs.append(Run(MINUS, left_sub(pos, e)))
        segs.append(Run(PLUS, nat(1)))
        pos = e + 1
    top = elems[-1]
    if cmp(pos, top) < 0:
        segs.append(Run(MINUS, left_sub(pos, top)))
    return SignWord(segs)


def to_ordinal_set(word):
    """Elements of the number as a set of ordinals (plus positions and the birthday)."""
    out = set()
    pos = ZERO
    for seg in word.segments:
        if isinstance(seg, Rep) or (seg.sign == PLUS and not seg.length.is_finite()):
            raise ValueError("number has infinitely many elements")
        if seg.sign == PLUS:
            for k in range(int(seg.length)):
                out.add(pos + k)
        pos = pos + seg.length
    out.add(pos)
    return frozenset(out)


# -- text form -----------------------------------------------------------------

_SPELL_OUT = 8


def _fmt_len(ch, length):
    if length.is_finite() and int(length) <= _SPELL_OUT:
        return ch * int(length)
    text = format_ordinal(length)
    if text.isdigit() or text == "w":
        return f"{ch}^{text}"
    return f"{ch}^({text})"


def format_word(word):
    if not word.segments:
        return "0"
    parts = []
    for seg in word.segments:
        if isinstance(seg, Run):
            parts.append(_fmt_len("+" if seg.sign == PLUS else "-", seg.length))
        else:
            parts.append("(" + "".join("+" if s == PLUS else "-" for s in seg.body) + ")^w")
    return "".join(parts)


def parse_word(text, start=0, whole=True):
    """Parse a sign word, the literal ``0``, or an ordinal-set literal ``{2,3,5}``."""
    i = start
    n = len(text)
    while i < n and text[i] == " ":
        i += 1
    if i < n and text[i] == "{":
        value, i = _parse_set(text, i)
    elif i < n and text[i] == "0":
        value, i = EMPTY_WORD, i + 1
    else:
        segs = []
        p = _OrdinalParser(text, i)
        while p.i < n and text[p.i] in "+-−(":
            ch = text[p.i]
            if ch == "(":
                j = p.i + 1
                body = []
                while j < n and text[j] in "+-−":
                    body.append(_sign(text[j]))
                    j += 1
                if not body or j >= n or text[j] != ")":
                    raise ParseError(j, "expected a finite sign block")
                if text[j + 1:j + 3] not in ("^w", "^ω"):
                    raise ParseError(j + 1, "expected '^w'")
                p.i = j + 3
                segs.append(Rep(tuple(body)))
                continue
            p.i += 1
            length = nat(1)
            if p.i < n and text[p.i] == "^":
                p.i += 1
                length = p.atom()
            segs.append(Run(_sign(ch), length))
        if p.i == i:
            raise ParseError(i, "expected a number")
        value, i = SignWord(segs), p.i
    if whole:
        while i < n and text[i] == " ":
            i += 1
        if i != n:
            raise ParseError(i, "unexpected character")
        return value
    return value, i


def _parse_set(text, i):
    from ..ordinal import parse_ordinal
    assert text[i] == "{"
    i += 1
    elems = []
    while True:
        while i < len(text) and text[i] == " ":
            i += 1
        if text.startswith("...", i) or text.startswith("…", i):
            raise ParseError(i, "ellipsis is ambiguous; use word syntax")
        e, i = parse_ordinal(text, i, whole=False)
        elems.append(e)
        while i < len(text) and text[i] == " ":
            i += 1
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        if i < len(text) and text[i] == "}":
            return from_ordinal_set(elems), i + 1
        raise ParseError(i, "expected ',' or '}'")
