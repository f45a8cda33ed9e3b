"""Command-line front end.

    surreal-engine cmp {1,2} {0,2}
    surreal-engine --repl

Game literals use square brackets, ``[L|R]`` for Conway's {L|R}, because
braces already denote sets of ordinals.
"""

import argparse
import json
import sys

from . import game, impartial
from .config import limits
from .conway_real import format_rational, from_rational, parse_rational, prefix_repetitor, to_rational
from .errors import EngineError, ParseError, ResourceLimit
from .ordinal import format_ordinal, hessenberg_add, hessenberg_mul, mex, parse_ordinal
from .surreal import cantor_word, compare, format_word, parse_word, quanta, to_ordinal_set
from .surreal.arith import children
from .surreal.word import EMPTY_WORD


# -- tokens --------------------------------------------------------------------

def _tokens(line):
    """(start, end) spans of whitespace-separated tokens; brackets may hold spaces."""
    spans = []
    depth = 0
    i, n = 0, len(line)
    start = None
    while i < n:
        ch = line[i]
        if ch in "{[(":
            depth += 1
        elif ch in "}])":
            depth -= 1
        if ch.isspace() and depth <= 0:
            if start is not None:
                spans.append((start, i))
                start = None
        elif start is None:
            start = i
        i += 1
    if start is not None:
        spans.append((start, n))
    return spans


def _literal(parser):
    def parse(line, span):
        value, end = parser(line[:span[1]], span[0], whole=False)
        if end != span[1]:
            raise ParseError(end, "unexpected character")
        return value
    return parse


def _natural(line, span):
    text = line[span[0]:span[1]]
    if not text.isdigit():
        raise ParseError(span[0], "expected a natural number")
    return int(text)


def _choice(*names):
    def parse(line, span):
        text = line[span[0]:span[1]]
        if text not in names:
            raise ParseError(span[0], "expected one of " + ", ".join(names))
        return text
    return parse


WORD = _literal(parse_word)
ORD = _literal(parse_ordinal)
RAT = _literal(parse_rational)
SET = _literal(impartial.parse_pureset)
GAME = _literal(game.parse_game)


# -- verbs ---------------------------------------------------------------------

def _cmp(x, y):
    return "<=>"[compare(x, y) + 1]


def _quanta(x):
    q = quanta(x)
    sign = {1: "+", -1: "-", 0: "0"}[q.sign]
    return (f"birthday={format_ordinal(q.birthday)} tip={format_ordinal(q.tip)} "
            f"integer_part={format_word(q.integer_part)} sign={sign} "
            f"width={format_ordinal(q.width)} class={q.infinite_class}")


def _grundy(s):
    return format_ordinal(impartial.grundy(s))


def _niminv(a):
    return str(impartial.nim_inv(a))


def _prefixrep(x):
    prefix, rep = prefix_repetitor(x)
    return f"{format_word(prefix)} {'-' if rep is None else format_word(rep)}"


_GCMP = {"less": "<", "greater": ">", "equivalent": "=", "confused": "||"}

VERBS = {
    "cmp": ([WORD, WORD], _cmp),
    "quanta": ([WORD], _quanta),
    "concat": ([WORD, WORD], lambda x, y: format_word(cantor_word("concat", x, y))),
    "omul": ([WORD, WORD], lambda x, y: format_word(cantor_word("mul", x, y))),
    "opow": ([WORD, WORD], lambda x, y: format_word(cantor_word("pow", x, y))),
    "hsum": ([ORD, ORD], lambda a, b: format_ordinal(hessenberg_add(a, b))),
    "hprod": ([ORD, ORD], lambda a, b: format_ordinal(hessenberg_mul(a, b))),
    "mex": (ORD, lambda *xs: format_ordinal(mex(xs))),
    "real": ([WORD], lambda x: format_rational(to_rational(x))),
    "surreal": ([RAT], lambda r: format_word(from_rational(r))),
    "prefixrep": ([WORD], _prefixrep),
    "grundy": ([SET], _grundy),
    "classify": ([SET], lambda s: str(impartial.classify(s))),
    "starsum": ([_choice("s1", "s2", "s3", "s4", "s5"), SET, SET],
                lambda k, f, g: impartial.format_pureset(impartial.star_sum(k, f, g))),
    "nimadd": ([_natural, _natural], lambda a, b: str(impartial.nim_add(a, b))),
    "nimmul": ([_natural, _natural], lambda a, b: str(impartial.nim_mul(a, b))),
    "niminv": ([_natural], _niminv),
    "outcome": ([GAME], lambda g: str(game.outcome(g))),
    "value": ([GAME], lambda g: str(game.value(g))),
    "gsum": ([GAME, GAME], lambda g, h: game.format_game(game.game_sum(g, h))),
    "gprod": ([GAME, GAME], lambda g, h: game.format_game(game.product(g, h))),
    "gcmp": ([GAME, GAME], lambda g, h: _GCMP[game.compare_games(g, h).value]),
    "embed": ([_choice("left", "right", "diagonal"), SET],
              lambda k, s: game.format_game(game.imbed_pure(k, s))),
    "tree": ([_natural, _choice("signs", "sets", "rationals"), _choice("ascii", "dot")],
             lambda d, lab, fmt: render_tree(d, fmt, lab)),
    "stage": ([_natural, _choice("signs", "sets", "rationals")],
              lambda d, lab: " ".join(format_word(x) if lab == "signs" else label(x, lab)
                                      for x in stage(d))),
}

_DEFAULTS = {"tree": ["signs", "ascii"], "stage": ["signs"]}


def parse_eval(line):
    """Run one command line and return its output line (exceptions propagate)."""
    spans = _tokens(line)
    if not spans:
        raise ParseError(0, "empty command")
    verb = line[spans[0][0]:spans[0][1]]
    if verb not in VERBS:
        raise ParseError(spans[0][0], f"unknown command {verb!r}")
    kinds, fn = VERBS[verb]
    args = spans[1:]
    if isinstance(kinds, list):
        defaults = _DEFAULTS.get(verb, [])
        short = len(kinds) - len(args)
        if short < 0 or short > len(defaults):
            pos = spans[len(kinds) + 1][0] if short < 0 else len(line)
            raise ParseError(pos, f"{verb} takes {len(kinds)} arguments")
        values = [k(line, s) for k, s in zip(kinds, args)]
        values += defaults[len(defaults) - short:]
    else:
        values = [kinds(line, s) for s in args]
    return fn(*values)


# -- number tree ------------------------------------------------------------------

def stage(depth):
    """The 2**depth - 1 numbers born before day ``depth``, in increasing order."""
    if depth > limits.max_tree_depth:
        raise ResourceLimit(f"tree depth {depth} exceeds {limits.max_tree_depth}")
    out = []

    def walk(x, d):
        if d == depth:
            return
        left, right = children(x)
        walk(left, d + 1)
        out.append(x)
        walk(right, d + 1)

    walk(EMPTY_WORD, 0)
    return out


def label(x, labels, pad=0):
    if labels == "sets":
        return "{" + ",".join(str(e) for e in sorted(int(a) for a in to_ordinal_set(x))) + "}"
    if labels == "rationals":
        return format_rational(to_rational(x))
    signs = "".join("+" if s > 0 else "-" for s in x.signs())
    return signs.ljust(pad, "0")


def tree_rows(depth, labels="signs", pad=False):
    """Labels row by row from the root; each row left to right."""
    width = max(depth - 1, 0) if pad else 0
    rows = [[EMPTY_WORD]] if depth else []
    for _ in range(depth - 1):
        rows.append([c for x in rows[-1] for c in children(x)])
    stage(depth)   # depth check
    return [[label(x, labels, width) for x in row] for row in rows]


def render_tree(depth, format="ascii", labels="signs"):
    rows = tree_rows(depth, labels, pad=format == "ascii" and labels == "signs")
    if format == "dot":
        lines = ["digraph NO {"]
        for r, row in enumerate(rows):
            for k, text in enumerate(row):
                lines.append(f'  n{r}_{k} [label="{text}"];')
                if r:
                    lines.append(f"  n{r - 1}_{k // 2} -> n{r}_{k};")
        lines.append("}")
        return "\n".join(lines)
    if format != "ascii":
        raise ValueError(f"unknown format {format!r}")
    cell = max((len(t) for row in rows for t in row), default=0) + 2
    total = cell * 2 ** max(depth - 1, 0)
    lines = []
    for r, row in enumerate(rows):
        slot = total // len(row)
        lines.append("".join(t.center(slot) for t in row).rstrip())
    return "\n".join(lines)


# -- entry point --------------------------------------------------------------------

def _emit(text, fmt):
    if fmt == "json":
        text = json.dumps({"result": text}, ensure_ascii=False)
    sys.stdout.write(text + "\n")


def run_line(line, fmt="text"):
    """Execute one line, print its output, and return the exit status."""
    try:
        out = parse_eval(line)
    except ParseError as exc:
        print(f"parse error: {exc.position}", file=sys.stderr)
        return 1
    except EngineError as exc:
        print(f"domain error: {exc.code}", file=sys.stderr)
        return 2
    except RecursionError:
        print("domain error: ResourceLimit", file=sys.stderr)
        return 2
    _emit(out, fmt)
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="surreal-engine",
        description="Exact surreal, ordinal, nimber and game arithmetic.",
        epilog="Game literals are written [L|R] (Conway's {L|R}); braces are "
               "sets of ordinals such as {2,3,5}; #n is the pure set with Ackermann code n.")
    ap.add_argument("--max-depth", type=int, default=limits.max_depth)
    ap.add_argument("--node-budget", type=int, default=limits.node_budget)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--repl", action="store_true")
    ap.add_argument("command", nargs=argparse.REMAINDER)
    ns = ap.parse_args(argv)
    limits.max_depth = ns.max_depth
    limits.node_budget = ns.node_budget
    sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    if ns.repl:
        status = 0
        for line in sys.stdin:
            line = line.strip()
            if line:
                status = run_line(line, ns.format)
                sys.stdout.flush()
        return status
    if not ns.command:
        ap.print_usage(sys.stderr)
        return 1
    return run_line(" ".join(ns.command), ns.format)


if __name__ == "__main__":
    sys.exit(main())
