"""Acceptance criteria, one test each.  Every test prints a single
``criterion N: PASS|FAIL (...)`` line; the lines are repeated in the pytest
terminal summary and by ``python tests/test_acceptance.py``."""

import itertools
import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (cut_options, decode, dyadics_by_birthday, from_ord, membership_word, mex_nim_add,
                     mex_nim_mul, o1_product, o1_sum, ordinals_below, set_grundy, set_rank,
                     signs_to_rational, simplest_dyadic, to_ord)
from surreal_engine import cli, game, impartial
from surreal_engine.conway_real import from_rational, to_rational
from surreal_engine.errors import ResourceLimit
from surreal_engine.ordinal import (OMEGA, ONE, cantor_add, cantor_mul, hessenberg_add, hessenberg_mul,
                                    nat, omega_power)
from surreal_engine.surreal import (EMPTY_WORD, PLUS, Run, SignWord, Zon, compare, from_ordinal_set,
                                    is_ancestor, omega_map, parse_word, zon_to_word)

RESULTS = {}


class Check:
    """Collects failures for one criterion and reports them on one line."""

    def __init__(self, number, limit=None):
        self.number, self.limit = number, limit
        self.failures = []
        self.notes = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def expect(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __exit__(self, kind, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{type(exc).__name__}: {exc}")
        if self.limit is not None and elapsed > self.limit:
            self.failures.append(f"took {elapsed:.1f}s, limit {self.limit}s")
        status = "FAIL" if self.failures else "PASS"
        detail = "; ".join(self.failures[:3] + self.notes)
        line = f"criterion {self.number}: {status} ({elapsed:.2f}s{', ' + detail if detail else ''})"
        RESULTS[self.number] = line
        print(line)
        if self.failures:
            pytest.fail(line, pytrace=False)
        return True


def w(text):
    return parse_word(text)


def periodic(members, start, period):
    head = membership_word(members, start)
    body = membership_word(lambda k: members(start + k), period)
    return w(f"{head}({body})^w")


# -- 1, 2: the first pure sets -----------------------------------------------------

FIRST_SETS = {
    0: (0, []), 1: (1, [0]), 2: (2, [1]), 3: (2, [1, 0]),
    4: (3, [2]), 5: (3, [2, 0]), 6: (3, [2, 1]), 7: (3, [2, 1, 0]),
    8: (3, [3]), 9: (3, [3, 0]), 10: (3, [3, 1]), 11: (3, [3, 1, 0]),
    12: (3, [3, 2]), 13: (3, [3, 2, 0]), 14: (3, [3, 2, 1]), 15: (3, [3, 2, 1, 0]),
    16: (4, [4]),
}
FIRST_GRUNDY = [0, 1, 0, 2, 1, 1, 2, 2, 0, 1, 0, 3, 1, 1, 3, 3, 0]


def test_criterion_1():
    with Check(1, limit=1) as c:
        for code, (rank, members) in FIRST_SETS.items():
            s = impartial.ackermann(code)
            c.expect(impartial.rank(s) == rank, f"rank of {code}")
            c.expect(sorted((impartial.code_of(x) for x in s), reverse=True) == members, f"members of {code}")
            c.expect(frozenset(decode(m) for m in members) == decode(code) and set_rank(decode(code)) == rank,
                     f"oracle disagrees on {code}")


def test_criterion_2():
    with Check(2, limit=1) as c:
        for code, g in enumerate(FIRST_GRUNDY):
            s = impartial.ackermann(code)
            c.expect(impartial.grundy(s) == g == set_grundy(decode(code)), f"grundy of {code}")
            kind = impartial.OutcomeI.ZERO_TYPE if g == 0 else impartial.OutcomeI.FUZZY
            c.expect(impartial.classify(s) is kind, f"classify {code}")


# -- 3, 4: Conway reals ----------------------------------------------------------------

def test_criterion_3():
    with Check(3, limit=5) as c:
        pairs = [([1, 2], F(-1, 2)), ([0, 2], F(1, 2)), ([2, 3, 5, 7, 11], F(-43, 32))]
        pairs += [(range(1, n + 1), -F(1, 2 ** (n - 1))) for n in range(2, 12)]
        pairs += [([0, n], F(1, 2 ** (n - 1))) for n in range(2, 12)]
        for members, r in pairs:
            x = from_ordinal_set(members)
            got = to_rational(x)
            c.expect(got == r, f"{set(members)} gives {got}, expected {r}")
            c.expect(from_rational(r) == x, f"from_rational({r}) is not {set(members)}")
        for members, r in [(lambda k: k % 2 == 1, F(-2, 3)), (lambda k: k % 2 == 0, F(2, 3))]:
            x = periodic(members, 0, 2)
            c.expect(to_rational(x) == r and from_rational(r) == x, f"periodic {r}")
        examples = [(periodic(lambda k, m=m: k == 0 or (k >= m and (k - m) % 4 == 0), m, 4), v)
                    for m, v in [(2, F(8, 15)), (3, F(4, 15)), (4, F(2, 15)), (5, F(1, 15))]]
        examples.append((periodic(lambda k: k == 0 or (k >= 4 and k % 4 in (0, 1)), 4, 4), F(1, 5)))
        examples.append((periodic(lambda k: k in (0, 3) or (k >= 6 and k % 4 in (2, 3)), 6, 4), F(3, 10)))
        examples.append((periodic(lambda k: k % 2 == 0, 0, 2), F(2, 3)))
        for x, r in examples:
            c.expect(to_rational(x) == r and from_rational(r) == x, f"example {r}")
        # every numerator up to 512 over every denominator 2^a (2^b - 1), a, b <= 6
        dens = sorted({(1 << a) * ((1 << b) - 1) for a in range(7) for b in range(1, 7)})
        count = 0
        for den in dens:
            for num in range(-512, 513):
                r = F(num, den)
                count += 1
                if to_rational(from_rational(r)) != r:
                    c.expect(False, f"round trip {r}")
        rng = random.Random(3)
        for _ in range(40):
            r = F(rng.randrange(-512, 513), rng.randrange(1, 64 * 63 + 1))
            count += 1
            c.expect(to_rational(from_rational(r)) == r, f"round trip {r}")
        c.notes.append(f"{count} round trips")


def _random_real_word(rng):
    head = "".join(rng.choice("+-") for _ in range(rng.randrange(9)))
    if rng.random() < 0.4:
        return w(head or "0")
    while True:
        body = "".join(rng.choice("+-") for _ in range(rng.randrange(2, 6)))
        if len(set(body)) == 2:
            return w(f"{head}({body})^w")


def test_criterion_4():
    with Check(4) as c:
        rng = random.Random(4)
        bad = 0
        for _ in range(1000):
            x, y = _random_real_word(rng), _random_real_word(rng)
            rx, ry = to_rational(x), to_rational(y)
            bad += compare(x, y) != (rx > ry) - (rx < ry)
        c.expect(bad == 0, f"{bad} mismatches")


# -- 5, 6, 7: ordinals, nimbers, Grundy ----------------------------------------------------

def test_criterion_5():
    with Check(5) as c:
        W = OMEGA
        c.expect(cantor_add(ONE, W) == W, "1+w")
        c.expect(cantor_add(W, ONE) == W + 1, "w+1")
        c.expect(cantor_mul(nat(2), W) == W, "2w")
        c.expect(cantor_mul(W, nat(2)) == cantor_add(W, W), "w2")
        rng = random.Random(5)

        def rand():
            terms = {rng.randrange(4): rng.randrange(1, 4) for _ in range(rng.randrange(4))}
            a = nat(0)
            for e, k in sorted(terms.items()):
                a = cantor_add(omega_power(nat(e), k), a)
            return a

        for _ in range(500):
            a, b, d = rand(), rand(), rand()
            c.expect(cantor_add(cantor_add(a, b), d) == cantor_add(a, cantor_add(b, d)), "add assoc")
            c.expect(cantor_mul(cantor_mul(a, b), d) == cantor_mul(a, cantor_mul(b, d)), "mul assoc")
            c.expect(cantor_mul(a, cantor_add(b, d)) == cantor_add(cantor_mul(a, b), cantor_mul(a, d)),
                     "left distributivity")
        xs = ordinals_below(3, 4)
        for a in xs:
            for b in xs:
                A, B = to_ord(a), to_ord(b)
                c.expect(from_ord(hessenberg_add(A, B)) == o1_sum(a, b), f"hsum {a} {b}")
                c.expect(from_ord(hessenberg_mul(A, B)) == o1_product(a, b), f"hprod {a} {b}")


def test_criterion_6():
    with Check(6, limit=5) as c:
        add, mul = impartial.nim_add, impartial.nim_mul
        xs = range(16)
        for a in xs:
            c.expect(add(a, 0) == a and mul(a, 1) == a and add(a, a) == 0, f"identities at {a}")
            for b in xs:
                c.expect(add(a, b) == add(b, a) == mex_nim_add(a, b), f"add {a} {b}")
                c.expect(mul(a, b) == mul(b, a) == mex_nim_mul(a, b), f"mul {a} {b}")
                c.expect(add(a, b) < 16 and mul(a, b) < 16, "closure")
                for d in xs:
                    c.expect(add(add(a, b), d) == add(a, add(b, d)), "add assoc")
                    c.expect(mul(mul(a, b), d) == mul(a, mul(b, d)), "mul assoc")
                    c.expect(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)), "distributivity")
        for a in range(1, 16):
            inv = [b for b in xs if mul(a, b) == 1]
            c.expect(len(inv) == 1 and impartial.nim_inv(a) == inv[0], f"inverse of {a}")


def test_criterion_7():
    with Check(7, limit=30) as c:
        bad = 0
        for a in range(64):
            for b in range(64):
                f, g = impartial.ackermann(a), impartial.ackermann(b)
                s = impartial.star_sum("s3", f, g)
                bad += impartial.grundy(s) != int(impartial.grundy(f)) ^ int(impartial.grundy(g))
        c.expect(bad == 0, f"{bad} mismatches")


# -- 8, 9: games ------------------------------------------------------------------------------

def test_criterion_8():
    with Check(8, limit=30) as c:
        O = game.Outcome
        rows = [(game.make_form(), O.ZERO), (game.make_form([game.ZERO]), O.POSITIVE),
                (game.make_form((), [game.ZERO]), O.NEGATIVE),
                (game.make_form([game.ZERO], [game.ZERO]), O.FUZZY),
                (game.make_form([game.ONE]), O.POSITIVE),
                (game.make_form([game.ZERO], [game.STAR]), O.POSITIVE),
                (game.make_form([game.STAR], [game.ZERO]), O.NEGATIVE)]
        for g, o in rows:
            c.expect(game.outcome(g) is o, f"row {g}")
        forms = game.forms_of_rank(3)
        c.expect(len(forms) == 256, "256 forms")
        for g in forms:
            ge, le = game.ge_zero(g), game.le_zero(g)
            c.expect([ge and le, ge and not le, le and not ge, not (ge or le)].count(True) == 1, f"class of {g}")
        rng = random.Random(8)
        for g in rng.sample(forms, 200):
            c.expect(game.outcome(game.game_sum(g, game.negate(g))) is O.ZERO, f"G+G# for {g}")


def test_criterion_9():
    with Check(9, limit=300) as c:
        words = ["".join(t) for k in range(9) for t in itertools.product("+-", repeat=k)]
        c.expect(len(words) == 511, "511 dyadics")
        for s in words:
            c.expect(game.value(game.from_surreal(w(s or "0"))) == signs_to_rational(s), f"value {s}")
        xs = dyadics_by_birthday(5)
        forms = {x: game.from_rational(x) for x in xs}
        for a in xs:
            for b in xs:
                c.expect(game.value(game.game_sum(forms[a], forms[b])) == a + b, f"sum {a} {b}")
        # products, youngest pairs first, until the node budget gives out
        pairs = sorted(itertools.product(xs, xs), key=lambda p: (_day(p[0]) + _day(p[1]), p))
        done = 0
        try:
            for a, b in pairs:
                c.expect(game.value(game.product(game.from_rational(a), game.from_rational(b))) == a * b,
                         f"product {a} {b}")
                done += 1
        except ResourceLimit:
            c.expect(False, f"product of {a} and {b} exceeds the node budget; "
                            f"{done} of {len(pairs)} products verified")
        finally:
            game.clear_caches()
        for s in [t for t in words if len(t) <= 4]:
            x = signs_to_rational(s)
            older = [signs_to_rational(t) for t in words if len(t) < len(s)]
            left, right = [v for v in older if v < x], [v for v in older if v > x]
            c.expect(game.simplest_between(left, right) == x, f"CD cut of {s}")
            lo, hi = ([signs_to_rational(t) for t in side] for side in cut_options(s))
            c.expect(game.simplest_between(lo, hi) == x == simplest_dyadic(max(lo, default=None),
                                                                           min(hi, default=None)),
                     f"canonical cut of {s}")


def _day(r):
    return from_rational(r).birthday.finite_part()


# -- 10, 11: omega map, Z_ON, trees ------------------------------------------------------------------

def test_criterion_10():
    with Check(10) as c:
        c.expect(omega_map(EMPTY_WORD) == w("+"), "w^0 = 1")
        c.expect(omega_map(w("+")) == w("+^w"), "w^1 = w")
        c.expect(omega_map(w("-")) == w("+-^w"), "w^-1 = epsilon")
        xs = [SignWord.from_signs(t) for k in range(6) for t in itertools.product("+-", repeat=k)]
        images = {x: omega_map(x) for x in xs}
        for x in xs:
            for y in xs:
                c.expect(compare(images[x], images[y]) == compare(x, y), f"order {x} {y}")
                if is_ancestor(x, y):
                    c.expect(is_ancestor(images[x], images[y]), f"tree order {x} {y}")
        x = zon_to_word(Zon([(1, 1), (0, -1)]))
        for n in range(21):
            n_co = SignWord([Run(PLUS, nat(n))]) if n else EMPTY_WORD
            c.expect(compare(n_co, x) < 0, f"{n} < w-1")
        c.expect(compare(x, w("+^w")) < 0, "w-1 < w")
        rng = random.Random(10)

        def rand():
            return Zon([(rng.randrange(4), rng.randrange(-4, 5)) for _ in range(rng.randrange(4))])

        for _ in range(300):
            a, b, d = rand(), rand(), rand()
            c.expect(a + b == b + a and a * b == b * a, "commutative")
            c.expect((a + b) + d == a + (b + d) and (a * b) * d == a * (b * d), "associative")
            c.expect(a * (b + d) == a * b + a * d, "distributive")
            c.expect(a + (-a) == 0 and a * 1 == a and a + 0 == a, "neutral and inverse")


def test_criterion_11():
    with Check(11) as c:
        signs = cli.tree_rows(4, "signs", pad=True)
        c.expect(signs == [["000"], ["-00", "+00"], ["--0", "-+0", "+-0", "++0"],
                           ["---", "--+", "-+-", "-++", "+--", "+-+", "++-", "+++"]], "sign labels")
        rationals = cli.tree_rows(4, "rationals")
        c.expect(rationals == [["0"], ["-1", "1"], ["-2", "-1/2", "1/2", "2"],
                               ["-3", "-3/2", "-3/4", "-1/4", "1/4", "3/4", "3/2", "3"]], "rational labels")
        sets = cli.tree_rows(4, "sets")
        c.expect(sets == [["{0}"], ["{1}", "{0,1}"], ["{2}", "{1,2}", "{0,2}", "{0,1,2}"],
                          ["{3}", "{2,3}", "{1,3}", "{1,2,3}", "{0,3}", "{0,2,3}", "{0,1,3}", "{0,1,2,3}"]],
                 "set labels")
        c.expect(sum(map(len, signs)) == 15, "15 nodes")
        order = cli.stage(4)
        c.expect(len(order) == 15 and all(compare(a, b) < 0 for a, b in zip(order, order[1:])),
                 "in-order is the total order")
        c.expect([cli.label(x, "rationals") for x in order]
                 == ["-3", "-2", "-3/2", "-1", "-3/4", "-1/2", "-1/4", "0",
                     "1/4", "1/2", "3/4", "1", "3/2", "2", "3"], "in-order labels")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
