"""Surreal numbers as transfinite sign expansions."""

from .arith import (Decomposition, Quanta, canonical_cut, cantor_word, children, concat,
                    decompose, infinite_class, integer_part, involution, is_omnific, mul,
                    omega_map, power, quanta, repeat, sharp, sign, star, tip, width)
from .order import (compare, discriminant, first_difference, is_ancestor, limit_of_chain,
                    limit_of_periodic_chain, minus, plus, sign_at, tail, tree_relate,
                    truncate, truncation_chain, yca)
from .word import (EMPTY_WORD, MINUS, PLUS, Rep, Run, SignWord, format_word,
                   from_ordinal_set, ordinal_word, parse_word, to_ordinal_set)
from .zon import Zon, monomial, zon_arith, zon_to_word
