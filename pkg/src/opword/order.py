"""A monomial well-order on bracketed words.

The order compares, in turn:

1. ``deg_x`` -- the number of generator occurrences, counted with
   repetition through all nesting levels;
2. ``weight`` -- a size measure under which a bracket is strictly heavier
   than any way of splitting its content: a generator weighs 1 and
   ``[a]`` weighs ``weight(a)**2 + 1``;
3. the letter sequences, first difference wins.  Letters compare by their
   own (deg, weight) pair, then generators by alphabet precedence and
   brackets by recursing into their contents.  Generators sort before
   brackets on full ties (which cannot occur between a generator and a
   bracket, since a bracket of weight 1 has degree 0).

Both leading keys add up under concatenation and grow strictly under the
bracket operator, so ``u < v`` implies ``uw < vw``, ``wu < wv`` and
``[u] < [v]``.  Two words with equal degree and weight always have the
same breadth-profile letter for letter, so the final lexicographic stage
never meets a proper prefix.  The quadratic bracket weight is what orders
``[v][u]`` strictly below ``[uv]`` (their difference in weight is
``2*weight(u)*weight(v) - 1 > 0``) while keeping ``w < [[w]]`` and
``1 < [1]``.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .words import Alphabet, Bracket, Letter, Word


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def deg_x(w: Word) -> int:
    """Generator occurrences at all nesting levels, with repetition."""
    return _deg(w)


@lru_cache(maxsize=None)
def _deg(w: Word) -> int:
    total = 0
    for letter in w.letters:
        if isinstance(letter, Bracket):
            total += _deg(letter.inner)
        else:
            total += 1
    return total


@lru_cache(maxsize=None)
def weight(w: Word) -> int:
    """Additive weight; ``weight([a]) = weight(a)**2 + 1`` makes one bracket
    outweigh the brackets of any split of its content."""
    total = 0
    for letter in w.letters:
        if isinstance(letter, Bracket):
            total += weight(letter.inner) ** 2 + 1
        else:
            total += 1
    return total


def compare(u: Word, v: Word, alphabet: Alphabet | None = None) -> Ordering:
    """Total comparison of two words.

    ``alphabet`` supplies the precedence of generator symbols; without one,
    symbols fall back to their character order.  Returns EQUAL exactly for
    structurally identical words, and places the identity below every
    nonempty word.
    """
    c = _cmp_int(_deg(u), _deg(v))
    if c:
        return Ordering(c)
    c = _cmp_int(weight(u), weight(v))
    if c:
        return Ordering(c)
    for a, b in zip(u.letters, v.letters):
        c = _compare_letters(a, b, alphabet)
        if c:
            return Ordering(c)
    # Equal degree and weight force equal breadth, so both sequences are
    # exhausted together.
    return Ordering.EQUAL


def _cmp_int(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _letter_deg(letter: Letter) -> int:
    return _deg(letter.inner) if isinstance(letter, Bracket) else 1


def _letter_weight(letter: Letter) -> int:
    return weight(letter.inner) ** 2 + 1 if isinstance(letter, Bracket) else 1


def _compare_letters(a: Letter, b: Letter, alphabet: Alphabet | None) -> int:
    c = _cmp_int(_letter_deg(a), _letter_deg(b))
    if c:
        return c
    c = _cmp_int(_letter_weight(a), _letter_weight(b))
    if c:
        return c
    a_br = isinstance(a, Bracket)
    b_br = isinstance(b, Bracket)
    if not a_br and not b_br:
        if alphabet is not None and a in alphabet and b in alphabet:
            return _cmp_int(alphabet.index(a), alphabet.index(b))
        return _cmp_int(a, b)
    if a_br != b_br:
        # Generators precede brackets; unreachable in practice since any
        # bracket of weight 1 has degree 0.
        return 1 if a_br else -1
    return int(compare(a.inner, b.inner, alphabet))
