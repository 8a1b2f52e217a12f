"""Shared test helpers: seeded word samplers and independent oracles.

The oracles here deliberately avoid the engine's own code paths: the
exhaustive rewrite closure explores every one-step successor, and the
signed-letter reducer implements classical free-group cancellation on
flat sequences.
"""

from __future__ import annotations

import random
from collections import deque

from opword import (
    Alphabet,
    Bracket,
    EMPTY,
    OperatedMonoid,
    Word,
    compose,
    substitute,
    substitute_two,
)
from opword.contexts import (
    HOLE,
    Context,
    Intersecting,
    Nested,
    NestDirection,
    Orientation,
    Separated,
    _splice,
)
from opword.contexts import HOLE1, HOLE2
from opword.rewrite import one_step_all
from opword.words import concat

XY = Alphabet(("x", "y"))


def random_word(
    rng: random.Random,
    alphabet: Alphabet = XY,
    max_breadth: int = 8,
    max_depth: int = 3,
    bracket_bias: float = 0.3,
) -> Word:
    """A random word; brackets may be empty, so [1]-style letters occur."""
    k = rng.randint(0, max_breadth)
    letters = []
    for _ in range(k):
        if max_depth > 0 and rng.random() < bracket_bias:
            letters.append(
                Bracket(
                    random_word(rng, alphabet, max(1, max_breadth // 2), max_depth - 1, bracket_bias)
                )
            )
        else:
            letters.append(rng.choice(alphabet.symbols))
    return Word(tuple(letters))


def random_nonempty_word(rng: random.Random, **kwargs) -> Word:
    while True:
        w = random_word(rng, **kwargs)
        if w.letters:
            return w


def exhaustive_normal_forms(system, w: Word, node_cap: int = 200_000) -> set[Word]:
    """Every irreducible word reachable from ``w`` by any rewrite sequence,
    found by full breadth-first exploration (independent of ``normalize``)."""
    seen = {w}
    queue = deque([w])
    normal_forms: set[Word] = set()
    while queue:
        current = queue.popleft()
        successors = [result for result, _ in one_step_all(system, current)]
        if not successors:
            normal_forms.add(current)
            continue
        for nxt in successors:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
        if len(seen) > node_cap:
            raise RuntimeError("rewrite closure larger than expected")
    return normal_forms


# --- classical free-group reduction on signed letters -----------------------

SignedWord = tuple[tuple[str, int], ...]


def signed_multiply(a: SignedWord, b: SignedWord) -> SignedWord:
    """Concatenate two reduced signed words, cancelling at the seam."""
    out = list(a)
    for letter in b:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def signed_invert(a: SignedWord) -> SignedWord:
    return tuple((sym, -sign) for sym, sign in reversed(a))


FREE_GROUP = OperatedMonoid(unit=(), multiply=signed_multiply, operator=signed_invert)


def free_group_image(w: Word) -> SignedWord:
    """The reduced word of ``w`` in the free group, computed by evaluation
    into the signed-letter model (never touching the rewriting engine)."""
    from opword import evaluate

    return evaluate(w, FREE_GROUP, {sym: ((sym, 1),) for sym in XY})


def normal_form_to_signed(nf: Word) -> SignedWord:
    """Read a group normal form as a signed word, bracket letter = inverse."""
    out = []
    for letter in nf.letters:
        if isinstance(letter, Bracket):
            assert len(letter.inner.letters) == 1 and isinstance(letter.inner.letters[0], str), (
                "normal form letter is not a single-generator bracket"
            )
            out.append((letter.inner.letters[0], -1))
        else:
            out.append((letter, 1))
    return tuple(out)


def is_reduced_signed(sw: SignedWord) -> bool:
    return all(
        not (sw[i][0] == sw[i + 1][0] and sw[i][1] == -sw[i + 1][1]) for i in range(len(sw) - 1)
    )


# --- classification witness verification ------------------------------------


def assert_valid_classification(w: Word, p1, p2, outcome) -> None:
    """Replay the witness's defining equations against the host word."""
    u1, q1 = p1.subword, p1.context
    u2, q2 = p2.subword, p2.context
    if isinstance(outcome, Separated):
        p = outcome.witness
        assert substitute_two(p, u1, u2) == w
        hole1 = Word((HOLE1,))
        hole2 = Word((HOLE2,))
        assert _splice(q1.skeleton, HOLE, hole1) == _splice(p.skeleton, HOLE2, u2)
        assert _splice(q2.skeleton, HOLE, hole2) == _splice(p.skeleton, HOLE1, u1)
    elif isinstance(outcome, Nested):
        q = outcome.connector
        if outcome.direction is NestDirection.SECOND_INSIDE_FIRST:
            assert compose(q1, q).skeleton == q2.skeleton
            assert substitute(q, u2) == u1
        else:
            assert compose(q2, q).skeleton == q1.skeleton
            assert substitute(q, u1) == u2
    else:
        assert isinstance(outcome, Intersecting)
        a, b, c, q = outcome.left, outcome.middle, outcome.right, outcome.context
        assert a.letters and b.letters and c.letters
        assert substitute(q, concat(a, concat(b, c))) == w
        star = Word((HOLE,))
        left_ctx = Context(_splice(q.skeleton, HOLE, concat(star, c)))
        right_ctx = Context(_splice(q.skeleton, HOLE, concat(a, star)))
        if outcome.orientation is Orientation.FIRST_LEFT:
            assert q1.skeleton == left_ctx.skeleton and q2.skeleton == right_ctx.skeleton
            assert u1 == concat(a, b) and u2 == concat(b, c)
        else:
            assert q1.skeleton == right_ctx.skeleton and q2.skeleton == left_ctx.skeleton
            assert u1 == concat(b, c) and u2 == concat(a, b)
