"""An equivalence oracle independent of the normalization engine.

Two words are congruent when a finite chain of single in-context rule
replacements, applied forward or backward, connects them.  The oracle
searches that chain graph from both endpoints under explicit growth
limits, expanding smaller words first: congruent words always meet on a
small common descendant, so the verdict lands well inside the visited
budget.  A positive verdict comes with the witness chain and is always
sound; exhausting the limits yields "unknown", never a disproof.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Iterator, Optional

from .order import deg_x
from .rules import Schema, System, iter_matches_unordered
from .words import Alphabet, Bracket, Letter, Word, max_level_breadth, size, words_up_to

# Caps on the words tried as cancellation-pair insertions during backward
# steps.  They bound the branching of the reverse relation; raising them
# widens the search without affecting soundness.
_INSERT_MAX_SIZE = 3
_INSERT_MAX_DEPTH = 2


@dataclass(frozen=True)
class SearchLimits:
    """Growth and effort bounds for the chain search."""

    max_word_deg_x: int
    max_word_breadth: int
    max_visited: int

    def __post_init__(self) -> None:
        if min(self.max_word_deg_x, self.max_word_breadth, self.max_visited) <= 0:
            raise ValueError("all search limits must be positive")

    def admits(self, w: Word) -> bool:
        return (
            deg_x(w) <= self.max_word_deg_x
            and max_level_breadth(w) <= self.max_word_breadth
        )


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a chain search; ``path`` joins the endpoints when the
    verdict is EQUIVALENT, with one in-context replacement per step."""

    verdict: Verdict
    path: Optional[tuple[Word, ...]]
    explored: int

    @property
    def equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT


def _iter_levels(w: Word) -> Iterator[tuple[tuple[Letter, ...], list]]:
    """Each nesting level's letters plus the frames to rebuild the whole
    word after editing that level."""
    stack: list[tuple[tuple[Letter, ...], list]] = [(w.letters, [])]
    while stack:
        letters, frames = stack.pop()
        yield letters, frames
        for k, letter in enumerate(letters):
            if isinstance(letter, Bracket):
                stack.append((letter.inner.letters, frames + [(letters[:k], letters[k + 1 :])]))


def _rebuild(frames: list, letters: tuple[Letter, ...]) -> Word:
    for before, after in reversed(frames):
        letters = before + (Bracket(Word(letters)),) + after
    return Word(letters)


def rc_neighbors(
    system: System, w: Word, limits: SearchLimits, alphabet: Alphabet
) -> list[Word]:
    """All words one in-context replacement away from ``w`` in either
    direction, filtered by the limits and deduplicated.

    Forward steps apply a rule at any placement.  Backward steps undo one:
    rewrap any subword in a double bracket, merge an adjacent bracket pair
    back into one bracket, reinsert an empty bracket at any gap, or insert
    a cancellation pair built from a capped pool of candidate words."""
    out = list(_neighbor_set(system, w, limits, alphabet))
    out.sort(key=lambda u: (size(u), _render_key(u)))
    return out


@lru_cache(maxsize=500_000)
def _neighbor_set(
    system: System, w: Word, limits: SearchLimits, alphabet: Alphabet
) -> tuple[Word, ...]:
    """Limit-filtered neighbors of a word that itself sits within limits.

    Each backward edit's effect on the degree and on level breadths is
    known at construction time, so admission is decided without walking
    the candidate."""
    seen: dict[Word, None] = {}
    max_deg = limits.max_word_deg_x
    max_breadth = limits.max_word_breadth
    deg_w = deg_x(w)

    has_phi = Schema.PHI in system.schemas
    has_psi = Schema.PSI in system.schemas
    has_omega = Schema.OMEGA in system.schemas
    left_cancel = Schema.VARPHI in system.schemas
    right_cancel = Schema.CHI in system.schemas
    if left_cancel or right_cancel:
        pairs = _insert_pairs(system, alphabet, limits)
    else:
        pairs = ()

    empty_bracket = (Bracket(Word(())),)

    for letters, frames in _iter_levels(w):
        n = len(letters)
        # forward steps at this level (no rule raises the degree; only the
        # bracket split widens a level, by one letter)
        for i, letter in enumerate(letters):
            if not isinstance(letter, Bracket):
                continue
            inner = letter.inner.letters
            m = len(inner)
            if m == 0:
                if has_omega or left_cancel or right_cancel:
                    seen.setdefault(_rebuild(frames, letters[:i] + letters[i + 1 :]), None)
            elif m == 1 and has_phi and isinstance(inner[0], Bracket):
                seen.setdefault(
                    _rebuild(frames, letters[:i] + inner[0].inner.letters + letters[i + 1 :]), None
                )
            if m >= 2 and has_psi and n + 1 <= max_breadth:
                for k in range(1, m):
                    split = (Bracket(Word(inner[k:])), Bracket(Word(inner[:k])))
                    seen.setdefault(_rebuild(frames, letters[:i] + split + letters[i + 1 :]), None)
            if m and left_cancel and letters[i + 1 : i + 1 + m] == inner:
                seen.setdefault(_rebuild(frames, letters[:i] + letters[i + 1 + m :]), None)
            if m and right_cancel and i >= m and letters[i - m : i] == inner:
                seen.setdefault(_rebuild(frames, letters[: i - m] + letters[i + 1 :]), None)
        # backward phi on every run and gap: level shrinks to n-(j-i)+1
        if has_phi:
            for i in range(n + 1):
                for j in range(i, n + 1):
                    if n - (j - i) + 1 <= max_breadth:
                        wrapped = (Bracket(Word((Bracket(Word(letters[i:j])),))),)
                        seen.setdefault(_rebuild(frames, letters[:i] + wrapped + letters[j:]), None)
        # backward psi on adjacent bracket letters with nonempty contents
        if has_psi:
            for i in range(n - 1):
                a, b = letters[i], letters[i + 1]
                if isinstance(a, Bracket) and isinstance(b, Bracket) and a.inner and b.inner:
                    if len(a.inner.letters) + len(b.inner.letters) <= max_breadth:
                        merged = (Bracket(Word(b.inner.letters + a.inner.letters)),)
                        seen.setdefault(
                            _rebuild(frames, letters[:i] + merged + letters[i + 2 :]), None
                        )
        # backward omega / cancellation insertions at every gap
        room = n + 1 <= max_breadth
        for i in range(n + 1):
            head, tail = letters[:i], letters[i:]
            if has_omega and room:
                seen.setdefault(_rebuild(frames, head + empty_bracket + tail), None)
            for pair_breadth, pair_deg, left_pair, right_pair in pairs:
                if n + pair_breadth <= max_breadth and deg_w + pair_deg <= max_deg:
                    if left_cancel:
                        seen.setdefault(_rebuild(frames, head + left_pair + tail), None)
                    if right_cancel:
                        seen.setdefault(_rebuild(frames, head + right_pair + tail), None)

    return tuple(seen)


def _render_key(w: Word) -> str:
    from .words import render

    return render(w)


@lru_cache(maxsize=32)
def _insert_pairs(
    system: System, alphabet: Alphabet, limits: SearchLimits
) -> tuple[tuple[int, int, tuple[Letter, ...], tuple[Letter, ...]], ...]:
    """(inserted breadth, inserted degree, [u]u letters, u[u] letters) for
    each candidate cancellation word ``u``."""
    pool = words_up_to(
        alphabet,
        max_breadth=min(limits.max_word_breadth, _INSERT_MAX_SIZE),
        max_depth=_INSERT_MAX_DEPTH,
        max_size=_INSERT_MAX_SIZE,
    )
    pairs = []
    for u in pool:
        if 2 * deg_x(u) <= limits.max_word_deg_x:
            pairs.append(
                (
                    len(u.letters) + 1,
                    2 * deg_x(u),
                    (Bracket(u),) + u.letters,
                    u.letters + (Bracket(u),),
                )
            )
    return tuple(pairs)


def is_rc_step(system: System, a: Word, b: Word) -> bool:
    """Whether ``a -> b`` is one forward in-context rule replacement."""
    return any(match.result() == b for match in iter_matches_unordered(system, a))


def bfs_equivalent(
    system: System, a: Word, b: Word, limits: SearchLimits, alphabet: Alphabet
) -> EquivalenceResult:
    """Search for a replacement chain from ``a`` to ``b``, breadth-wise from
    both endpoints with the smallest frontier words expanded first;
    EQUIVALENT verdicts carry the chain."""
    if a == b:
        return EquivalenceResult(Verdict.EQUIVALENT, (a,), 0)

    trees: tuple[dict[Word, Optional[Word]], dict[Word, Optional[Word]]] = ({a: None}, {b: None})
    tick = count()
    heaps: tuple[list, list] = ([(size(a), next(tick), a)], [(size(b), next(tick), b)])
    explored = 2
    side = 0

    while heaps[0] or heaps[1]:
        if explored >= limits.max_visited:
            return EquivalenceResult(Verdict.UNKNOWN, None, explored)
        if not heaps[side]:
            side = 1 - side
        _, _, node = heapq.heappop(heaps[side])
        tree, other = trees[side], trees[1 - side]
        for neighbor in _neighbor_set(system, node, limits, alphabet):
            if neighbor in tree:
                continue
            tree[neighbor] = node
            explored += 1
            if neighbor in other:
                path = _join_paths(trees[0], trees[1], neighbor)
                return EquivalenceResult(Verdict.EQUIVALENT, path, explored)
            heapq.heappush(heaps[side], (size(neighbor), next(tick), neighbor))
            if explored >= limits.max_visited:
                return EquivalenceResult(Verdict.UNKNOWN, None, explored)
        side = 1 - side
    return EquivalenceResult(Verdict.UNKNOWN, None, explored)


def _join_paths(
    tree_a: dict[Word, Optional[Word]],
    tree_b: dict[Word, Optional[Word]],
    meet: Word,
) -> tuple[Word, ...]:
    left: list[Word] = []
    node: Optional[Word] = meet
    while node is not None:
        left.append(node)
        node = tree_a[node]
    left.reverse()
    right: list[Word] = []
    node = tree_b[meet]
    while node is not None:
        right.append(node)
        node = tree_b[node]
    return tuple(left + right)
