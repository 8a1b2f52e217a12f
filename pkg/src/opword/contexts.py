"""Contexts (words with holes), placements, and their relative positions.

A context is a word over the alphabet plus a hole marker ``*``; filling
the hole with a word yields a word again.  A placement pairs a subword
with the context that witnesses one occurrence of it inside a host word.
Two placements in the same host are either separated, nested, or
intersecting, and ``classify`` decides which, returning a structural
witness for the class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .words import (
    Alphabet,
    Bracket,
    EMPTY,
    Letter,
    ParseError,
    Word,
    _parse,
    breadth,
    render,
)

HOLE = "*"
HOLE1 = "*1"
HOLE2 = "*2"


def _count_marker(w: Word, marker: str) -> int:
    n = 0
    for letter in w.letters:
        if isinstance(letter, Bracket):
            n += _count_marker(letter.inner, marker)
        elif letter == marker:
            n += 1
    return n


@dataclass(frozen=True)
class Context:
    """A word-shaped skeleton with exactly one hole ``*``."""

    skeleton: Word

    def __post_init__(self) -> None:
        if _count_marker(self.skeleton, HOLE) != 1:
            raise ValueError("a context must contain exactly one hole")
        if _count_marker(self.skeleton, HOLE1) or _count_marker(self.skeleton, HOLE2):
            raise ValueError("one-hole contexts may not contain *1 or *2")

    def __repr__(self) -> str:
        return f"Context({render(self.skeleton)!r})"


@dataclass(frozen=True)
class TwoHoleContext:
    """A word-shaped skeleton with exactly one ``*1`` and one ``*2``."""

    skeleton: Word

    def __post_init__(self) -> None:
        if _count_marker(self.skeleton, HOLE1) != 1 or _count_marker(self.skeleton, HOLE2) != 1:
            raise ValueError("a two-hole context needs exactly one *1 and one *2")
        if _count_marker(self.skeleton, HOLE):
            raise ValueError("two-hole contexts may not contain a bare *")

    def __repr__(self) -> str:
        return f"TwoHoleContext({render(self.skeleton)!r})"


IDENTITY_CONTEXT = Context(Word((HOLE,)))


def parse_context(text: str, alphabet: Alphabet) -> Context:
    return Context(_parse(text, alphabet, specials=frozenset((HOLE,))))


def parse_two_hole(text: str, alphabet: Alphabet) -> TwoHoleContext:
    return TwoHoleContext(_parse(text, alphabet, specials=frozenset((HOLE1, HOLE2))))


def _splice(skeleton: Word, marker: str, filler: Word) -> Word:
    """Replace the letter ``marker`` by the letters of ``filler``; if the
    filler is the identity the hole collapses and its neighbours join."""
    out: list[Letter] = []
    for letter in skeleton.letters:
        if isinstance(letter, Bracket):
            out.append(Bracket(_splice(letter.inner, marker, filler)))
        elif letter == marker:
            out.extend(filler.letters)
        else:
            out.append(letter)
    return Word(tuple(out))


def substitute(q: Context, u: Word) -> Word:
    """Fill the hole of ``q`` with ``u``."""
    return _splice(q.skeleton, HOLE, u)


def substitute_two(p: TwoHoleContext, u1: Word, u2: Word) -> Word:
    """Fill ``*1`` with ``u1`` and ``*2`` with ``u2``."""
    return _splice(_splice(p.skeleton, HOLE1, u1), HOLE2, u2)


def compose(outer: Context, inner: Context) -> Context:
    """The context whose hole sits where ``inner``'s hole sits inside ``outer``."""
    return Context(_splice(outer.skeleton, HOLE, inner.skeleton))


@dataclass(frozen=True)
class Placement:
    """One occurrence of ``subword`` in a host word, witnessed by ``context``.

    Two placements are equal exactly when their contexts coincide, i.e.
    they denote the same position, not merely the same subword value.
    """

    subword: Word
    context: Context

    def host(self) -> Word:
        return substitute(self.context, self.subword)

    def __repr__(self) -> str:
        return f"Placement({render(self.subword)!r} @ {render(self.context.skeleton)!r})"


def _unchecked_context(skeleton: Word) -> Context:
    # Internal fast path for skeletons built with exactly one hole.
    ctx = object.__new__(Context)
    object.__setattr__(ctx, "skeleton", skeleton)
    return ctx


def enumerate_placements(w: Word, include_empty: bool = False) -> list[Placement]:
    """Every contiguous letter run at every nesting level of ``w``, paired
    with its context.  Runs are nonempty unless ``include_empty`` is set,
    which adds one identity-subword placement per gap per level.  The list
    is duplicate-free and ordered leftmost-outermost."""
    return [p for _, p in placements_with_keys(w, include_empty)]


def placements_with_keys(w: Word, include_empty: bool = False) -> list[tuple[tuple, Placement]]:
    """Placements together with their leftmost-outermost sort key, sorted."""
    out: list[tuple[tuple, Placement]] = []
    _collect_placements(w.letters, (), (), include_empty, out)
    out.sort(key=lambda item: item[0])
    return out


def iter_subword_runs(w: Word):
    """Yield (subword, context) for every nonempty run, in no particular
    order; cheaper than the sorted enumeration for scans that stop early."""
    stack: list[tuple[tuple[Letter, ...], tuple]] = [(w.letters, ())]
    while stack:
        letters, wrap = stack.pop()
        n = len(letters)
        for i in range(n):
            for j in range(i + 1, n + 1):
                skeleton = letters[:i] + (HOLE,) + letters[j:]
                for before, after in reversed(wrap):
                    skeleton = before + (Bracket(Word(skeleton)),) + after
                yield Word(letters[i:j]), _unchecked_context(Word(skeleton))
        for k, letter in enumerate(letters):
            if isinstance(letter, Bracket):
                stack.append((letter.inner.letters, wrap + ((letters[:k], letters[k + 1 :]),)))


def _collect_placements(
    letters: tuple[Letter, ...],
    path: tuple[int, ...],
    wrap: tuple[tuple[tuple[Letter, ...], tuple[Letter, ...]], ...],
    include_empty: bool,
    out: list[tuple[tuple, Placement]],
) -> None:
    n = len(letters)
    lo = 0 if include_empty else 1
    for i in range(n + 1):
        for j in range(i + lo, n + 1):
            skeleton = letters[:i] + (HOLE,) + letters[j:]
            for before, after in reversed(wrap):
                skeleton = before + (Bracket(Word(skeleton)),) + after
            key = (path + (i,), -j)
            out.append((key, Placement(Word(letters[i:j]), _unchecked_context(Word(skeleton)))))
    for k, letter in enumerate(letters):
        if isinstance(letter, Bracket):
            _collect_placements(
                letter.inner.letters,
                path + (k,),
                wrap + ((letters[:k], letters[k + 1 :]),),
                include_empty,
                out,
            )


def hole_address(skeleton: Word) -> tuple[tuple[int, ...], int]:
    """Locate the hole: the bracket-letter path from the root, and the
    letter index at the final level."""
    for idx, letter in enumerate(skeleton.letters):
        if letter == HOLE:
            return (), idx
        if isinstance(letter, Bracket) and _count_marker(letter.inner, HOLE):
            path, at = hole_address(letter.inner)
            return (idx,) + path, at
    raise ValueError("skeleton has no hole")


def placement_address(p: Placement) -> tuple[tuple[int, ...], int, int]:
    """The placement's position in host coordinates: (path, start, end)."""
    path, start = hole_address(p.context.skeleton)
    return path, start, start + breadth(p.subword)


def placement_sort_key(p: Placement):
    path, start, end = placement_address(p)
    return (path + (start,), -end)


def placement_from_context(host: Word, q: Context) -> Placement:
    """Recover the placement of ``q`` in ``host``, i.e. the unique subword
    with ``substitute(q, subword) == host``; raises if there is none."""
    path, idx = hole_address(q.skeleton)
    host_letters = host.letters
    skel_letters = q.skeleton.letters
    for step in path:
        if step >= len(host_letters) or not isinstance(host_letters[step], Bracket):
            raise ValueError("context does not fit the host word")
        host_letters = host_letters[step].inner.letters
        skel_letters = skel_letters[step].inner.letters
    span = len(host_letters) - (len(skel_letters) - 1)
    if span < 0:
        raise ValueError("context does not fit the host word")
    placement = Placement(Word(host_letters[idx : idx + span]), q)
    if placement.host() != host:
        raise ValueError("context does not fit the host word")
    return placement


class NestDirection(enum.Enum):
    FIRST_INSIDE_SECOND = "first_inside_second"
    SECOND_INSIDE_FIRST = "second_inside_first"


class Orientation(enum.Enum):
    FIRST_LEFT = "first_left"
    SECOND_LEFT = "second_left"


@dataclass(frozen=True)
class Separated:
    """Disjoint positions; the witness has hole i where placement i sat."""

    witness: TwoHoleContext


@dataclass(frozen=True)
class Nested:
    """One subword inside the other; ``connector`` locates the inner one
    within the outer subword."""

    connector: Context
    direction: NestDirection


@dataclass(frozen=True)
class Intersecting:
    """Proper overlap: host = context|_(left middle right), the left-hand
    placement covers left*middle and the right-hand one middle*right."""

    context: Context
    left: Word
    middle: Word
    right: Word
    orientation: Orientation


Classification = Union[Separated, Nested, Intersecting]


def classify(w: Word, p1: Placement, p2: Placement) -> Classification:
    """Decide the relative position of two placements in the host ``w``.

    Checks run in the order nested, separated, intersecting; exactly one
    applies.  The returned witness reconstructs the host when its defining
    substitution is replayed."""
    if p1.host() != w or p2.host() != w:
        raise ValueError("both placements must have the given host word")
    path1, s1, e1 = placement_address(p1)
    path2, s2, e2 = placement_address(p2)

    if path1 == path2:
        if s1 <= s2 and e2 <= e1:
            return Nested(_connector(p1, path1, s1, path2, s2, e2), NestDirection.SECOND_INSIDE_FIRST)
        if s2 <= s1 and e1 <= e2:
            return Nested(_connector(p2, path2, s2, path1, s1, e1), NestDirection.FIRST_INSIDE_SECOND)
        if e1 <= s2 or e2 <= s1:
            return Separated(_two_hole_witness(w, (path1, s1, e1), (path2, s2, e2)))
        # proper overlap at one level
        if s1 < s2:
            level = _letters_at(w, path1)
            a = Word(level[s1:s2])
            b = Word(level[s2:e1])
            c = Word(level[e1:e2])
            ctx = Context(_replace_span(w, path1, s1, e2, (HOLE,)))
            return Intersecting(ctx, a, b, c, Orientation.FIRST_LEFT)
        level = _letters_at(w, path1)
        a = Word(level[s2:s1])
        b = Word(level[s1:e2])
        c = Word(level[e2:e1])
        ctx = Context(_replace_span(w, path1, s2, e1, (HOLE,)))
        return Intersecting(ctx, a, b, c, Orientation.SECOND_LEFT)

    if _is_prefix(path1, path2):
        k = path2[len(path1)]
        if s1 <= k < e1:
            return Nested(_connector(p1, path1, s1, path2, s2, e2), NestDirection.SECOND_INSIDE_FIRST)
        return Separated(_two_hole_witness(w, (path1, s1, e1), (path2, s2, e2)))
    if _is_prefix(path2, path1):
        k = path1[len(path2)]
        if s2 <= k < e2:
            return Nested(_connector(p2, path2, s2, path1, s1, e1), NestDirection.FIRST_INSIDE_SECOND)
        return Separated(_two_hole_witness(w, (path1, s1, e1), (path2, s2, e2)))
    return Separated(_two_hole_witness(w, (path1, s1, e1), (path2, s2, e2)))


def _is_prefix(short: tuple[int, ...], long: tuple[int, ...]) -> bool:
    return len(short) < len(long) and long[: len(short)] == short


def _letters_at(w: Word, path: tuple[int, ...]) -> tuple[Letter, ...]:
    letters = w.letters
    for step in path:
        letters = letters[step].inner.letters
    return letters


def _replace_span(
    w: Word, path: tuple[int, ...], start: int, end: int, replacement: tuple[Letter, ...]
) -> Word:
    if not path:
        return Word(w.letters[:start] + replacement + w.letters[end:])
    k = path[0]
    inner = _replace_span(w.letters[k].inner, path[1:], start, end, replacement)
    return Word(w.letters[:k] + (Bracket(inner),) + w.letters[k + 1 :])


def _connector(
    outer: Placement,
    outer_path: tuple[int, ...],
    outer_start: int,
    inner_path: tuple[int, ...],
    inner_start: int,
    inner_end: int,
) -> Context:
    # Position of the inner placement relative to the outer subword.
    if inner_path == outer_path:
        rel_path: tuple[int, ...] = ()
        rel_start, rel_end = inner_start - outer_start, inner_end - outer_start
    else:
        k = inner_path[len(outer_path)]
        rel_path = (k - outer_start,) + inner_path[len(outer_path) + 1 :]
        rel_start, rel_end = inner_start, inner_end
    return Context(_replace_span(outer.subword, rel_path, rel_start, rel_end, (HOLE,)))


def _two_hole_witness(
    w: Word,
    first: tuple[tuple[int, ...], int, int],
    second: tuple[tuple[int, ...], int, int],
) -> TwoHoleContext:
    path1, s1, e1 = first
    path2, s2, e2 = second
    if path1 == path2:
        # Replace the right span first so the left indices stay valid.
        if s1 <= s2:
            skel = _replace_span(w, path2, s2, e2, (HOLE2,))
            skel = _replace_span(skel, path1, s1, e1, (HOLE1,))
        else:
            skel = _replace_span(w, path1, s1, e1, (HOLE1,))
            skel = _replace_span(skel, path2, s2, e2, (HOLE2,))
        return TwoHoleContext(skel)
    # Distinct levels: replacements cannot disturb each other's indices
    # unless one path passes left of the other's span at a shared level;
    # replacing the deeper (or right-hand) one first is always safe.
    if len(path1) >= len(path2):
        skel = _replace_span(w, path1, s1, e1, (HOLE1,))
        skel = _replace_span(skel, path2, s2, e2, (HOLE2,))
    else:
        skel = _replace_span(w, path2, s2, e2, (HOLE2,))
        skel = _replace_span(skel, path1, s1, e1, (HOLE1,))
    return TwoHoleContext(skel)
