"""Bracketed words: the elements of the free operated monoid on an alphabet.

A word is a finite sequence of letters.  A letter is either a generator
symbol from the alphabet or a bracketed sub-word ``[w]``.  The empty
sequence is the monoid identity and is written ``1``.  Words are immutable
values with structural equality, so they can be shared freely across
threads and used as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Mapping, Union

# Characters with fixed meaning in the word grammar; an alphabet may not
# redeclare them ("*" is kept for context holes).
RESERVED_CHARS = frozenset("[]1* \t\n\r")


class ParseError(ValueError):
    """Syntax or symbol error while reading a word, with its position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character generator symbols.

    The declaration order is the base precedence used by the word order:
    earlier symbols compare below later ones.
    """

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must declare at least one symbol")
        seen = set()
        for sym in self.symbols:
            if len(sym) != 1 or not sym.isascii():
                raise ValueError(f"generator must be a single ASCII character: {sym!r}")
            if sym in RESERVED_CHARS:
                raise ValueError(f"symbol {sym!r} is reserved by the word grammar")
            if sym in seen:
                raise ValueError(f"duplicate symbol {sym!r}")
            seen.add(sym)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_string(cls, spec: str) -> "Alphabet":
        """Build from a comma-separated list like ``"x,y"`` (or plain ``"xy"``)."""
        if "," in spec:
            parts = tuple(p.strip() for p in spec.split(","))
        else:
            parts = tuple(spec.strip())
        return cls(parts)

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)


@dataclass(frozen=True)
class Bracket:
    """A single bracketed letter ``[w]`` wrapping the word ``w``."""

    inner: "Word"

    def __repr__(self) -> str:
        return f"Bracket({render(self.inner)!r})"


# A letter is a generator symbol (or a hole marker inside context
# skeletons) or a bracketed sub-word.
Letter = Union[str, Bracket]


@dataclass(frozen=True, eq=False)
class Word:
    """An immutable bracketed word: a tuple of letters."""

    letters: tuple[Letter, ...] = ()

    def __repr__(self) -> str:
        return f"Word({render(self)!r})"

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        # Deep words are hashed often as cache keys; memoize per instance.
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.letters)
            object.__setattr__(self, "_hash", h)
        return h


EMPTY = Word(())


def generator(symbol: str) -> Word:
    """The one-letter word consisting of a single generator."""
    return Word((symbol,))


def concat(u: Word, v: Word) -> Word:
    """The monoid product: append the letter sequences."""
    if not u.letters:
        return v
    if not v.letters:
        return u
    return Word(u.letters + v.letters)


def bracket(w: Word) -> Word:
    """Apply the operator: wrap ``w`` as one bracketed letter ``[w]``."""
    return Word((Bracket(w),))


def breadth(w: Word) -> int:
    """Number of top-level letters; the identity has breadth 0."""
    return len(w.letters)


def depth(w: Word) -> int:
    """Maximal bracket-nesting level; 0 for bracket-free words."""
    d = 0
    for letter in w.letters:
        if isinstance(letter, Bracket):
            d = max(d, depth(letter.inner) + 1)
    return d


def size(w: Word) -> int:
    """Total number of letters at all nesting levels."""
    n = 0
    for letter in w.letters:
        n += 1
        if isinstance(letter, Bracket):
            n += size(letter.inner)
    return n


def max_level_breadth(w: Word) -> int:
    """The largest letter count at any single nesting level."""
    m = len(w.letters)
    for letter in w.letters:
        if isinstance(letter, Bracket):
            m = max(m, max_level_breadth(letter.inner))
    return m


def render(w: Word) -> str:
    """Canonical text for a word; the identity renders as ``"1"``."""
    if not w.letters:
        return "1"
    return "".join(_render_letter(letter) for letter in w.letters)


def _render_letter(letter: Letter) -> str:
    if isinstance(letter, Bracket):
        return "[" + render(letter.inner) + "]"
    return letter


def parse(text: str, alphabet: Alphabet) -> Word:
    """Parse the word grammar: ``word ::= "1" | item+``, ``item ::= generator | "[" word "]"``.

    Whitespace is ignored.  ``"1"`` is accepted only as an entire word
    (including the entire content of a bracket, as in ``"[1]"``).
    """
    return _parse(text, alphabet, specials=frozenset())


def _parse(text: str, alphabet: Alphabet, specials: frozenset[str]) -> Word:
    tokens = _tokenize(text, specials)
    word, pos = _parse_word(tokens, 0, alphabet)
    if pos != len(tokens):
        raise ParseError(f"unexpected {tokens[pos][0]!r}", tokens[pos][1])
    return word


def _tokenize(text: str, specials: frozenset[str]) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "*" and ("*1" in specials or "*2" in specials):
            if i + 1 < len(text) and text[i + 1] in "12":
                tokens.append((text[i : i + 2], i))
                i += 2
                continue
        tokens.append((ch, i))
        i += 1
    return tokens


def _parse_word(
    tokens: list[tuple[str, int]], pos: int, alphabet: Alphabet
) -> tuple[Word, int]:
    # The caller consumes the terminator (end of input or "]").
    if pos < len(tokens) and tokens[pos][0] == "1":
        if pos + 1 < len(tokens) and tokens[pos + 1][0] != "]":
            raise ParseError('"1" is only permitted as an entire word', tokens[pos + 1][1])
        return EMPTY, pos + 1
    letters: list[Letter] = []
    while pos < len(tokens):
        tok, at = tokens[pos]
        if tok == "]":
            break
        if tok == "[":
            inner, pos = _parse_word(tokens, pos + 1, alphabet)
            if pos >= len(tokens) or tokens[pos][0] != "]":
                raise ParseError('missing "]"', at)
            letters.append(Bracket(inner))
            pos += 1
        elif tok == "1":
            raise ParseError('"1" is only permitted as an entire word', at)
        elif tok in alphabet or tok in ("*", "*1", "*2"):
            # Hole markers are validated by the context layer; plain word
            # parsing rejects them below.
            letters.append(tok)
            pos += 1
        else:
            raise ParseError(f"symbol {tok!r} is not in the alphabet", at)
    if not letters:
        at = tokens[pos][1] if pos < len(tokens) else (tokens[-1][1] + 1 if tokens else 0)
        raise ParseError('a word must be "1" or a sequence of items', at)
    return Word(tuple(letters)), pos


@dataclass(frozen=True)
class OperatedMonoid:
    """A target structure for evaluation: a unit, a product, and a unary operator."""

    unit: Any
    multiply: Callable[[Any, Any], Any]
    operator: Callable[[Any], Any]


def evaluate(w: Word, target: OperatedMonoid, assign: Mapping[str, Any]) -> Any:
    """The unique homomorphism into ``target`` extending ``assign`` on generators."""
    result = target.unit
    for letter in w.letters:
        if isinstance(letter, Bracket):
            value = target.operator(evaluate(letter.inner, target, assign))
        else:
            value = assign[letter]
        result = target.multiply(result, value)
    return result


def words_up_to(
    alphabet: Alphabet, max_breadth: int, max_depth: int, max_size: int
) -> list[Word]:
    """All words whose every nesting level has at most ``max_breadth`` letters,
    whose depth is at most ``max_depth`` and whose total letter count is at
    most ``max_size``, in a deterministic (size, text) order."""
    letter_pool = _letter_pool(alphabet, max_breadth, max_depth, max_size)
    out: list[Word] = []
    _extend_words((), 0, letter_pool, max_breadth, max_size, out)
    out.sort(key=lambda w: (size(w), render(w)))
    return out


def _letter_pool(
    alphabet: Alphabet, max_breadth: int, depth_budget: int, max_size: int
) -> list[tuple[Letter, int]]:
    pool: list[tuple[Letter, int]] = [(sym, 1) for sym in alphabet]
    if depth_budget > 0 and max_size >= 1:
        inner_pool = _letter_pool(alphabet, max_breadth, depth_budget - 1, max_size - 1)
        inners: list[Word] = []
        _extend_words((), 0, inner_pool, max_breadth, max_size - 1, inners)
        pool.extend((Bracket(u), size(u) + 1) for u in inners)
    return pool


def _extend_words(
    prefix: tuple[Letter, ...],
    used: int,
    pool: list[tuple[Letter, int]],
    max_breadth: int,
    max_size: int,
    out: list[Word],
) -> None:
    out.append(Word(prefix))
    if len(prefix) >= max_breadth:
        return
    for letter, letter_size in pool:
        if used + letter_size <= max_size:
            _extend_words(prefix + (letter,), used + letter_size, pool, max_breadth, max_size, out)
