"""The rewriting engine: one-step rewriting, normalization, joinability,
and an exhaustive local-confluence checker over finite word universes.

Every rule application strictly decreases the word order, so
normalization terminates; both shipped systems are convergent, which
makes the normal form independent of the application strategy and lets
joinability reduce to normal-form equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .order import Ordering, compare, deg_x
from .rules import RuleMatch, System, first_match, match_instances
from .words import Alphabet, Word, breadth, render, words_up_to


class BudgetExceededError(RuntimeError):
    """Normalization ran past its step budget.  Termination of both shipped
    systems makes this unreachable; hitting it is a fatal diagnostic."""


class DecreaseViolationError(RuntimeError):
    """A rewrite step failed to decrease the word order."""


@dataclass(frozen=True)
class RewriteStep:
    match: RuleMatch
    before: Word
    after: Word


@dataclass(frozen=True)
class RewriteTrace:
    """The ordered rule applications of one normalization; consecutive
    steps chain and every step strictly decreases the word order."""

    steps: tuple[RewriteStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


def one_step_all(system: System, w: Word) -> list[tuple[Word, RuleMatch]]:
    """All one-step successors of ``w``, one entry per match; empty exactly
    when ``w`` is irreducible."""
    return [(m.result(), m) for m in match_instances(system, w)]


def is_irreducible(system: System, w: Word) -> bool:
    """True when no rule of the system applies anywhere in ``w``."""
    return first_match(system, w) is None


def step_budget(w: Word) -> int:
    """Safety cap on normalization length; generous at desk scale."""
    return 10 * (deg_x(w) + breadth(w) + 1) ** 2


def normalize(
    system: System,
    w: Word,
    *,
    seed: int | None = None,
    alphabet: Alphabet | None = None,
    check_decrease: bool = True,
) -> tuple[Word, RewriteTrace]:
    """Rewrite ``w`` to its normal form and return it with the trace.

    ``seed=None`` applies the first match in the canonical match order at
    each step; an integer seed picks matches with a seeded RNG.  Both
    strategies reach the same normal form because the shipped systems are
    convergent.  Every step is checked to strictly decrease the word
    order."""
    rng = random.Random(seed) if seed is not None else None
    budget = step_budget(w)
    steps: list[RewriteStep] = []
    current = w
    while True:
        matches = match_instances(system, current)
        if not matches:
            return current, RewriteTrace(tuple(steps))
        match = rng.choice(matches) if rng is not None else matches[0]
        after = match.result()
        if check_decrease and compare(after, current, alphabet) is not Ordering.LESS:
            raise DecreaseViolationError(
                f"step {render(current)} -> {render(after)} via {match.schema} did not decrease"
            )
        steps.append(RewriteStep(match, current, after))
        if len(steps) > budget:
            raise BudgetExceededError(
                f"exceeded {budget} steps normalizing {render(w)}; termination is violated"
            )
        current = after


def joinable(system: System, f: Word, g: Word) -> tuple[bool, Optional[Word]]:
    """Whether ``f`` and ``g`` reach a common word; by convergence this is
    normal-form equality, and the common reduct is that normal form."""
    nf_f, _ = normalize(system, f)
    nf_g, _ = normalize(system, g)
    if nf_f == nf_g:
        return True, nf_f
    return False, None


@dataclass(frozen=True)
class UniverseSpec:
    """A finite enumeration domain: per-level breadth, depth, and total
    letter count are all capped."""

    alphabet: Alphabet
    max_breadth: int
    max_depth: int
    max_size: int

    def words(self) -> list[Word]:
        return words_up_to(self.alphabet, self.max_breadth, self.max_depth, self.max_size)


class UniverseTooLargeError(RuntimeError):
    pass


@dataclass(frozen=True)
class ForkReport:
    """A local fork ``left <- host -> right`` and whether it rejoins."""

    host: Word
    left: Word
    right: Word
    joinable: bool
    reduct: Optional[Word]


def check_local_confluence(
    system: System,
    universe: UniverseSpec,
    *,
    max_words: int = 200_000,
    check_decrease: bool = True,
) -> list[ForkReport]:
    """Enumerate every word of the universe and every unordered pair of
    one-step rewrites from it; return the forks that fail to rejoin
    (expected: none for the shipped systems).

    ``check_decrease=False`` drops the per-step order certificate so that
    deliberately broken systems (checker-sensitivity mutants with
    mis-oriented rules) can still be driven to normal forms; a step budget
    guards termination instead."""
    words = universe.words()
    if len(words) > max_words:
        raise UniverseTooLargeError(
            f"universe has {len(words)} words, above the cap of {max_words}"
        )
    nf_cache: dict[Word, Word] = {}
    violations: list[ForkReport] = []
    for host in words:
        successors = one_step_all(system, host)
        if len(successors) < 2:
            continue
        for i in range(len(successors)):
            left = successors[i][0]
            for j in range(i + 1, len(successors)):
                right = successors[j][0]
                if left == right:
                    continue
                nf_left = _cached_nf(system, left, nf_cache, check_decrease)
                nf_right = _cached_nf(system, right, nf_cache, check_decrease)
                if nf_left != nf_right:
                    violations.append(ForkReport(host, left, right, False, None))
    return violations


def _cached_nf(
    system: System, w: Word, cache: dict[Word, Word], check_decrease: bool = True
) -> Word:
    # Any application strategy reaches the same normal form on a convergent
    # system, so this takes the first match found rather than the canonical
    # one; acceptance separately verifies strategy independence.
    chain: list[Word] = []
    current = w
    budget = step_budget(w)
    while current not in cache:
        chain.append(current)
        match = first_match(system, current)
        if match is None:
            cache[current] = current
            break
        after = match.result()
        if check_decrease and compare(after, current) is not Ordering.LESS:
            raise DecreaseViolationError(
                f"step {render(current)} -> {render(after)} did not decrease"
            )
        if len(chain) > budget:
            raise BudgetExceededError(f"exceeded {budget} steps normalizing {render(w)}")
        current = after
    nf = cache[current] if current in cache else current
    for seen in chain:
        cache[seen] = nf
    return nf
