"""Rewriting over bracketed words (free operated monoids).

Words over a declared alphabet carry a unary bracket operator; two rule
systems rewrite them to canonical representatives: ``star`` treats the
bracket as an involution, ``group`` additionally cancels a word against
its bracket, yielding classical reduced words.  A monomial well-order
certifies termination, an exhaustive checker verifies local confluence
on finite universes, and an independent breadth-first chain search
cross-checks congruence of words.
"""

from .congruence import (
    EquivalenceResult,
    SearchLimits,
    Verdict,
    bfs_equivalent,
    is_rc_step,
    rc_neighbors,
)
from .contexts import (
    Classification,
    Context,
    Intersecting,
    Nested,
    NestDirection,
    Orientation,
    Placement,
    Separated,
    TwoHoleContext,
    classify,
    compose,
    enumerate_placements,
    parse_context,
    parse_two_hole,
    placement_from_context,
    substitute,
    substitute_two,
)
from .order import Ordering, compare, deg_x, weight
from .rewrite import (
    BudgetExceededError,
    DecreaseViolationError,
    ForkReport,
    RewriteStep,
    RewriteTrace,
    UniverseSpec,
    check_local_confluence,
    is_irreducible,
    joinable,
    normalize,
    one_step_all,
)
from .rules import GROUP, STAR_MONOID, SYSTEMS, RuleMatch, Schema, System, match_instances
from .words import (
    Alphabet,
    Bracket,
    EMPTY,
    OperatedMonoid,
    ParseError,
    Word,
    bracket,
    breadth,
    concat,
    depth,
    evaluate,
    generator,
    max_level_breadth,
    parse,
    render,
    size,
    words_up_to,
)

__version__ = "0.1.0"
