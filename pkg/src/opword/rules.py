"""Rule-family schemas and the two shipped rewriting systems.

Each schema is a family of oriented pairs (lhs, rhs), one instance per
binding.  The star-monoid system makes the bracket an involution; the
group system additionally cancels a word against its bracket on either
side.  Matching enumerates every placement of every instance inside a
host word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .contexts import Placement, iter_subword_runs, placements_with_keys, substitute
from .words import Bracket, EMPTY, Word, breadth, render


class Schema(enum.Enum):
    """One rule family, identified by its wire name."""

    PHI = "phi"            # [[w]] -> w          unnest a double bracket
    PSI = "psi"            # [uv] -> [v][u]      push the bracket through a product
    OMEGA = "omega"        # [1] -> 1            drop an empty bracket
    VARPHI = "varphi"      # [w]w -> 1           cancel on the left
    CHI = "chi"            # w[w] -> 1           cancel on the right
    PSI_REVERSED = "psi_reversed"  # [v][u] -> [uv]; checker-sensitivity diagnostics only

    def __str__(self) -> str:
        return self.value


_SCHEMA_RANK = {s: i for i, s in enumerate(Schema)}


@dataclass(frozen=True)
class System:
    """A named set of schemas."""

    name: str
    schemas: tuple[Schema, ...]

    def without(self, schema: Schema) -> "System":
        return System(f"{self.name}-no-{schema.value}", tuple(s for s in self.schemas if s != schema))

    def replacing(self, old: Schema, new: Schema) -> "System":
        return System(
            f"{self.name}-{new.value}",
            tuple(new if s == old else s for s in self.schemas),
        )


STAR_MONOID = System("star", (Schema.PHI, Schema.PSI, Schema.OMEGA))
GROUP = System("group", (Schema.PHI, Schema.PSI, Schema.VARPHI, Schema.CHI))

SYSTEMS = {STAR_MONOID.name: STAR_MONOID, GROUP.name: GROUP}


@dataclass(frozen=True)
class RuleMatch:
    """One schema instance located inside a host word."""

    schema: Schema
    bindings: tuple[Word, ...]
    placement: Placement
    rhs: Word

    @property
    def lhs(self) -> Word:
        return self.placement.subword

    def bindings_dict(self) -> dict[str, str]:
        if self.schema is Schema.OMEGA:
            return {}
        if self.schema in (Schema.PSI, Schema.PSI_REVERSED):
            return {"u": render(self.bindings[0]), "v": render(self.bindings[1])}
        return {"w": render(self.bindings[0])}

    def result(self) -> Word:
        """The host word after replacing the matched lhs by the rhs."""
        return substitute(self.placement.context, self.rhs)

    def __repr__(self) -> str:
        return (
            f"RuleMatch({self.schema.value}, {self.bindings_dict()}, "
            f"@ {render(self.placement.context.skeleton)!r})"
        )


def _instances(schema: Schema, u: Word) -> list[tuple[tuple[Word, ...], Word]]:
    """All (bindings, rhs) with the schema's lhs equal to ``u``."""
    letters = u.letters
    if schema is Schema.PHI:
        if len(letters) == 1 and isinstance(letters[0], Bracket):
            inner = letters[0].inner
            if breadth(inner) == 1 and isinstance(inner.letters[0], Bracket):
                w = inner.letters[0].inner
                return [((w,), w)]
        return []
    if schema is Schema.PSI:
        if len(letters) == 1 and isinstance(letters[0], Bracket):
            content = letters[0].inner
            m = breadth(content)
            out = []
            for k in range(1, m):
                left = Word(content.letters[:k])
                right = Word(content.letters[k:])
                out.append(((left, right), Word((Bracket(right), Bracket(left)))))
            return out
        return []
    if schema is Schema.OMEGA:
        if len(letters) == 1 and isinstance(letters[0], Bracket) and not letters[0].inner:
            return [((), EMPTY)]
        return []
    if schema is Schema.VARPHI:
        if letters and isinstance(letters[0], Bracket):
            w = letters[0].inner
            if Word(letters[1:]) == w:
                return [((w,), EMPTY)]
        return []
    if schema is Schema.CHI:
        if letters and isinstance(letters[-1], Bracket):
            w = letters[-1].inner
            if Word(letters[:-1]) == w:
                return [((w,), EMPTY)]
        return []
    if schema is Schema.PSI_REVERSED:
        if (
            len(letters) == 2
            and isinstance(letters[0], Bracket)
            and isinstance(letters[1], Bracket)
        ):
            v, u_part = letters[0].inner, letters[1].inner
            if v and u_part:
                return [((u_part, v), Word((Bracket(Word(u_part.letters + v.letters)),)))]
        return []
    raise ValueError(f"unknown schema {schema!r}")


def match_instances(system: System, w: Word) -> list[RuleMatch]:
    """Every placement of every schema instance of ``system`` inside ``w``,
    ordered leftmost-outermost, then by schema, then by split."""
    keyed: list[tuple[tuple, int, int, RuleMatch]] = []
    for position, placement in placements_with_keys(w):
        for schema in system.schemas:
            for bindings, rhs in _instances(schema, placement.subword):
                split = breadth(bindings[0]) if schema in (Schema.PSI, Schema.PSI_REVERSED) else 0
                keyed.append((position, _SCHEMA_RANK[schema], split, RuleMatch(schema, bindings, placement, rhs)))
    keyed.sort(key=lambda item: item[:3])
    return [item[3] for item in keyed]


def first_match(system: System, w: Word) -> RuleMatch | None:
    """Some rule match in ``w`` (None when irreducible), found without the
    full canonical ordering; any match suffices for reaching the normal
    form of a convergent system."""
    for match in iter_matches_unordered(system, w):
        return match
    return None


def iter_matches_unordered(system: System, w: Word):
    """All matches in an implementation-defined (but fixed) order; cheaper
    than ``match_instances`` when the canonical order is not needed."""
    for subword, context in iter_subword_runs(w):
        for schema in system.schemas:
            for bindings, rhs in _instances(schema, subword):
                yield RuleMatch(schema, bindings, Placement(subword, context), rhs)
