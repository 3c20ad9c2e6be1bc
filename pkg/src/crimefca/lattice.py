"""Concept enumeration and the concept lattice.

Concepts are generated in lectic order of their intents with the NextClosure
scheme (attribute declaration order is the lexical base), so the output order
is canonical and needs no duplicate check.  Index 0 is always the top concept
and the last index the bottom concept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ._bits import iter_bits
from .context import AttributeSet, FormalContext, ObjectSet
from .errors import CapacityExceeded, ContextMismatch, EmptyInput

__all__ = [
    "DEFAULT_MAX_CONCEPTS",
    "FormalConcept",
    "ConceptLattice",
    "enumerate_concepts",
    "iter_intents",
    "is_subconcept",
    "meet",
    "join",
    "top",
    "bottom",
    "object_concept",
    "attribute_concept",
    "transitive_reduction_covers",
]

DEFAULT_MAX_CONCEPTS = 1_000_000


@dataclass(frozen=True)
class FormalConcept:
    """A pair (extent, intent) where each side derives to the other."""

    extent: ObjectSet
    intent: AttributeSet

    def __post_init__(self):
        ctx = self.extent.context
        if self.intent.context is not ctx:
            raise ContextMismatch("extent and intent belong to different contexts")
        if (ctx.intent_bits(self.extent.bits) != self.intent.bits
                or ctx.extent_bits(self.intent.bits) != self.extent.bits):
            raise ValueError(f"({self.extent}, {self.intent}) is not a formal concept")

    @property
    def context(self) -> FormalContext:
        return self.extent.context

    @classmethod
    def from_intent_bits(cls, ctx: FormalContext, intent: int) -> FormalConcept:
        extent = ctx.extent_bits(intent)
        return cls(ObjectSet(ctx, extent), AttributeSet(ctx, ctx.intent_bits(extent)))

    @classmethod
    def from_extent_bits(cls, ctx: FormalContext, extent: int) -> FormalConcept:
        intent = ctx.intent_bits(extent)
        return cls(ObjectSet(ctx, ctx.extent_bits(intent)), AttributeSet(ctx, intent))

    def __le__(self, other: FormalConcept) -> bool:
        return is_subconcept(self, other)

    def __lt__(self, other: FormalConcept) -> bool:
        return is_subconcept(self, other) and self.extent.bits != other.extent.bits

    def __str__(self):
        return "({%s}, {%s})" % (", ".join(self.extent.names), ", ".join(self.intent.names))


def object_concept(ctx: FormalContext, name: str) -> FormalConcept:
    """Smallest concept whose extent contains object ``name``."""
    return FormalConcept.from_extent_bits(ctx, 1 << ctx.object_index(name))


def attribute_concept(ctx: FormalContext, name: str) -> FormalConcept:
    """Largest concept whose intent contains attribute ``name``."""
    return FormalConcept.from_intent_bits(ctx, 1 << ctx.attribute_index(name))


def iter_intents(ctx: FormalContext) -> Iterator[int]:
    """Yield every intent (as a bit set) in lectic order.

    Attribute 0 is the most significant position of the lectic order: of two
    intents, the one containing the smallest attribute of their symmetric
    difference comes later.
    """
    n = ctx.n_attributes

    def close(bits: int) -> int:
        return ctx.intent_bits(ctx.extent_bits(bits))

    current = close(0)
    while True:
        yield current
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                current ^= bit
                continue
            candidate = close(current | bit)
            # canonicity test: nothing new below position i
            if candidate & ~current & (bit - 1) == 0:
                current = candidate
                break
        else:
            return


def _lower_covers(ctx: FormalContext, extent: int, intent: int) -> list[int]:
    """Intents of the lower neighbours of the concept (extent, intent)."""
    candidates = set()
    for m in range(ctx.n_attributes):
        if intent >> m & 1:
            continue
        candidates.add(ctx.intent_bits(extent & ctx.column_bits(m)))
    # keep inclusion-minimal intents (maximal extents)
    return [c for c in candidates
            if not any(d != c and d & ~c == 0 for d in candidates)]


class ConceptLattice:
    """All formal concepts of a context with their cover relation.

    ``covers`` holds pairs ``(i, j)`` meaning concept ``i`` is a lower cover
    of concept ``j``; pairs are sorted.
    """

    def __init__(self, context: FormalContext, concepts: Iterable[FormalConcept],
                 covers: Iterable[tuple[int, int]]):
        self.context = context
        self.concepts: tuple[FormalConcept, ...] = tuple(concepts)
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(covers))
        self._by_intent = {c.intent.bits: i for i, c in enumerate(self.concepts)}
        self._upper: list[list[int]] = [[] for _ in self.concepts]
        self._lower: list[list[int]] = [[] for _ in self.concepts]
        for i, j in self.covers:
            self._upper[i].append(j)
            self._lower[j].append(i)

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[FormalConcept]:
        return iter(self.concepts)

    def __getitem__(self, i: int) -> FormalConcept:
        return self.concepts[i]

    def index(self, concept: FormalConcept) -> int:
        if concept.context is not self.context:
            raise ContextMismatch("concept belongs to a different context")
        return self._by_intent[concept.intent.bits]

    def upper_covers(self, i: int) -> list[int]:
        return list(self._upper[i])

    def lower_covers(self, i: int) -> list[int]:
        return list(self._lower[i])

    @property
    def top(self) -> FormalConcept:
        return self.concepts[0]

    @property
    def bottom(self) -> FormalConcept:
        return self.concepts[-1]

    def order_matrix(self) -> np.ndarray:
        """Boolean matrix ``leq[i, j]`` = concept i is a subconcept of concept j."""
        extents = [c.extent.bits for c in self.concepts]
        n = len(extents)
        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(extents):
            for j, b in enumerate(extents):
                leq[i, j] = a & ~b == 0
        return leq

    def __repr__(self):
        return f"<ConceptLattice {len(self)} concepts, {len(self.covers)} covers>"


def enumerate_concepts(ctx: FormalContext,
                       max_concepts: int = DEFAULT_MAX_CONCEPTS) -> ConceptLattice:
    """Compute every concept of ``ctx`` and the cover relation between them.

    Raises
    ------
    CapacityExceeded
        If the context has more than ``max_concepts`` concepts.
    """
    concepts = []
    for intent in iter_intents(ctx):
        if len(concepts) >= max_concepts:
            raise CapacityExceeded(
                f"context has more than {max_concepts} concepts; raise the limit to continue")
        concepts.append(FormalConcept(ObjectSet(ctx, ctx.extent_bits(intent)),
                                      AttributeSet(ctx, intent)))
    index = {c.intent.bits: i for i, c in enumerate(concepts)}
    covers = []
    for j, c in enumerate(concepts):
        for lower in _lower_covers(ctx, c.extent.bits, c.intent.bits):
            covers.append((index[lower], j))
    return ConceptLattice(ctx, concepts, covers)


def transitive_reduction_covers(lattice: ConceptLattice) -> list[tuple[int, int]]:
    """Cover pairs recomputed from the full order by transitive reduction.

    Quadratic in memory and cubic in time; meant for cross-checking the
    neighbourhood-based covers on small lattices.
    """
    leq = lattice.order_matrix()
    lt = leq & ~np.eye(len(leq), dtype=bool)
    lt_int = lt.astype(np.int64)
    via = (lt_int @ lt_int) > 0
    reduced = lt & ~via
    return sorted((int(i), int(j)) for i, j in zip(*np.nonzero(reduced)))


def _same_context(concepts: Iterable[FormalConcept]) -> tuple[FormalContext, list[FormalConcept]]:
    concepts = list(concepts)
    if not concepts:
        raise EmptyInput("need at least one concept")
    ctx = concepts[0].context
    for c in concepts[1:]:
        if c.context is not ctx:
            raise ContextMismatch("concepts belong to different contexts")
    return ctx, concepts


def is_subconcept(c1: FormalConcept, c2: FormalConcept) -> bool:
    """True iff the extent of ``c1`` is contained in the extent of ``c2``."""
    if c1.context is not c2.context:
        raise ContextMismatch("concepts belong to different contexts")
    return c1.extent.bits & ~c2.extent.bits == 0


def meet(concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Greatest common subconcept: intersect extents, derive the intent."""
    ctx, concepts = _same_context(concepts)
    extent = -1
    for c in concepts:
        extent &= c.extent.bits
    return FormalConcept.from_extent_bits(ctx, extent)


def join(concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Least common superconcept: intersect intents, derive the extent."""
    ctx, concepts = _same_context(concepts)
    intent = -1
    for c in concepts:
        intent &= c.intent.bits
    return FormalConcept.from_intent_bits(ctx, intent)


def top(lattice: ConceptLattice) -> FormalConcept:
    return lattice.top


def bottom(lattice: ConceptLattice) -> FormalConcept:
    return lattice.bottom
