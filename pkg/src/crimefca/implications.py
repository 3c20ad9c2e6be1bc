"""Attribute implications and attribute independence."""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import iter_bits
from .context import AttributeSet, FormalContext
from .errors import ContextMismatch

__all__ = ["Implication", "holds", "independent"]


@dataclass(frozen=True)
class Implication:
    """``premise -> conclusion`` over the attributes of one context."""

    premise: AttributeSet
    conclusion: AttributeSet

    def __post_init__(self):
        if self.premise.context is not self.conclusion.context:
            raise ContextMismatch("premise and conclusion belong to different contexts")

    @classmethod
    def from_names(cls, ctx: FormalContext, premise, conclusion) -> Implication:
        return cls(ctx.attribute_set(premise), ctx.attribute_set(conclusion))

    def __str__(self):
        return "{%s} -> {%s}" % (", ".join(self.premise.names), ", ".join(self.conclusion.names))


def _check(ctx: FormalContext, s: AttributeSet) -> None:
    if not isinstance(s, AttributeSet):
        raise TypeError(f"expected AttributeSet, got {type(s).__name__}")
    if s.context is not ctx:
        raise ContextMismatch("attribute set was built against a different context")


def _holds_bits(ctx: FormalContext, premise: int, conclusion: int) -> bool:
    # every object with the premise also has the conclusion
    return ctx.extent_bits(premise) & ~ctx.extent_bits(conclusion) == 0


def holds(ctx: FormalContext, imp: Implication) -> bool:
    """Whether every object having all premise attributes has all conclusion attributes."""
    _check(ctx, imp.premise)
    _check(ctx, imp.conclusion)
    return _holds_bits(ctx, imp.premise.bits, imp.conclusion.bits)


def independent(ctx: FormalContext, attributes: AttributeSet) -> bool:
    """True iff no attribute of the set is implied by the others.

    The check includes the empty premise, so a singleton ``{x}`` is
    independent exactly when some object lacks ``x``.
    """
    _check(ctx, attributes)
    bits = attributes.bits
    return not any(_holds_bits(ctx, bits & ~(1 << m), 1 << m) for m in iter_bits(bits))
