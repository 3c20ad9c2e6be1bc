"""Crime analytics over scaled contexts.

Location-by-crime cross tabulation, hotspot ranking, and a concept based
co-occurrence score that counts how many concepts pair a location with some
crime type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .context import FormalContext
from .errors import NonPartition, UnknownAttribute
from .lattice import ConceptLattice

__all__ = [
    "CrossTab",
    "HotspotReport",
    "cross_tab",
    "hotspots",
    "concept_cooccurrence_score",
    "plot_data",
]


@dataclass(frozen=True)
class CrossTab:
    """Counts of objects carrying both a location and a crime attribute."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self):
        counts = np.array(self.counts, dtype=np.int64).reshape(
            len(self.row_labels), len(self.col_labels))
        if (counts < 0).any():
            raise ValueError("counts must be non-negative")
        counts.setflags(write=False)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "counts", counts)

    @property
    def row_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_totals(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def grand_total(self) -> int:
        return int(self.counts.sum())

    def count(self, location: str, crime: str) -> int:
        return int(self.counts[self.row_labels.index(location), self.col_labels.index(crime)])

    def __eq__(self, other):
        if not isinstance(other, CrossTab):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and np.array_equal(self.counts, other.counts))

    __hash__ = None


@dataclass(frozen=True)
class HotspotReport:
    """Locations ranked by crime count, highest first, ties by name."""

    ranking: tuple[tuple[str, int], ...]

    @property
    def top(self) -> tuple[str, int]:
        return self.ranking[0]

    def __iter__(self):
        return iter(self.ranking)


def _attribute_columns(ctx: FormalContext, names: Sequence[str]) -> list[int]:
    cols = []
    for name in names:
        if name not in ctx.attributes:
            raise UnknownAttribute(f"unknown attribute {name!r}")
        cols.append(ctx.attributes.index(name))
    return cols


def cross_tab(ctx: FormalContext, locations: Sequence[str], crimes: Sequence[str]) -> CrossTab:
    """Count objects having each (location, crime) attribute pair.

    Every object must carry exactly one of the location attributes, otherwise
    :class:`NonPartition` is raised.
    """
    loc_cols = _attribute_columns(ctx, locations)
    crime_cols = _attribute_columns(ctx, crimes)
    loc = ctx.incidence[:, loc_cols].astype(np.int64)
    per_object = loc.sum(axis=1)
    bad = np.flatnonzero(per_object != 1)
    if bad.size:
        g = int(bad[0])
        raise NonPartition(
            f"object {ctx.objects[g]!r} has {int(per_object[g])} location marks, expected 1")
    crime = ctx.incidence[:, crime_cols].astype(np.int64)
    return CrossTab(tuple(locations), tuple(crimes), loc.T @ crime)


def hotspots(xt: CrossTab) -> HotspotReport:
    """Rank locations by their row total."""
    scores = [(name, int(total)) for name, total in zip(xt.row_labels, xt.row_totals)]
    return HotspotReport(tuple(sorted(scores, key=lambda s: (-s[1], s[0]))))


def concept_cooccurrence_score(lattice: ConceptLattice, focus: str,
                               companions: Sequence[str]) -> int:
    """Number of concepts whose intent holds ``focus`` and at least one companion."""
    ctx = lattice.context
    focus_bit = 1 << _attribute_columns(ctx, [focus])[0]
    companion_bits = 0
    for m in _attribute_columns(ctx, companions):
        companion_bits |= 1 << m
    return sum(1 for c in lattice.concepts
               if c.intent.bits & focus_bit and c.intent.bits & companion_bits)


def plot_data(xt: CrossTab) -> list[tuple[str, int]]:
    """Per-location crime counts in table order, ready for a bar chart."""
    return [(name, int(total)) for name, total in zip(xt.row_labels, xt.row_totals)]
