"""Conceptual scaling: turning many-valued tables into formal contexts.

Each column of a :class:`ManyValuedTable` is translated by one rule of a
:class:`ScalingScheme` into a group of binary attributes:

* :class:`Categorical` -- one attribute per category value; a multi-valued
  cell marks one attribute per member.
* :class:`IntervalBins` -- disjoint numeric bins, exactly one mark per row.
* :class:`OrdinalThresholds` -- cumulative thresholds; a value marks every
  attribute whose threshold is at least the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from .context import FormalContext
from .errors import (
    DuplicateName,
    InvalidScheme,
    InvalidTable,
    MissingCell,
    NonNumericCell,
    UncoveredColumn,
    UnknownCategory,
    ValueOutOfRange,
)

__all__ = [
    "NUMERIC",
    "CATEGORICAL",
    "Column",
    "ManyValuedTable",
    "Categorical",
    "IntervalBins",
    "OrdinalThresholds",
    "ScalingScheme",
    "scale",
    "builtin_crime_scheme",
    "builtin_geo_scheme",
]

NUMERIC = "numeric"
CATEGORICAL = "categorical"

Cell = Union[float, tuple]


@dataclass(frozen=True)
class Column:
    name: str
    kind: str = CATEGORICAL

    def __post_init__(self):
        if self.kind not in (NUMERIC, CATEGORICAL):
            raise InvalidTable(f"column {self.name!r}: unknown kind {self.kind!r}")


class ManyValuedTable:
    """Rows of named records with numeric or categorical cells.

    Numeric cells are stored as floats and must be finite.  Categorical cells
    are stored as tuples of strings; a plain string is a one-element cell and
    an iterable of strings is a multi-valued cell.
    """

    def __init__(self, row_names: Sequence[str], columns: Sequence[Column | tuple[str, str]],
                 cells: Sequence[Sequence]):
        self.row_names = tuple(row_names)
        if len(set(self.row_names)) != len(self.row_names):
            dup = next(r for r in self.row_names if self.row_names.count(r) > 1)
            raise DuplicateName(f"row name {dup!r} appears twice")
        self.columns = tuple(c if isinstance(c, Column) else Column(*c) for c in columns)
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise DuplicateName("column names must be unique")
        if len(cells) != len(self.row_names):
            raise InvalidTable(f"{len(cells)} cell rows for {len(self.row_names)} row names")
        rows = []
        for r, row in zip(self.row_names, cells):
            if len(row) != len(self.columns):
                raise InvalidTable(
                    f"row {r!r} has {len(row)} cells, expected {len(self.columns)}")
            rows.append(tuple(self._cell(r, col, v) for col, v in zip(self.columns, row)))
        self.cells: tuple[tuple[Cell, ...], ...] = tuple(rows)

    @staticmethod
    def _cell(row: str, col: Column, value) -> Cell:
        where = f"row {row!r}, column {col.name!r}"
        if col.kind == NUMERIC:
            if value is None or isinstance(value, (bool, str)):
                raise NonNumericCell(f"{where}: {value!r} is not a number")
            v = float(value)
            if not math.isfinite(v):
                raise NonNumericCell(f"{where}: {value!r} is not finite")
            return v
        values = (value,) if isinstance(value, str) else tuple(value)
        values = tuple(dict.fromkeys(values))
        if not values or any(not isinstance(v, str) or not v for v in values):
            raise MissingCell(f"{where}: empty or non-string categorical cell {value!r}")
        return values

    @property
    def n_rows(self) -> int:
        return len(self.row_names)

    def column_index(self, name: str) -> int:
        for i, col in enumerate(self.columns):
            if col.name == name:
                return i
        raise UncoveredColumn(f"table has no column {name!r}")

    def column_values(self, name: str) -> list[Cell]:
        i = self.column_index(name)
        return [row[i] for row in self.cells]

    def __repr__(self):
        cols = ", ".join(f"{c.name}:{c.kind}" for c in self.columns)
        return f"<ManyValuedTable {self.n_rows} rows [{cols}]>"


# -- scaling rules -------------------------------------------------------------

@dataclass(frozen=True)
class Categorical:
    """One attribute per category.

    ``categories`` maps cell values to attribute names; a plain sequence uses
    each value as its own attribute name.
    """

    column: str
    categories: tuple[tuple[str, str], ...]
    kind = CATEGORICAL

    def __init__(self, column: str, categories: Mapping[str, str] | Sequence[str]):
        if isinstance(categories, Mapping):
            pairs = tuple((str(k), str(v)) for k, v in categories.items())
        else:
            pairs = tuple((str(v), str(v)) for v in categories)
        if len({k for k, _ in pairs}) != len(pairs):
            raise InvalidScheme(f"column {column!r}: repeated category value")
        object.__setattr__(self, "column", column)
        object.__setattr__(self, "categories", pairs)

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(attr for _, attr in self.categories))

    def marks(self, cell: tuple[str, ...]) -> list[str]:
        lookup = dict(self.categories)
        out = []
        for value in cell:
            if value not in lookup:
                raise UnknownCategory(f"column {self.column!r}: unknown category {value!r}")
            out.append(lookup[value])
        return out


@dataclass(frozen=True)
class IntervalBins:
    """Disjoint numeric bins ``(attribute, lower, upper)`` in increasing order.

    With ``closed="right"`` a bin is ``(lower, upper]``; with
    ``closed="left"`` it is ``[lower, upper)``.  Bounds may be infinite.
    """

    column: str
    bins: tuple[tuple[str, float, float], ...]
    closed: str = "right"
    kind = NUMERIC

    def __init__(self, column: str, bins: Sequence[tuple[str, float, float]],
                 closed: str = "right"):
        if closed not in ("right", "left"):
            raise InvalidScheme(f"column {column!r}: closed must be 'right' or 'left'")
        norm = tuple((str(name), float(lo), float(hi)) for name, lo, hi in bins)
        if not norm:
            raise InvalidScheme(f"column {column!r}: no bins")
        for name, lo, hi in norm:
            if not lo < hi:
                raise InvalidScheme(f"column {column!r}: bin {name!r} is empty ({lo}, {hi})")
        for (n1, _, hi1), (n2, lo2, _) in zip(norm, norm[1:]):
            if hi1 > lo2:
                raise InvalidScheme(
                    f"column {column!r}: bins {n1!r} and {n2!r} overlap or are out of order")
        object.__setattr__(self, "column", column)
        object.__setattr__(self, "bins", norm)
        object.__setattr__(self, "closed", closed)

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(name for name, _, _ in self.bins)

    def marks(self, value: float) -> list[str]:
        for name, lo, hi in self.bins:
            inside = lo < value <= hi if self.closed == "right" else lo <= value < hi
            if inside:
                return [name]
        raise ValueOutOfRange(f"column {self.column!r}: {value} falls in no bin")


@dataclass(frozen=True)
class OrdinalThresholds:
    """Cumulative thresholds ``(attribute, threshold)``, strictly increasing.

    A value ``v`` marks every attribute whose threshold is ``>= v``, so the
    marks of a row are upward closed.
    """

    column: str
    thresholds: tuple[tuple[str, float], ...]
    kind = NUMERIC

    def __init__(self, column: str, thresholds: Sequence[tuple[str, float]]):
        norm = tuple((str(name), float(t)) for name, t in thresholds)
        if not norm:
            raise InvalidScheme(f"column {column!r}: no thresholds")
        if any(t1 >= t2 for (_, t1), (_, t2) in zip(norm, norm[1:])):
            raise InvalidScheme(f"column {column!r}: thresholds must be strictly increasing")
        object.__setattr__(self, "column", column)
        object.__setattr__(self, "thresholds", norm)

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.thresholds)

    def marks(self, value: float) -> list[str]:
        if value > self.thresholds[-1][1]:
            raise ValueOutOfRange(
                f"column {self.column!r}: {value} exceeds the largest threshold")
        return [name for name, t in self.thresholds if t >= value]


Rule = Union[Categorical, IntervalBins, OrdinalThresholds]


@dataclass(frozen=True)
class ScalingScheme:
    """One rule per input column; output attributes follow rule order."""

    rules: tuple[Rule, ...] = field(default_factory=tuple)

    def __post_init__(self):
        rules = tuple(self.rules)
        object.__setattr__(self, "rules", rules)
        columns = [r.column for r in rules]
        if len(set(columns)) != len(columns):
            raise InvalidScheme("more than one rule for the same column")
        seen = set()
        for rule in rules:
            for attr in rule.attributes:
                if attr in seen:
                    raise InvalidScheme(f"output attribute {attr!r} produced by two rules")
                seen.add(attr)

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(a for r in self.rules for a in r.attributes)

    def rule_for(self, column: str) -> Rule:
        for rule in self.rules:
            if rule.column == column:
                return rule
        raise UncoveredColumn(f"scheme has no rule for column {column!r}")


def scale(table: ManyValuedTable, scheme: ScalingScheme) -> FormalContext:
    """Apply ``scheme`` to every row of ``table``.

    The rows become the objects and the scheme's output attributes, in rule
    order, become the attributes.
    """
    table_cols = {c.name: c for c in table.columns}
    for rule in scheme.rules:
        if rule.column not in table_cols:
            raise UncoveredColumn(f"scheme rule for {rule.column!r} matches no table column")
        if table_cols[rule.column].kind != rule.kind:
            raise InvalidScheme(
                f"column {rule.column!r} is {table_cols[rule.column].kind} "
                f"but its rule is {type(rule).__name__}")
    plan = [(table.column_index(c.name), scheme.rule_for(c.name)) for c in table.columns]

    attributes = scheme.attributes
    position = {a: j for j, a in enumerate(attributes)}
    matrix = np.zeros((table.n_rows, len(attributes)), dtype=bool)
    for g, row in enumerate(table.cells):
        for col, rule in plan:
            for attr in rule.marks(row[col]):
                matrix[g, position[attr]] = True
    return FormalContext(table.row_names, attributes, matrix)


def builtin_crime_scheme() -> ScalingScheme:
    """Age, sex, crime type and location coding of the persons-by-crime table.

    Ages are binned as ``a`` below 18, ``b`` from 18 up to (not including) 40
    and ``c`` from 40 on.  Crime types map drugs, rape, burglary and robbery
    to ``c1``..``c4``; locations ``g1``..``g5`` stand for themselves.
    """
    inf = math.inf
    return ScalingScheme((
        IntervalBins("age", [("a", -inf, 18), ("b", 18, 40), ("c", 40, inf)], closed="left"),
        Categorical("sex", {"male": "m", "female": "f"}),
        Categorical("crime", {"drugs": "c1", "rape": "c2", "burglary": "c3", "robbery": "c4"}),
        Categorical("location", ["g1", "g2", "g3", "g4", "g5"]),
    ))


def builtin_geo_scheme() -> ScalingScheme:
    """Income, education and population index bins of the locations table.

    Income uses quarter-width bins ``a``..``d``; education (``e``..``i``) and
    population (``j``..``n``) use fifth-width bins.  All bins are closed on
    the right, so an index of exactly 0.25 is income ``a``.
    """
    quarters = [0.0, 0.25, 0.5, 0.75, 1.0]
    fifths = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]

    def bins(names, edges):
        return [(n, lo, hi) for n, lo, hi in zip(names, edges, edges[1:])]

    return ScalingScheme((
        IntervalBins("income", bins("abcd", quarters)),
        IntervalBins("education", bins("efghi", fifths)),
        IntervalBins("population", bins("jklmn", fifths)),
    ))
