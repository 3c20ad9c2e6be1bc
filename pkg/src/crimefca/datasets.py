"""The persons-by-crime and locations-by-economy data sets.

Both are shipped twice: as binary contexts (``table1.cxt``, ``table2.cxt``)
and as raw many-valued CSV tables (``crimes.csv``, ``locations.csv``) whose
values are synthesized to fall in the published bins.  Scaling the raw tables
with the builtin schemes reproduces the binary contexts exactly.
"""

from __future__ import annotations

from importlib import resources

from .context import FormalContext, build_context

__all__ = [
    "TABLE1_ATTRIBUTES",
    "TABLE1_ROWS",
    "TABLE2_ATTRIBUTES",
    "TABLE2_ROWS",
    "CRIME_TYPES",
    "LOCATIONS",
    "table1_context",
    "table2_context",
    "read_text",
    "load_table1",
    "load_table2",
    "load_crime_table",
    "load_location_table",
]

CRIME_TYPES = ("c1", "c2", "c3", "c4")
LOCATIONS = ("g1", "g2", "g3", "g4", "g5")

TABLE1_ATTRIBUTES = ("a", "b", "c", "m", "f", *CRIME_TYPES, *LOCATIONS)
TABLE1_ROWS = {
    "P1": ("a", "m", "c1", "c3", "g1"),
    "P2": ("a", "f", "c1", "c4", "g3"),
    "P3": ("b", "f", "c1", "c3", "g5"),
    "P4": ("a", "m", "c1", "c2", "g3"),
    "P5": ("c", "m", "c1", "c2", "g1"),
    "P6": ("b", "m", "c2", "c4", "g1"),
    "P7": ("a", "f", "c3", "g1"),
    "P8": ("b", "f", "c4", "g2"),
    "P9": ("a", "m", "c1", "c4", "g4"),
}

TABLE2_ATTRIBUTES = tuple("abcdefghijklmn")
TABLE2_ROWS = {
    "g1": ("a", "e", "k"),
    "g2": ("b", "f", "l"),
    "g3": ("a", "e", "m"),
    "g4": ("a", "e", "n"),
    "g5": ("c", "f", "j"),
}


def _from_rows(attributes, rows) -> FormalContext:
    return build_context(list(rows), attributes,
                         [(g, m) for g, marks in rows.items() for m in marks])


def table1_context() -> FormalContext:
    """Persons P1..P9 against age, sex, crime type and location."""
    return _from_rows(TABLE1_ATTRIBUTES, TABLE1_ROWS)


def table2_context() -> FormalContext:
    """Locations g1..g5 against income, education and population index bins."""
    return _from_rows(TABLE2_ATTRIBUTES, TABLE2_ROWS)


def read_text(name: str) -> str:
    """Contents of a shipped data file, e.g. ``read_text("table1.cxt")``."""
    return resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")


def load_table1() -> FormalContext:
    from .formats import parse_cxt
    return parse_cxt(read_text("table1.cxt"))


def load_table2() -> FormalContext:
    from .formats import parse_cxt
    return parse_cxt(read_text("table2.cxt"))


def load_crime_table():
    from .formats import parse_csv_table
    return parse_csv_table(read_text("crimes.csv"))


def load_location_table():
    from .formats import parse_csv_table
    return parse_csv_table(read_text("locations.csv"))
