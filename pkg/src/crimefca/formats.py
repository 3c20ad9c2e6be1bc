"""Reading and writing contexts, tables, schemes, cross tabs and diagrams.

Burmeister CXT
    ``B``, a blank (or name) line, the object count, the attribute count, a
    blank line, object names one per line, attribute names one per line,
    then one row per object with ``X`` (incident) or ``.`` per attribute.

CSV tables
    Comma separated with a header row.  The first column holds row names;
    every other header cell is ``name:kind`` with kind ``numeric`` or
    ``categorical`` (``categorical`` when omitted).  Multi-valued
    categorical cells separate their values with ``;``.

Scheme files
    TOML with one ``[[column]]`` table per rule::

        [[column]]
        name = "age"
        kind = "bins"          # or "categorical", "thresholds"
        closed = "left"        # bins only, default "right"
        bins = [["a", -inf, 18], ["b", 18, 40], ["c", 40, inf]]

        [[column]]
        name = "sex"
        kind = "categorical"
        categories = {male = "m", female = "f"}   # or a list of values

        [[column]]
        name = "income"
        kind = "thresholds"
        thresholds = [["lo", 0.25], ["hi", 1.0]]

DOT
    ``digraph`` whose node ids are concept indices; edges run from each
    concept to its lower covers.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Iterable, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .analytics import CrossTab, HotspotReport
from .context import FormalContext
from .errors import (
    DimensionMismatch,
    EmptyHeader,
    IllegalIncidenceChar,
    InvalidScheme,
    MalformedHeader,
    MissingCell,
    NonNumericCell,
    RaggedRow,
)
from .lattice import ConceptLattice, attribute_concept, object_concept
from .scaling import (
    CATEGORICAL,
    NUMERIC,
    Categorical,
    Column,
    IntervalBins,
    ManyValuedTable,
    OrdinalThresholds,
    ScalingScheme,
)

__all__ = [
    "parse_cxt",
    "write_cxt",
    "parse_csv_table",
    "write_csv_table",
    "parse_scheme",
    "write_scheme",
    "export_dot",
    "write_crosstab_csv",
    "parse_crosstab_csv",
    "write_plotdata_csv",
    "write_hotspots_csv",
]


# -- Burmeister CXT --------------------------------------------------------------

def parse_cxt(text: str) -> FormalContext:
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    if len(lines) < 5 or lines[0].strip() != "B":
        raise MalformedHeader("first line must be 'B'")
    try:
        n_obj = int(lines[2].strip())
        n_attr = int(lines[3].strip())
    except ValueError:
        raise MalformedHeader("lines 3 and 4 must hold the object and attribute counts") from None
    if n_obj < 0 or n_attr < 0:
        raise MalformedHeader("counts must be non-negative")
    if lines[4].strip():
        raise MalformedHeader("line 5 must be blank")

    body = lines[5:]
    names_end = n_obj + n_attr
    if len(body) < names_end:
        raise DimensionMismatch(
            f"expected {n_obj} object and {n_attr} attribute names, file ends early")
    objects = body[:n_obj]
    attributes = body[n_obj:names_end]
    rows = body[names_end:names_end + n_obj]
    rest = body[names_end + n_obj:]
    if len(rows) < n_obj:
        if n_attr == 0 and all(not r.strip() for r in rows):
            rows = rows + [""] * (n_obj - len(rows))
        else:
            raise DimensionMismatch(f"expected {n_obj} incidence rows, found {len(rows)}")
    if any(line.strip() for line in rest):
        raise DimensionMismatch("unexpected content after the incidence rows")

    matrix = []
    for g, row in enumerate(rows):
        row = row.rstrip()
        if len(row) != n_attr:
            raise DimensionMismatch(
                f"row {g + 1} ({objects[g]!r}) has {len(row)} marks, expected {n_attr}")
        bad = set(row) - {"X", "."}
        if bad:
            raise IllegalIncidenceChar(
                f"row {g + 1} ({objects[g]!r}) contains {''.join(sorted(bad))!r}")
        matrix.append([ch == "X" for ch in row])
    return FormalContext(objects, attributes, matrix)


def write_cxt(ctx: FormalContext) -> str:
    out = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    out.extend("".join("X" if v else "." for v in row) for row in ctx.incidence)
    return "\n".join(out) + "\n"


# -- CSV tables -------------------------------------------------------------------

def _read_rows(text: str) -> list[list[str]]:
    return [row for row in csv.reader(io.StringIO(text)) if row]


def _write_rows(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def parse_csv_table(text: str) -> ManyValuedTable:
    rows = _read_rows(text)
    if not rows or not any(cell.strip() for cell in rows[0]):
        raise EmptyHeader("CSV has no header row")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2 or not all(header[1:]):
        raise EmptyHeader("header needs a row-name column and at least one named column")
    columns = []
    for spec in header[1:]:
        name, _, kind = spec.partition(":")
        kind = kind.strip() or CATEGORICAL
        if kind not in (NUMERIC, CATEGORICAL):
            raise EmptyHeader(f"column {name!r}: unknown kind {kind!r}")
        columns.append(Column(name.strip(), kind))

    names, cells = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise RaggedRow(f"line {lineno} has {len(row)} fields, header has {len(header)}")
        name = row[0].strip()
        if not name:
            raise MissingCell(f"line {lineno}: empty row name")
        values = []
        for col, raw in zip(columns, row[1:]):
            raw = raw.strip()
            if not raw:
                raise MissingCell(f"line {lineno}, column {col.name!r}: empty cell")
            if col.kind == NUMERIC:
                try:
                    value = float(raw)
                except ValueError:
                    raise NonNumericCell(
                        f"line {lineno}, column {col.name!r}: {raw!r} is not a number") from None
                if not math.isfinite(value):
                    raise NonNumericCell(
                        f"line {lineno}, column {col.name!r}: {raw!r} is not finite")
                values.append(value)
            else:
                values.append(tuple(v.strip() for v in raw.split(";") if v.strip()))
        names.append(name)
        cells.append(values)
    return ManyValuedTable(names, columns, cells)


def write_csv_table(table: ManyValuedTable, row_header: str = "name") -> str:
    def fmt(cell):
        return ";".join(cell) if isinstance(cell, tuple) else repr(cell)

    header = [row_header] + [f"{c.name}:{c.kind}" for c in table.columns]
    body = [[name] + [fmt(c) for c in row] for name, row in zip(table.row_names, table.cells)]
    return _write_rows([header] + body)


# -- scheme files -----------------------------------------------------------------

def parse_scheme(text: str) -> ScalingScheme:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InvalidScheme(f"scheme is not valid TOML: {exc}") from None
    rules = []
    for entry in doc.get("column", []):
        try:
            name, kind = entry["name"], entry["kind"]
            if kind == "categorical":
                rules.append(Categorical(name, entry["categories"]))
            elif kind == "bins":
                rules.append(IntervalBins(name, entry["bins"], entry.get("closed", "right")))
            elif kind == "thresholds":
                rules.append(OrdinalThresholds(name, entry["thresholds"]))
            else:
                raise InvalidScheme(f"column {name!r}: unknown rule kind {kind!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidScheme(f"malformed column entry {entry!r}: {exc}") from None
    if not rules:
        raise InvalidScheme("scheme declares no columns")
    return ScalingScheme(tuple(rules))


def _toml_value(v) -> str:
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_toml_value(x) for x in v) + "]"
    return str(v)


def write_scheme(scheme: ScalingScheme) -> str:
    parts = []
    for rule in scheme.rules:
        lines = ["[[column]]", f"name = {_toml_value(rule.column)}"]
        if isinstance(rule, Categorical):
            cats = ", ".join(f"{_toml_value(k)} = {_toml_value(v)}" for k, v in rule.categories)
            lines += ['kind = "categorical"', f"categories = {{{cats}}}"]
        elif isinstance(rule, IntervalBins):
            lines += ['kind = "bins"', f"closed = {_toml_value(rule.closed)}",
                      f"bins = {_toml_value(rule.bins)}"]
        else:
            lines += ['kind = "thresholds"', f"thresholds = {_toml_value(rule.thresholds)}"]
        parts.append("\n".join(lines) + "\n")
    return "\n".join(parts)


# -- DOT --------------------------------------------------------------------------

def _dot_string(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _reduced_labels(lattice: ConceptLattice) -> list[tuple[list[str], list[str]]]:
    ctx = lattice.context
    labels = [([], []) for _ in lattice.concepts]
    for m in ctx.attributes:
        labels[lattice.index(attribute_concept(ctx, m))][0].append(m)
    for g in ctx.objects:
        labels[lattice.index(object_concept(ctx, g))][1].append(g)
    return labels


def export_dot(lattice: ConceptLattice, labeling: str = "reduced") -> str:
    """Line diagram of ``lattice`` as a Graphviz document.

    ``labeling="reduced"`` writes each attribute on its attribute concept and
    each object on its object concept; ``"full"`` writes every extent and
    intent in full.
    """
    if labeling == "reduced":
        labels = _reduced_labels(lattice)
    elif labeling == "full":
        labels = [(list(c.intent.names), list(c.extent.names)) for c in lattice.concepts]
    else:
        raise ValueError(f"labeling must be 'reduced' or 'full', not {labeling!r}")

    out = ["digraph lattice {", "  rankdir=TB;", "  node [shape=box];"]
    for i, (attrs, objs) in enumerate(labels):
        if labeling == "full":
            text = "{%s}\n{%s}" % (", ".join(objs), ", ".join(attrs))
        else:
            text = "\n".join(part for part in (", ".join(attrs), ", ".join(objs)) if part)
        out.append(f"  {i} [label={_dot_string(text)}];")
    for lower, upper in sorted(lattice.covers, key=lambda e: (e[1], e[0])):
        out.append(f"  {upper} -> {lower};")
    out.append("}")
    return "\n".join(out) + "\n"


# -- analytics output ---------------------------------------------------------

def write_crosstab_csv(xt: CrossTab, corner: str = "location") -> str:
    rows = [[corner, *xt.col_labels, "Total"]]
    for label, counts, total in zip(xt.row_labels, xt.counts, xt.row_totals):
        rows.append([label, *(int(c) for c in counts), int(total)])
    rows.append(["Total", *(int(c) for c in xt.col_totals), xt.grand_total])
    return _write_rows(rows)


def parse_crosstab_csv(text: str) -> CrossTab:
    """Inverse of :func:`write_crosstab_csv`; totals are checked, not trusted."""
    rows = _read_rows(text)
    if not rows or len(rows[0]) < 2 or rows[0][-1].strip() != "Total":
        raise EmptyHeader("cross-tab header must end with a 'Total' column")
    crimes = [c.strip() for c in rows[0][1:-1]]
    width = len(rows[0])
    if not rows[-1] or rows[-1][0].strip() != "Total":
        raise DimensionMismatch("cross-tab must end with a 'Total' row")
    locations, counts = [], []
    for row in rows[1:]:
        if len(row) != width:
            raise RaggedRow(f"cross-tab row {row!r} has {len(row)} fields, expected {width}")
        try:
            values = [int(v) for v in row[1:]]
        except ValueError:
            raise NonNumericCell(f"cross-tab row {row[0]!r} holds a non-integer count") from None
        if row[0].strip() == "Total":
            totals = values
            continue
        locations.append(row[0].strip())
        counts.append(values[:-1])
        if sum(values[:-1]) != values[-1]:
            raise DimensionMismatch(f"row total for {row[0]!r} does not match its counts")
    xt = CrossTab(tuple(locations), tuple(crimes), counts)
    if [*map(int, xt.col_totals), xt.grand_total] != totals:
        raise DimensionMismatch("'Total' row does not match the column sums")
    return xt


def write_plotdata_csv(points: Iterable[tuple[str, int]]) -> str:
    return _write_rows([["location", "count"], *points])


def write_hotspots_csv(report: HotspotReport) -> str:
    return _write_rows([["rank", "location", "score"],
                        *((i + 1, loc, score) for i, (loc, score) in enumerate(report.ranking))])
