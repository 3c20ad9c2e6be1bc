"""Command line interface: ``crimefca <subcommand> [options]``.

Exit status is 0 on success, 1 on a domain error (reported on stderr as
``ERROR <kind>: <detail>``) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import datasets
from .analytics import cross_tab, hotspots, plot_data
from .context import derive_attributes, derive_objects
from .errors import FCAError
from .formats import (
    export_dot,
    parse_crosstab_csv,
    parse_csv_table,
    parse_cxt,
    parse_scheme,
    write_crosstab_csv,
    write_cxt,
    write_hotspots_csv,
    write_plotdata_csv,
)
from .implications import Implication, holds, independent
from .lattice import DEFAULT_MAX_CONCEPTS, enumerate_concepts
from .scaling import builtin_crime_scheme, builtin_geo_scheme, scale

BUILTIN_SCHEMES = {
    "builtin-crime": builtin_crime_scheme,
    "builtin-geo": builtin_geo_scheme,
}


def _names(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_scheme(value: str):
    if value in BUILTIN_SCHEMES:
        return BUILTIN_SCHEMES[value]()
    return parse_scheme(_read_input(value))


def _cmd_scale(args) -> str:
    table = parse_csv_table(_read_input(args.input))
    return write_cxt(scale(table, _load_scheme(args.scheme)))


def _cmd_concepts(args) -> str:
    lattice = enumerate_concepts(parse_cxt(_read_input(args.input)), args.max_concepts)
    if args.count:
        return f"{len(lattice)}\n"
    lines = [f"{i}\t{','.join(c.extent.names)}\t{','.join(c.intent.names)}"
             for i, c in enumerate(lattice)]
    return "\n".join(lines) + "\n"


def _cmd_lattice(args) -> str:
    lattice = enumerate_concepts(parse_cxt(_read_input(args.input)), args.max_concepts)
    return export_dot(lattice, args.labels)


def _cmd_derive(args) -> str:
    ctx = parse_cxt(_read_input(args.input))
    if args.objects is not None:
        result = derive_objects(ctx, ctx.object_set(_names(args.objects)))
    else:
        result = derive_attributes(ctx, ctx.attribute_set(_names(args.attributes)))
    return ",".join(result.names) + "\n"


def _crosstab(args):
    ctx = parse_cxt(_read_input(args.input))
    return cross_tab(ctx, _names(args.locations), _names(args.crimes))


def _cmd_crosstab(args) -> str:
    return write_crosstab_csv(_crosstab(args))


def _cmd_hotspots(args) -> str:
    return write_hotspots_csv(hotspots(_crosstab(args)))


def _cmd_implication(args) -> str:
    ctx = parse_cxt(_read_input(args.input))
    if args.action == "independent":
        if args.attributes is None:
            raise _UsageError("implication independent needs --attributes")
        ok = independent(ctx, ctx.attribute_set(_names(args.attributes)))
        return ("independent" if ok else "dependent") + "\n"
    if args.premise is None or args.conclusion is None:
        raise _UsageError("implication check needs --premise and --conclusion")
    imp = Implication.from_names(ctx, _names(args.premise), _names(args.conclusion))
    return ("holds" if holds(ctx, imp) else "fails") + "\n"


def _cmd_plotdata(args) -> str:
    return write_plotdata_csv(plot_data(parse_crosstab_csv(_read_input(args.input))))


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crimefca",
        description="Formal concept analysis of crime and geographic data.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, input_help="CXT file ('-' for stdin)"):
        p = sub.add_parser(name, help=help, description=help)
        p.add_argument("-i", "--input", default="-", help=input_help)
        p.add_argument("-o", "--output", default="-", help="output file ('-' for stdout)")
        p.set_defaults(func=func)
        return p

    p = add("scale", _cmd_scale, "scale a CSV table into a CXT context",
            input_help="CSV table ('-' for stdin)")
    p.add_argument("--scheme", required=True,
                   help="scheme file, or builtin-crime / builtin-geo")

    for name, func, help in (("concepts", _cmd_concepts, "list all formal concepts"),
                             ("lattice", _cmd_lattice, "write the concept lattice as DOT")):
        p = add(name, func, help)
        p.add_argument("--max-concepts", type=int, default=DEFAULT_MAX_CONCEPTS)
        if name == "concepts":
            p.add_argument("--count", action="store_true", help="print only the concept count")
        else:
            p.add_argument("--labels", choices=("reduced", "full"), default="reduced")

    p = add("derive", _cmd_derive, "derive an object or attribute set")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--objects", help="comma separated object names")
    group.add_argument("--attributes", help="comma separated attribute names")

    for name, func, help in (("crosstab", _cmd_crosstab, "location x crime counts as CSV"),
                             ("hotspots", _cmd_hotspots, "rank locations by crime count")):
        p = add(name, func, help)
        p.add_argument("--locations", default=",".join(datasets.LOCATIONS))
        p.add_argument("--crimes", default=",".join(datasets.CRIME_TYPES))

    p = add("implication", _cmd_implication, "check an implication or attribute independence")
    p.add_argument("action", nargs="?", choices=("check", "independent"), default="check")
    p.add_argument("--premise", help="comma separated attribute names")
    p.add_argument("--conclusion", help="comma separated attribute names")
    p.add_argument("--attributes", help="attribute names for 'independent'")

    add("plotdata", _cmd_plotdata, "per-location crime counts from a cross-tab CSV",
        input_help="cross-tab CSV ('-' for stdin)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except FCAError as exc:
        print(f"ERROR {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ERROR IOError: {exc}", file=sys.stderr)
        return 1
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
