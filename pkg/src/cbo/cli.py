"""Command-line front end: ``cbo <command> ...``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on
success, 1 when ``verify`` rejects an ordering, and 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families
from .constructions import construct
from .density import density, is_uniformly_dense
from .errors import CBOError, FormatError
from .families import FamilySpec
from .fixtures import write_fixtures
from .graph import (
    Graph,
    EdgeOrdering,
    export_dot,
    format_graph,
    format_ordering,
    parse_graph,
    parse_ordering,
)
from .search import DEFAULT_NODE_LIMIT, find_cbo
from .verify import ENGINES, verify

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2


class UsageError(CBOError):
    pass


def _parse_params(items: list[str]) -> dict[str, int]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"expected key=value, got {item!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {value!r}") from None
    return params


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    if args.family not in families.FAMILIES:
        raise UsageError(
            f"unknown family {args.family!r}; choose from {', '.join(families.FAMILIES)}"
        )
    params = _parse_params(args.params)
    for key in ("n", "t", "r", "seed"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.family == "max2deg" and "seed" not in params:
        raise UsageError("max2deg draws a random trace and needs an explicit --seed")
    return FamilySpec(args.family, params)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_ordering(path: str) -> EdgeOrdering:
    try:
        return parse_ordering(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_gen(args) -> int:
    spec = _family_spec(args)
    g, _ = families.generate(spec)
    _emit(format_graph(g, [spec.header()]), args.output)
    return EXIT_OK


def cmd_cbo(args) -> int:
    spec = _family_spec(args)
    g, o = construct(spec)
    prefix = Path(args.out)
    graph_path = prefix.with_name(prefix.name + ".graph")
    order_path = prefix.with_name(prefix.name + ".order")
    graph_path.write_text(format_graph(g, [spec.header()]))
    order_path.write_text(format_ordering(o))
    print(graph_path)
    print(order_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    o = _load_ordering(args.ordering)
    report = verify(g, o, args.engine)
    print(report)
    return EXIT_OK if report.is_cbo else EXIT_REJECTED


def cmd_density(args) -> int:
    g = _load_graph(args.graph)
    print(density(g))
    if args.uniform:
        ok, witness = is_uniformly_dense(g)
        if ok:
            print("uniformly-dense")
        else:
            print("not-uniformly-dense witness=" + ",".join(map(str, witness)))
    return EXIT_OK


def cmd_search(args) -> int:
    g = _load_graph(args.graph)
    if args.node_limit < 1:
        raise UsageError("--node-limit must be positive")
    print(find_cbo(g, args.node_limit))
    return EXIT_OK


def cmd_dot(args) -> int:
    g = _load_graph(args.graph)
    o = _load_ordering(args.ordering) if args.ordering else None
    sys.stdout.write(export_dot(g, o))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for path in write_fixtures(args.out):
        print(path)
    return EXIT_OK


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", help=f"one of: {', '.join(families.FAMILIES)}")
    p.add_argument("--params", nargs="*", default=[], metavar="K=V")
    for key in ("n", "t", "r", "seed"):
        p.add_argument(f"--{key}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbo", description="Construct and verify cyclic base orderings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph")
    _add_family_args(p)
    p.add_argument("-o", "--output", help="graph file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cbo", help="write a family graph and its constructed ordering")
    _add_family_args(p)
    p.add_argument("--out", default="cbo", help="path prefix for .graph and .order files")
    p.set_defaults(func=cmd_cbo)

    p = sub.add_parser("verify", help="check whether an ordering is a CBO")
    p.add_argument("graph")
    p.add_argument("ordering")
    p.add_argument("--engine", choices=sorted(ENGINES), default="lct")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("density", help="exact density and uniform-density check")
    p.add_argument("graph")
    p.add_argument("--uniform", action="store_true")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("search", help="exhaustive search for a CBO")
    p.add_argument("graph")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dot", help="Graphviz export")
    p.add_argument("graph")
    p.add_argument("--ordering", help="label edges with their positions")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("fixtures", help="write the bundled figure orderings")
    p.add_argument("--out", default="fixtures", help="output directory")
    p.set_defaults(func=cmd_fixtures)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except CBOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
