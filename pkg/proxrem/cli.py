#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
proxrem Command Line Interface

Subcommands:
    gen      build a named graph family and print it as graph6
    measure  exact distance invariants of a family or input graphs
    check    evaluate the bound catalog on a family or input graphs
    scan     check the catalog over an enumerated or supplied corpus
    enum     write all connected graphs of an order as graph6
    catalog  print the bound catalog
"""

import argparse
import sys
from typing import Any, Dict, Iterator, List, Optional, Tuple

import yaml

from proxrem.version import __version__
from proxrem.util.errors import (EXIT_IO, EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, EXIT_VIOLATION,
                                 ProxremError)
from proxrem.util.functions import dump_as_json, get_list_from_str, timed


class ShowConfigAction(argparse.Action):
    """Custom action for --show-config: print the effective configuration and exit."""
    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, nargs=0, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        from proxrem.util.config import get_config
        try:
            cfg = get_config(getattr(namespace, "config", None), getattr(namespace, "override", None))
        except FileNotFoundError as e:
            parser.exit(EXIT_IO, f"{e}\n")
        print(cfg.dump_str(), end="")
        parser.exit()


def get_override_dict(override_str: Optional[str]) -> Dict[str, Any]:
    """Parse override string into dictionary.

    Args:
        override_str: comma-separated settings in the format A.B.C=value

    Returns:
        Dict of dotted keys to values; unquoted values are read as YAML scalars
    """
    if override_str is None:
        return {}
    overrides = {}
    for item in override_str.split(","):
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"override '{item}' is not of the form A.B.C=value")
        key, value = item.split("=", 1)
        value = value.strip()
        if value[:1] in ('"', "'"):
            if value[-1:] != value[0]:
                raise argparse.ArgumentTypeError(f"unbalanced quotes in override '{item}'")
            value = value[1:-1]
        else:
            value = yaml.safe_load(value) if value else None
        overrides[key.strip()] = value
    return overrides


def _add_family_args(p: argparse.ArgumentParser, positional: bool = False):
    if positional:
        p.add_argument("family", type=str, help="Family name, see 'proxrem gen --help'")
    else:
        p.add_argument("--family", type=str, default=None, help="Build the input graph from a named family")
    p.add_argument("--delta", type=int, default=None, help="Minimum degree of the layered families")
    p.add_argument("--k", type=int, default=None, help="Block count (layered) or copy count (chain)")
    p.add_argument("--n", type=int, default=None, help="Target order (layered-padded, path, cycle, complete)")
    p.add_argument("--q", type=int, default=None, help="Field order of the polarity families")
    p.add_argument("--a", type=int, default=None, help="First part size (complete-bipartite)")
    p.add_argument("--b", type=int, default=None, help="Second part size (complete-bipartite)")


def _add_input_args(p: argparse.ArgumentParser):
    p.add_argument("--in", dest="input", type=str, default=None, help="Input file (graph6 or edge list)")
    p.add_argument("--format", type=str, choices=["graph6", "edgelist"], default=None,
                   help="Input format; by default edge lists are recognized by suffix (.edges, .el, .txt)")
    p.add_argument("--index", type=int, default=None, help="Only the graph at this 0-based position of a graph6 file")
    _add_family_args(p)
    p.add_argument("--workers", type=int, default=None,
                   help="BFS threads (default from config bfs.workers; 0 = physical cores)")
    p.add_argument("--json", action="store_true", default=False, help="Print JSON report documents")


def _add_filter_arg(p: argparse.ArgumentParser):
    p.add_argument("--filter", type=str, choices=["all", "tf", "c4", "both"], default="all",
                   help="Restrict to triangle-free (tf), C4-free (c4) or both")


def get_parser() -> argparse.ArgumentParser:
    prog_name = "proxrem"
    if sys.argv[0].endswith("proxrem.py"):
        prog_name = "proxrem.py"

    parser = argparse.ArgumentParser(
        description="proxrem - exact proximity/remoteness engine and bound verifier",
        prog=prog_name,
    )
    parser.add_argument("--config", type=str, default=None, help="Path to the configuration file")
    parser.add_argument("--override", type=get_override_dict, default=None,
                        help="Override configuration settings in the format A.B.C=value")
    parser.add_argument("--log", action="store_true", default=False, help="Also write log lines to a file")
    parser.add_argument("--log-file", type=str, default=None, help="Log file path (implies --log)")
    parser.add_argument("--quiet", "-q", action="store_true", default=False,
                        help="Suppress info messages on stderr")
    parser.add_argument("--verbose", "-v", action="store_true", default=False,
                        help="Also print debug messages on stderr")
    parser.add_argument("--version", action="version", version="proxrem Version: " + __version__)
    parser.add_argument("--show-config", action=ShowConfigAction,
                        help="Print the effective configuration and exit (give --config/--override first)")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("gen", help="Build a graph family and print it as graph6")
    _add_family_args(p, positional=True)
    p.add_argument("--out", type=str, default=None, help="Write the graph6 line to this file")

    p = sub.add_parser("measure", help="Compute the invariant report")
    _add_input_args(p)

    p = sub.add_parser("check", help="Evaluate catalog bounds")
    _add_input_args(p)
    p.add_argument("--bounds", type=str, default=None, help="Comma-separated bound ids (default: all)")

    p = sub.add_parser("scan", help="Check the catalog over a corpus")
    p.add_argument("--n", type=int, default=None, help="Enumerate all connected graphs of this order")
    p.add_argument("--in", dest="input", type=str, default=None, help="graph6 corpus file")
    _add_filter_arg(p)
    p.add_argument("--bounds", type=str, default=None, help="Comma-separated bound ids (default: all)")
    p.add_argument("--workers", type=int, default=None, help="Scan processes (default from config scan.workers)")
    p.add_argument("--json", action="store_true", default=False, help="Print the summary as JSON")

    p = sub.add_parser("enum", help="Write all connected graphs of an order as graph6")
    p.add_argument("--n", type=int, required=True, help="Graph order (2..9)")
    _add_filter_arg(p)
    p.add_argument("--out", type=str, required=True, help="Output graph6 file")

    sub.add_parser("catalog", help="Print the bound catalog")
    return parser


def get_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return get_parser().parse_args(argv)


class UsageError(ProxremError):
    exit_code = EXIT_USAGE


def _family_params(args) -> Dict[str, Optional[int]]:
    return {k: getattr(args, k) for k in ("delta", "k", "n", "q", "a", "b") if getattr(args, k) is not None}


def _build(args, name: str):
    from proxrem.constructions import FAMILIES, build_family
    params = _family_params(args)
    extra = sorted(set(params) - set(FAMILIES.get(name, params)))
    if extra:
        from proxrem.util.log import warning
        warning(f"ignoring parameter(s) not used by '{name}': {', '.join('--' + e for e in extra)}")
    return build_family(name, workers=args.workers if hasattr(args, "workers") else None, **params)


def _is_edgelist(path: str, fmt: Optional[str]) -> bool:
    from proxrem.io.edgelist import EDGELIST_SUFFIXES
    if fmt is not None:
        return fmt == "edgelist"
    return path.endswith(EDGELIST_SUFFIXES)


def _report_graph6(g) -> str:
    from proxrem.io.graph6 import graph6_str
    from proxrem.util.config import active_config
    cap = int(active_config().get_value("report.graph6_max_order", 1024))
    return graph6_str(g) if g.order <= cap else ""


def _subjects(args) -> Iterator[Tuple[Any, Any]]:
    """(descriptor, Subject-like construction) pairs for measure/check."""
    from proxrem.checkers import Subject
    from proxrem.constructions import Construction
    from proxrem.io.edgelist import read_edge_list
    from proxrem.io.graph6 import read_graph6_file
    from proxrem.io.report import GraphDescriptor

    if args.input and args.family:
        raise UsageError("give either --in or --family, not both")
    if not args.input and not args.family:
        raise UsageError("an input is required: --in FILE or --family NAME")
    if args.family:
        c = _build(args, args.family)
        yield GraphDescriptor(family=c.family, params=c.params, graph6=_report_graph6(c.graph)), c
        return
    if _is_edgelist(args.input, args.format):
        g = read_edge_list(args.input)
        yield (GraphDescriptor(source=args.input, index=0, graph6=_report_graph6(g)),
               Construction("input", {}, g, (), Subject(g, args.workers)))
        return
    found = False
    for i, g in enumerate(read_graph6_file(args.input)):
        if args.index is not None and i != args.index:
            continue
        found = True
        yield (GraphDescriptor(source=args.input, index=i, graph6=_report_graph6(g)),
               Construction("input", {}, g, (), Subject(g, args.workers)))
    if not found:
        raise UsageError(f"no graph at index {args.index} in {args.input}" if args.index is not None
                         else f"no graphs in {args.input}")


def _emit_reports(docs, as_json: bool):
    from proxrem.io.report import render_table
    from proxrem.util.log import message
    if as_json:
        if len(docs) == 1:
            message(docs[0].to_json())
        else:
            message("[\n" + ",\n".join(d.to_json() for d in docs) + "\n]")
        return
    message("\n\n".join(render_table(d) for d in docs))


def cmd_gen(args) -> int:
    from proxrem.io.graph6 import graph6_str
    from proxrem.util.functions import save_text_file
    from proxrem.util.log import info, message
    c = _build(args, args.family)
    line = graph6_str(c.graph)
    if args.out:
        save_text_file(args.out, line + "\n")
        info(f"wrote {c.label} (order {c.graph.order}) to {args.out}")
    else:
        message(line)
    message(f"# {c.label}: order {c.graph.order}, edges {c.graph.edge_count}")
    for n in c.notes:
        message(f"# {n.line()}")
    return EXIT_OK


def cmd_measure(args) -> int:
    from proxrem.io.report import build_report
    docs = []
    for desc, c in _subjects(args):
        with timed(f"invariants of {desc.label()}"):
            docs.append(build_report(desc, c.report, notes=c.notes))
    _emit_reports(docs, args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    from proxrem.bounds import check_report, select_bounds
    from proxrem.io.report import build_report
    ids = get_list_from_str(args.bounds) or None
    select_bounds(ids)
    docs = []
    for desc, c in _subjects(args):
        docs.append(build_report(desc, c.report, check_report(c.report, ids), c.notes))
    _emit_reports(docs, args.json)
    return EXIT_VIOLATION if any(d.violations for d in docs) else EXIT_OK


def cmd_scan(args) -> int:
    from proxrem.io.graph6 import read_graph6_file
    from proxrem.search import GraphFilter, enumerate_connected, scan
    from proxrem.util.log import message
    if (args.n is None) == (args.input is None):
        raise UsageError("scan needs exactly one of --n N or --in FILE")
    ids = get_list_from_str(args.bounds) or None
    flt = GraphFilter.parse(args.filter)
    if args.input:
        corpus, label = read_graph6_file(args.input), args.input
        if flt != GraphFilter.ALL:
            from proxrem.graph.forbidden import is_c4_free, is_triangle_free
            corpus = (g for g in corpus
                      if (not flt.triangle_free or is_triangle_free(g))
                      and (not flt.c4_free or is_c4_free(g)))
    else:
        corpus, label = enumerate_connected(args.n, flt), f"connected n={args.n} ({flt.value})"
    with timed(f"scan of {label}"):
        summary = scan(corpus, ids, workers=args.workers, label=label)
    message(dump_as_json(summary.as_dict()) if args.json else summary.render())
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_enum(args) -> int:
    from proxrem.io.graph6 import write_graph6_file
    from proxrem.search import GraphFilter, enumerate_connected
    from proxrem.util.log import info
    flt = GraphFilter.parse(args.filter)
    count = write_graph6_file(args.out, enumerate_connected(args.n, flt))
    info(f"wrote {count} connected graphs of order {args.n} ({flt.value}) to {args.out}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    from proxrem.bounds import render_catalog_table
    from proxrem.util.log import message
    message(render_catalog_table())
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "measure": cmd_measure,
    "check": cmd_check,
    "scan": cmd_scan,
    "enum": cmd_enum,
    "catalog": cmd_catalog,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, set up config and logging, dispatch; returns the exit status."""
    from proxrem.util.config import get_config, set_active_config
    from proxrem.util.log import close_log_logger, init_log_logger, set_quiet, set_verbose

    args = get_args(argv)
    set_quiet(args.quiet)
    set_verbose(args.verbose)
    cfg = get_config(args.config, args.override)
    set_active_config(cfg)
    if args.log or args.log_file:
        init_log_logger(log_file=args.log_file or cfg.get_value("log.file", "log/proxrem.log"))
    try:
        return COMMANDS[args.command](args)
    finally:
        close_log_logger()


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point with exception handling."""
    from proxrem.util.log import echo_r
    try:
        code = run(argv)
    except KeyboardInterrupt:
        print("\nproxrem interrupted by user.", file=sys.stderr)
        sys.exit(EXIT_UNEXPECTED)
    except ProxremError as e:
        echo_r(f"Error: {e}")
        sys.exit(e.exit_code)
    except (FileNotFoundError, PermissionError, IsADirectoryError) as e:
        echo_r(f"Error: {e}")
        sys.exit(EXIT_IO)
    except Exception as e:
        import traceback
        echo_r(f"proxrem encountered an error: {e}")
        traceback.print_exc()
        sys.exit(EXIT_UNEXPECTED)
    sys.exit(code)


if __name__ == "__main__":
    main()
