"""Command-line front end: single runs, parameter sweeps, and file exports.

Subcommands:
  generate    build one network and write its edge list plus a run manifest
  analyze     read an edge list, write a metrics report and CCDF data file
  sweep       run a replicated parameter sweep into an output directory
  export-dot  write the giant component (or full projection) as a DOT file

Every flag can also be supplied through ``--config FILE`` (simple
``key = value`` lines); flags given on the command line win over the file.

Exit codes: 0 success, 1 usage or parameter error, 2 I/O error,
3 analysis error (malformed or degenerate input data).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .errors import (
    ConnectivityError,
    EdgeListFormatError,
    EmptyDistributionError,
    InsufficientDataError,
    ParameterError,
)
from .generator import ModelParams, Variant, derive_seed, generate
from .graph import giant_component, read_edge_list, undirected_projection, write_edge_list
from .hidden_tree import TreeParams, build_tree, write_tree_dump
from .metrics import (
    ALL,
    compute_report,
    degree_ccdf,
    fit_power_law_mle,
    format_report,
    report_to_dict,
    write_ccdf,
)

__all__ = ["main", "run", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_ANALYSIS = 3

_SWEEP_KINDS = ("nodes", "branching", "activity")

_BOOL_WORDS = {
    "true": True,
    "yes": True,
    "1": True,
    "false": False,
    "no": False,
    "0": False,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _path_samples_arg(text: str):
    if text == "all":
        return ALL
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'all', got {text!r}"
        ) from None
    if value < 1:
        raise argparse.ArgumentTypeError("path samples must be >= 1")
    return value


def _fit_kmax_arg(text: str):
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'auto', got {text!r}"
        ) from None


def _values_arg(text: str) -> list[str]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of values")
    return items


def _add_config_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config",
        metavar="FILE",
        help="key=value file supplying defaults for any flag of this subcommand",
    )


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nodes", type=int, help="number of nodes N")
    parser.add_argument("--branching", type=float, help="average children per tree node")
    parser.add_argument(
        "--activity", type=float, help="expected destination selections per active node"
    )
    parser.add_argument("--seed", type=int, default=0, help="selection RNG master seed")
    parser.add_argument(
        "--tree-seed", type=int, default=None, help="tree construction seed (default: --seed)"
    )
    parser.add_argument(
        "--variant",
        choices=("all", "leaf"),
        default="all",
        help="which nodes select destinations: every node, or leaves only",
    )
    parser.add_argument(
        "--include-tree-edges",
        action="store_true",
        help="seed the graph with every tree edge in both directions",
    )


def _add_fit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--fit-kmin", type=int, default=2, help="lower degree bound of the power-law fit"
    )
    parser.add_argument(
        "--fit-kmax",
        type=_fit_kmax_arg,
        default=None,
        metavar="K|auto",
        help="upper degree bound of the fit; 'auto' stops before the finite-size cutoff",
    )
    parser.add_argument(
        "--path-samples",
        type=_path_samples_arg,
        default=200,
        metavar="N|all",
        help="BFS sources for the average-shortest-path estimate",
    )


def build_parser() -> tuple[_Parser, dict[str, argparse.ArgumentParser]]:
    parser = _Parser(
        prog="hiddentree",
        description="Generate tree-closure networks and measure their degree "
        "distributions and small-world statistics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subcommands = parser.add_subparsers(dest="command", required=True, metavar="command")
    subs: dict[str, argparse.ArgumentParser] = {}

    p = subcommands.add_parser(
        "generate", help="generate one network and write its edge list"
    )
    _add_config_flag(p)
    _add_model_flags(p)
    p.add_argument("--tree-dump", metavar="PATH", help="also write node/parent/depth lines")
    p.add_argument("--out", metavar="PATH", help="edge-list output path")
    p.set_defaults(handler=_cmd_generate)
    subs["generate"] = p

    p = subcommands.add_parser(
        "analyze", help="compute metrics and CCDF data for an edge-list file"
    )
    p.add_argument("edge_list", metavar="EDGELIST", help="edge-list file to analyze")
    _add_config_flag(p)
    _add_fit_flags(p)
    p.add_argument(
        "--out",
        metavar="STEM",
        help="output stem for .report.txt/.report.json/.ccdf.tsv (default: input stem)",
    )
    p.set_defaults(handler=_cmd_analyze)
    subs["analyze"] = p

    p = subcommands.add_parser(
        "sweep", help="run one parameter sweep with replicates into a directory"
    )
    _add_config_flag(p)
    p.add_argument(
        "--kind", choices=_SWEEP_KINDS, help="which model parameter the sweep varies"
    )
    p.add_argument(
        "--values",
        type=_values_arg,
        metavar="V1,V2,...",
        help="comma-separated list of swept values",
    )
    p.add_argument(
        "--replicates", type=int, default=1, help="independent runs per swept value"
    )
    _add_model_flags(p)
    _add_fit_flags(p)
    p.add_argument("--jobs", type=int, default=1, help="worker threads for sweep points")
    p.add_argument(
        "--keep-edges",
        action="store_true",
        help="also write the edge list of every run",
    )
    p.add_argument("--out", metavar="DIR", help="output directory")
    p.set_defaults(handler=_cmd_sweep)
    subs["sweep"] = p

    p = subcommands.add_parser(
        "export-dot", help="write a component of an edge-list file as undirected DOT"
    )
    p.add_argument("edge_list", metavar="EDGELIST", help="edge-list file to export")
    _add_config_flag(p)
    p.add_argument(
        "--component",
        choices=("giant", "full"),
        default="giant",
        help="export only the giant component or the whole projection",
    )
    p.add_argument("--out", metavar="PATH", help="DOT output path (default: input stem + .dot)")
    p.set_defaults(handler=_cmd_export_dot)
    subs["export-dot"] = p

    return parser, subs


def _read_config(path: Path) -> dict[str, str]:
    entries: dict[str, str] = {}
    with path.open() as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            key, sep, value = text.partition("=")
            if not sep:
                raise ParameterError(f"{path}, line {line_no}: expected key=value")
            entries[key.strip().replace("-", "_")] = value.strip()
    return entries


def _convert_config_value(action: argparse.Action, raw: str):
    if isinstance(action, argparse._StoreTrueAction):
        word = raw.lower()
        if word not in _BOOL_WORDS:
            raise ParameterError(
                f"config key {action.dest!r} expects a boolean, got {raw!r}"
            )
        return _BOOL_WORDS[word]
    value = raw
    if action.type is not None:
        try:
            value = action.type(raw)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise ParameterError(f"config key {action.dest!r}: {exc}") from None
    if action.choices is not None and value not in action.choices:
        raise ParameterError(
            f"config key {action.dest!r} must be one of {tuple(action.choices)}"
        )
    return value


def _apply_config(sub: argparse.ArgumentParser, config_path: str) -> None:
    """Install config-file entries as subcommand defaults; CLI flags still win."""
    entries = _read_config(Path(config_path))
    actions = {action.dest: action for action in sub._actions}
    converted = {}
    for key, raw in entries.items():
        action = actions.get(key)
        if action is None or key in ("help", "config") or not action.option_strings:
            raise ParameterError(f"unknown config key {key!r}")
        converted[key] = _convert_config_value(action, raw)
    sub.set_defaults(**converted)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [
        "--" + name.replace("_", "-") for name in names if getattr(args, name) is None
    ]
    if missing:
        raise ParameterError("missing required option(s): " + ", ".join(missing))


def _tree_seed(args: argparse.Namespace) -> int:
    return args.seed if args.tree_seed is None else args.tree_seed


def _build_model_params(
    nodes: int,
    branching: float,
    activity: float,
    seed: int,
    tree_seed: int,
    variant: str,
    include_tree_edges: bool,
) -> ModelParams:
    return ModelParams(
        tree=TreeParams(node_count=nodes, branching=branching, seed=tree_seed),
        activity=activity,
        seed=seed,
        variant=Variant(variant),
        include_tree_edges=include_tree_edges,
    )


def _params_echo(params: ModelParams) -> dict:
    return {
        "nodes": params.tree.node_count,
        "branching": params.tree.branching,
        "activity": params.activity,
        "seed": params.seed,
        "tree_seed": params.tree.seed,
        "variant": params.variant.value,
        "include_tree_edges": params.include_tree_edges,
        "allow_self_selection": params.allow_self_selection,
    }


def _sha256(path: Path) -> str:
    return "sha256:" + hashlib.sha256(path.read_bytes()).hexdigest()


def _write_json(path: Path, payload: dict) -> None:
    with path.open("w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _format_value(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, "g")


def _format_cell(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def _cmd_generate(args: argparse.Namespace) -> int:
    _require(args, "nodes", "branching", "activity", "out")
    params = _build_model_params(
        args.nodes,
        args.branching,
        args.activity,
        args.seed,
        _tree_seed(args),
        args.variant,
        args.include_tree_edges,
    )
    graph = generate(params)
    out_path = Path(args.out)
    with out_path.open("w") as fh:
        write_edge_list(graph, fh)
    outputs = {out_path.name: _sha256(out_path)}
    if args.tree_dump:
        dump_path = Path(args.tree_dump)
        with dump_path.open("w") as fh:
            write_tree_dump(build_tree(params.tree), fh)
        outputs[dump_path.name] = _sha256(dump_path)
    manifest = {
        "command": "generate",
        "version": __version__,
        "params": _params_echo(params),
        "outputs": outputs,
    }
    _write_json(Path(str(out_path) + ".manifest.json"), manifest)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    in_path = Path(args.edge_list)
    with in_path.open() as fh:
        graph = read_edge_list(fh)
    in_degrees = list(graph.in_degree)
    ccdf = degree_ccdf(in_degrees)
    report = compute_report(
        graph,
        fit_kmin=args.fit_kmin,
        fit_kmax=args.fit_kmax,
        path_samples=args.path_samples,
    )
    values = {"nodes": graph.node_count, "edges": graph.edge_count}
    values.update(report_to_dict(report))
    try:
        values["gamma_mle"] = fit_power_law_mle(in_degrees, args.fit_kmin)
    except InsufficientDataError:
        values["gamma_mle"] = None

    stem = Path(args.out) if args.out else in_path.with_suffix("")
    text = format_report(values)
    Path(f"{stem}.report.txt").write_text(text)
    _write_json(Path(f"{stem}.report.json"), values)
    with Path(f"{stem}.ccdf.tsv").open("w") as fh:
        write_ccdf(ccdf, fh)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    _require(args, "kind", "values", "out")
    if args.replicates < 1:
        raise ParameterError(f"replicates must be >= 1, got {args.replicates}")
    if args.jobs < 1:
        raise ParameterError(f"jobs must be >= 1, got {args.jobs}")

    fixed = {"nodes": args.nodes, "branching": args.branching, "activity": args.activity}
    if fixed[args.kind] is not None:
        raise ParameterError(
            f"--{args.kind} is the swept parameter; give its values via --values"
        )
    needed = [name for name in _SWEEP_KINDS if name != args.kind]
    _require(args, *needed)

    try:
        if args.kind == "nodes":
            values = [int(v) for v in args.values]
        else:
            values = [float(v) for v in args.values]
    except ValueError:
        raise ParameterError(
            f"sweep values for --kind {args.kind} must be numeric: {args.values}"
        ) from None

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    base_tree_seed = _tree_seed(args)

    def run_point(value, replicate: int) -> dict:
        seed = derive_seed(args.seed, replicate)
        tree_seed = derive_seed(base_tree_seed, replicate)
        point = dict(fixed)
        point[args.kind] = value
        params = _build_model_params(
            point["nodes"],
            point["branching"],
            point["activity"],
            seed,
            tree_seed,
            args.variant,
            args.include_tree_edges,
        )
        graph = generate(params)
        tag = f"{args.kind}={_format_value(value)}_rep{replicate}"
        files = [f"ccdf_{tag}.tsv"]
        with (out_dir / files[0]).open("w") as fh:
            write_ccdf(degree_ccdf(list(graph.in_degree)), fh)
        if args.keep_edges:
            files.append(f"edges_{tag}.csv")
            with (out_dir / files[-1]).open("w") as fh:
                write_edge_list(graph, fh)
        report = compute_report(
            graph,
            fit_kmin=args.fit_kmin,
            fit_kmax=args.fit_kmax,
            path_samples=args.path_samples,
        )
        return {
            "value": value,
            "replicate": replicate,
            "seed": seed,
            "tree_seed": tree_seed,
            "report": report_to_dict(report),
            "files": files,
        }

    points = [(value, r) for value in values for r in range(args.replicates)]
    if args.jobs == 1:
        results = [run_point(value, r) for value, r in points]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(lambda point: run_point(*point), points))
    results.sort(key=lambda row: (row["value"], row["replicate"]))

    header = [
        "value",
        "replicate",
        "gamma",
        "r_squared",
        "avg_clustering",
        "avg_shortest_path",
        "max_in_degree",
        "giant_fraction",
    ]
    lines = ["\t".join(header)]
    for row in results:
        report = row["report"]
        lines.append(
            "\t".join(
                [
                    _format_value(row["value"]),
                    str(row["replicate"]),
                    _format_cell(report["gamma"]),
                    _format_cell(report["r_squared"]),
                    _format_cell(report["avg_clustering"]),
                    _format_cell(report["avg_shortest_path"]),
                    str(report["max_in_degree"]),
                    _format_cell(report["giant_component_fraction"]),
                ]
            )
        )
    summary_path = out_dir / "summary.tsv"
    summary_path.write_text("\n".join(lines) + "\n")

    file_names = sorted(name for row in results for name in row["files"])
    file_names.append(summary_path.name)
    manifest = {
        "command": "sweep",
        "version": __version__,
        "config": {
            "kind": args.kind,
            "values": values,
            "replicates": args.replicates,
            **{name: fixed[name] for name in needed},
            "seed": args.seed,
            "tree_seed": base_tree_seed,
            "variant": args.variant,
            "include_tree_edges": args.include_tree_edges,
            "fit_kmin": args.fit_kmin,
            "fit_kmax": "auto" if args.fit_kmax is None else args.fit_kmax,
            "path_samples": "all" if args.path_samples == ALL else args.path_samples,
        },
        "runs": [
            {
                "value": row["value"],
                "replicate": row["replicate"],
                "seed": row["seed"],
                "tree_seed": row["tree_seed"],
            }
            for row in results
        ],
        "outputs": {name: _sha256(out_dir / name) for name in file_names},
    }
    _write_json(out_dir / "manifest.json", manifest)
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    in_path = Path(args.edge_list)
    with in_path.open() as fh:
        graph = read_edge_list(fh)
    projection = undirected_projection(graph)
    if args.component == "giant":
        members, component = giant_component(projection)
    else:
        members, component = list(range(projection.node_count)), projection
    out_path = Path(args.out) if args.out else in_path.with_suffix(".dot")
    with out_path.open("w") as fh:
        fh.write("graph g {\n")
        for node in members:
            fh.write(f"  {node};\n")
        for u, v in component.edges():
            fh.write(f"  {members[u]} -- {members[v]};\n")
        fh.write("}\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, subs = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            _apply_config(subs[args.command], args.config)
            args = parser.parse_args(argv)
        return args.handler(args)
    except SystemExit as exc:
        # argparse --help/--version (0) and usage errors (1) land here.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ParameterError as exc:
        print(f"hiddentree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EmptyDistributionError, InsufficientDataError, ConnectivityError, EdgeListFormatError) as exc:
        print(f"hiddentree: error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except OSError as exc:
        print(f"hiddentree: error: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())
