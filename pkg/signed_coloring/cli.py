"""
Command-line interface.

Results go to stdout (text, or JSON with ``--json``); diagnostics go to
stderr through logging. Exit codes: 0 success, 1 usage or input error,
2 verification failed or budget exceeded, 3 internal invariant violation.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from .classify import class_ratio, is_class_2pm_structural, probe_conjecture, signed_class
from .colorers import AUTO_ORDER, color_with
from .config import Config
from .exact import exact_chromatic_index
from .exceptions import BudgetExceeded, DomainMismatch, InternalInvariantError, InvalidInput
from .generators import FamilySpec, generate, generate_signature, parse_signature_mode
from .models import SignedGraph, max_degree, verify_coloring
from .parsers import (
    SignedGraphFile,
    load_coloring,
    load_signed_graph,
    serialize_coloring,
    serialize_signed_graph,
)
from .reports import (
    class_report_summary,
    class_report_table,
    coloring_summary,
    export_csv,
    probe_summary,
    probe_table,
    render_json,
    render_text,
    verification_summary,
)
from .switching import SwitchSet, switch

logger = logging.getLogger(__name__)

EXIT_OK = Config.EXIT_CODES["ok"]
EXIT_USAGE = Config.EXIT_CODES["usage"]
EXIT_FAILED = Config.EXIT_CODES["failed"]
EXIT_INTERNAL = Config.EXIT_CODES["internal"]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args: argparse.Namespace, command: str, payload: dict[str, Any]) -> None:
    print(render_json(command, payload) if args.json else render_text(command, payload))


def _write_or_print(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {output}")


def _hints(graph_file: SignedGraphFile) -> dict[str, Any]:
    return {k: v for k, v in graph_file.metadata.items() if k in ("hub", "hubs", "left", "right")}


def _warn_signs_ignored(sg: SignedGraph) -> None:
    if sg.signature.negative_count():
        logger.warning("Classification ignores signs; the file has negative edges")


# -------------------------------------------------------------------
# Commands
# -------------------------------------------------------------------

def cmd_color(args: argparse.Namespace) -> int:
    graph_file = load_signed_graph(args.input)
    sg = graph_file.signed_graph
    result = color_with(sg, args.method, _hints(graph_file))
    report = verify_coloring(sg, result.coloring)
    if not report.valid:
        raise InternalInvariantError(f"{result.method} colorer produced an invalid coloring")
    text = serialize_coloring(sg, result.coloring)
    if args.output is None and not args.json:
        sys.stdout.write(text)
        return EXIT_OK
    if args.output is not None:
        _write_or_print(text, args.output)
    _emit(args, "color", coloring_summary(sg, result.coloring, result.method, max_degree(sg.graph), True))
    return EXIT_OK


def cmd_chromatic_index(args: argparse.Namespace) -> int:
    sg = load_signed_graph(args.input).signed_graph
    result = exact_chromatic_index(sg, force=args.force)
    if args.output is not None:
        _write_or_print(serialize_coloring(sg, result.witness), args.output)
    valid = verify_coloring(sg, result.witness).valid
    if not valid:
        raise InternalInvariantError("exact solver witness failed verification")
    _emit(
        args,
        "chromatic-index",
        coloring_summary(sg, result.witness, "exact", result.delta, valid, chi=result.chi),
    )
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    sg = load_signed_graph(args.input).signed_graph
    _warn_signs_ignored(sg)
    g = sg.graph
    if args.structural_only:
        verdict = is_class_2pm_structural(g)
        witness = None
        if verdict.witness_matching is not None:
            witness = [[g.edges[e][0] + 1, g.edges[e][1] + 1] for e in verdict.witness_matching]
        _emit(args, "classify", {
            "delta": max_degree(g),
            "verdict": None,
            "structural_2pm": verdict.class_2pm,
            "witness_matching": witness,
        })
        return EXIT_OK
    report = signed_class(g, budget=args.budget, naive=args.naive, jobs=args.jobs, keep_samples=bool(args.csv))
    if args.csv:
        export_csv(class_report_table(report), args.csv)
    _emit(args, "classify", class_report_summary(report))
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    sg = load_signed_graph(args.input).signed_graph
    _warn_signs_ignored(sg)
    report = class_ratio(sg.graph, budget=args.budget, naive=args.naive, jobs=args.jobs, keep_samples=bool(args.csv))
    if args.csv:
        export_csv(class_report_table(report), args.csv)
    _emit(args, "ratio", class_report_summary(report))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.family, args.params, seed=args.seed)
    generated = generate(spec)
    mode, index = parse_signature_mode(args.sign)
    signature = generate_signature(generated.graph, mode, seed=args.seed, index=index)
    metadata = dict(generated.metadata)
    metadata["signature"] = args.sign
    if args.seed is not None:
        metadata.setdefault("seed", args.seed)
    sg = SignedGraph(generated.graph, signature)
    _write_or_print(serialize_signed_graph(sg, metadata), args.output)
    if args.json and args.output is not None:
        _emit(args, "gen", {
            "family": metadata["family"],
            "vertices": sg.vertex_count,
            "edges": sg.edge_count,
            "output": str(args.output),
        })
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    sg = load_signed_graph(args.graph).signed_graph
    coloring = load_coloring(args.coloring, sg)
    try:
        report = verify_coloring(sg, coloring)
    except DomainMismatch as e:
        logger.error(f"Coloring does not match the graph: {e}")
        _emit(args, "verify", {"valid": False, "violations": [{"kind": "domain", "detail": str(e)}]})
        return EXIT_FAILED
    _emit(args, "verify", verification_summary(report))
    return EXIT_OK if report.valid else EXIT_FAILED


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"vertex list must be comma-separated integers, got {text!r}")


def cmd_switch(args: argparse.Namespace) -> int:
    graph_file = load_signed_graph(args.graph)
    s = SwitchSet.of(_parse_vertex_list(args.vertices))
    switched = switch(graph_file.signed_graph, s)
    _write_or_print(serialize_signed_graph(switched, graph_file.metadata), args.output)
    if args.json and args.output is not None:
        _emit(args, "switch", {"vertices": sorted(v + 1 for v in s.vertices), "output": str(args.output)})
    return EXIT_OK


def cmd_probe(args: argparse.Namespace) -> int:
    report = probe_conjecture(args.r, trials=args.trials, seed=args.seed, jobs=args.jobs, keep_samples=bool(args.csv))
    if args.csv:
        export_csv(probe_table(report), args.csv)
    _emit(args, "probe-conjecture", probe_summary(report))
    if report.proven_direction_violations:
        logger.error(
            f"{len(report.proven_direction_violations)} signatures with odd negative count were Δ-colorable"
        )
        return EXIT_INTERNAL
    return EXIT_OK


COMMAND_REGISTRY: dict[str, Callable[[argparse.Namespace], int]] = {
    "color": cmd_color,
    "chromatic-index": cmd_chromatic_index,
    "classify": cmd_classify,
    "ratio": cmd_ratio,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "switch": cmd_switch,
    "probe-conjecture": cmd_probe,
}


# -------------------------------------------------------------------
# Parser
# -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON report instead of text")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-vv for debug)")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--jobs", type=int, default=Config.JOBS, help="Worker processes for signature sweeps")
    sweep.add_argument("--csv", type=Path, help="Write one row per enumerated signature to this CSV file")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--naive", action="store_true", help="Enumerate all 2^m signatures")
    budget.add_argument(
        "--budget", type=int, default=Config.RATIO_BUDGET, help="Maximum log2 of the number of signatures enumerated"
    )

    parser = _Parser(prog="signed-coloring", description="Edge coloring of signed graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", parents=[common], help="Color a signed graph")
    p.add_argument("input", type=Path)
    p.add_argument("--method", default="auto", choices=("auto",) + AUTO_ORDER)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("chromatic-index", parents=[common], help="Exact chromatic index with witness")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path, help="Write the witness coloring")
    p.add_argument("--force", action="store_true", help="Lift the solver edge limit")

    p = sub.add_parser("classify", parents=[common, sweep, budget], help="Signed class of the underlying graph")
    p.add_argument("input", type=Path)
    p.add_argument("--structural-only", action="store_true", help="Only run the matching-based 2± test")

    p = sub.add_parser("ratio", parents=[common, sweep, budget], help="Class ratio of the underlying graph")
    p.add_argument("input", type=Path)

    p = sub.add_parser("gen", parents=[common], help="Generate a family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--sign", default="all_positive", help="all_positive, all_negative, random or index:I")
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("verify", parents=[common], help="Verify a coloring file")
    p.add_argument("graph", type=Path)
    p.add_argument("coloring", type=Path)

    p = sub.add_parser("switch", parents=[common], help="Switch a signed graph at a vertex set")
    p.add_argument("graph", type=Path)
    p.add_argument("--vertices", required=True, help="Comma-separated 1-indexed vertices")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("probe-conjecture", parents=[common, sweep], help="Probe Δ-colorability of signed K_{r,r}")
    p.add_argument("r", type=int)
    p.add_argument("--trials", type=int, default=Config.PROBE_TRIALS)
    p.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.verbose:
        logging.getLogger("signed_coloring").setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)

    handler = COMMAND_REGISTRY[args.command]
    try:
        return handler(args)
    except (InvalidInput, FileNotFoundError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        logger.error(f"{args.command}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except InternalInvariantError as e:
        logger.error(f"{args.command}: internal invariant violated: {e}")
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> int:
    """Console entry point."""
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
