"""
Command-line surface of hidden_homfly.

    hidden-homfly eval --word "1 1 1" --strands 2
    hidden-homfly table --kmin -5 --kmax 5 --convention paper
    hidden-homfly tree --word "1 2 1 2" --strands 3 --format dot --out tree.gv
    hidden-homfly verify --suite all --seed 7 --cases 200
    hidden-homfly corpus fixtures.txt --threads 4 --out results.jsonl

Results go to stdout (or --out); logs go to stderr.
Exit codes: 0 success, 1 law failure or mismatch, 2 input error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .tools.config import CONVENTIONS, STRATEGIES, ToolsConfig, set_config, validate_config
from .tools.evaluation import WordEvaluationTool, render_invariant
from .tools.integrations.tree_export import FORMATS, export_tree, kind_counts
from .tools.ringkit import LaurentA
from .tools.skein_f import eval_F, replay_tree
from .tools.braidword import BraidWordError
from .tools.utils.word_validator import parse_braid_word
from .workflows.corpus import run_corpus_file, write_results
from .workflows.fuzz import FuzzSpec
from .workflows.laws import SUITES, LawContext, render_table, run_suites
from .workflows.two_strand import build_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Raised for flag combinations that cannot be run."""
    pass


def _configure(args: argparse.Namespace) -> ToolsConfig:
    """Environment configuration with command-line overrides applied."""
    config = ToolsConfig.from_environment()
    if args.convention:
        config.engine.convention = args.convention
    if args.strategy:
        config.engine.strategy = args.strategy
    if args.verify_extra is not None:
        config.stabilization.verify_extra = args.verify_extra
    if args.threads is not None:
        config.run.threads = args.threads
    if getattr(args, "seed", None) is not None:
        config.run.seed = args.seed
    if getattr(args, "cases", None) is not None:
        config.run.cases = args.cases
    if args.log_level:
        config.logging.level = args.log_level

    results = validate_config(config)
    for warning in results["warnings"]:
        logger.warning(warning)
    if not results["valid"]:
        raise InputError("; ".join(results["errors"]))
    set_config(config)
    return config


def _emit(text: str, out: Optional[str]):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def _eval_text(report: dict) -> str:
    data, summary, query = report["data"], report["summary"], report["query"]
    word = " ".join(str(e) for e in query["word"]) or "(empty)"
    lines = [
        f"word         {word} on {query['strands']} strands",
        f"convention   {query['convention']}  strategy {query['strategy']}",
        f"components   {summary['components']}",
        f"writhe       {data['writhe']}",
        f"self-linking {summary['self_linking']}",
        f"F            {data['F']['text']}",
        f"Q            {summary['Q_factored']}",
        f"Q (expanded) {summary['Q']}",
        f"deg_T Q      {summary['degree']}",
        f"T0           {summary['T0']}",
        "",
        f"{'T':>5}  c_T",
    ]
    table = data["c_table"]
    for t, entry in zip(range(table["tmin"], table["tmax"] + 1), table["entries"]):
        lines.append(f"{t:>5}  {LaurentA.from_json(entry)}")
    if "stats" in data:
        stats = data["stats"]
        lines.append("")
        lines.append(f"seconds      {stats['seconds']}")
        lines.append(f"memo         {json.dumps(stats['memo'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def cmd_eval(args: argparse.Namespace) -> int:
    config = _configure(args)
    tool = WordEvaluationTool(config.engine.to_eval_config(record_tree=False), config.stabilization)
    report = tool.evaluate_word(args.word, args.strands, tmin=args.tmin, tmax=args.tmax,
                                probe_floor=args.probe_floor, include_stats=args.stats)
    if report["status"] != "success":
        print(f"error: {report['error']['message']}", file=sys.stderr)
        return EXIT_INPUT if report["error"]["code"] == "INVALID_WORD" else EXIT_FAILURE
    if args.emit == "json":
        _emit(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        _emit(_eval_text(report), args.out)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    config = _configure(args)
    if args.kmin > args.kmax:
        raise InputError(f"empty exponent range [{args.kmin}, {args.kmax}]")
    table = build_table(args.kmin, args.kmax, config.engine.to_eval_config(record_tree=False),
                        config.stabilization)
    _emit(table.to_json() + "\n" if args.emit == "json" else table.to_text() + "\n", args.out)
    return EXIT_FAILURE if table.mismatches else EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    config = _configure(args)
    w = parse_braid_word(args.word, args.strands)
    cfg = config.engine.to_eval_config(record_tree=True)
    value, record = eval_F(w, cfg)
    replayed = replay_tree(record)
    if replayed != value:
        logger.error(f"Replay of the recorded tree gives {replayed}, evaluation gave {value}")
        return EXIT_FAILURE
    logger.info(f"Tree for [{w}] on {w.strands}: {len(record.nodes)} nodes {kind_counts(record)}; "
                f"F = {render_invariant(value)}")
    _emit(export_tree(record, args.format, args.level), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _configure(args)
    spec = FuzzSpec(seed=config.run.seed, max_strands=args.max_strands, max_length=args.max_length,
                    case_count=config.run.cases, move_budget=args.move_budget)
    ctx = LawContext(config.engine.to_eval_config(record_tree=False), config.stabilization,
                     config.run.threads)
    reports = run_suites(args.suite or ["all"], spec, ctx)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for report in reports:
        path = out / f"{report.law}-{report.convention}.json"
        path.write_text(report.to_json(include_timing=args.stats), encoding="utf-8")
        logger.info(f"Wrote {path}")

    if args.emit == "json":
        payload = [json.loads(r.to_json(include_timing=args.stats)) for r in reports]
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_table(reports, include_timing=args.stats))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def cmd_corpus(args: argparse.Namespace) -> int:
    config = _configure(args)
    if not Path(args.path).is_file():
        raise InputError(f"corpus file not found: {args.path}")
    results, summary = run_corpus_file(args.path, config.engine.to_eval_config(record_tree=False),
                                       config.stabilization, config.run.threads)
    if args.out:
        write_results(results, args.out)
        logger.info(f"Wrote {len(results)} results to {args.out}")
    else:
        sys.stdout.write("".join(r.to_json_line() + "\n" for r in results))
    logger.info(f"Corpus summary: {summary.model_dump()}")
    return EXIT_FAILURE if summary.errors or summary.mismatches else EXIT_OK


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--convention", choices=CONVENTIONS, help="Unlink leaf convention (default: forced)")
    parser.add_argument("--strategy", choices=STRATEGIES, help="Tree strategy (default: staircase)")
    parser.add_argument("--verify-extra", type=int, help="Extra verification points of Q recovery (>= 3)")
    parser.add_argument("--threads", type=int, help="Worker pool size")
    parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")
    parser.add_argument("--log-level", help="Logging level (default: INFO)")


def _add_word(parser: argparse.ArgumentParser):
    parser.add_argument("--word", required=True, help='Letters separated by spaces or commas, e.g. "1 -2 1"')
    parser.add_argument("--strands", type=int, required=True, help="Number of strands")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hidden-homfly",
        description="Transverse HOMFLYPT invariants of closed braids and their hidden polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("eval", help="Evaluate one braid word")
    _add_word(p)
    _add_common(p)
    p.add_argument("--tmin", type=int, help="First T of the coefficient table")
    p.add_argument("--tmax", type=int, help="Last T of the coefficient table")
    p.add_argument("--probe-floor", type=int, help="Lowest T scanned for T0")
    p.add_argument("--stats", action="store_true", help="Add timing and memo statistics")
    p.add_argument("--out", help="Write the report to a file")
    p.set_defaults(func=cmd_eval)

    p = subparsers.add_parser("table", help="Two-strand family table")
    _add_common(p)
    p.add_argument("--family", choices=("two-strand",), default="two-strand")
    p.add_argument("--kmin", type=int, default=-6, help="First exponent of σ₁")
    p.add_argument("--kmax", type=int, default=6, help="Last exponent of σ₁")
    p.add_argument("--out", help="Write the table to a file")
    p.set_defaults(func=cmd_table)

    p = subparsers.add_parser("tree", help="Emit the computation tree of a word")
    _add_word(p)
    _add_common(p)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--level", choices=("F", "Q"), default="F", help="Edge labels of DOT output")
    p.add_argument("--out", help="Write the tree to a file")
    p.set_defaults(func=cmd_tree)

    p = subparsers.add_parser("verify", help="Run law suites")
    _add_common(p)
    p.add_argument("--suite", action="append", choices=("all",) + tuple(SUITES),
                   help="Suite to run; repeatable (default: all)")
    p.add_argument("--seed", type=int, help="Fuzz seed")
    p.add_argument("--cases", type=int, help="Random cases per suite")
    p.add_argument("--max-strands", type=int, default=6)
    p.add_argument("--max-length", type=int, default=12)
    p.add_argument("--move-budget", type=int, default=10)
    p.add_argument("--stats", action="store_true", help="Include wall time in report files")
    p.add_argument("--out", default="reports", help="Directory of report files (default: reports/)")
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser("corpus", help="Evaluate a corpus file")
    p.add_argument("path", help="Corpus file: name ; strands ; letters ; [expected-Q]")
    _add_common(p)
    p.add_argument("--out", help="JSON-lines output file (default: stdout)")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BraidWordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return EXIT_FAILURE
