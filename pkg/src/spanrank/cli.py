"""Command-line interface: validate, analyze, report, serve.

Exit codes: 0 success, 1 invalid input, 2 infeasible configuration (for
example enumeration over the cap, or a zero-iteration sampling plan).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .acceptability import (
    DEFAULT_SPACE_CAP,
    AcceptabilityResult,
    ResultSummary,
    acceptability_enumerate,
    acceptability_sample,
    combination_space,
    summarize,
)
from .errors import (
    BadAccuracy,
    BadConfidence,
    InvalidDocument,
    MixedProblems,
    SpaceTooLarge,
    SpanrankError,
)
from .problemio import (
    dump_document,
    load_problem,
    load_results,
    problem_statuses,
    results_to_document,
    serialize_document,
)
from .sampling import SamplePlan

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INFEASIBLE = 2

ORDINALS = {1: "1st", 2: "2nd", 3: "3rd"}


def _ordinal(rank: int) -> str:
    return ORDINALS.get(rank, f"{rank}th")


def _format_table(headers, rows) -> str:
    widths = [
        max(len(str(headers[c])), *(len(str(r[c])) for r in rows)) for c in range(len(headers))
    ]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _cell(result: AcceptabilityResult, count: int) -> str:
    probability = count / result.combinations_evaluated
    if result.mode == "enumerated":
        return f"{probability:.2f} ({count})"
    return f"{probability:.2f}"


def _print_result(result: AcceptabilityResult) -> None:
    names = result.alternatives
    n = len(names)
    print(f"mode: {result.mode}   combinations: {result.combinations_evaluated}   "
          f"space: {result.total_space}")
    if result.plan is not None:
        plan = result.plan
        print(f"plan: accuracy={plan.accuracy} confidence={plan.confidence}% "
              f"z={plan.z_value} iterations={plan.iterations} seed={plan.seed}")
    print()
    print("Preference probability, row over column:")
    rows = []
    for i in range(n):
        cells = [
            "-" if i == j else _cell(result, result.preference_counts[i][j]) for j in range(n)
        ]
        rows.append([names[i], *cells])
    print(_format_table(["", *names], rows))
    print()
    print("Rank acceptability, row at rank:")
    rows = []
    for i in range(n):
        rows.append([names[i], *(_cell(result, result.rank_counts[i][p]) for p in range(n))])
    print(_format_table(["", *(_ordinal(p + 1) for p in range(n))], rows))


def _print_summary(summary: ResultSummary) -> None:
    names = summary.alternatives
    n = len(names)

    def cell(mean, sd) -> str:
        if sd is None:
            return f"{mean:.3f}"
        return f"{mean:.3f} ±{sd:.3f}"

    print(f"runs: {summary.runs}")
    print()
    print("Preference probability, row over column (mean across runs):")
    rows = []
    for i in range(n):
        cells = [
            "-"
            if i == j
            else cell(
                summary.preference_mean[i][j],
                None if summary.preference_sd is None else summary.preference_sd[i][j],
            )
            for j in range(n)
        ]
        rows.append([names[i], *cells])
    print(_format_table(["", *names], rows))
    print()
    print("Rank acceptability, row at rank (mean across runs):")
    rows = []
    for i in range(n):
        cells = [
            cell(
                summary.rank_mean[i][p],
                None if summary.rank_sd is None else summary.rank_sd[i][p],
            )
            for p in range(n)
        ]
        rows.append([names[i], *cells])
    print(_format_table(["", *(_ordinal(p + 1) for p in range(n))], rows))


def _summary_json(summary: ResultSummary) -> dict:
    return {
        "alternatives": list(summary.alternatives),
        "runs": summary.runs,
        "preference_mean": [list(r) for r in summary.preference_mean],
        "preference_sd": None
        if summary.preference_sd is None
        else [list(r) for r in summary.preference_sd],
        "rank_mean": [list(r) for r in summary.rank_mean],
        "rank_sd": None if summary.rank_sd is None else [list(r) for r in summary.rank_sd],
        "indifference_mean": [list(r) for r in summary.indifference_mean],
        "indifference_sd": None
        if summary.indifference_sd is None
        else [list(r) for r in summary.indifference_sd],
    }


def cmd_validate(args) -> int:
    problem = load_problem(args.input)
    matrices = dict(zip(problem.criteria, problem.criterion_matrices))
    statuses, total_space = problem_statuses(problem.criteria, matrices, problem.weight_matrix)
    if args.format == "json":
        print(
            serialize_document(
                {
                    "matrices": [s.to_json() for s in statuses],
                    "total_space": str(total_space),
                }
            ),
            end="",
        )
        return EXIT_OK
    rows = []
    for s in statuses:
        cr = "-" if s.consistency_ratio is None else f"{s.consistency_ratio:.2f}"
        rows.append(
            [
                s.key,
                s.size,
                "yes" if s.complete else f"{s.judged_pairs}/{s.size * (s.size - 1) // 2}",
                cr,
                len(s.transitivity_violations),
                s.tree_count,
            ]
        )
    print(_format_table(["matrix", "size", "complete", "CR", "ordinal violations", "trees"], rows))
    print(f"\ncombination space: {total_space}")
    return EXIT_OK


def _build_plan(args) -> SamplePlan:
    return SamplePlan.create(
        accuracy=args.accuracy,
        confidence=args.confidence,
        z_override=args.z,
        iterations=args.iterations,
        seed=args.seed,
    )


def cmd_analyze(args) -> int:
    problem = load_problem(args.input)
    mode = args.mode
    if mode == "auto":
        mode = "enumerate" if combination_space(problem) <= args.cap else "sample"

    if mode == "enumerate":
        results = [acceptability_enumerate(problem, cap=args.cap)]
    else:
        plan = _build_plan(args)
        if plan.iterations < 1:
            print("infeasible configuration: sampling plan has zero iterations", file=sys.stderr)
            return EXIT_INFEASIBLE
        if args.repetitions < 1:
            print("infeasible configuration: repetitions must be at least 1", file=sys.stderr)
            return EXIT_INFEASIBLE
        results = [
            acceptability_sample(
                problem,
                SamplePlan.create(
                    accuracy=plan.accuracy,
                    confidence=plan.confidence,
                    iterations=plan.iterations if plan.iterations_overridden else None,
                    seed=(plan.seed + rep) % (1 << 64),
                ),
                workers=args.workers,
            )
            for rep in range(args.repetitions)
        ]

    document = results_to_document(results)
    if args.output:
        dump_document(document, args.output)
    if args.format == "json":
        print(serialize_document(document), end="")
    elif len(results) == 1:
        _print_result(results[0])
    else:
        _print_summary(summarize(results))
    return EXIT_OK


def cmd_report(args) -> int:
    results = []
    for path in args.results:
        results.extend(load_results(path))
    if not results:
        print("no runs found in the given documents", file=sys.stderr)
        return EXIT_INVALID_INPUT
    summary = summarize(results)
    if args.format == "json":
        print(serialize_document(_summary_json(summary)), end="")
    else:
        _print_summary(summary)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(args.data_dir), ui_dir=Path(args.ui) if args.ui else None)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spanrank",
        description="Rank-acceptability analysis of pairwise comparison matrices "
        "via spanning-tree combinations.",
    )
    parser.add_argument("--version", action="version", version=f"spanrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a problem file and print per-matrix health")
    p_validate.add_argument("input")
    p_validate.add_argument("--format", choices=["table", "json"], default="table")
    p_validate.set_defaults(func=cmd_validate)

    p_analyze = sub.add_parser("analyze", help="run the acceptability analysis")
    p_analyze.add_argument("input")
    p_analyze.add_argument("--mode", choices=["auto", "enumerate", "sample"], default="auto")
    p_analyze.add_argument("--accuracy", default="0.01", help="sampling accuracy (default 0.01)")
    p_analyze.add_argument("--confidence", default="99", help="confidence percent (default 99)")
    p_analyze.add_argument("--z", default=None, help="override the z-score for the plan")
    p_analyze.add_argument("--iterations", type=int, default=None, help="override iteration count")
    p_analyze.add_argument("--repetitions", type=int, default=1, help="repeated sampled runs")
    p_analyze.add_argument("--seed", type=int, default=0)
    p_analyze.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("SPANRANK_WORKERS", "1")),
        help="parallel sampling workers (default $SPANRANK_WORKERS or 1)",
    )
    p_analyze.add_argument("--cap", type=int, default=DEFAULT_SPACE_CAP,
                           help="largest combination space to enumerate")
    p_analyze.add_argument("--output", "-o", default=None, help="write the result document here")
    p_analyze.add_argument("--format", choices=["table", "json"], default="table")
    p_analyze.set_defaults(func=cmd_analyze)

    p_report = sub.add_parser("report", help="summarize stored result documents")
    p_report.add_argument("results", nargs="+")
    p_report.add_argument("--format", choices=["table", "json"], default="table")
    p_report.set_defaults(func=cmd_report)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--data-dir", default="./spanrank-sessions")
    p_serve.add_argument("--ui", default=None, help="directory of built UI assets to serve at /")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidDocument as exc:
        print("invalid problem document:", file=sys.stderr)
        for violation in exc.violations:
            print(f"  [{violation['code']}] {violation['location']}: {violation['detail']}",
                  file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (FileNotFoundError, json.JSONDecodeError, MixedProblems) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (SpaceTooLarge, BadAccuracy, BadConfidence) as exc:
        print(f"infeasible configuration: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SpanrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
