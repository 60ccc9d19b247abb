"""Command-line front end.

Subcommands: alpha (one verification row), sweep (parameter grids),
lemma-check (random improvement-lemma trials), export and import (graph
files).  Exit codes: 0 all rows agree, 1 any disagreement, 2 usage or IO
error, 3 node-budget aborts only.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import CapacityError, ContractError, ParameterError, ParseError
from .fileio import parse_graph, render_graph
from .graphs import FamilySpec
from . import graphs
from .harness import (
    METHODS,
    SweepConfig,
    evaluate_graph_row,
    evaluate_row,
    run_lemma_trials,
    run_sweep,
)
from .report import render_json, render_tsv, summary_counts
from .tokens import build_f2, render_token_graph

_FAMILY_BUILDERS = {
    "path": lambda a: graphs.path(_require(a, "m")),
    "cycle": lambda a: graphs.cycle(_require(a, "m")),
    "empty": lambda a: graphs.empty(_require(a, "m")),
    "complete": lambda a: graphs.complete(_require(a, "m")),
    "path-union": lambda a: graphs.path_union(_parts(a)),
    "fan": lambda a: graphs.fan(_require(a, "n"), _require(a, "m")),
    "wheel": lambda a: graphs.wheel(_require(a, "n"), _require(a, "m")),
    "split": lambda a: graphs.split(_require(a, "n"), _require(a, "m")),
    "complete-bipartite": lambda a: graphs.complete_bipartite(
        _require(a, "n"), _require(a, "m")),
}


def _require(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ParameterError(f"--family {args.family} requires --{name}")
    return value


def _parts(args) -> tuple[int, ...]:
    if not args.parts:
        raise ParameterError("--family path-union requires --parts A,B,...")
    try:
        return tuple(int(p) for p in args.parts.split(","))
    except ValueError:
        raise ParameterError(f"cannot parse --parts {args.parts!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise ParameterError(f"cannot parse range {text!r}; expected A..B") from None


def _parse_methods(text: str) -> tuple[str, ...]:
    methods = tuple(m.strip() for m in text.split(",") if m.strip())
    for m in methods:
        if m not in METHODS:
            raise ParameterError(f"unknown method {m!r}; choose from {','.join(METHODS)}")
    if not methods:
        raise ParameterError("at least one method is required")
    return methods


def _family_spec(args) -> FamilySpec:
    if args.family not in _FAMILY_BUILDERS:
        raise ParameterError(
            f"unknown family {args.family!r}; choose from {', '.join(sorted(_FAMILY_BUILDERS))}")
    return _FAMILY_BUILDERS[args.family](args)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_rows(rows, args, extra: dict | None = None) -> str:
    if args.format == "json":
        return render_json(rows, include_witness=args.deterministic, extra=extra)
    return render_tsv(rows)


def _rows_exit_code(rows) -> int:
    counts = summary_counts(rows)
    if counts["DISAGREE"]:
        return 1
    if counts["ABORTED"]:
        return 3
    return 0


def _cmd_alpha(args) -> int:
    if (args.input is None) == (args.family is None):
        raise ParameterError("alpha requires exactly one of --family or --input")
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            base = parse_graph(fh.read())
        row = evaluate_graph_row(f"file:{os.path.basename(args.input)}", base,
                                 node_budget=args.budget)
    else:
        spec = _family_spec(args)
        row = evaluate_row(spec, _parse_methods(args.methods), node_budget=args.budget)
    _emit(_render_rows([row], args), args.out)
    return _rows_exit_code([row])


def _cmd_sweep(args) -> int:
    if args.family not in _FAMILY_BUILDERS:
        raise ParameterError(
            f"unknown family {args.family!r}; choose from {', '.join(sorted(_FAMILY_BUILDERS))}")
    config = SweepConfig(
        family=args.family.replace("-", "_"),
        n_range=_parse_range(args.n_range) if args.n_range else None,
        m_range=_parse_range(args.m_range) if args.m_range else None,
        methods=_parse_methods(args.methods),
        node_budget=args.budget,
        seed=args.seed,
    )
    report = run_sweep(config)
    extra = {"config": {"family": args.family, "n_range": args.n_range,
                        "m_range": args.m_range, "methods": list(config.methods),
                        "budget": args.budget, "seed": args.seed}}
    _emit(_render_rows(report.rows, args, extra), args.out)
    return report.exit_code


def _cmd_lemma_check(args) -> int:
    h_builders = {"path": graphs.path, "cycle": graphs.cycle,
                  "complete": graphs.complete, "empty": graphs.empty}
    if args.family not in h_builders:
        raise ParameterError(
            f"lemma-check H family must be one of {', '.join(sorted(h_builders))}")
    h_spec = h_builders[args.family](args.m)
    report = run_lemma_trials(args.n, h_spec, args.trials, args.seed,
                              node_budget=args.budget)
    lines = []
    for index in report.failures:
        trial = report.trials[index]
        lines.append(f"FAIL trial={index} seed={args.seed} start={trial.start_size} "
                     f"improved={trial.improved_size} independent={trial.independent} "
                     f"seed_pair={{{trial.seed_pair[0]},{trial.seed_pair[1]}}}")
    ok = len(report.trials) - len(report.failures)
    lines.append(f"lemma-check n={args.n} H={args.family}(m={args.m}) "
                 f"trials={len(report.trials)} ok={ok} "
                 f"min_margin={report.min_margin} mean_margin={report.mean_margin:.3f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if report.failures else 0


def _cmd_export(args) -> int:
    spec = _family_spec(args)
    base = graphs.generate(spec)
    if args.token:
        text = render_token_graph(build_f2(base))
    else:
        text = render_graph(base, comments=[spec.label()])
    _emit(text, args.out)
    return 0


def _cmd_import(args) -> int:
    with open(args.path, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    _emit(render_graph(g), args.out)
    return 0


def _add_row_flags(sub):
    sub.add_argument("--methods", default="formula,construction,solver",
                     help="comma list from formula,construction,solver")
    sub.add_argument("--budget", type=int, default=None,
                     help="solver node budget; exceeding it aborts the row")
    sub.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sub.add_argument("--deterministic", action="store_true",
                     help="include witness sets in JSON output")
    sub.add_argument("--out", default=None, help="write the report to this path")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="token-alpha",
        description="Verify closed-form independence numbers of 2-token graphs "
                    "against explicit constructions and an exact solver.")
    subs = parser.add_subparsers(dest="command", required=True)

    alpha = subs.add_parser("alpha", help="evaluate one family instance or graph file")
    alpha.add_argument("--family", default=None)
    alpha.add_argument("--n", type=int, default=None)
    alpha.add_argument("--m", type=int, default=None)
    alpha.add_argument("--parts", default=None, help="path-union part sizes, e.g. 3,2")
    alpha.add_argument("--input", default=None, help="edge-list or DIMACS base graph")
    _add_row_flags(alpha)
    alpha.set_defaults(handler=_cmd_alpha)

    sweep = subs.add_parser("sweep", help="cross-check a parameter grid")
    sweep.add_argument("--family", required=True)
    sweep.add_argument("--n-range", dest="n_range", default=None, metavar="A..B")
    sweep.add_argument("--m-range", dest="m_range", default=None, metavar="A..B",
                       help="for path-union: totals, all compositions of each")
    sweep.add_argument("--seed", type=int, default=0)
    _add_row_flags(sweep)
    sweep.set_defaults(handler=_cmd_sweep)

    lemma = subs.add_parser("lemma-check",
                            help="random independent sets vs the associated-set bound")
    lemma.add_argument("--n", type=int, required=True)
    lemma.add_argument("--family", required=True, help="H family: path, cycle, complete, empty")
    lemma.add_argument("--m", type=int, required=True)
    lemma.add_argument("--trials", type=int, default=200)
    lemma.add_argument("--seed", type=int, default=0)
    lemma.add_argument("--budget", type=int, default=None)
    lemma.add_argument("--out", default=None)
    lemma.set_defaults(handler=_cmd_lemma_check)

    export = subs.add_parser("export", help="write a family graph as an edge list")
    export.add_argument("--family", required=True)
    export.add_argument("--n", type=int, default=None)
    export.add_argument("--m", type=int, default=None)
    export.add_argument("--parts", default=None)
    export.add_argument("--token", action="store_true",
                        help="export the 2-token graph with its pair mapping")
    export.add_argument("--out", default=None)
    export.set_defaults(handler=_cmd_export)

    imp = subs.add_parser("import", help="read an edge-list/DIMACS file, print normalized")
    imp.add_argument("path")
    imp.add_argument("--out", default=None)
    imp.set_defaults(handler=_cmd_import)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParameterError, ContractError, ParseError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
