"""Command-line front end.

Subcommands: copnumber, bounds, guard, probe, gen.  Single-graph commands
emit JSON; probe emits CSV with '#' metadata lines.  Exit codes: 0 success,
1 input error, 2 state-space limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from io import StringIO
from pathlib import Path

from . import __version__
from .bounds import full_report
from .game import (
    DEFAULT_STATE_LIMIT,
    StateLimitError,
    cop_number,
    kernel_name,
    solve,
)
from .generators import gen_gnp, gen_named, projective_labels
from .graph import Graph, components
from .graphio import format_graph, read_graph
from .guarding import POLICIES, verify_guard
from .rng import RNG_ALGORITHM

PROBE_COLUMNS = [
    "n",
    "seed",
    "e",
    "alpha_num",
    "alpha_den",
    "genus_upper",
    "genus_lower",
    "bkl_lower_ind",
    "bkl_upper_ind",
    "cop_number",
    "error",
]


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_gen_spec(spec: str, seed: int) -> Graph:
    name, _, param_str = spec.partition(":")
    raw = [s for s in param_str.split(",") if s] if param_str else []
    if name.lower() == "gnp":
        if len(raw) != 2:
            raise ValueError("gnp takes 'gnp:n,p'")
        return gen_gnp(int(raw[0]), float(raw[1]), seed)
    return gen_named(name, *[int(x) for x in raw], seed=seed)


def _load_graph(args) -> Graph:
    if args.gen and args.file:
        raise ValueError("give either --gen or --file, not both")
    if args.gen:
        return _parse_gen_spec(args.gen, args.seed)
    if args.file:
        return read_graph(args.file)
    raise ValueError("a graph source is required: --gen FAMILY[:PARAMS] or --file PATH")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _add_common(parser: argparse.ArgumentParser, graph_source: bool = True) -> None:
    if graph_source:
        parser.add_argument("--gen", metavar="FAMILY[:PARAMS]",
                            help="generate a named graph, e.g. petersen, cycle:6, grid:3,4, gnp:30,0.2")
        parser.add_argument("--file", metavar="PATH", help="read an edge-list file")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument("--state-limit", type=int, default=DEFAULT_STATE_LIMIT,
                        help="refuse solves above this many game states")
    parser.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def cmd_copnumber(args) -> int:
    g = _load_graph(args)
    comps = components(g)
    comp_reports = []
    total = 0
    for comp, vertices in comps:
        k = 1
        while True:
            result = solve(comp, k, state_limit=args.state_limit)
            if result.cop_win:
                break
            k += 1
        total += k
        solve_json = result.to_json()
        if result.winning_initial_placement is not None:
            solve_json["initial_placement"] = [
                vertices[v] for v in result.winning_initial_placement
            ]
        comp_reports.append({"vertices": len(vertices), "cop_number": k, "solve": solve_json})
    _emit_json(
        {
            "cop_number": total,
            "n": g.n,
            "e": g.edge_count,
            "kernel": kernel_name(),
            "components": comp_reports,
        },
        args.out,
    )
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    report = full_report(g, known_genus=args.genus)
    _emit_json(report.to_json(), args.out)
    return 0


def cmd_guard(args) -> int:
    g = _load_graph(args)
    try:
        path = [int(x) for x in args.path.split(",")]
    except ValueError:
        raise ValueError(f"--path must be a comma-separated vertex list, got {args.path!r}")
    policy_cls = POLICIES[args.policy]
    policy = policy_cls()
    verdict = verify_guard(
        g,
        path,
        policy,
        trials=args.trials,
        seed=args.seed,
        cop_start=args.cop_start,
        rounds=args.rounds,
        trace_dir=args.trace_dir,
    )
    _emit_json(verdict.to_json(), args.out)
    return 0


def _probe_task(task: tuple[int, int, float, int]) -> dict:
    n, seed, p, state_limit = task
    row = {key: "" for key in PROBE_COLUMNS}
    row["n"], row["seed"] = n, seed
    errors = []
    try:
        g = gen_gnp(n, p, seed)
        report = full_report(g, p=p)
        row["e"] = g.edge_count
        row["alpha_num"] = report.alpha.numerator
        row["alpha_den"] = report.alpha.denominator
        row["genus_upper"] = report.genus_upper.value
        row["genus_lower"] = report.genus_lower.value
        row["bkl_lower_ind"] = repr(report.bkl_lower_indicator.value)
        row["bkl_upper_ind"] = repr(report.bkl_upper_indicator.value)
        if report.bkl_hypothesis_ok is False:
            errors.append("warn:bkl-hypothesis")
        try:
            row["cop_number"] = cop_number(g, state_limit=state_limit)
        except StateLimitError:
            errors.append("state-limit")
    except Exception as exc:  # per-row failures must not kill the sweep
        errors.append(f"{type(exc).__name__}: {exc}")
    row["error"] = ";".join(errors)
    return row


def cmd_probe(args) -> int:
    ns = sorted(int(x) for x in args.n.split(","))
    seeds = [int(x) for x in args.seeds.split(",")]
    if not seeds:
        raise ValueError("at least one seed is required")
    if args.p == "corollary":
        p_of = lambda n: 2.5 * math.log(n) / n
        p_desc = "corollary(2.5*ln(n)/n)"
    else:
        p_value = float(args.p)
        p_of = lambda n: p_value
        p_desc = repr(p_value)

    tasks = [(n, seed, p_of(n), args.state_limit) for n in ns for seed in seeds]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_probe_task, tasks))
    else:
        rows = [_probe_task(t) for t in tasks]

    buf = StringIO()
    buf.write(f"# copsrobbers probe v{__version__}\n")
    buf.write(
        f"# config: n={ns} seeds={seeds} p={p_desc} state_limit={args.state_limit}\n"
    )
    buf.write(f"# rng: {RNG_ALGORITHM}\n")
    buf.write("# log: natural\n")
    buf.write(",".join(PROBE_COLUMNS) + "\n")
    for row in rows:
        buf.write(",".join(str(row[key]) for key in PROBE_COLUMNS) + "\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_gen(args) -> int:
    if not args.gen:
        raise ValueError("gen requires --gen FAMILY[:PARAMS]")
    g = _parse_gen_spec(args.gen, args.seed)
    comments = [f"copsrobbers gen {args.gen} seed={args.seed}"]
    name = args.gen.partition(":")[0].lower()
    if name in ("pg", "projective", "heawood"):
        q = int(args.gen.partition(":")[2] or 2) if name != "heawood" else 2
        comments += [f"{i}: {label}" for i, label in enumerate(projective_labels(q))]
    _emit(format_graph(g, comments), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="copsrobbers", description=__doc__)
    parser.add_argument("--version", action="version", version=f"copsrobbers {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("copnumber", help="exact cop number of a graph")
    _add_common(p)
    p.set_defaults(func=cmd_copnumber)

    p = sub.add_parser("bounds", help="evaluate all closed-form bounds")
    _add_common(p)
    p.add_argument("--genus", type=int, default=None,
                   help="known genus; otherwise the density upper bound is used")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("guard", help="test the shadow guard on an isometric path")
    _add_common(p)
    p.add_argument("--path", required=True, help="comma-separated path vertices")
    p.add_argument("--policy", choices=sorted(POLICIES), default="random")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--cop-start", type=int, default=0)
    p.add_argument("--rounds", type=int, default=None)
    p.add_argument("--trace-dir", default=None,
                   help="dump one JSON trace per trial into this directory")
    p.set_defaults(func=cmd_guard)

    p = sub.add_parser("probe", help="random-graph sweep: bounds + desk-scale cop numbers")
    _add_common(p, graph_source=False)
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--seeds", default="0", help="comma-separated seeds (one row per (n, seed))")
    p.add_argument("--p", default="corollary",
                   help="edge probability, or 'corollary' for 2.5*ln(n)/n")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except StateLimitError as exc:
        print(f"copsrobbers: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as exc:
        print(f"copsrobbers: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
