"""Command line: generate, attack, experiment, replay."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import io as gio
from .attack import attack_sequence, replay_trace
from .errors import InputError
from .experiment import load_config, results_csv, results_json, run_experiment
from .generators import ModularSpec, ScaleFreeSpec, generate, generate_pw_standin
from .presets import PRESETS
from .robustness import mean_robustness, robustness_coefficient


def _load_graph(path):
    with open(path) as fh:
        first = fh.readline().split()
    if first[:1] == ["n"]:
        return gio.read_edge_list(path)
    return gio.read_dsm(path)


def cmd_generate(args):
    if args.family == "modular":
        g = generate(ModularSpec(args.n, args.modules, args.density, args.p, args.seed))
    elif args.family == "scale-free":
        g = generate(ScaleFreeSpec(args.n, args.m_attach, args.seed, args.preprune))
    else:
        g = generate_pw_standin(args.seed)
    if args.out:
        gio.write_edge_list(g, args.out)
    else:
        sys.stdout.write(f"n {g.id_bound}\n" + "".join(f"{u} {v}\n" for u, v in g.edge_array()))
    print(f"{g.node_count} nodes, {g.edge_count} edges", file=sys.stderr)
    return 0


def cmd_attack(args):
    g = _load_graph(args.graph)
    traces = []
    for r in range(args.replicas):
        seed = None if args.seed is None else args.seed + r
        trace = attack_sequence(g, args.strategy, seed=seed, tie_break=args.tie_break)
        traces.append(trace)
        if args.out:
            gio.write_trace(trace, args.out if args.replicas == 1 else f"{args.out}.{r}")
    mean, std, values = mean_robustness(traces)
    if args.format == "json":
        print(json.dumps({"strategy": args.strategy, "n": g.node_count, "mean": round(mean, 4),
                          "std": round(std, 4), "values": values}))
    else:
        print(f"strategy={args.strategy} n={g.node_count} R={mean:.4f} std={std:.4f} replicas={len(values)}")
    return 0


def cmd_experiment(args):
    if args.preset:
        config = PRESETS[args.preset]()
    elif args.config:
        config = load_config(args.config)
    else:
        raise InputError("give a config file or --preset")
    config = config.with_overrides(replicas=args.replicas, base_seed=args.seed,
                                   output_path=args.out, output_format=args.format)
    table = run_experiment(config, workers=args.workers)
    if not config.output_path:
        sys.stdout.write(results_json(table) if config.output_format == "json" else results_csv(table))
    if table.failures:
        print(f"{len(table.failures)} task(s) failed; see failure manifest", file=sys.stderr)
        return 1
    return 0


def cmd_replay(args):
    g = _load_graph(args.graph)
    trace = gio.read_trace(args.trace)
    series = replay_trace(g, trace.removed)
    if series != trace.s_series:
        k = next(i for i, (a, b) in enumerate(zip(series, trace.s_series)) if a != b) \
            if len(series) == len(trace.s_series) else min(len(series), len(trace.s_series))
        print(f"MISMATCH at S_{k}: stored {trace.s_series[k:k + 1]} recomputed {series[k:k + 1]}")
        return 1
    print(f"OK {len(trace.removed)} removals, R={robustness_coefficient(series).r_percent:.4f}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="mechrobust", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a synthetic network as an edge list")
    g.add_argument("family", choices=["modular", "scale-free", "pw-standin"])
    g.add_argument("--n", type=int, default=100)
    g.add_argument("--modules", type=int, default=5)
    g.add_argument("--density", type=float, default=1.0)
    g.add_argument("--p", type=float, default=0.0, help="rewiring probability")
    g.add_argument("--m-attach", type=int, default=2)
    g.add_argument("--preprune", type=float, default=0.0)
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("attack", help="attack a graph file and report R")
    a.add_argument("graph", help="edge list or DSM file")
    a.add_argument("--strategy", default="betweenness",
                   choices=["degree", "betweenness", "closeness", "random"])
    a.add_argument("--seed", type=int)
    a.add_argument("--replicas", type=int, default=1)
    a.add_argument("--tie-break", choices=["lowest", "random"], default="lowest")
    a.add_argument("--format", choices=["csv", "json"], default="csv")
    a.add_argument("--out", help="trace file")
    a.set_defaults(func=cmd_attack)

    e = sub.add_parser("experiment", help="run an experiment grid")
    e.add_argument("config", nargs="?")
    e.add_argument("--preset", choices=sorted(PRESETS))
    e.add_argument("--seed", type=int)
    e.add_argument("--replicas", type=int)
    e.add_argument("--format", choices=["csv", "json"])
    e.add_argument("--out")
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_experiment)

    r = sub.add_parser("replay", help="recompute a stored trace and compare")
    r.add_argument("graph")
    r.add_argument("trace")
    r.set_defaults(func=cmd_replay)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
