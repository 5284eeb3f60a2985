"""Command-line interface.

Exit codes: 0 success, 1 verification found violations, 2 invalid input,
3 an oracle cap was exceeded, 4 an internal proof assertion failed.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
import time
from dataclasses import asdict, dataclass, fields

from . import __version__
from .colouring import ColouringConfig, colour_kk
from .exceptions import InvalidGraphError, ProofViolation, TooLarge
from .generators import FAMILIES, generate
from .graph import fractional_power
from .io import (
    format_colouring,
    format_decomposition,
    format_graph,
    format_roles,
    parse_colouring,
    parse_digraph,
    parse_graph,
)
from .oracles import (
    EXCLUSION_STYLES,
    branch_clique,
    exact_chromatic,
    exact_dst,
    exact_incidence_number,
    mc_transversal_failure,
    verify_colouring,
)
from .star_forest import star_forest_decompose

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP, EXIT_PROOF = 0, 1, 2, 3, 4
BENCH_SCHEMA = "# fracpow-bench v1"
SWEEP_SCHEMA = "# fracpow-mc-sweep v1"


@dataclass
class RunConfig:
    """Everything that determines a colouring run; echoed into its stats."""

    seed: int
    k: int = 3
    r_min: int = 4
    r_override: int | None = None
    max_rounds: int = 200
    max_escalations: int = 6
    compact: bool = False
    exact_cap: int = 40
    out: str | None = None
    stats_out: str | None = None

    def __post_init__(self):
        if self.k < 2 or self.exact_cap < 1:
            raise ValueError("k must be >= 2 and exact_cap positive")
        self.colouring_config()

    def colouring_config(self) -> ColouringConfig:
        return ColouringConfig(self.r_min, self.r_override, self.max_rounds,
                               self.max_escalations, self.compact)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _number(token: str):
    try:
        return int(token)
    except ValueError:
        return float(token)


def parse_family_spec(spec: str, seed: int | None):
    """``family:arg:arg`` as used by ``bench``, e.g. ``random_regular:20:3``."""
    name, *params = spec.split(":")
    return generate(name, *(_number(p) for p in params), seed=seed)


def cmd_gen(args) -> int:
    g = generate(args.family, *(_number(p) for p in args.params), seed=args.seed)
    _write(args.out, format_graph(g))
    return EXIT_OK


def cmd_build(args) -> int:
    g = parse_graph(_read(args.input))
    fp = fractional_power(g, args.m, args.n)
    _write(args.out, format_graph(fp.graph))
    if args.roles:
        _write(args.roles, format_roles(fp.roles))
    return EXIT_OK


def _run_config(args) -> RunConfig:
    if args.config:
        cfg = RunConfig.from_json(_read(args.config))
        if args.seed is not None:
            cfg.seed = args.seed
    else:
        if args.seed is None:
            raise ValueError("--seed is required (or supply --config)")
        cfg = RunConfig(
            seed=args.seed, k=args.k, r_min=args.r_min, r_override=args.r_override,
            max_rounds=args.max_rounds, max_escalations=args.max_escalations,
            compact=args.compact,
        )
    cfg.out, cfg.stats_out = args.out, args.stats
    return cfg


def cmd_colour(args) -> int:
    cfg = _run_config(args)
    g = parse_graph(_read(args.input))
    colour, stats = colour_kk(g, cfg.k, cfg.seed, cfg.colouring_config())
    fp = fractional_power(g, cfg.k, cfg.k)
    problems = verify_colouring(fp.graph, colour)
    if problems:
        raise ProofViolation(f"pipeline produced an improper colouring: {problems[0]}")
    _write(cfg.out, format_colouring(colour))
    payload = stats.to_dict()
    payload["config"] = asdict(cfg)
    payload["violations"] = 0
    stats_text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.stats_out:
        _write(cfg.stats_out, stats_text)
    elif cfg.out not in (None, "-"):
        sys.stdout.write(stats_text)
    return EXIT_OK


def cmd_verify(args) -> int:
    h = parse_graph(_read(args.graph))
    colour = parse_colouring(_read(args.colouring))
    problems = verify_colouring(h, colour)
    for p in problems:
        print(f"{p.kind} {' '.join(map(str, p.witness))}")
    if not problems:
        print(f"ok {len(set(colour.values()))} colours")
        return EXIT_OK
    return EXIT_VIOLATION


def cmd_exact(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.incidence:
        print(exact_incidence_number(g, cap=args.cap))
    else:
        print(exact_chromatic(g, vertex_cap=args.cap))
    return EXIT_OK


def cmd_clique(args) -> int:
    g = parse_graph(_read(args.graph))
    clique = branch_clique(fractional_power(g, args.k, args.k), args.k)
    print(len(clique))
    print(" ".join(map(str, clique)))
    return EXIT_OK


def cmd_mc(args) -> int:
    stats = mc_transversal_failure(args.k, args.r, args.style, args.trials, args.seed)
    _write(args.out, json.dumps(stats.to_dict(), sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def cmd_mc_sweep(args) -> int:
    buf = _io.StringIO()
    buf.write(SWEEP_SCHEMA + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "r", "style", "trials", "failures", "frequency", "bound", "log_bound", "consistent"])
    for k in sorted(set(args.k)):
        for r in sorted(set(args.r)):
            s = mc_transversal_failure(k, r, args.style, args.trials, args.seed)
            w.writerow([k, r, s.style, s.trials, s.failures, repr(s.frequency),
                        repr(s.bound), repr(s.log_bound), s.consistent()])
    _write(args.out, buf.getvalue())
    return EXIT_OK


def cmd_stars(args) -> int:
    d = parse_digraph(_read(args.digraph))
    dec = star_forest_decompose(d)
    _write(args.out, format_decomposition(dec))
    if args.exact:
        sys.stderr.write(f"classes {dec.class_count} exact {exact_dst(d)}\n")
    return EXIT_OK


BENCH_COLUMNS = ["family", "n", "edges", "delta", "k", "colours_used", "clique_lb",
                 "exact_chi", "rounds", "r_final", "fallback_used"]


def bench_rows(specs, ks, seed, exact_cap=40, timing=False):
    rows = []
    for spec in specs:
        g = parse_family_spec(spec, seed)
        for k in sorted(set(ks)):
            start = time.perf_counter()
            colour, stats = colour_kk(g, k, seed)
            wall = time.perf_counter() - start
            fp = fractional_power(g, k, k)
            lb = len(branch_clique(fp, k)) if g.n else 0
            exact = ""
            if fp.graph.n <= exact_cap:
                try:
                    exact = exact_chromatic(fp.graph, vertex_cap=exact_cap)
                except TooLarge:
                    exact = ""
            if exact != "" and not lb <= exact <= stats.colours_used:
                raise ProofViolation(f"{spec} k={k}: clique {lb}, exact {exact}, used {stats.colours_used}")
            if lb > stats.colours_used:
                raise ProofViolation(f"{spec} k={k}: fewer colours than the clique bound")
            row = [spec, g.n, g.num_edges, g.max_degree, k, stats.colours_used, lb, exact,
                   stats.rounds_total, stats.r_final, stats.fallback_used]
            if timing:
                row.append(f"{wall:.4f}")
            rows.append(row)
    rows.sort(key=lambda r: (r[0], r[4]))
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(args.graph, args.k, args.seed, args.exact_cap, args.timing)
    buf = _io.StringIO()
    buf.write(BENCH_SCHEMA + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_COLUMNS + (["wall_time"] if args.timing else []))
    w.writerows(rows)
    _write(args.out, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fracpow", description="Fractional graph powers and their colourings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family member")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", nargs="+", help="family parameters, e.g. 'hypercube 3' or 'random_regular 10 3'")
    s.add_argument("--seed", type=int, help="required for random families")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("build", help="construct G^{m/n}")
    s.add_argument("input", help="edge-list file, '-' for stdin")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("-o", "--out")
    s.add_argument("--roles", help="write the vertex role map here")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("colour", aliases=["color"], help="colour G^{k/k} and self-verify")
    s.add_argument("input")
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--seed", type=int)
    s.add_argument("--config", help="RunConfig JSON file")
    s.add_argument("--r-min", type=int, default=4)
    s.add_argument("--r-override", type=int)
    s.add_argument("--max-rounds", type=int, default=200)
    s.add_argument("--max-escalations", type=int, default=6)
    s.add_argument("--compact", action="store_true", help="merge colour classes after colouring")
    s.add_argument("-o", "--out", help="colouring output ('vertex colour' lines)")
    s.add_argument("--stats", help="stats JSON output")
    s.set_defaults(func=cmd_colour)

    s = sub.add_parser("verify", help="check a colouring of a graph")
    s.add_argument("graph")
    s.add_argument("colouring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("exact", help="exact chromatic number of a small graph")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=40)
    s.add_argument("--incidence", action="store_true", help="incidence colouring number of the graph instead")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("clique", help="verified clique around a max-degree branch vertex of G^{k/k}")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_clique)

    s = sub.add_parser("mc", help="Monte Carlo failure rate of random list transversals")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--style", choices=EXCLUSION_STYLES, default="fixed-pair")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_mc)

    s = sub.add_parser("mc-sweep", help="Monte Carlo over a (k, r) grid, CSV output")
    s.add_argument("--k", type=int, nargs="+", required=True)
    s.add_argument("--r", type=int, nargs="+", required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--style", choices=EXCLUSION_STYLES, default="fixed-pair")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_mc_sweep)

    s = sub.add_parser("stars", help="cover a digraph by directed star forests")
    s.add_argument("digraph")
    s.add_argument("--exact", action="store_true", help="also report the exact minimum (tiny inputs)")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_stars)

    s = sub.add_parser("bench", help="colour a corpus of generated graphs, CSV output")
    s.add_argument("--graph", action="append", required=True, help="family spec such as cycle:9 or random_regular:20:3")
    s.add_argument("--k", type=int, action="append", help="may be repeated; default 3")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--exact-cap", type=int, default=40)
    s.add_argument("--timing", action="store_true", help="add a wall_time column (not reproducible)")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is None and args.command == "bench":
        args.k = [3]
    try:
        return args.func(args)
    except ProofViolation as exc:
        print(f"proof violation: {exc}", file=sys.stderr)
        return EXIT_PROOF
    except TooLarge as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
