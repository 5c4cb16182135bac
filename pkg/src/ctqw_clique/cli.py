"""Command-line front end: generate | solve | experiment | verify.

Exit codes: 0 success, 1 verification failed, 2 usage or parse error.
``CTQW_CLIQUE_THREADS`` bounds the number of worker threads used for
experiment trials (default 1); results are merged in deterministic
(n, p, trial, algorithm) order no matter how they complete.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import oracle as oracle_mod
from .graph import (Clique, Graph, GraphFormatError, UnknownVertexError,
                    first_non_adjacent_pair, gnp_random, read_graph,
                    write_graph)
from .ideal import (BaseGraphSpec, FirstKindSpec, SecondKindSpec,
                    gen_base_graph, gen_first_kind, gen_second_kind)
from .solver import (NotCenterGraphError, algorithm_a, algorithm_b,
                     algorithm_c, delete_min, pick_max)

EXPERIMENT_ALGOS = ("a", "b", "c", "oracle")
SOLVE_ALGOS = ("a", "b", "c", "oracle", "pickmax", "deletemin")
CSV_HEADER = "n,p,trial,algo,size,omega,match,ms,seed"


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid of batch runs: sizes x edge probabilities x seeded trials."""

    n_list: tuple
    p_list: tuple
    trials: int
    seed: int
    algorithms: tuple
    oracle_cap: int = oracle_mod.DEFAULT_CAP

    def __post_init__(self):
        for p in self.p_list:
            if not 0.0 < p < 1.0:
                raise ValueError(f"edge probability must lie in (0, 1), got {p}")
        for n in self.n_list:
            if n < 1:
                raise ValueError("graph sizes must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for algo in self.algorithms:
            if algo not in EXPERIMENT_ALGOS:
                raise ValueError(f"unknown algorithm {algo!r}")


@dataclass(frozen=True)
class ReportRow:
    n: int
    p: float
    trial: int
    algo: str
    size: object
    omega: object
    match: object
    ms: object
    seed: int

    def csv_fields(self):
        return [str(self.n), format(self.p, "g"), str(self.trial), self.algo,
                _cell(self.size), _cell(self.omega), _cell(self.match),
                _cell(self.ms), str(self.seed)]


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def trial_rng(seed: int, n: int, p: float, trial: int) -> np.random.Generator:
    """Independent, reproducible substream for one experiment cell trial."""
    return np.random.default_rng([seed, n, int(round(p * 1_000_000)), trial])


def _solver_size(g: Graph, algo: str):
    if algo == "a":
        return algorithm_a(g)
    if algo == "b":
        return algorithm_b(g)
    if algo == "c":
        return algorithm_c(g)[0]
    raise ValueError(algo)


def _run_trial(cfg: ExperimentConfig, n: int, p: float, trial: int):
    g = gnp_random(n, p, trial_rng(cfg.seed, n, p, trial))
    rows = []
    omega = None
    want_oracle = "oracle" in cfg.algorithms and n <= cfg.oracle_cap
    if want_oracle:
        t0 = time.perf_counter()
        omega = oracle_mod.max_clique_exact(g, cap=cfg.oracle_cap).omega
        oracle_ms = 1000.0 * (time.perf_counter() - t0)
    for algo in cfg.algorithms:
        if algo == "oracle":
            if want_oracle:
                rows.append(ReportRow(n, p, trial, algo, omega, omega, True,
                                      oracle_ms, cfg.seed))
            else:
                rows.append(ReportRow(n, p, trial, algo, None, None, None,
                                      None, cfg.seed))
            continue
        try:
            t0 = time.perf_counter()
            clique = _solver_size(g, algo)
            ms = 1000.0 * (time.perf_counter() - t0)
        except Exception as exc:  # record the failure, keep the batch going
            print(f"warning: {algo} failed on n={n} p={p} trial={trial}: {exc}",
                  file=sys.stderr)
            rows.append(ReportRow(n, p, trial, algo, None, omega, None, None,
                                  cfg.seed))
            continue
        match = (clique.size == omega) if omega is not None else None
        rows.append(ReportRow(n, p, trial, algo, clique.size, omega, match,
                              ms, cfg.seed))
    return rows


def run_experiment(cfg: ExperimentConfig, out_csv=None, summary=None) -> list:
    """Run the full grid; returns rows in (n, p, trial, algo) order."""
    tasks = [(n, p, t) for n in cfg.n_list for p in cfg.p_list
             for t in range(cfg.trials)]
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda a: _run_trial(cfg, *a), tasks))
    else:
        chunks = [_run_trial(cfg, *task) for task in tasks]
    algo_order = {a: i for i, a in enumerate(EXPERIMENT_ALGOS)}
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r.n, r.p, r.trial, algo_order[r.algo]))
    if out_csv is not None:
        with open(out_csv, "w", encoding="ascii") as fh:
            fh.write(CSV_HEADER + "\n")
            for row in rows:
                fh.write(",".join(row.csv_fields()) + "\n")
    if summary is not None:
        _print_summary(cfg, rows, summary)
    return rows


def _thread_count() -> int:
    raw = os.environ.get("CTQW_CLIQUE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _print_summary(cfg: ExperimentConfig, rows, out) -> None:
    print("n,p,algo,matches,trials,match_rate,mean_ms", file=out)
    for n in cfg.n_list:
        for p in cfg.p_list:
            for algo in cfg.algorithms:
                cell = [r for r in rows
                        if r.n == n and r.p == p and r.algo == algo]
                if not cell:
                    continue
                times = [r.ms for r in cell if r.ms is not None]
                mean_ms = sum(times) / len(times) if times else float("nan")
                scored = [r for r in cell if r.match is not None]
                if scored:
                    hits = sum(1 for r in scored if r.match)
                    rate = hits / len(scored)
                    print(f"{n},{format(p, 'g')},{algo},{hits},{len(scored)},"
                          f"{rate:.3f},{mean_ms:.3f}", file=out)
                else:
                    print(f"{n},{format(p, 'g')},{algo},,,,"
                          f"{mean_ms:.3f}", file=out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_generate(args) -> int:
    comments = []
    try:
        if args.kind == "gnp":
            _require(args, "n", "p")
            g = gnp_random(args.n, args.p, np.random.default_rng(args.seed))
        elif args.kind == "first-kind":
            _require(args, "m1", "m2")
            g, _, mc = gen_first_kind(FirstKindSpec(args.m1, args.m2))
            comments.append("planted_mc " + " ".join(str(x) for x in mc))
        elif args.kind == "second-kind":
            _require(args, "m1", "m2", "z")
            g, _, mc = gen_second_kind(SecondKindSpec(args.m1, args.m2, args.z))
            comments.append("planted_mc " + " ".join(str(x) for x in mc))
        else:
            _require(args, "omega", "q", "z")
            g, _, mc = gen_base_graph(BaseGraphSpec(args.omega, args.q, args.z))
            comments.append("planted_mc " + " ".join(str(x) for x in mc))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out is None:
        pos = {lab: i for i, lab in enumerate(g.labels)}
        for c in comments:
            print(f"c {c}")
        print(f"p edge {g.n} {g.edge_count}")
        for u, v in g.edges():
            print(f"e {pos[u] + 1} {pos[v] + 1}")
    else:
        write_graph(g, args.out, "dimacs", comments=comments)
    return 0


def _require(args, *names) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"{args.kind} requires {', '.join(missing)}")


def _detect_center(g: Graph):
    for lab in g.labels:
        if g.is_center(lab):
            return lab
    return None


def _cmd_solve(args) -> int:
    try:
        g = read_graph(args.path, args.format)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    algo = args.algo
    t0 = time.perf_counter()
    try:
        if algo in ("pickmax", "deletemin"):
            center = args.center if args.center is not None else _detect_center(g)
            if center is None:
                print("error: graph has no center vertex; pass --center on a "
                      "center graph", file=sys.stderr)
                return 2
            fn = pick_max if algo == "pickmax" else delete_min
            cliques = [fn(g, center)]
        elif algo == "oracle":
            result = oracle_mod.max_clique_exact(g)
            cliques = list(result.witnesses)
        elif algo == "c":
            cliques = algorithm_c(g)
        elif algo == "a":
            cliques = [algorithm_a(g)]
        else:
            cliques = [algorithm_b(g)]
    except (UnknownVertexError, NotCenterGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ms = 1000.0 * (time.perf_counter() - t0)
    for clique in cliques:
        members = ",".join(str(x) for x in clique.sorted_members())
        print(f"algo={algo} size={clique.size} ms={ms:.3f} clique={members}")
    return 0


def _cmd_experiment(args) -> int:
    try:
        cfg = ExperimentConfig(
            n_list=tuple(int(x) for x in args.n.split(",") if x),
            p_list=tuple(float(x) for x in args.p.split(",") if x),
            trials=args.trials,
            seed=args.seed,
            algorithms=tuple(a for a in EXPERIMENT_ALGOS
                             if a in {x.strip() for x in args.algos.split(",")}),
            oracle_cap=args.cap,
        )
        if not cfg.algorithms:
            raise ValueError("no recognized algorithms requested")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    run_experiment(cfg, out_csv=args.out, summary=sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    try:
        g = read_graph(args.path, args.format)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        pair = first_non_adjacent_pair(g, args.labels)
    except UnknownVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if pair is not None:
        print(f"not a clique: vertices {pair[0]} and {pair[1]} are not adjacent")
        return 1
    print(f"ok: clique of size {len(set(args.labels))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctqw-clique",
        description="Quantum-walk spectral heuristics for maximum clique")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a graph as DIMACS")
    p_gen.add_argument("kind", choices=["gnp", "first-kind", "second-kind", "base"])
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--m1", type=int)
    p_gen.add_argument("--m2", type=int)
    p_gen.add_argument("--z", type=int)
    p_gen.add_argument("--omega", type=int)
    p_gen.add_argument("--q", type=int)
    p_gen.add_argument("--out", type=str, default=None)
    p_gen.set_defaults(func=_cmd_generate)

    p_solve = sub.add_parser("solve", help="find a clique in a graph file")
    p_solve.add_argument("path")
    p_solve.add_argument("--algo", choices=SOLVE_ALGOS, required=True)
    p_solve.add_argument("--format", choices=["dimacs", "edgelist"],
                         default="dimacs")
    p_solve.add_argument("--center", type=int, default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_exp = sub.add_parser("experiment", help="batch random-graph study")
    p_exp.add_argument("--n", required=True, help="comma-separated sizes")
    p_exp.add_argument("--p", required=True, help="comma-separated probabilities")
    p_exp.add_argument("--trials", type=int, default=50)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--algos", default="a,b,oracle")
    p_exp.add_argument("--cap", type=int, default=oracle_mod.DEFAULT_CAP)
    p_exp.add_argument("--out", type=str, default=None, help="CSV output path")
    p_exp.set_defaults(func=_cmd_experiment)

    p_ver = sub.add_parser("verify", help="check that labels form a clique")
    p_ver.add_argument("path")
    p_ver.add_argument("labels", nargs="+", type=int)
    p_ver.add_argument("--format", choices=["dimacs", "edgelist"],
                       default="dimacs")
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
