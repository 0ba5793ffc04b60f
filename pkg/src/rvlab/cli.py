"""Command-line front end: generation, solving, class checks, verification,
and differential benchmarking.

Exit codes: 0 connected / verified, 1 not connected / refuted, 2 usage or
IO error. Outputs are deterministic for fixed inputs and seed (bench
runtime columns are measurements and necessarily vary).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass

from rvlab.class_solvers import (
    solve_block_rvc,
    solve_cactus_rvc,
    solve_cactus_srvc,
    solve_split_srvc,
)
from rvlab.formulas import FormulaError, parse_dimacs, unit_propagate, validate_3occ
from rvlab.generators import (
    random_block_graph,
    random_cactus,
    random_connected_graph,
    random_split_graph,
    random_vertex_coloring,
)
from rvlab.graph import ColoredGraph, EdgeColoredGraph
from rvlab.io import GraphFormatError, read_rvgraph, write_rvgraph
from rvlab.recognizers import (
    ClassReport,
    is_bipartite,
    is_block_graph,
    is_cactus,
    is_chordal,
    is_claw_free,
    is_geodetic,
    is_interval,
    is_planar,
    is_proper_interval,
    is_split,
    is_triangle_free,
)
from rvlab.reductions import ReductionCheckError, verify_reduction
from rvlab.reductions.verify import BUILDERS
from rvlab.solvers import (
    MASK_CAPACITY,
    DEFAULT_BRUTE_CAP,
    brute_force_rainbow_check,
    fpt_connectivity,
    is_rainbow_connected,
    is_rainbow_vertex_connected,
    is_strongly_rainbow_connected,
    is_strongly_rainbow_vertex_connected,
    parallel_connectivity,
    VERTEX_VARIANTS,
)

RECOGNIZERS = {
    "bipartite": is_bipartite,
    "chordal": is_chordal,
    "interval": is_interval,
    "proper-interval": is_proper_interval,
    "claw-free": is_claw_free,
    "cactus": is_cactus,
    "block": is_block_graph,
    "split": is_split,
    "planar": is_planar,
    "geodetic": is_geodetic,
    "triangle-free": is_triangle_free,
}

GENERIC_DECIDERS = {
    "rvc": is_rainbow_vertex_connected,
    "srvc": is_strongly_rainbow_vertex_connected,
    "rc": is_rainbow_connected,
    "src": is_strongly_rainbow_connected,
}


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    roles_path: str | None = None
    witness_path: str | None = None
    variant: str | None = None
    engine: str = "auto"
    family: str | None = None
    k: int | None = None
    seed: int = 0
    workers: int = 0
    class_name: str | None = None
    suite: str | None = None
    sizes: list[int] | None = None
    count: int = 5

    def validate(self) -> None:
        if self.family is not None and self.command not in ("gen", "verify-reduction"):
            raise ValueError("--family only applies to gen / verify-reduction")
        if self.k is not None and self.family != "regular":
            raise ValueError("--k requires --family regular")
        if self.family == "regular" and self.k is None:
            raise ValueError("--family regular requires --k")


def brute_cap() -> int:
    return int(os.environ.get("RVLAB_BRUTE_CAP", DEFAULT_BRUTE_CAP))


def _load_formula(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        formula = parse_dimacs(fh.read())
    return validate_3occ(unit_propagate(formula))


def cmd_gen(cfg: RunConfig) -> int:
    inst = _load_formula(cfg.input_path)
    artifact = BUILDERS[cfg.family](inst, cfg.k)
    out = cfg.output_path or "out.rvg"
    write_rvgraph(out, artifact.colored_graph, artifact.roles)
    if cfg.roles_path:
        with open(cfg.roles_path, "w", encoding="utf-8") as fh:
            json.dump(artifact.roles, fh, indent=0, sort_keys=True)
            fh.write("\n")
    print(f"wrote {out}: {artifact.graph.vertex_count} vertices, "
          f"{artifact.graph.edge_count} edges, family {artifact.family}")
    return 0


def _dispatch_auto(colored, variant):
    if variant in VERTEX_VARIANTS and isinstance(colored, ColoredGraph):
        g = colored.graph
        if is_block_graph(g).member:
            return "block", solve_block_rvc(colored)
        if is_cactus(g).member:
            if variant == "srvc":
                return "cactus", solve_cactus_srvc(colored)
            return "cactus", solve_cactus_rvc(colored)
        if variant == "srvc" and is_split(g).member:
            return "split", solve_split_srvc(colored)
    if colored.color_count <= MASK_CAPACITY:
        return "fpt", fpt_connectivity(colored, variant)
    return "generic", GENERIC_DECIDERS[variant](colored)


def cmd_solve(cfg: RunConfig) -> int:
    parsed = read_rvgraph(cfg.input_path)
    variant = cfg.variant
    colored = parsed.vertex_colored if variant in VERTEX_VARIANTS else parsed.edge_colored
    if colored is None:
        raise ValueError(f"variant {variant} needs a "
                         f"{'vertex' if variant in VERTEX_VARIANTS else 'edge'}-colored file")
    engine = cfg.engine
    workers = cfg.workers or os.cpu_count() or 1
    if engine == "auto":
        engine_used, verdict = _dispatch_auto(colored, variant)
    elif engine == "generic":
        if workers > 1:
            engine_used = "generic"
            verdict = parallel_connectivity(colored, variant, workers)
        else:
            engine_used, verdict = "generic", GENERIC_DECIDERS[variant](colored)
    elif engine == "fpt":
        engine_used, verdict = "fpt", fpt_connectivity(colored, variant)
    elif engine == "brute":
        engine_used, verdict = "brute", brute_force_rainbow_check(
            colored, variant, cap=brute_cap(), witnesses=True)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if verdict.connected:
        print(f"CONNECTED variant={variant} engine={engine_used}")
    else:
        print(f"NOT-CONNECTED variant={variant} engine={engine_used} "
              f"failing-pair={verdict.failing_pair}")
    if cfg.witness_path:
        _write_witnesses(cfg.witness_path, colored, variant, verdict)
    return 0 if verdict.connected else 1


def _write_witnesses(path, colored, variant, verdict) -> None:
    witness_paths = verdict.witness_paths
    if verdict.connected and witness_paths is None:
        # engines without witness support fall back to the generic decider
        witness_paths = GENERIC_DECIDERS[variant](colored, witnesses=True).witness_paths
    with open(path, "w", encoding="utf-8") as fh:
        if not verdict.connected:
            fh.write(json.dumps({"connected": False,
                                 "failing_pair": list(verdict.failing_pair)}) + "\n")
            return
        for (s, t) in sorted(witness_paths):
            fh.write(json.dumps({"pair": [s, t],
                                 "path": witness_paths[(s, t)]}) + "\n")


def cmd_check_class(cfg: RunConfig) -> int:
    parsed = read_rvgraph(cfg.input_path)
    recognize = RECOGNIZERS[cfg.class_name]
    report: ClassReport = recognize(parsed.graph)
    if report.member:
        print(f"MEMBER {cfg.class_name}")
        return 0
    print(f"NOT-MEMBER {cfg.class_name} witness={report.witness}")
    return 1


def cmd_verify_reduction(cfg: RunConfig) -> int:
    inst = _load_formula(cfg.input_path)
    try:
        cert = verify_reduction(inst, cfg.family, cfg.k)
    except ReductionCheckError as exc:
        print(f"REFUTED {exc}")
        return 1
    print(json.dumps(cert.to_dict(), sort_keys=True))
    return 0


def _bench_instances(cfg: RunConfig):
    rng = random.Random(cfg.seed)
    for size in cfg.sizes:
        for index in range(cfg.count):
            colors = rng.randint(2, 6)
            if cfg.suite == "block":
                g = random_block_graph(rng, size)
            elif cfg.suite == "cactus":
                g = random_cactus(rng, size)
            elif cfg.suite == "split":
                g = random_split_graph(rng, max(1, size // 3), size - size // 3)
            elif cfg.suite == "fpt":
                g = random_connected_graph(rng, size, size)
            else:
                raise ValueError(f"unknown suite {cfg.suite!r}")
            yield size, index, random_vertex_coloring(rng, g, colors)


def cmd_bench(cfg: RunConfig) -> int:
    engines = {
        "block": ("block", lambda cg: solve_block_rvc(cg, witnesses=False)),
        "cactus": ("cactus", lambda cg: solve_cactus_srvc(cg, witnesses=False)),
        "split": ("split", lambda cg: solve_split_srvc(cg, witnesses=False)),
        "fpt": ("fpt", lambda cg: fpt_connectivity(cg, "srvc")),
    }
    engine_name, engine = engines[cfg.suite]
    variant = "rvc" if cfg.suite == "block" else "srvc"
    print("suite\tsize\tindex\tvertices\tengine\tengine_verdict\t"
          "brute_verdict\tagree\tengine_ms\tbrute_ms")
    all_agree = True
    for size, index, cg in _bench_instances(cfg):
        t0 = time.perf_counter()
        fast = engine(cg).connected
        t1 = time.perf_counter()
        brute = brute_force_rainbow_check(
            cg, variant, cap=brute_cap(), use_distance_shortcut=False).connected
        t2 = time.perf_counter()
        agree = fast == brute
        all_agree = all_agree and agree
        print(f"{cfg.suite}\t{size}\t{index}\t{cg.graph.vertex_count}\t"
              f"{engine_name}\t{fast}\t{brute}\t{str(agree).lower()}\t"
              f"{(t1 - t0) * 1000:.2f}\t{(t2 - t1) * 1000:.2f}")
    return 0 if all_agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rvlab",
        description="rainbow vertex connectivity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a hard instance from a CNF formula")
    gen.add_argument("formula")
    gen.add_argument("--family", required=True, choices=sorted(BUILDERS))
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("-o", "--output", default="out.rvg")
    gen.add_argument("--roles", default=None)

    solve = sub.add_parser("solve", help="decide rainbow connectivity of a graph file")
    solve.add_argument("graph")
    solve.add_argument("--variant", required=True, choices=["rvc", "srvc", "rc", "src"])
    solve.add_argument("--engine", default="auto",
                       choices=["auto", "generic", "fpt", "brute"])
    solve.add_argument("--witness", default=None)
    solve.add_argument("--workers", type=int, default=0)

    check = sub.add_parser("check-class", help="recognize a graph class")
    check.add_argument("graph")
    check.add_argument("class_name", choices=sorted(RECOGNIZERS))

    verify = sub.add_parser("verify-reduction",
                            help="certify satisfiability-connectivity equivalence")
    verify.add_argument("formula")
    verify.add_argument("--family", required=True, choices=sorted(BUILDERS))
    verify.add_argument("--k", type=int, default=None)

    bench = sub.add_parser("bench", help="differential benchmark, TSV output")
    bench.add_argument("--suite", required=True,
                       choices=["block", "cactus", "split", "fpt"])
    bench.add_argument("--sizes", required=True)
    bench.add_argument("--count", type=int, default=5)
    bench.add_argument("--seed", type=int, default=0)
    return parser


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.command == "gen":
        cfg.input_path = args.formula
        cfg.family = args.family
        cfg.k = args.k
        cfg.output_path = args.output
        cfg.roles_path = args.roles
    elif args.command == "solve":
        cfg.input_path = args.graph
        cfg.variant = args.variant
        cfg.engine = args.engine
        cfg.witness_path = args.witness
        cfg.workers = args.workers
    elif args.command == "check-class":
        cfg.input_path = args.graph
        cfg.class_name = args.class_name
    elif args.command == "verify-reduction":
        cfg.input_path = args.formula
        cfg.family = args.family
        cfg.k = args.k
    elif args.command == "bench":
        cfg.suite = args.suite
        cfg.sizes = [int(tok) for tok in args.sizes.split(",") if tok]
        cfg.count = args.count
        cfg.seed = args.seed
    cfg.validate()
    return cfg


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "check-class": cmd_check_class,
    "verify-reduction": cmd_verify_reduction,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (ValueError, OSError, FormulaError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
