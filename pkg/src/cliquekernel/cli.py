"""``dominate`` command line.

    dominate                       run the suite over --input-dir
    dominate <n> <edges>           generate one graph and run every process type
    dominate <n> <path>            load one graph and run every process type
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import bench
from .dominance import parse_rules
from .graph import GraphError
from .oracle import OracleCapError


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dominate",
        description="Kernelize graphs with the dominance rules and report deletions and timings.",
        usage="%(prog)s [options] [<number_of_vertices> (<number_of_edges> | <path_to_the_graph_file>)]",
    )
    p.add_argument("args", nargs="*", help=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=bench.DEFAULT_SEED, help="base random seed (default %(default)s)")
    p.add_argument("--workers", type=int, default=None, help="threads for the parallel variants (default: CPU count)")
    p.add_argument("--rules", default=None, help="comma list of alg1, alg2, edgedom (default: all)")
    p.add_argument("--input-dir", default=str(bench.DEFAULT_INPUT_DIR), help="suite graphs (default %(default)s)")
    p.add_argument("--output", default=str(bench.DEFAULT_OUTPUT), help="results CSV, overwritten (default %(default)s)")
    p.add_argument("--oracle-check", action="store_true", help="verify kernel clique numbers on small graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(message)s")

    if len(ns.args) not in (0, 2):
        parser.print_usage(sys.stderr)
        print("dominate: expected no positional arguments or exactly two", file=sys.stderr)
        return 2
    if ns.workers is not None and ns.workers < 1:
        parser.print_usage(sys.stderr)
        print("dominate: --workers must be >= 1", file=sys.stderr)
        return 2
    try:
        rules = parse_rules(ns.rules) if ns.rules else None
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"dominate: {exc}", file=sys.stderr)
        return 2

    common = dict(
        output_path=ns.output,
        seed=ns.seed,
        workers=ns.workers,
        rules=rules,
        oracle_check=ns.oracle_check,
        out=sys.stdout,
    )
    try:
        if not ns.args:
            bench.run_suite(ns.input_dir, **common)
            return 0
        try:
            n = int(ns.args[0])
        except ValueError:
            parser.print_usage(sys.stderr)
            print(f"dominate: number of vertices must be an integer, got {ns.args[0]!r}", file=sys.stderr)
            return 2
        second = ns.args[1]
        source = int(second) if second.lstrip("-").isdigit() else second
        bench.run_single(n, source, **common)
    except (GraphError, OracleCapError, ValueError, OSError, bench.OracleMismatch) as exc:
        print(f"dominate: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
