"""Command-line interface.

Subcommands:

* ``validate GRAPH`` — parse + validity report; exit 0 iff valid.
* ``serve GRAPH PAIRS`` — preprocess, then answer edge queries from stdin,
  one per line ("edge 3" or endpoint form "1 2"); each answer is k lines
  ``i s t lower upper`` (pair index 1-based) followed by a blank line.
* ``all GRAPH PAIRS`` — header ``n m k`` then the full m*k dump, edge-major,
  identical record-for-record with what serve would answer per edge.
* ``verify [MAX_N] [INSTANCES] [SEED]`` — randomized cross-check of the fast
  oracle against the brute-force reference; prints the first counterexample
  verbatim on failure.
* ``bench [N] [M] [K] [QUERIES] [SEED]`` — timing report, one "key value"
  line each.

Exit codes: 0 success, 1 validation/verification failure (including parse
errors), 2 I/O or usage errors.  Tolerances print as integers or lowercase
"inf"; all output is LF-terminated and deterministic for fixed inputs.
"""
from __future__ import annotations

import argparse
import math
import random
import sys
import time
from pathlib import Path

from .graphs import (CapacitatedGraph, ParseError, QueryPair, parse_graph,
                     parse_pairs, serialize_graph, validate)
from .oracle import ToleranceOracle, preprocess
from .randgraph import (random_benchmark_graph, random_connected_graph,
                        random_query_edges, sample_pairs)
from .reference import PairAnalysis

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

VERIFY_DEFAULTS = (8, 500, 42)
BENCH_DEFAULTS = (100_000, 500_000, 1_000, 100_000, 7)
PAIRS_PER_VERIFY_INSTANCE = 6


def _fmt(value) -> str:
    return "inf" if value == math.inf else str(value)


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_validated(graph_path: str, break_ties: bool) -> CapacitatedGraph:
    """Parse + validate or raise; ParseError and Violation map to exit 1."""
    g = parse_graph(_read_text(graph_path))
    violation = validate(g, allow_equal_capacities=break_ties)
    if violation is not None:
        raise _ValidationFailure(violation.message)
    return g


class _ValidationFailure(Exception):
    pass


# -- subcommands --------------------------------------------------------------

def cmd_validate(args) -> int:
    g = _load_validated(args.graph, args.break_ties)
    print(f"valid n={g.n} m={g.m}")
    return EXIT_OK


def _answer_lines(oracle: ToleranceOracle, e: int) -> list[str]:
    lines = []
    for i, (lower, upper) in enumerate(oracle.query_edge(e), start=1):
        pair = oracle.contexts[i - 1].pair
        lines.append(f"{i} {pair.s} {pair.t} {_fmt(lower)} {_fmt(upper)}")
    return lines


def _resolve_request(g: CapacitatedGraph, line: str) -> int | None:
    """EdgeId for a request line, or None when it names no edge."""
    parts = line.split()
    if len(parts) == 2 and parts[0] == "edge":
        try:
            e = int(parts[1])
        except ValueError:
            return None
        return e if 1 <= e <= g.m else None
    if len(parts) == 2:
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            return None
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            return None
        return g.edge_between(u, v)
    return None


def cmd_serve(args) -> int:
    g = _load_validated(args.graph, args.break_ties)
    pairs = parse_pairs(_read_text(args.pairs), g.n)
    oracle = preprocess(g, pairs)
    out = sys.stdout
    for line in sys.stdin:
        if not line.strip():
            continue
        e = _resolve_request(g, line)
        if e is None:
            out.write("error unknown-edge\n")
        else:
            for record in _answer_lines(oracle, e):
                out.write(record + "\n")
            out.write("\n")
        out.flush()
    return EXIT_OK


def cmd_all(args) -> int:
    g = _load_validated(args.graph, args.break_ties)
    pairs = parse_pairs(_read_text(args.pairs), g.n)
    oracle = preprocess(g, pairs)
    out = sys.stdout
    out.write(f"{g.n} {g.m} {len(pairs)}\n")
    for e in g.edge_ids():
        for record in _answer_lines(oracle, e):
            out.write(record + "\n")
    return EXIT_OK


def _verify_one(g: CapacitatedGraph, pairs: list[QueryPair]) -> tuple[int, str | None]:
    """Cross-check one instance; (comparison count, first mismatch or None)."""
    oracle = preprocess(g, pairs)
    checked = 0
    for i, pair in enumerate(pairs):
        analysis = PairAnalysis(g, pair.s, pair.t)
        if oracle.bottleneck_value(i) != analysis.bottleneck:
            return checked, (f"bottleneck mismatch pair ({pair.s},{pair.t}): "
                             f"fast {oracle.bottleneck_value(i)} "
                             f"brute {analysis.bottleneck}")
        for e in g.edge_ids():
            fast = oracle.query_edge_for_pair(e, i)
            ref = analysis.tolerances(e)
            checked += 1
            if fast != ref:
                return checked, (f"tolerance mismatch edge {e} pair "
                                 f"({pair.s},{pair.t}): fast {fast} brute {ref}")
            lower, upper = fast
            if lower != math.inf and upper != math.inf:
                return checked, (f"both tolerances finite for edge {e} pair "
                                 f"({pair.s},{pair.t}): {fast}")
            for tol, sign, side in ((lower, -1, "lower"), (upper, +1, "upper")):
                if tol == math.inf:
                    continue
                if tol <= 0:
                    return checked, (f"non-positive finite {side} tolerance {tol} "
                                     f"edge {e} pair ({pair.s},{pair.t})")
                if not analysis.still_optimal(e, sign * tol):
                    return checked, (f"{side} tolerance {tol} of edge {e} pair "
                                     f"({pair.s},{pair.t}) breaks optimality "
                                     f"at the claimed-safe shift")
                if analysis.still_optimal(e, sign * (tol + 1)):
                    return checked, (f"{side} tolerance {tol} of edge {e} pair "
                                     f"({pair.s},{pair.t}) survives one past "
                                     f"the claimed supremum")
    return checked, None


def cmd_verify(args) -> int:
    max_n = args.max_n if args.max_n is not None else (
        args.pos_max_n if args.pos_max_n is not None else VERIFY_DEFAULTS[0])
    instances = args.instances if args.instances is not None else (
        args.pos_instances if args.pos_instances is not None else VERIFY_DEFAULTS[1])
    seed = args.seed if args.seed is not None else (
        args.pos_seed if args.pos_seed is not None else VERIFY_DEFAULTS[2])
    rng = random.Random(seed)
    total = 0
    for index in range(instances):
        g = random_connected_graph(rng, max_n)
        pairs = sample_pairs(rng, g.n, PAIRS_PER_VERIFY_INSTANCE)
        checked, mismatch = _verify_one(g, pairs)
        total += checked
        if mismatch is not None:
            print(f"FAIL instance {index} seed {seed}")
            print(mismatch)
            print("graph:")
            sys.stdout.write(serialize_graph(g))
            print(f"pairs: {[(p.s, p.t) for p in pairs]}")
            return EXIT_INVALID
    print(f"instances {instances}")
    print(f"max_n {max_n}")
    print(f"seed {seed}")
    print(f"comparisons {total}")
    print("result PASS")
    return EXIT_OK


def cmd_bench(args) -> int:
    n = args.pos_n if args.pos_n is not None else BENCH_DEFAULTS[0]
    m = args.pos_m if args.pos_m is not None else BENCH_DEFAULTS[1]
    k = args.pos_k if args.pos_k is not None else BENCH_DEFAULTS[2]
    queries = args.pos_queries if args.pos_queries is not None else BENCH_DEFAULTS[3]
    seed = args.seed if args.seed is not None else (
        args.pos_seed if args.pos_seed is not None else BENCH_DEFAULTS[4])

    t0 = time.perf_counter()
    g = random_benchmark_graph(n, m, seed)
    generate_seconds = time.perf_counter() - t0

    rng = random.Random(seed ^ 0x5EED)
    pairs = []
    while len(pairs) < k:
        s = rng.randint(1, n)
        t = rng.randint(1, n)
        if s != t:
            pairs.append(QueryPair(s, t))

    t0 = time.perf_counter()
    oracle = preprocess(g, pairs)
    preprocess_seconds = time.perf_counter() - t0

    edge_stream = random_query_edges(m, queries, seed ^ 0xBE7C)
    times = []
    query = oracle.query_edge_arrays
    for e in edge_stream.tolist():
        t0 = time.perf_counter()
        query(e)
        times.append(time.perf_counter() - t0)
    times.sort()
    mean = sum(times) / len(times)
    p99 = times[min(len(times) - 1, int(len(times) * 0.99))]

    for key, value in (("n", n), ("m", m), ("k", k), ("queries", queries),
                       ("seed", seed),
                       ("generate_seconds", f"{generate_seconds:.6f}"),
                       ("preprocess_seconds", f"{preprocess_seconds:.6f}"),
                       ("query_mean_seconds", f"{mean:.9f}"),
                       ("query_p99_seconds", f"{p99:.9f}")):
        print(f"{key} {value}")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bptol",
        description="Bottleneck-path tolerance preprocessing and queries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file")
    p.add_argument("graph")
    p.add_argument("--break-ties", action="store_true",
                   help="accept duplicate capacities (results then hold for an "
                        "infinitesimally perturbed instance)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("serve", help="answer edge queries from stdin")
    p.add_argument("graph")
    p.add_argument("pairs")
    p.add_argument("--break-ties", action="store_true")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("all", help="dump tolerances for every (edge, pair)")
    p.add_argument("graph")
    p.add_argument("pairs")
    p.add_argument("--break-ties", action="store_true")
    p.set_defaults(func=cmd_all)

    p = sub.add_parser("verify", help="randomized cross-check against the "
                                      "brute-force reference")
    p.add_argument("pos_max_n", nargs="?", type=int, default=None,
                   metavar="MAX_N")
    p.add_argument("pos_instances", nargs="?", type=int, default=None,
                   metavar="INSTANCES")
    p.add_argument("pos_seed", nargs="?", type=int, default=None, metavar="SEED")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--instances", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing report")
    p.add_argument("pos_n", nargs="?", type=int, default=None, metavar="N")
    p.add_argument("pos_m", nargs="?", type=int, default=None, metavar="M")
    p.add_argument("pos_k", nargs="?", type=int, default=None, metavar="K")
    p.add_argument("pos_queries", nargs="?", type=int, default=None,
                   metavar="QUERIES")
    p.add_argument("pos_seed", nargs="?", type=int, default=None, metavar="SEED")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ValidationFailure as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
