"""Deterministic random instance generators.

Two families: small exact instances for verification (plain `random.Random`,
n capped, capacities possibly negative), and large sparse instances for
benchmarking (numpy generator, capacities a permutation of 1..m).  Both are
pure functions of their seeds; verification runs must be reproducible from
the command line.
"""
from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from .graphs import CapacitatedGraph, QueryPair


def random_connected_graph(rng: random.Random, max_n: int) -> CapacitatedGraph:
    """Connected simple graph with distinct integer capacities, n in 2..max_n.

    A random spanning tree is laid down first, then extra edges are sampled
    uniformly from the remaining vertex pairs; edge ids end up in shuffled
    order so tree edges are not clustered at the front.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    n = rng.randint(2, max_n)
    max_m = n * (n - 1) // 2
    m = rng.randint(n - 1, max_m)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    chosen: list[tuple[int, int]] = []
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = perm[i], perm[j]
        chosen.append((u, v) if u < v else (v, u))
    tree_keys = set(chosen)
    remaining = [p for p in combinations(range(1, n + 1), 2) if p not in tree_keys]
    chosen.extend(rng.sample(remaining, m - (n - 1)))
    caps = rng.sample(range(-3 * m, 3 * m + 1), m)
    edges = [(u, v, c) for (u, v), c in zip(chosen, caps)]
    rng.shuffle(edges)
    return CapacitatedGraph(n, edges)


def sample_pairs(rng: random.Random, n: int, count: int) -> list[QueryPair]:
    """Up to `count` distinct source-target pairs, in random orientation."""
    total = n * (n - 1) // 2
    if total <= 100_000:
        all_pairs = list(combinations(range(1, n + 1), 2))
        picked = rng.sample(all_pairs, min(count, total))
    else:
        # Too many pairs to enumerate; rejection-sample instead.
        seen: set[tuple[int, int]] = set()
        while len(seen) < min(count, total):
            s = rng.randint(1, n)
            t = rng.randint(1, n)
            if s != t:
                seen.add((min(s, t), max(s, t)))
        picked = sorted(seen)
    return [QueryPair(t, s) if rng.random() < 0.5 else QueryPair(s, t)
            for s, t in picked]


def all_connected_graphs(n: int, rng: random.Random):
    """Yield every connected labeled graph on n vertices, with random
    distinct capacities.  Exponential in n; intended for n <= 5."""
    possible = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(possible)):
        subset = [possible[i] for i in range(len(possible)) if bits >> i & 1]
        if len(subset) < n - 1 or not _subset_connected(n, subset):
            continue
        caps = rng.sample(range(-3 * len(subset), 3 * len(subset) + 1), len(subset))
        yield CapacitatedGraph(n, [(u, v, c) for (u, v), c in zip(subset, caps)])


def _subset_connected(n: int, pairs: list[tuple[int, int]]) -> bool:
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {1}
    stack = [1]
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def random_benchmark_graph(n: int, m: int, seed: int) -> CapacitatedGraph:
    """Large connected graph for timing runs: random attachment tree plus
    uniformly sampled extra edges; capacities are a permutation of 1..m."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} infeasible for n={n}")
    gen = np.random.default_rng(seed)
    kids = np.arange(2, n + 1, dtype=np.int64)
    parents = gen.integers(1, kids)  # uniform in 1..i-1 for vertex i
    lo = np.minimum(kids, parents)
    hi = np.maximum(kids, parents)
    keys = {int(k) for k in (lo * (n + 1) + hi)}
    us = [lo]
    vs = [hi]
    need = m - (n - 1)
    while need > 0:
        a = gen.integers(1, n + 1, size=2 * need + 16)
        b = gen.integers(1, n + 1, size=2 * need + 16)
        keep = a != b
        a, b = a[keep], b[keep]
        lo2, hi2 = np.minimum(a, b), np.maximum(a, b)
        cand = np.unique(lo2 * (n + 1) + hi2)
        fresh = np.array([k for k in cand.tolist() if k not in keys],
                         dtype=np.int64)[:need]
        keys.update(fresh.tolist())
        us.append(fresh // (n + 1))
        vs.append(fresh % (n + 1))
        need -= len(fresh)
    u_all = np.concatenate(us)
    v_all = np.concatenate(vs)
    order = gen.permutation(m)
    u_all, v_all = u_all[order], v_all[order]
    caps = gen.permutation(m) + 1
    edges = list(zip(u_all.tolist(), v_all.tolist(), caps.tolist()))
    return CapacitatedGraph(n, edges)


def random_query_edges(m: int, count: int, seed: int) -> np.ndarray:
    """Deterministic stream of `count` edge ids in 1..m for query timing."""
    gen = np.random.default_rng(seed)
    return gen.integers(1, m + 1, size=count)
