"""Maximum spanning tree via Kruskal over the (capacity, EdgeId) order.

With pairwise-distinct capacities the maximum spanning tree is unique, so the
result is independent of edge input order.  The descending scan uses the same
rank order as every other capacity comparison in the library.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dsu import DisjointSets
from .graphs import CapacitatedGraph, capacity_ranks


@dataclass(frozen=True)
class SpanningTree:
    """n-1 tree edge ids plus a per-edge membership flag (index 0 unused)."""
    edge_ids: frozenset[int]
    is_tree_edge: tuple[bool, ...]

    def __contains__(self, e: int) -> bool:
        return self.is_tree_edge[e]


def build_max_spanning_tree(g: CapacitatedGraph, rank: np.ndarray | None = None) -> SpanningTree:
    """Unique maximum spanning tree of a validated (connected) graph."""
    if rank is None:
        rank = capacity_ranks(g)
    order = np.argsort(rank[1:], kind="stable")[::-1] + 1
    sets = DisjointSets(range(1, g.n + 1))
    flags = [False] * (g.m + 1)
    chosen = []
    needed = g.n - 1
    edge_u, edge_v = g.edge_u, g.edge_v
    for e in map(int, order):
        if sets.union(edge_u[e], edge_v[e]):
            flags[e] = True
            chosen.append(e)
            if len(chosen) == needed:
                break
    if len(chosen) != needed:
        raise ValueError("graph is not connected")
    return SpanningTree(frozenset(chosen), tuple(flags))
