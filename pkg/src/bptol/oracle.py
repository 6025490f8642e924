"""Preprocess-once tolerance oracle for max-min (bottleneck) path queries.

Given a validated graph and k source--target pairs, ``preprocess`` builds the
maximum spanning tree, the rooted-tree index, the replacement tables, and one
``PairContext`` per pair.  The fixed optimal path for pair i is the tree path
T(s_i, t_i); only its minimum-capacity edge e*_i and value are stored — the
path itself is never materialized.

After that, ``query_edge_for_pair`` answers in O(1) by case analysis:

* e on T(s_i, t_i):  upper = +inf;  lower = +inf if e has no replacement
  edge (bridge), else c(e) - min(c(L[e]), c(e*_i)).
* e not on the path: lower = +inf;  upper = +inf unless e's replacement edge
  U[e] is exactly e*_i, in which case upper = c(e*_i) - c(e).

``query_edge`` maps this over all pairs in O(k).  ``query_edge_arrays`` is a
vectorized variant returning float64 numpy arrays (with ``inf`` entries); its
finite values are exact as long as capacities fit comfortably in a double
(|c| <= 2**52), which holds for everything the bundled generators produce.

A ToleranceOracle is immutable after preprocess; concurrent query calls from
multiple threads are safe (pure reads, no locks).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graphs import CapacitatedGraph, QueryPair, capacity_ranks
from .mst import SpanningTree, build_max_spanning_tree
from .replacement import ReplacementTables, build_replacement_tables
from .tree_index import RootedTreeIndex, build_index

INFINITY = math.inf

#: A tolerance is either an exact (strictly positive) capacity difference or
#: +infinity, represented as math.inf.
Tolerance = int | float


class EdgeTolerances(NamedTuple):
    lower: Tolerance
    upper: Tolerance


@dataclass(frozen=True)
class PairContext:
    """Per-pair preprocessing result: the bottleneck edge of the tree path."""

    pair: QueryPair
    bottleneck_edge: int
    bottleneck_value: int


class ToleranceOracle:
    __slots__ = ("graph", "tree", "index", "tables", "contexts",
                 "_s_tin", "_t_tin", "_estar_arr", "_estar_cap_f", "_cap_f",
                 "_u_arr", "_l_arr", "_l_cap_f", "_is_tree")

    def __init__(self, graph: CapacitatedGraph, tree: SpanningTree,
                 index: RootedTreeIndex, tables: ReplacementTables,
                 contexts: list[PairContext]):
        self.graph = graph
        self.tree = tree
        self.index = index
        self.tables = tables
        self.contexts = contexts
        self._build_query_arrays()

    def _build_query_arrays(self) -> None:
        g = self.graph
        idx = self.index
        s_arr = np.array([c.pair.s for c in self.contexts], dtype=np.int64)
        t_arr = np.array([c.pair.t for c in self.contexts], dtype=np.int64)
        self._s_tin = idx.tin_of(s_arr)
        self._t_tin = idx.tin_of(t_arr)
        self._estar_arr = np.array([c.bottleneck_edge for c in self.contexts],
                                   dtype=np.int64)
        self._estar_cap_f = np.array([c.bottleneck_value for c in self.contexts],
                                     dtype=np.float64)
        self._cap_f = np.array(g.edge_cap, dtype=np.float64)
        self._u_arr = np.array([e or 0 for e in self.tables.U], dtype=np.int64)
        self._l_arr = np.array([e or 0 for e in self.tables.L], dtype=np.int64)
        caps = np.array(g.edge_cap, dtype=np.float64)
        self._l_cap_f = np.where(self._l_arr > 0, caps[self._l_arr], 0.0)
        self._is_tree = np.array(self.tree.is_tree_edge, dtype=bool)

    # -- queries -------------------------------------------------------------

    def query_edge_for_pair(self, e: int, i: int) -> EdgeTolerances:
        """Tolerances of edge e w.r.t. the fixed optimal path of pair i; O(1)."""
        self._check_edge(e)
        if not 0 <= i < len(self.contexts):
            raise IndexError(f"pair index {i} out of range (k={len(self.contexts)})")
        ctx = self.contexts[i]
        g = self.graph
        idx = self.index
        s, t = ctx.pair.s, ctx.pair.t
        on_path = self.tree.is_tree_edge[e] and idx.edge_on_path(e, s, t)
        if on_path:
            rep = self.tables.L[e]
            if rep is None:
                return EdgeTolerances(INFINITY, INFINITY)
            lower = g.edge_cap[e] - min(g.edge_cap[rep], ctx.bottleneck_value)
            return EdgeTolerances(lower, INFINITY)
        rep = self.tables.U[e]
        if rep is None or not idx.edge_on_path(rep, s, t) or rep != ctx.bottleneck_edge:
            return EdgeTolerances(INFINITY, INFINITY)
        return EdgeTolerances(INFINITY, ctx.bottleneck_value - g.edge_cap[e])

    def query_edge(self, e: int) -> list[EdgeTolerances]:
        """All 2k tolerances of edge e, one (lower, upper) per pair; O(k)."""
        return [self.query_edge_for_pair(e, i) for i in range(len(self.contexts))]

    def query_edge_arrays(self, e: int) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized query_edge: float64 (lower, upper) arrays of length k."""
        self._check_edge(e)
        k = len(self.contexts)
        idx = self.index
        cap_e = self._cap_f[e]
        if self._is_tree[e]:
            upper = np.full(k, np.inf)
            rep = int(self._l_arr[e])
            if rep == 0:
                return np.full(k, np.inf), upper
            y = int(idx.tree_edge_child[e])
            on = idx.ancestor_mask(y, self._s_tin) != idx.ancestor_mask(y, self._t_tin)
            drop = cap_e - np.minimum(self._l_cap_f[e], self._estar_cap_f)
            return np.where(on, drop, np.inf), upper
        lower = np.full(k, np.inf)
        gain = self._estar_cap_f - cap_e
        upper = np.where(self._u_arr[e] == self._estar_arr, gain, np.inf)
        return lower, upper

    def bottleneck_value(self, i: int) -> int:
        """b(s_i, t_i): the max over s_i--t_i paths of the path's min capacity."""
        if not 0 <= i < len(self.contexts):
            raise IndexError(f"pair index {i} out of range (k={len(self.contexts)})")
        return self.contexts[i].bottleneck_value

    def _check_edge(self, e: int) -> None:
        if not 1 <= e <= self.graph.m:
            raise IndexError(f"edge id {e} out of range (m={self.graph.m})")


def preprocess(g: CapacitatedGraph, pairs: list[QueryPair]) -> ToleranceOracle:
    """Build the oracle: MST, tree index, replacement tables, pair contexts.

    Accepts plain (s, t) tuples as well as QueryPair values.
    """
    pairs = [p if isinstance(p, QueryPair) else QueryPair(p[0], p[1])
             for p in pairs]
    for p in pairs:
        if not (1 <= p.s <= g.n and 1 <= p.t <= g.n):
            raise ValueError(f"pair ({p.s}, {p.t}) out of range (n={g.n})")
        if p.s == p.t:
            raise ValueError(f"pair ({p.s}, {p.t}) has equal endpoints")
    rank = capacity_ranks(g)
    tree = build_max_spanning_tree(g, rank)
    idx = build_index(tree, g, root=1, rank=rank)
    tables = build_replacement_tables(g, tree, idx)
    if len(pairs) >= 256:
        ss = np.array([p.s for p in pairs], dtype=np.int64)
        ts = np.array([p.t for p in pairs], dtype=np.int64)
        estars = idx.path_min_edge_batch(ss, ts).tolist()
    else:
        estars = [idx.path_min_edge(p.s, p.t) for p in pairs]
    contexts = [PairContext(pair=p, bottleneck_edge=e_star,
                            bottleneck_value=g.edge_cap[e_star])
                for p, e_star in zip(pairs, estars)]
    return ToleranceOracle(g, tree, idx, tables, contexts)
