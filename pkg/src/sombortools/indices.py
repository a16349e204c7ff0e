"""Brute-force oracles for the Sombor, Zagreb and Wiener indices.

Every function sums directly over the graph structure; none of them knows
anything about closed-form formulas, which is what makes them usable as
independent checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .graphs import Graph, degree_sequence, is_connected


def sombor(g: Graph) -> float:
    """Sum of sqrt(d(u)^2 + d(v)^2) over all edges.

    Edges are consumed in ascending (u, v) order and accumulated with
    ``math.fsum`` so results are reproducible run to run.  ``math.hypot``
    keeps the per-edge term overflow-safe for large degrees.
    """
    deg = degree_sequence(g)
    return math.fsum(math.hypot(deg[u], deg[v]) for u, v in g.edges)


def zagreb_m1(g: Graph) -> int:
    """Sum of squared vertex degrees (exact integer)."""
    return sum(d * d for d in degree_sequence(g))


def zagreb_m2(g: Graph) -> int:
    """Sum of degree products over edges (exact integer)."""
    deg = degree_sequence(g)
    return sum(deg[u] * deg[v] for u, v in g.edges)


def degree_pair_index(g: Graph, weight: Callable[[int, int], float]) -> float:
    """Sum of ``weight(d(u), d(v))`` over edges, for any symmetric weight.

    ``sombor`` and ``zagreb_m2`` are the instances used in this package.
    """
    deg = degree_sequence(g)
    return math.fsum(weight(deg[u], deg[v]) for u, v in g.edges)


def edge_subset_sombor(g: Graph, edges: Iterable[tuple[int, int]]) -> float:
    """Sombor contribution of exactly the listed edges.

    Degrees come from the full graph, so this computes partial sums such as
    the spine-restricted contribution of a caterpillar.
    """
    deg = degree_sequence(g)
    present = set(g.edges)
    terms = []
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e not in present:
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        terms.append(math.hypot(deg[u], deg[v]))
    return math.fsum(terms)


def _all_sources_distance_sum(g: Graph) -> int:
    """Sum over all ordered pairs (s, v) of the BFS hop distance.

    Runs one BFS per source, bit-parallel: row v of the frontier holds one
    bit per source whose BFS currently sits on v, packed into uint64
    words.  Each level gathers neighbor rows and ORs them per vertex; the
    number of newly reached (source, vertex) pairs per level is a popcount.
    Exact integers throughout; O(diameter * m * n/64) word operations.
    """
    n = g.n
    words = (n + 63) // 64
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v, nbrs in enumerate(g.adjacency):
        indptr[v + 1] = indptr[v] + len(nbrs)
    flat = np.fromiter(
        (u for nbrs in g.adjacency for u in nbrs), dtype=np.int64, count=indptr[-1]
    )

    visited = np.zeros((n, words), dtype=np.uint64)
    rows = np.arange(n)
    visited[rows, rows // 64] = np.uint64(1) << (rows % 64).astype(np.uint64)
    frontier = visited.copy()
    total = 0
    level = 0
    while True:
        reached = np.bitwise_or.reduceat(frontier[flat], indptr[:-1], axis=0)
        new = reached & ~visited
        pairs = int(np.bitwise_count(new).sum(dtype=np.int64))
        if pairs == 0:
            break
        level += 1
        total += level * pairs
        visited |= new
        frontier = new
    if int(np.bitwise_count(visited).sum(dtype=np.int64)) != n * n:
        raise ValueError("wiener requires a connected graph")
    return total


def wiener(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs.

    Exact integer; computed as half the sum over all sources of the BFS
    distance totals.  Disconnected input is rejected.
    """
    if g.n <= 1:
        return 0
    if not is_connected(g):
        raise ValueError("wiener requires a connected graph")
    total = _all_sources_distance_sum(g)
    assert total % 2 == 0
    return total // 2


@dataclass(frozen=True)
class IndexReport:
    """Per-graph record of the four indices plus size counts."""

    n: int
    m: int
    sombor: float
    wiener: int
    m1: int
    m2: int

    CSV_HEADER = "n,m,sombor,wiener,m1,m2"

    def to_csv_row(self) -> str:
        return f"{self.n},{self.m},{self.sombor:.6f},{self.wiener},{self.m1},{self.m2}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "sombor": self.sombor,
            "wiener": self.wiener,
            "m1": self.m1,
            "m2": self.m2,
        }


def compute_report(g: Graph) -> IndexReport:
    """All four indices for a connected graph."""
    return IndexReport(
        n=g.n,
        m=g.m,
        sombor=sombor(g),
        wiener=wiener(g),
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
    )
