"""Immutable simple undirected graphs and the degree/distance primitives
that every index oracle is built on."""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Sequence

#: Sentinel distance for vertices not reachable from the BFS source.
UNREACHABLE = -1


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable: mutating operations (``remove_edge``,
    ``permute``) return new graphs, so every oracle stays pure and graphs
    can be shared freely across threads.

    Attributes:
        n: vertex count.
        adjacency: per-vertex sorted tuple of neighbor indices.
        edges: sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    __slots__ = ("n", "adjacency", "edges")

    def __init__(self, n: int, adjacency: tuple, edges: tuple):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and construct a :class:`Graph`.

    Rejects out-of-range endpoints, self-loops and duplicate edges, naming
    the offending pair in the error message.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative (got {n})")
    seen: set[tuple[int, int]] = set()
    normalized: list[tuple[int, int]] = []
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge endpoint out of range [0, {n}): ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop not allowed: ({u}, {v})")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ValueError(f"duplicate edge: ({u}, {v})")
        seen.add(e)
        normalized.append(e)
    normalized.sort()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in normalized:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    return Graph(n, adjacency, tuple(normalized))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Index-aligned vertex degrees; their sum is twice the edge count."""
    return tuple(len(nbrs) for nbrs in g.adjacency)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get UNREACHABLE."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range [0, {g.n})")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: edge (u, v) becomes (perm[u], perm[v])."""
    if len(perm) != g.n or sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a bijection on the vertex set")
    return build(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph without edge (u, v); the original is untouched."""
    e = (u, v) if u < v else (v, u)
    if e not in set(g.edges):
        raise ValueError(f"edge ({u}, {v}) not present")
    return build(g.n, [f for f in g.edges if f != e])


# --- text / JSON exchange formats -----------------------------------------
#
# Text: first line "n m", then m lines "u v" in ascending (u < v) order.
# JSON: {"n": <int>, "edges": [[u, v], ...]}.


def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build(n, edges)


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def from_json(text: str) -> Graph:
    obj = json.loads(text)
    return build(int(obj["n"]), [tuple(e) for e in obj["edges"]])
