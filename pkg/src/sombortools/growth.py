"""Iterated uniform pendant extension and the per-iteration index series."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

from .families import FamilySpec
from .formulas import recursion_step
from .graphs import Graph, build, degree_sequence, is_connected
from .indices import sombor, wiener, zagreb_m1, zagreb_m2

#: Environment variable overriding the default vertex-count safety cap.
MAX_VERTICES_ENV = "SOMBORTOOLS_MAX_VERTICES"
DEFAULT_MAX_VERTICES = 100_000

#: Relative tolerance for the internal recursion-vs-oracle cross-check.
RECURSION_RTOL = 1e-6


def pendant_extend(g: Graph, k: int) -> Graph:
    """Attach k new pendant leaves to every vertex.

    Original vertices keep their indices; the pendants of vertex v occupy
    the contiguous block n + v*k .. n + v*k + (k-1), so runs are
    bit-reproducible.  Every original degree grows by exactly k.
    """
    if k < 1:
        raise ValueError(f"pendant extension requires k >= 1 (got {k})")
    n = g.n
    edges = list(g.edges)
    for v in range(n):
        base = n + v * k
        edges.extend((v, base + j) for j in range(k))
    return build(n * (1 + k), edges)


def snapshot(g: Graph) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Degree pairs over edges plus the degree sequence, for recursion_step."""
    deg = degree_sequence(g)
    return tuple((deg[u], deg[v]) for u, v in g.edges), deg


class GrowthRow(NamedTuple):
    t: int
    n: int
    m: int
    so: float
    wiener: int
    m1: int
    m2: int


@dataclass(frozen=True)
class GrowthSeries:
    """Index values per extension step t = 1..T for a fixed seed and k."""

    seed: FamilySpec | None
    seed_label: str
    k: int
    rows: tuple[GrowthRow, ...]
    notes: str = ""


def _vertex_cap(max_vertices: int | None) -> int:
    if max_vertices is not None:
        return max_vertices
    return int(os.environ.get(MAX_VERTICES_ENV, DEFAULT_MAX_VERTICES))


def run_series(
    seed: Graph,
    k: int,
    t_max: int,
    *,
    seed_spec: FamilySpec | None = None,
    seed_label: str = "",
    notes: str = "",
    max_vertices: int | None = None,
) -> GrowthSeries:
    """Iterate pendant extension and record all four indices per step.

    The Sombor value of each step is recomputed two ways: directly on the
    extended graph and through the one-step recursion from the previous
    snapshot.  A relative disagreement above 1e-6 aborts the run, since it
    would mean either the oracle or the recursion is wrong.
    """
    if t_max < 1:
        raise ValueError(f"series needs t_max >= 1 (got {t_max})")
    if not is_connected(seed):
        raise ValueError("series seed must be connected (Wiener requirement)")
    cap = _vertex_cap(max_vertices)
    rows = []
    g = seed
    for t in range(1, t_max + 1):
        nxt_n = g.n * (1 + k)
        if nxt_n > cap:
            raise ValueError(
                f"step {t} would create {nxt_n} vertices, above the cap {cap} "
                f"(override with max_vertices or ${MAX_VERTICES_ENV})"
            )
        pairs, degs = snapshot(g)
        g = pendant_extend(g, k)
        so_direct = sombor(g)
        so_recursive = recursion_step(pairs, degs, k)
        if abs(so_recursive - so_direct) > RECURSION_RTOL * abs(so_direct):
            raise RuntimeError(
                f"recursion/oracle mismatch at t={t}: "
                f"{so_recursive!r} vs {so_direct!r}"
            )
        rows.append(
            GrowthRow(t, g.n, g.m, so_direct, wiener(g), zagreb_m1(g), zagreb_m2(g))
        )
    return GrowthSeries(
        seed=seed_spec, seed_label=seed_label, k=k, rows=tuple(rows), notes=notes
    )


SERIES_COLUMNS = ("t", "n", "m", "SO", "W", "M1", "M2")


def successive_ratios(series: GrowthSeries, column: str) -> list[float]:
    """value_{t+1} / value_t for consecutive rows of one column."""
    if column not in SERIES_COLUMNS:
        raise ValueError(f"unknown column {column!r}; choose from {SERIES_COLUMNS}")
    if len(series.rows) < 2:
        raise ValueError("ratios need at least two rows")
    idx = SERIES_COLUMNS.index(column)
    values = [row[idx] for row in series.rows]
    ratios = []
    for prev, cur in zip(values, values[1:]):
        if prev == 0:
            raise ValueError(f"zero denominator in column {column!r}")
        ratios.append(cur / prev)
    return ratios


PRECISION_TABLE1 = "table1"
PRECISION_PRECISE = "precise"


def series_to_csv(series: GrowthSeries, precision: str = PRECISION_PRECISE) -> str:
    """Render the series; table1 precision rounds SO to one decimal."""
    if precision not in (PRECISION_TABLE1, PRECISION_PRECISE):
        raise ValueError(f"unknown precision {precision!r}")
    so_fmt = "{:.1f}" if precision == PRECISION_TABLE1 else "{:.6f}"
    lines = [",".join(SERIES_COLUMNS)]
    for row in series.rows:
        lines.append(
            f"{row.t},{row.n},{row.m},{so_fmt.format(row.so)},"
            f"{row.wiener},{row.m1},{row.m2}"
        )
    return "\n".join(lines) + "\n"
