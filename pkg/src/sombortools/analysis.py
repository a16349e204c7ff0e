"""Least-squares model fits, exhaustive unicyclic enumeration, and
empirical bound checking."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .formulas import BoundValues, bound_values
from .graphs import Graph, build, degree_sequence
from .indices import sombor, zagreb_m1

EQUALITY_TOL = 1e-9


@dataclass(frozen=True)
class FitResult:
    """One fitted model with its residual diagnostics.

    ``residual_norm`` is the root-mean-square residual; ``relative_residual``
    is ||residuals|| / ||y||, the scale-free figure used to compare models.
    """

    model: str
    coefficients: tuple[float, ...]
    residual_norm: float
    relative_residual: float
    base: float | None = None

    def to_dict(self) -> dict:
        out = {
            "model": self.model,
            "coefficients": list(self.coefficients),
            "residual_norm": self.residual_norm,
            "relative_residual": self.relative_residual,
        }
        if self.base is not None:
            out["base"] = self.base
        return out


def _residual_stats(residuals: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    norm = float(np.sqrt(np.mean(residuals**2)))
    y_norm = float(np.linalg.norm(y))
    r_norm = float(np.linalg.norm(residuals))
    if y_norm == 0.0:
        return norm, 0.0 if r_norm == 0.0 else math.inf
    return norm, r_norm / y_norm


def polyfit(points: Sequence[tuple[float, float]], degree: int) -> FitResult:
    """Least-squares polynomial fit via normal equations.

    Coefficients come back highest power first, so degree 2 yields
    (a, b, c) for a*t^2 + b*t + c.  With at most six well-separated
    abscissae and degree <= 3 the normal equations are well conditioned;
    ``numpy.linalg.solve`` factors them with partial pivoting.
    """
    if degree not in (2, 3):
        raise ValueError(f"degree must be 2 or 3 (got {degree})")
    if len(points) < degree + 1:
        raise ValueError(
            f"need at least {degree + 1} points for degree {degree} "
            f"(got {len(points)})"
        )
    t = np.array([float(pt[0]) for pt in points])
    y = np.array([float(pt[1]) for pt in points])
    if len(set(t.tolist())) != len(t):
        raise ValueError("t values must be distinct")
    design = np.vander(t, degree + 1)
    gram = design.T @ design
    coeffs = np.linalg.solve(gram, design.T @ y)
    residuals = design @ coeffs - y
    norm, rel = _residual_stats(residuals, y)
    return FitResult(f"poly{degree}", tuple(float(c) for c in coeffs), norm, rel)


def expfit_geo(points: Sequence[tuple[float, float]], base: float) -> FitResult:
    """Fit the single coefficient of a * base^t * t^2.

    Closed form: a = sum(w_t * y_t) / sum(w_t^2) with w_t = base^t * t^2.
    """
    if not points:
        raise ValueError("need at least one point")
    if base <= 1:
        raise ValueError(f"base must be > 1 (got {base})")
    t = np.array([float(pt[0]) for pt in points])
    y = np.array([float(pt[1]) for pt in points])
    w = base**t * t**2
    denom = float(np.sum(w * w))
    if denom == 0.0:
        raise ValueError("all weights are zero; no coefficient is identifiable")
    a = float(np.sum(w * y)) / denom
    residuals = a * w - y
    norm, rel = _residual_stats(residuals, y)
    return FitResult("expgeo", (a,), norm, rel, base=float(base))


# --- exhaustive unicyclic enumeration ----------------------------------------


def _connected_subset(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def enumerate_unicyclic(
    n: int, max_n: int = 8, order: str = "lex", seed: int = 0
) -> Iterator[Graph]:
    """All labeled connected graphs on n vertices with exactly n edges.

    Iterates n-subsets of the C(n, 2) possible edges and keeps the
    connected ones.  ``order="shuffled"`` walks the same subsets in a
    seeded random order (it materializes the subset list, so keep n small);
    useful as an independent recount of the lexicographic order.
    """
    if not 3 <= n <= max_n:
        raise ValueError(f"n must be in [3, {max_n}] (got {n})")
    if order not in ("lex", "shuffled"):
        raise ValueError(f"unknown order {order!r}")
    all_edges = list(combinations(range(n), 2))
    subsets: Iterable[tuple[tuple[int, int], ...]] = combinations(all_edges, n)
    if order == "shuffled":
        materialized = list(subsets)
        random.Random(seed).shuffle(materialized)
        subsets = materialized
    for chosen in subsets:
        if _connected_subset(n, chosen):
            yield build(n, chosen)


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(len(a) == 2 for a in g.adjacency)


# --- bound checking -----------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    graph_id: int
    n: int
    max_degree: int
    sombor: float
    bounds: BoundValues
    unicyclic_lower_ok: bool
    unicyclic_upper_ok: bool
    cycle_lower_ok: bool
    degree_square_upper_ok: bool
    cycle_lower_equality: bool
    is_cycle: bool
    edges: str

    def to_csv_row(self) -> str:
        b = self.bounds
        return ",".join(
            [
                str(self.graph_id),
                str(self.n),
                str(self.max_degree),
                format(self.sombor, ".9f"),
                format(b.unicyclic_lower, ".9f"),
                format(b.unicyclic_upper, ".9f"),
                format(b.cycle_lower, ".9f"),
                format(b.degree_square_upper, ".9f"),
                str(int(self.unicyclic_lower_ok)),
                str(int(self.unicyclic_upper_ok)),
                str(int(self.cycle_lower_ok)),
                str(int(self.degree_square_upper_ok)),
                str(int(self.cycle_lower_equality)),
                str(int(self.is_cycle)),
                self.edges,
            ]
        )


BOUND_CSV_HEADER = (
    "graph_id,n,max_degree,sombor,unicyclic_lower,unicyclic_upper,cycle_lower,"
    "degree_square_upper,unicyclic_lower_ok,unicyclic_upper_ok,cycle_lower_ok,"
    "degree_square_upper_ok,cycle_lower_equality,is_cycle,edges"
)


@dataclass(frozen=True)
class BoundReport:
    """Per-graph bound evaluations plus summary counts and findings."""

    rows: tuple[BoundRow, ...]
    violation_counts: dict[str, int]
    cycle_lower_equality_ids: tuple[int, ...]
    lower_equality_all_cycles: bool
    findings: tuple[str, ...]

    def to_csv(self) -> str:
        lines = [BOUND_CSV_HEADER]
        lines.extend(row.to_csv_row() for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "graphs": len(self.rows),
            "violation_counts": self.violation_counts,
            "cycle_lower_equality_ids": list(self.cycle_lower_equality_ids),
            "lower_equality_all_cycles": self.lower_equality_all_cycles,
            "findings": list(self.findings),
        }


def check_bounds(graphs: Iterable[Graph]) -> BoundReport:
    """Evaluate all four bounds on every graph and collect witnesses.

    Violations are report content, not errors: the stated unicyclic upper
    and lower bounds are checked empirically and any breach is surfaced as
    a finding.  Equality witnesses of the 2*sqrt(2)*n lower bound are
    recorded so callers can confirm they are exactly the cycles.
    """
    rows: list[BoundRow] = []
    violations = {
        "unicyclic_lower": 0,
        "unicyclic_upper": 0,
        "cycle_lower": 0,
        "degree_square_upper": 0,
    }
    equality_ids: list[int] = []
    equality_all_cycles = True
    findings: list[str] = []
    for graph_id, g in enumerate(graphs):
        so = sombor(g)
        degs = degree_sequence(g)
        b = bound_values(g.n, max(degs), zagreb_m1(g))
        tol = EQUALITY_TOL * max(1.0, abs(so))
        ok_ul = so >= b.unicyclic_lower - tol
        ok_uu = so <= b.unicyclic_upper + tol
        ok_cl = so >= b.cycle_lower - tol
        ok_du = so <= b.degree_square_upper + tol
        equality = abs(so - b.cycle_lower) <= tol
        cyc = is_cycle_graph(g)
        edges_str = ";".join(f"{u}-{v}" for u, v in g.edges)
        rows.append(
            BoundRow(
                graph_id, g.n, max(degs), so, b,
                ok_ul, ok_uu, ok_cl, ok_du, equality, cyc, edges_str,
            )
        )
        for name, ok in (
            ("unicyclic_lower", ok_ul),
            ("unicyclic_upper", ok_uu),
            ("cycle_lower", ok_cl),
            ("degree_square_upper", ok_du),
        ):
            if not ok:
                violations[name] += 1
                findings.append(
                    f"graph {graph_id} (n={g.n}) violates {name}: "
                    f"SO={so:.9f} vs bound={getattr(b, name):.9f}"
                )
        if equality:
            equality_ids.append(graph_id)
            if not cyc:
                equality_all_cycles = False
                findings.append(
                    f"graph {graph_id} attains the cycle lower bound but is not a cycle"
                )
    return BoundReport(
        rows=tuple(rows),
        violation_counts=violations,
        cycle_lower_equality_ids=tuple(equality_ids),
        lower_equality_all_cycles=equality_all_cycles,
        findings=tuple(findings),
    )
