"""Sombor/Zagreb/Wiener index oracles, parametric pendant-tree families,
closed-form formulas, and a formula-vs-oracle verification harness."""

from .graphs import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    build,
    degree_sequence,
    is_connected,
    permute,
    remove_edge,
)
from .indices import (
    IndexReport,
    compute_report,
    degree_pair_index,
    edge_subset_sombor,
    sombor,
    wiener,
    zagreb_m1,
    zagreb_m2,
)
from .families import FamilySpec, LevelTag, make
from .growth import GrowthSeries, pendant_extend, run_series, successive_ratios
from .verify import VerificationRecord, residual_stability, verify_formula, verify_grid

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "FamilySpec",
    "GrowthSeries",
    "IndexReport",
    "LevelTag",
    "UNREACHABLE",
    "VerificationRecord",
    "bfs_distances",
    "build",
    "compute_report",
    "degree_pair_index",
    "degree_sequence",
    "edge_subset_sombor",
    "is_connected",
    "make",
    "pendant_extend",
    "permute",
    "remove_edge",
    "residual_stability",
    "run_series",
    "sombor",
    "successive_ratios",
    "verify_formula",
    "verify_grid",
    "wiener",
    "zagreb_m1",
    "zagreb_m2",
]
