"""Closed-form Sombor expressions as pure functions of integer parameters.

These functions never look at a graph; the verification harness compares
them against the brute-force oracles.  Domain guards here are the loosest
values under which the expressions stay meaningful, so that reduction
identities (for example the offset form at offset 1) can be evaluated;
the stricter realizability constraints live in :mod:`sombortools.families`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

SQRT2 = math.sqrt(2.0)

# Level products are accumulated as exact ints but used as float edge
# counts; keep them inside the float53 significand.
_EXACT_FLOAT_LIMIT = 2**53


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def so_path(n: int) -> float:
    """Sombor index of the n-vertex path.

    n = 2 is the single edge with both degrees 1, value sqrt(2); for
    n >= 3 the value is 2*sqrt(5) + 2*(n-3)*sqrt(2).
    """
    _require(n >= 2, f"path formula requires n >= 2 (got {n})")
    if n == 2:
        return SQRT2
    return 2.0 * math.sqrt(5.0) + 2.0 * (n - 3) * SQRT2


def so_cycle(n: int) -> float:
    """Sombor index of the n-cycle: 2*sqrt(2)*n."""
    _require(n >= 3, f"cycle formula requires n >= 3 (got {n})")
    return 2.0 * SQRT2 * n


def so_complete(n: int) -> float:
    """Sombor index of the complete graph: (n(n-1)/2) * (n-1) * sqrt(2)."""
    _require(n >= 1, f"complete-graph formula requires n >= 1 (got {n})")
    return (n * (n - 1) / 2.0) * (n - 1) * SQRT2


def so_multilevel_caterpillar(
    n: int, p: int, k: int, levels: Sequence[int] = ()
) -> float:
    """Sombor index of the multilevel caterpillar, all spine degrees p+2.

    Spine term (n-1)*sqrt(2)*(p+2), then one term per level transition:
    n*p edges of degrees (p+2, k+1), n*p*k edges of degrees (k+1, l_1+1),
    n*p*k*l_1 edges of degrees (l_1+1, l_2+1), ..., ending with the leaf
    edges of degrees (l_m+1, 1).
    """
    _require(n >= 2, f"multilevel caterpillar formula requires n >= 2 (got {n})")
    _require(p >= 0, f"multilevel caterpillar formula requires p >= 0 (got {p})")
    _require(k >= 1, f"multilevel caterpillar formula requires k >= 1 (got {k})")
    levels = tuple(levels)
    for i, l in enumerate(levels, start=1):
        _require(l >= 1, f"level size l_{i} must be >= 1 (got {l})")

    child_counts = (p, k, *levels)
    degs = (p + 2,) + tuple(c + 1 for c in child_counts[1:]) + (1,)
    terms = [(n - 1) * SQRT2 * (p + 2)]
    count = n
    for j, c in enumerate(child_counts):
        count *= c
        if count == 0:
            break
        _require(count <= _EXACT_FLOAT_LIMIT, "level product exceeds exact float range")
        terms.append(count * math.hypot(degs[j], degs[j + 1]))
    return math.fsum(terms)


def so_alternating_path(n: int, p: int) -> float:
    """Spine contribution of the path with degrees alternating 2p / 2p+1."""
    _require(n >= 2, f"alternating-path formula requires n >= 2 (got {n})")
    _require(p >= 1, f"alternating-path formula requires p >= 1 (got {p})")
    return (n - 1) * math.sqrt(8.0 * p * p + 4.0 * p + 1.0)


def so_alternating_path_general(n: int, p: int, k: int) -> float:
    """Spine contribution with degrees alternating 2p / 2p+k.

    Reduces to :func:`so_alternating_path` at k = 1.
    """
    _require(n >= 2, f"alternating-path formula requires n >= 2 (got {n})")
    _require(p >= 1, f"alternating-path formula requires p >= 1 (got {p})")
    _require(k >= 1, f"alternating-path formula requires k >= 1 (got {k})")
    return (n - 1) * math.sqrt(8.0 * p * p + 4.0 * p * k + float(k * k))


def so_parity_augmented(n: int, k: int) -> float:
    """Single-level parity-augmented path: spine degree 2+k, pendants of
    degree k under odd spine positions and k+1 under even ones.

    Uses the stated parity counts floor(n/2) and ceil((n-1)/2); for odd n
    these undercount the odd positions by one, which the verification
    harness classifies rather than repairs.
    """
    return so_parity_augmented_offset(n, k, 1)


def so_parity_augmented_offset(n: int, k: int, offset: int) -> float:
    """Parity-augmented path with even-side pendant degree k+offset.

    Numerically equal to :func:`so_parity_augmented` at offset 1.
    """
    _require(n >= 2, f"parity-augmented formula requires n >= 2 (got {n})")
    _require(k > 1, f"parity-augmented formula requires k > 1 (got {k})")
    _require(offset >= 1, f"pendant degree offset must be >= 1 (got {offset})")
    lam1 = (n - 1) * SQRT2 * (2 + k)
    lam2 = (n // 2) * k * math.hypot(2 + k, k)
    lam3 = ((n - 1 + 1) // 2) * k * math.hypot(2 + k, k + offset)
    return math.fsum((lam1, lam2, lam3))


def so_multilevel_parity(n: int, k: int, levels: Sequence[int]) -> float:
    """m-level parity construction: the single-level terms with offset l_1
    plus, for i = 2..m, k^i * floor(n/2) edges of degrees (l_{i-1}, l_i)
    and k^i * ceil((n-1)/2) edges of degrees (l_{i-1}+l_1, l_i).

    The level sum starts at i = 2 because the single-level terms already
    cover level 1.  At m = 1 this reduces to the offset form.
    """
    _require(n >= 2, f"multilevel parity formula requires n >= 2 (got {n})")
    _require(k > 1, f"multilevel parity formula requires k > 1 (got {k})")
    levels = tuple(levels)
    _require(len(levels) >= 1, "multilevel parity formula requires m >= 1 levels")
    for i, l in enumerate(levels, start=1):
        _require(l >= 1, f"level degree l_{i} must be >= 1 (got {l})")
    l1 = levels[0]
    terms = [so_parity_augmented_offset(n, k, l1)]
    odd_count = n // 2
    even_count = (n - 1 + 1) // 2
    for i in range(2, len(levels) + 1):
        prev, cur = levels[i - 2], levels[i - 1]
        ki = k**i
        _require(ki <= _EXACT_FLOAT_LIMIT, "level factor exceeds exact float range")
        terms.append(ki * odd_count * math.hypot(prev, cur))
        terms.append(ki * even_count * math.hypot(prev + l1, cur))
    return math.fsum(terms)


def so_unicyclic_pendant(n: int, k: int) -> float:
    """Cycle with k pendants per vertex: n*sqrt(2)*(2+k) + n*k*sqrt((2+k)^2+1)."""
    _require(n >= 3, f"unicyclic pendant formula requires n >= 3 (got {n})")
    _require(k >= 1, f"unicyclic pendant formula requires k >= 1 (got {k})")
    return n * SQRT2 * (2 + k) + n * k * math.hypot(2 + k, 1)


def recursion_step(
    edge_degree_pairs: Iterable[tuple[int, int]],
    degrees: Sequence[int],
    k: int,
) -> float:
    """Sombor index after one uniform k-pendant extension of a snapshot.

    Given the degree pairs over edges and the degree sequence of the
    current graph, returns sum(hypot(a+k, b+k)) over edges plus
    k * sum(hypot(1, d+k)) over vertices.  Exact, not asymptotic.
    """
    _require(k >= 1, f"pendant extension requires k >= 1 (got {k})")
    edge_part = math.fsum(math.hypot(a + k, b + k) for a, b in edge_degree_pairs)
    vertex_part = math.fsum(math.hypot(1, d + k) for d in degrees)
    return edge_part + k * vertex_part


def asymptotic_leading(n0: int, m0: int, k: int, t: int) -> float:
    """Leading-order model sqrt(2)*m0*k^2*t^2 + k*n0*t^2.

    Models only the contribution of the original subgraph under iterated
    extension; the empirical growth of the full graph is geometric, so this
    is a fitting baseline, not an exact formula.
    """
    _require(t >= 0, f"iteration count must be >= 0 (got {t})")
    return SQRT2 * m0 * k * k * t * t + k * n0 * t * t


@dataclass(frozen=True)
class BoundValues:
    """The four Sombor bounds for unicyclic graphs of order n."""

    unicyclic_lower: float       # (3/2)*sqrt(2)*n
    unicyclic_upper: float       # (5/2)*sqrt(2)*n*(max_degree - 1)
    cycle_lower: float           # 2*sqrt(2)*n, attained exactly by cycles
    degree_square_upper: float   # sqrt(2)*m1


def bound_values(n: int, max_degree: int, m1: int) -> BoundValues:
    """Evaluate the four bound expressions at the given parameters."""
    _require(n >= 3, f"bounds require n >= 3 (got {n})")
    _require(max_degree >= 2, f"bounds require max degree >= 2 (got {max_degree})")
    _require(m1 >= 0, f"bounds require m1 >= 0 (got {m1})")
    return BoundValues(
        unicyclic_lower=1.5 * SQRT2 * n,
        unicyclic_upper=2.5 * SQRT2 * n * (max_degree - 1),
        cycle_lower=2.0 * SQRT2 * n,
        degree_square_upper=SQRT2 * m1,
    )


# --- formula registry --------------------------------------------------------

KIND_EXACT = "exact"    # closed form checked against a graph oracle
KIND_MODEL = "model"    # fitting baseline, checked through model fits
KIND_BOUND = "bound"    # inequality, checked through the bounds report


@dataclass(frozen=True)
class FormulaInfo:
    id: str
    kind: str
    params: tuple[str, ...]


SO_PATH = "so-path"
SO_CYCLE = "so-cycle"
SO_COMPLETE = "so-complete"
MULTILEVEL_CATERPILLAR = "multilevel-caterpillar"
ALTERNATING_PATH = "alternating-path"
ALTERNATING_PATH_GENERAL = "alternating-path-general"
PARITY_AUGMENTED = "parity-augmented"
PARITY_AUGMENTED_OFFSET = "parity-augmented-offset"
MULTILEVEL_PARITY = "multilevel-parity"
UNICYCLIC_PENDANT = "unicyclic-pendant"
RECURSION_STEP = "recursion-step"
ASYMPTOTIC_LEADING = "asymptotic-leading"
BOUND_UNICYCLIC_LOWER = "bound-unicyclic-lower"
BOUND_UNICYCLIC_UPPER = "bound-unicyclic-upper"
BOUND_CYCLE_LOWER = "bound-cycle-lower"
BOUND_DEGREE_SQUARE_UPPER = "bound-degree-square-upper"

FORMULAS: dict[str, FormulaInfo] = {
    info.id: info
    for info in (
        FormulaInfo(SO_PATH, KIND_EXACT, ("n",)),
        FormulaInfo(SO_CYCLE, KIND_EXACT, ("n",)),
        FormulaInfo(SO_COMPLETE, KIND_EXACT, ("n",)),
        FormulaInfo(MULTILEVEL_CATERPILLAR, KIND_EXACT, ("n", "p", "k", "levels")),
        FormulaInfo(ALTERNATING_PATH, KIND_EXACT, ("n", "p")),
        FormulaInfo(ALTERNATING_PATH_GENERAL, KIND_EXACT, ("n", "p", "k")),
        FormulaInfo(PARITY_AUGMENTED, KIND_EXACT, ("n", "k")),
        FormulaInfo(PARITY_AUGMENTED_OFFSET, KIND_EXACT, ("n", "k", "offset")),
        FormulaInfo(MULTILEVEL_PARITY, KIND_EXACT, ("n", "k", "levels")),
        FormulaInfo(UNICYCLIC_PENDANT, KIND_EXACT, ("n", "k")),
        FormulaInfo(RECURSION_STEP, KIND_EXACT, ("seed_n", "k", "t")),
        FormulaInfo(ASYMPTOTIC_LEADING, KIND_MODEL, ("n0", "m0", "k", "t")),
        FormulaInfo(BOUND_UNICYCLIC_LOWER, KIND_BOUND, ("n",)),
        FormulaInfo(BOUND_UNICYCLIC_UPPER, KIND_BOUND, ("n", "max_degree")),
        FormulaInfo(BOUND_CYCLE_LOWER, KIND_BOUND, ("n",)),
        FormulaInfo(BOUND_DEGREE_SQUARE_UPPER, KIND_BOUND, ("m1",)),
    )
}
