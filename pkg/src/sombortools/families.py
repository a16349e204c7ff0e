"""Deterministic constructors for the parametric graph families.

Each constructor returns ``(Graph, LevelTag)``.  The tag records, per
vertex, its level in the hierarchy (0 = spine or cycle), the parity of its
ancestor spine vertex, and its structural role.  Roles:

* ``spine``        backbone path/cycle vertices (level 0),
* ``branch``       vertices belonging to the family's counted level
                   structure,
* ``pad``          leaf children added only to lift a branch vertex to its
                   target degree (these edges are outside the closed-form
                   formulas and are reported separately),
* ``compensator``  the extra leaf given to a spine endpoint in
                   ``degree-exact`` mode to stand in for the missing spine
                   neighbor.

Spine parity follows 1-based positions: position 1 is "odd".  Vertex
numbering is deterministic: spine first (0..n-1 along the path/cycle), then
level by level with children grouped under parents in parent order.

Endpoint handling is controlled by ``mode``:

* ``as-described``  endpoints keep their structural degree deficit,
* ``degree-exact``  endpoints receive one compensator leaf so every spine
                    vertex attains the degree the formulas assume.

Defaults per family: ``as-described`` for the multilevel caterpillar
(preserving its stated vertex/edge counts), ``degree-exact`` for the
parity-sensitive families (so spine contributions match their formulas).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graphs import Graph, build

MODE_AS_DESCRIBED = "as-described"
MODE_DEGREE_EXACT = "degree-exact"
MODES = (MODE_AS_DESCRIBED, MODE_DEGREE_EXACT)

PARITY_ODD = "odd"
PARITY_EVEN = "even"
PARITY_NA = "na"

ROLE_SPINE = "spine"
ROLE_BRANCH = "branch"
ROLE_PAD = "pad"
ROLE_COMPENSATOR = "compensator"


@dataclass(frozen=True)
class LevelTag:
    """Per-vertex level / ancestor-spine-parity / role annotations."""

    level: tuple[int, ...]
    parity: tuple[str, ...]
    role: tuple[str, ...]

    def spine_vertices(self) -> list[int]:
        return [v for v, lvl in enumerate(self.level) if lvl == 0]


@dataclass(frozen=True)
class FamilySpec:
    """Serializable descriptor of one family instance.

    ``params`` holds named integer parameters; the multilevel families use
    a ``levels`` entry holding a tuple of integers.
    """

    family: str
    params: Mapping[str, object] = field(default_factory=dict)

    def to_json(self) -> str:
        params = {
            k: (list(v) if isinstance(v, (tuple, list)) else v)
            for k, v in self.params.items()
        }
        return json.dumps({"family": self.family, "params": params}, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "FamilySpec":
        obj = json.loads(text)
        params = {
            k: (tuple(v) if isinstance(v, list) else v)
            for k, v in obj.get("params", {}).items()
        }
        return FamilySpec(obj["family"], params)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _spine_parity(i: int) -> str:
    # 1-based position parity: position 1 (index 0) is odd.
    return PARITY_ODD if i % 2 == 0 else PARITY_EVEN


class _Builder:
    """Accumulates vertices/edges plus their tags in construction order."""

    def __init__(self):
        self.edges: list[tuple[int, int]] = []
        self.level: list[int] = []
        self.parity: list[str] = []
        self.role: list[str] = []

    def vertex(self, level: int, parity: str, role: str) -> int:
        v = len(self.level)
        self.level.append(level)
        self.parity.append(parity)
        self.role.append(role)
        return v

    def child(self, parent: int, level: int, parity: str, role: str) -> int:
        v = self.vertex(level, parity, role)
        self.edges.append((parent, v))
        return v

    def finish(self) -> tuple[Graph, LevelTag]:
        g = build(len(self.level), self.edges)
        tag = LevelTag(tuple(self.level), tuple(self.parity), tuple(self.role))
        return g, tag


def _spine_path(b: _Builder, n: int, parity: bool = True) -> list[int]:
    ids = [
        b.vertex(0, _spine_parity(i) if parity else PARITY_NA, ROLE_SPINE)
        for i in range(n)
    ]
    b.edges.extend((ids[i], ids[i + 1]) for i in range(n - 1))
    return ids


# --- plain families --------------------------------------------------------


def make_path(n: int) -> tuple[Graph, LevelTag]:
    _require(n >= 2, f"path requires n >= 2 (got {n})")
    b = _Builder()
    _spine_path(b, n)
    return b.finish()


def make_cycle(n: int) -> tuple[Graph, LevelTag]:
    _require(n >= 3, f"cycle requires n >= 3 (got {n})")
    b = _Builder()
    ids = _spine_path(b, n, parity=False)
    b.edges.append((ids[0], ids[-1]))
    return b.finish()


def make_complete(n: int) -> tuple[Graph, LevelTag]:
    _require(n >= 1, f"complete graph requires n >= 1 (got {n})")
    b = _Builder()
    ids = [b.vertex(0, PARITY_NA, ROLE_SPINE) for _ in range(n)]
    b.edges.extend((ids[i], ids[j]) for i in range(n) for j in range(i + 1, n))
    return b.finish()


def make_empty(n: int) -> tuple[Graph, LevelTag]:
    _require(n >= 0, f"empty graph requires n >= 0 (got {n})")
    b = _Builder()
    for _ in range(n):
        b.vertex(0, PARITY_NA, ROLE_SPINE)
    return b.finish()


def make_star(n: int) -> tuple[Graph, LevelTag]:
    _require(n >= 2, f"star requires n >= 2 (got {n})")
    b = _Builder()
    center = b.vertex(0, PARITY_NA, ROLE_SPINE)
    for _ in range(n - 1):
        b.child(center, 1, PARITY_NA, ROLE_BRANCH)
    return b.finish()


# --- multilevel caterpillar -------------------------------------------------


def make_multilevel_caterpillar(
    n: int,
    p: int,
    k: int,
    levels: Sequence[int] = (),
    mode: str = MODE_AS_DESCRIBED,
) -> tuple[Graph, LevelTag]:
    """Path spine with an iterated uniform pendant hierarchy below it.

    Every spine vertex carries ``p`` level-1 children; every level-1 vertex
    carries ``k`` level-2 children; every level-(i+1) vertex carries
    ``levels[i-1]`` children for i = 1..m.  The deepest vertices are leaves.
    Edge count: (n-1) + n*p + n*p*k + sum over prefixes of the level
    products.

    In ``as-described`` mode spine endpoints keep degree p+1 (one spine
    neighbor short of the internal degree p+2); ``degree-exact`` adds one
    compensator leaf per endpoint.
    """
    _require(mode in MODES, f"unknown mode {mode!r}")
    _require(n >= 2, f"multilevel caterpillar requires n >= 2 (got {n})")
    _require(p >= 0, f"multilevel caterpillar requires p >= 0 (got {p})")
    _require(k >= 1, f"multilevel caterpillar requires k >= 1 (got {k})")
    for i, l in enumerate(levels, start=1):
        _require(l >= 1, f"level size l_{i} must be >= 1 (got {l})")

    b = _Builder()
    spine = _spine_path(b, n, parity=False)
    child_counts = (p, k, *levels)
    deepest = len(child_counts)  # leaves live at this level

    current = list(spine)
    for lvl in range(1, deepest + 1):
        per_parent = child_counts[lvl - 1]
        nxt: list[int] = []
        for parent in current:
            for _ in range(per_parent):
                nxt.append(b.child(parent, lvl, PARITY_NA, ROLE_BRANCH))
            if lvl == 1 and mode == MODE_DEGREE_EXACT and parent in (spine[0], spine[-1]):
                b.child(parent, 1, PARITY_NA, ROLE_COMPENSATOR)
        current = nxt
        if not current:
            break
    return b.finish()


# --- alternating caterpillar ------------------------------------------------


def make_alternating_caterpillar(
    n: int, p: int, k: int, mode: str = MODE_DEGREE_EXACT
) -> tuple[Graph, LevelTag]:
    """Path spine whose vertex degrees alternate 2p (odd) / 2p+k (even).

    Leaves are attached until each spine vertex reaches its prescribed
    degree, so the spine-restricted Sombor sum is exact.  Endpoints are one
    spine neighbor short; ``degree-exact`` gives them one compensator leaf
    (reaching the prescribed degree), ``as-described`` leaves them one
    below it.
    """
    _require(mode in MODES, f"unknown mode {mode!r}")
    _require(n >= 2, f"alternating caterpillar requires n >= 2 (got {n})")
    _require(p >= 1, f"alternating caterpillar requires p >= 1 (got {p})")
    _require(k >= 1, f"alternating caterpillar requires k >= 1 (got {k})")

    b = _Builder()
    spine = _spine_path(b, n)
    for i, vtx in enumerate(spine):
        prescribed = 2 * p if _spine_parity(i) == PARITY_ODD else 2 * p + k
        _require(
            prescribed >= 2,
            f"prescribed degree {prescribed} below spine degree at position {i + 1}",
        )
        n_leaves = prescribed - 2
        parity = _spine_parity(i)
        for _ in range(n_leaves):
            b.child(vtx, 1, parity, ROLE_BRANCH)
        if vtx in (spine[0], spine[-1]) and mode == MODE_DEGREE_EXACT:
            b.child(vtx, 1, parity, ROLE_COMPENSATOR)
    return b.finish()


# --- parity-augmented path --------------------------------------------------


def make_parity_augmented_path(
    n: int, k: int, offset: int = 1, mode: str = MODE_DEGREE_EXACT
) -> tuple[Graph, LevelTag]:
    """Path spine of degree 2+k with k pendants per spine vertex.

    Pendants under odd spine positions have degree k; pendants under even
    positions have degree k+offset.  A pendant's degree beyond its spine
    edge is realized with leaf children (role ``pad``); those pad edges sit
    outside the single-level closed forms and are reported separately by
    the verification harness.
    """
    _require(mode in MODES, f"unknown mode {mode!r}")
    _require(n >= 2, f"parity-augmented path requires n >= 2 (got {n})")
    _require(k > 1, f"parity-augmented path requires k > 1 (got {k})")
    _require(offset >= 1, f"pendant degree offset must be >= 1 (got {offset})")

    b = _Builder()
    spine = _spine_path(b, n)
    for i, vtx in enumerate(spine):
        parity = _spine_parity(i)
        target = k if parity == PARITY_ODD else k + offset
        _require(target >= 1, f"pendant target degree {target} below 1")
        pendants = [b.child(vtx, 1, parity, ROLE_BRANCH) for _ in range(k)]
        for pend in pendants:
            for _ in range(target - 1):
                b.child(pend, 2, parity, ROLE_PAD)
        if vtx in (spine[0], spine[-1]) and mode == MODE_DEGREE_EXACT:
            b.child(vtx, 1, parity, ROLE_COMPENSATOR)
    return b.finish()


# --- multilevel parity tree ---------------------------------------------------


def make_multilevel_parity_tree(
    n: int,
    k: int,
    levels: Sequence[int],
    mode: str = MODE_DEGREE_EXACT,
) -> tuple[Graph, LevelTag]:
    """Best-effort realization of the m-level parity construction.

    Spine vertices have degree 2+k and k level-1 children each.  Every
    level-(i-1) branch vertex has exactly k level-i children for i <= m.
    Target degrees: level-i descendants of odd spine positions aim for
    ``levels[i-1]``; descendants of even positions aim for
    ``levels[i-1] + levels[0]``.  Deficits against the structural degree
    (parent edge plus k children) are filled with pad leaves; a target
    below the structural minimum is an error.

    The construction this family's closed form describes is internally
    inconsistent (its stated level-1 degrees cannot coexist with the
    k-children rule), so no target assignment reproduces the formula
    exactly; the verification harness quantifies the gap rather than
    hiding it.
    """
    _require(mode in MODES, f"unknown mode {mode!r}")
    _require(n >= 2, f"multilevel parity tree requires n >= 2 (got {n})")
    _require(k > 1, f"multilevel parity tree requires k > 1 (got {k})")
    levels = tuple(levels)
    _require(len(levels) >= 1, "multilevel parity tree requires m >= 1 levels")
    _require(levels[0] > 2, f"l_1 must be > 2 (got {levels[0]})")
    for i, l in enumerate(levels, start=1):
        _require(l >= 1, f"level degree l_{i} must be >= 1 (got {l})")

    m = len(levels)
    l1 = levels[0]
    b = _Builder()
    spine = _spine_path(b, n)

    current: list[int] = []
    for i, vtx in enumerate(spine):
        parity = _spine_parity(i)
        current.extend(b.child(vtx, 1, parity, ROLE_BRANCH) for _ in range(k))
        if vtx in (spine[0], spine[-1]) and mode == MODE_DEGREE_EXACT:
            b.child(vtx, 1, parity, ROLE_COMPENSATOR)

    for lvl in range(1, m + 1):
        has_children = lvl < m
        nxt: list[int] = []
        for vtx in current:
            parity = b.parity[vtx]
            target = levels[lvl - 1] + (l1 if parity == PARITY_EVEN else 0)
            structural = 1 + (k if has_children else 0)
            _require(
                target >= structural,
                f"level-{lvl} {parity}-branch target degree {target} below "
                f"structural minimum {structural}",
            )
            if has_children:
                nxt.extend(b.child(vtx, lvl + 1, parity, ROLE_BRANCH) for _ in range(k))
            for _ in range(target - structural):
                b.child(vtx, lvl + 1, parity, ROLE_PAD)
        current = nxt
    return b.finish()


# --- unicyclic pendant graph -------------------------------------------------


def make_unicyclic_pendant(n: int, k: int) -> tuple[Graph, LevelTag]:
    """Cycle of length n with k pendant leaves on every cycle vertex."""
    _require(n >= 3, f"unicyclic pendant graph requires n >= 3 (got {n})")
    _require(k >= 1, f"unicyclic pendant graph requires k >= 1 (got {k})")
    b = _Builder()
    ids = _spine_path(b, n, parity=False)
    b.edges.append((ids[0], ids[-1]))
    for vtx in ids:
        for _ in range(k):
            b.child(vtx, 1, PARITY_NA, ROLE_BRANCH)
    return b.finish()


# --- dispatch ----------------------------------------------------------------

PATH = "path"
CYCLE = "cycle"
COMPLETE = "complete"
EMPTY = "empty"
STAR = "star"
MULTILEVEL_CATERPILLAR = "multilevel-caterpillar"
ALTERNATING_CATERPILLAR = "alternating-caterpillar"
PARITY_AUGMENTED_PATH = "parity-augmented-path"
PARITY_AUGMENTED_PATH_OFFSET = "parity-augmented-path-offset"
MULTILEVEL_PARITY_TREE = "multilevel-parity-tree"
UNICYCLIC_PENDANT = "unicyclic-pendant"

#: family name -> required parameter names ("levels" expects a tuple).
FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    PATH: ("n",),
    CYCLE: ("n",),
    COMPLETE: ("n",),
    EMPTY: ("n",),
    STAR: ("n",),
    MULTILEVEL_CATERPILLAR: ("n", "p", "k", "levels"),
    ALTERNATING_CATERPILLAR: ("n", "p", "k"),
    PARITY_AUGMENTED_PATH: ("n", "k"),
    PARITY_AUGMENTED_PATH_OFFSET: ("n", "k", "offset"),
    MULTILEVEL_PARITY_TREE: ("n", "k", "levels"),
    UNICYCLIC_PENDANT: ("n", "k"),
}

#: families whose endpoint handling is mode-sensitive, with their defaults.
DEFAULT_MODES: dict[str, str] = {
    MULTILEVEL_CATERPILLAR: MODE_AS_DESCRIBED,
    ALTERNATING_CATERPILLAR: MODE_DEGREE_EXACT,
    PARITY_AUGMENTED_PATH: MODE_DEGREE_EXACT,
    PARITY_AUGMENTED_PATH_OFFSET: MODE_DEGREE_EXACT,
    MULTILEVEL_PARITY_TREE: MODE_DEGREE_EXACT,
}


def default_mode(family: str) -> str | None:
    return DEFAULT_MODES.get(family)


def make(spec: FamilySpec, mode: str | None = None) -> tuple[Graph, LevelTag]:
    """Build the graph a :class:`FamilySpec` describes.

    ``mode`` overrides the family's default endpoint handling; it is
    rejected for families without endpoint modes.
    """
    family = spec.family
    if family not in FAMILY_PARAMS:
        raise ValueError(f"unknown family {family!r}")
    required = FAMILY_PARAMS[family]
    given = set(spec.params)
    missing = [name for name in required if name not in given]
    extra = sorted(given - set(required))
    if missing:
        raise ValueError(f"{family} is missing parameters: {', '.join(missing)}")
    if extra:
        raise ValueError(f"{family} got unexpected parameters: {', '.join(extra)}")
    p = dict(spec.params)
    if "levels" in p:
        p["levels"] = tuple(p["levels"])

    if family in DEFAULT_MODES:
        eff_mode = mode if mode is not None else DEFAULT_MODES[family]
    elif mode is not None:
        raise ValueError(f"{family} has no endpoint mode")

    if family == PATH:
        return make_path(p["n"])
    if family == CYCLE:
        return make_cycle(p["n"])
    if family == COMPLETE:
        return make_complete(p["n"])
    if family == EMPTY:
        return make_empty(p["n"])
    if family == STAR:
        return make_star(p["n"])
    if family == MULTILEVEL_CATERPILLAR:
        return make_multilevel_caterpillar(p["n"], p["p"], p["k"], p["levels"], eff_mode)
    if family == ALTERNATING_CATERPILLAR:
        return make_alternating_caterpillar(p["n"], p["p"], p["k"], eff_mode)
    if family == PARITY_AUGMENTED_PATH:
        return make_parity_augmented_path(p["n"], p["k"], 1, eff_mode)
    if family == PARITY_AUGMENTED_PATH_OFFSET:
        _require(p["offset"] > 2, f"offset must be > 2 (got {p['offset']})")
        return make_parity_augmented_path(p["n"], p["k"], p["offset"], eff_mode)
    if family == MULTILEVEL_PARITY_TREE:
        return make_multilevel_parity_tree(p["n"], p["k"], p["levels"], eff_mode)
    if family == UNICYCLIC_PENDANT:
        return make_unicyclic_pendant(p["n"], p["k"])
    raise AssertionError(f"unhandled family {family!r}")
