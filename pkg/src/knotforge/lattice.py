"""Cubic-lattice embeddings built from arc presentations.

Every construction works on the cyclic vertex list of an orthogonal
polygon in Z^3. All coordinates are integers.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .grid import Arc, ArcPresentation, LiftPair, find_lift_pair

AXES = "xyz"

Point = tuple[int, int, int]


class ConstructionError(RuntimeError):
    """A construction produced something that is not a valid lattice knot."""


class LatticeStick(NamedTuple):
    axis: int  # 0, 1, 2 for x, y, z
    fixed_a: int  # coordinates held constant, in axis-cyclic order
    fixed_b: int
    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def endpoints(self) -> tuple[Point, Point]:
        def place(v):
            p = [0, 0, 0]
            p[self.axis] = v
            p[(self.axis + 1) % 3] = self.fixed_a
            p[(self.axis + 2) % 3] = self.fixed_b
            return tuple(p)

        return place(self.lo), place(self.hi)


def _axis_of(p: Point, q: Point) -> int | None:
    diff = [i for i in range(3) if p[i] != q[i]]
    return diff[0] if len(diff) == 1 else None


def stick_between(p: Point, q: Point) -> LatticeStick:
    axis = _axis_of(p, q)
    if axis is None:
        raise ValueError(f"{p} -> {q} is not an axis-parallel segment")
    return LatticeStick(
        axis,
        p[(axis + 1) % 3],
        p[(axis + 2) % 3],
        min(p[axis], q[axis]),
        max(p[axis], q[axis]),
    )


@dataclass(frozen=True)
class LatticeKnot:
    """Closed orthogonal polygon given by its corner points.

    The last vertex connects back to the first.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(tuple(int(c) for c in v) for v in self.vertices)
        )

    def __len__(self):
        return len(self.vertices)

    def segments(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def sticks(self) -> list[LatticeStick]:
        return [stick_between(p, q) for p, q in self.segments()]

    def extent(self) -> int:
        """Largest coordinate range over the three axes."""
        arr = np.asarray(self.vertices)
        return int((arr.max(axis=0) - arr.min(axis=0)).max())

    def translated_to_origin(self) -> "LatticeKnot":
        arr = np.asarray(self.vertices)
        return LatticeKnot(tuple(map(tuple, arr - arr.min(axis=0))))


@dataclass(frozen=True)
class StickBudget:
    x_sticks: int
    y_sticks: int
    z_sticks: int
    x_edges: int
    y_edges: int
    z_edges: int

    @property
    def sticks(self) -> tuple[int, int, int]:
        return (self.x_sticks, self.y_sticks, self.z_sticks)

    @property
    def edges(self) -> tuple[int, int, int]:
        return (self.x_edges, self.y_edges, self.z_edges)

    @property
    def total_edges(self) -> int:
        return sum(self.edges)


def stick_budget(k: LatticeKnot) -> StickBudget:
    counts = [0, 0, 0]
    edges = [0, 0, 0]
    for s in k.sticks():
        counts[s.axis] += 1
        edges[s.axis] += s.length
    return StickBudget(*counts, *edges)


# ----------------------------------------------------------- verification


@dataclass
class EmbeddingReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.ok

    def failures(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]


def verify_embedding(k: LatticeKnot, backend: str | None = None) -> EmbeddingReport:
    """Check that ``k`` is a closed, self-avoiding orthogonal lattice polygon."""
    rep = EmbeddingReport()
    vs = k.vertices
    m = len(vs)
    segs = k.segments()

    rep.checks["closure"] = m >= 4 and vs[-1] != vs[0]
    if not rep.checks["closure"]:
        rep.details.append(f"closure: {m} vertices, last->first segment must be a stick")

    bad_axis = [i for i, (p, q) in enumerate(segs) if _axis_of(p, q) is None]
    rep.checks["axis_alignment"] = not bad_axis
    for i in bad_axis:
        rep.details.append(f"axis_alignment: segment {i} {segs[i][0]} -> {segs[i][1]}")
    if bad_axis:
        rep.checks["corners"] = False
        rep.checks["edge_distinctness"] = False
        rep.checks["disjointness"] = False
        rep.details.append("remaining checks skipped: segments are not sticks")
        return rep

    sticks = k.sticks()
    straight = [i for i in range(m) if sticks[i].axis == sticks[(i + 1) % m].axis]
    rep.checks["corners"] = not straight
    for i in straight:
        rep.details.append(f"corners: sticks {i} and {(i + 1) % m} share an axis")

    edges = Counter()
    for s in sticks:
        for v in range(s.lo, s.hi):
            edges[(s.axis, s.fixed_a, s.fixed_b, v)] += 1
    repeated = [e for e, c in edges.items() if c > 1]
    rep.checks["edge_distinctness"] = not repeated
    for e in repeated[:10]:
        rep.details.append(f"edge_distinctness: unit {AXES[e[0]]}-edge {e} used {edges[e]} times")

    lo = np.array([[min(p[a], q[a]) for a in range(3)] for p, q in segs], dtype=np.int64)
    hi = np.array([[max(p[a], q[a]) for a in range(3)] for p, q in segs], dtype=np.int64)
    clashes = []
    for i, j in _kernels.box_overlap_pairs(lo, hi, backend=backend):
        i, j = int(i), int(j)
        adjacent = j == i + 1 or (i == 0 and j == m - 1)
        if adjacent and sticks[i].axis != sticks[j].axis:
            continue  # perpendicular neighbours meet only at their shared corner
        clashes.append((i, j))
    rep.checks["disjointness"] = not clashes
    for i, j in clashes[:10]:
        rep.details.append(f"disjointness: sticks {i} and {j} intersect")
    return rep


@dataclass
class LevelReport:
    ok: bool
    counts: tuple[dict[int, int], dict[int, int], dict[int, int]]

    def __bool__(self):
        return self.ok

    def levels(self, axis: int) -> int:
        return len(self.counts[axis])


def is_properly_leveled(k: LatticeKnot) -> LevelReport:
    """Each axis has sticks, and every used level holds exactly two endpoints."""
    counts: tuple[Counter, Counter, Counter] = (Counter(), Counter(), Counter())
    for s in k.sticks():
        counts[s.axis][s.lo] += 1
        counts[s.axis][s.hi] += 1
    ok = all(c and all(v == 2 for v in c.values()) for c in counts)
    return LevelReport(ok, tuple(dict(sorted(c.items())) for c in counts))


# ----------------------------------------------------------- constructions


def simplify_vertices(vs: Sequence[Point]) -> list[Point]:
    """Drop repeated points and corners between collinear sticks, cyclically."""
    out = list(vs)
    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(len(out)):
            prev, cur, nxt = out[i - 1], out[i], out[(i + 1) % len(out)]
            if cur == prev:
                del out[i]
                changed = True
                break
            a1, a2 = _axis_of(prev, cur), _axis_of(cur, nxt)
            if a1 is not None and a1 == a2:
                del out[i]
                changed = True
                break
    return out


def _basic_vertices(ap: ArcPresentation, above: Arc | None = None) -> list[Point]:
    vs = []
    for b, arc in ap.cycle():
        e = arc.other_end(b)
        k = arc.page
        corner = (arc.lo, arc.hi, k) if arc == above else (arc.hi, arc.lo, k)
        vs += [(b, b, k), corner, (e, e, k)]
    return vs


def _u_turn(vs: list[Point], column: tuple[int, int]) -> list[Point]:
    """Shortcut the z-stick standing on ``column`` and its shorter leg.

    The path ``P0 -> P1 -> P2 -> P3`` (with ``P1 -> P2`` the z-stick and
    both legs on the same axis) becomes ``P0 -> Q -> P3``, where ``Q``
    is the shorter leg's far end pushed along the z-stick.
    """
    m = len(vs)
    for i in range(m):
        p1, p2 = vs[i], vs[(i + 1) % m]
        if p1[:2] == column and p2[:2] == column:
            break
    else:
        raise ConstructionError(f"no z-stick on column {column}")
    p0, p3 = vs[i - 1], vs[(i + 2) % m]
    leg0 = sum(abs(a - b) for a, b in zip(p0, p1))
    leg3 = sum(abs(a - b) for a, b in zip(p3, p2))
    if leg0 <= leg3:
        q = tuple(a + c - b for a, b, c in zip(p0, p1, p2))
    else:
        q = tuple(a + b - c for a, b, c in zip(p3, p1, p2))
    out = list(vs)
    if i + 1 < m:
        out[i : i + 2] = [q]
    else:
        # the z-stick wraps from the last vertex to the first
        out = [q] + out[1:-1]
    return out


def compress_levels(vs: Sequence[Point]) -> list[Point]:
    """Renumber the used levels of each axis as 1, 2, ... in order.

    Every corner lies on a level of each axis, so an order-preserving
    renumbering keeps the polygon embedded and its knot type unchanged.
    """
    maps = []
    for a in range(3):
        used = sorted({v[a] for v in vs})
        maps.append({c: i + 1 for i, c in enumerate(used)})
    return [tuple(maps[a][v[a]] for a in range(3)) for v in vs]


def _checked(vs: Sequence[Point], what: str) -> LatticeKnot:
    knot = LatticeKnot(tuple(compress_levels(simplify_vertices(vs))))
    report = verify_embedding(knot)
    if not report.ok:
        raise ConstructionError(f"{what}: " + "; ".join(report.details))
    return knot


def build_basic(ap: ArcPresentation) -> LatticeKnot:
    """One x-stick and one y-stick per arc, one z-stick per binding index.

    The arc on page ``k`` with bindings ``i < j`` becomes the x-stick
    from ``(i, i, k)`` to ``(j, i, k)`` followed by the y-stick up to
    ``(j, j, k)``; the two arcs meeting at ``i`` are joined by a z-stick
    on the column ``(i, i)``.
    """
    return _checked(_basic_vertices(ap), "basic build")


def reduce_ends(ap: ArcPresentation) -> LatticeKnot:
    """The basic build with one x-stick and one y-stick removed.

    At y-level 1 the shorter of the two x-sticks is folded into the
    z-stick; the same is done for the y-sticks on x-level ``n``.
    """
    if ap.n < 4:
        raise ValueError("end reduction needs at least 4 arcs")
    vs = _basic_vertices(ap)
    vs = _u_turn(vs, (1, 1))
    vs = _u_turn(vs, (ap.n, ap.n))
    return _checked(vs, "end reduction")


def build_lifted(ap: ArcPresentation) -> LatticeKnot | None:
    """End reduction plus lifting the page-1 arc onto its partner's line.

    Returns ``None`` when no member of the symmetry orbit of ``ap`` has
    a liftable pair. The construction runs on that orbit member, which
    represents the same knot up to mirror image.
    """
    if ap.n < 4:
        return None
    pair = find_lift_pair(ap)
    if pair is None:
        return None
    return _checked(lifted_vertices(pair), "lifted build")


def lifted_vertices(pair: LiftPair) -> list[Point]:
    """Corner list of the lifted build before levels are renumbered."""
    member, low, partner = pair
    vs = _basic_vertices(member, above=low)
    vs = _u_turn(vs, (1, 1))
    vs = _u_turn(vs, (member.n, member.n))
    # page 1 carries only the lifted arc, so every vertex at z=1 is on it
    vs = [(x, y, partner.page) if z == 1 else (x, y, z) for x, y, z in vs]
    return simplify_vertices(vs)


METHODS = ("basic", "reduced", "lifted")


def construct(ap: ArcPresentation, meta=None) -> tuple[LatticeKnot, str]:
    """Best available construction, tagged ``"lifted"`` or ``"reduced"``.

    Presentations with fewer than four arcs only admit the basic build.
    ``meta`` does not influence the dispatch: the lift search decides.
    """
    if ap.n < 4:
        knot, tag = build_basic(ap), "basic"
    else:
        knot = build_lifted(ap)
        tag = "lifted"
        if knot is None:
            knot, tag = reduce_ends(ap), "reduced"
    if not is_properly_leveled(knot):
        raise ConstructionError(f"{tag} build is not properly leveled")
    return knot, tag


def build(ap: ArcPresentation, method: str = "auto") -> tuple[LatticeKnot | None, str]:
    if method == "auto":
        return construct(ap)
    if method == "basic":
        return build_basic(ap), method
    if method == "reduced":
        return reduce_ends(ap), method
    if method == "lifted":
        return build_lifted(ap), method
    raise ValueError(f"unknown method {method!r}")
