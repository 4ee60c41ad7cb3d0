"""Knot-type checks: planar diagrams from projections and Alexander polynomials."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .grid import ArcPresentation
from .lattice import LatticeKnot
from .laurent import LaurentPolynomial, determinant, equal_up_to_units

T = LaurentPolynomial.t()
ONE = LaurentPolynomial.constant(1)


class GenericityError(ValueError):
    """The projection is not generic; ``pair`` holds the offending segment indices."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class Crossing(NamedTuple):
    over: int
    under_in: int
    under_out: int
    sign: int  # +1 or -1


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings labelled by strands (arcs of the diagram between undercrossings).

    Strand ``under_in`` ends at the crossing and ``under_out`` starts
    there; for a knot the strands are numbered 0..m-1 along the
    orientation, so ``under_out == under_in + 1 (mod m)``.
    """

    crossings: tuple[Crossing, ...]

    @property
    def num_strands(self) -> int:
        return len(self.crossings)

    def components(self) -> int:
        """Cycles of the under-passage successor map on strands."""
        m = len(self.crossings)
        if m == 0:
            return 1
        succ = {}
        for c in self.crossings:
            if c.under_in in succ:
                raise ValueError(f"strand {c.under_in} ends at two undercrossings")
            succ[c.under_in] = c.under_out
        if sorted(succ) != list(range(m)) or sorted(succ.values()) != list(range(m)):
            raise ValueError("strand labels must be 0..m-1, each starting and ending once")
        seen, cycles = set(), 0
        for s in range(m):
            if s in seen:
                continue
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = succ[s]
        return cycles

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def to_json(self) -> dict:
        return {"crossings": [c._asdict() for c in self.crossings]}

    @classmethod
    def from_pd(cls, pd: Sequence[Sequence[int]]) -> "PlanarDiagram":
        """Read a PD code ``[[a, b, c, d], ...]`` (edges 1..2m, ``a`` = incoming under).

        The over strand runs ``d -> b`` exactly when ``b`` follows ``d``;
        those crossings get sign +1.
        """
        m = len(pd)
        n_edges = 2 * m
        # an edge continues into the next one when it passes over a crossing
        joins_next = set()
        for a, b, c, d in pd:
            if b % n_edges + 1 == d:
                joins_next.add(b)
            elif d % n_edges + 1 == b:
                joins_next.add(d)
            else:
                raise ValueError(f"over edges {b}, {d} are not consecutive")
        strand_of = {}
        starts = sorted(c for _, _, c, _ in pd)
        if not starts:
            return cls(())
        label = 0
        e = starts[0]
        for _ in range(n_edges):
            strand_of[e] = label
            nxt = e % n_edges + 1
            if e not in joins_next:
                label = (label + 1) % m
            e = nxt
        crossings = []
        for a, b, c, d in pd:
            sign = 1 if d % n_edges + 1 == b else -1
            crossings.append(Crossing(strand_of[b], strand_of[a], strand_of[c], sign))
        return cls(tuple(crossings))


# --------------------------------------------------------- diagram walking


class _Passage(NamedTuple):
    segment: int
    t: Fraction
    crossing: int
    under: bool


def _label_strands(passages: list[_Passage], raw: list[tuple[int, int]]) -> PlanarDiagram:
    """Turn crossing passages into strand-labelled crossings.

    ``raw[c]`` is ``(sign, over_first)`` for crossing ``c``; passages
    carry the position along the polygon.
    """
    m = len(raw)
    if m == 0:
        return PlanarDiagram(())
    order = sorted(passages, key=lambda p: (p.segment, p.t))
    first = next(i for i, p in enumerate(order) if p.under)
    order = order[first + 1 :] + order[: first + 1]
    over = [0] * m
    under_in = [0] * m
    under_out = [0] * m
    cur = 0
    for p in order:
        if p.under:
            under_in[p.crossing] = cur
            cur = (cur + 1) % m
            under_out[p.crossing] = cur
        else:
            over[p.crossing] = cur
    return PlanarDiagram(
        tuple(Crossing(over[c], under_in[c], under_out[c], raw[c][0]) for c in range(m))
    )


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _crossing_params(p1, q1, p2, q2) -> tuple[Fraction, Fraction]:
    r = (q1[0] - p1[0], q1[1] - p1[1])
    s = (q2[0] - p2[0], q2[1] - p2[1])
    denom = _cross2(r, s)
    w = (p2[0] - p1[0], p2[1] - p1[1])
    return Fraction(_cross2(w, s), denom), Fraction(_cross2(w, r), denom)


def _diagram_from_polygon(
    points: Sequence[tuple[int, int]],
    over_first: Callable[[int, Fraction, int, Fraction], bool],
    backend: str | None = None,
) -> PlanarDiagram:
    """Planar diagram of the closed polygon through integer ``points``.

    ``over_first(i, ti, j, tj)`` says whether segment ``i`` passes over
    segment ``j`` at their crossing. Raises :class:`GenericityError` on
    touching segments, overlaps or triple points.
    """
    m = len(points)
    p = np.empty((m, 2), dtype=object)
    q = np.empty((m, 2), dtype=object)
    for i in range(m):
        p[i] = points[i]
        q[i] = points[(i + 1) % m]
    passages = []
    raw = []
    where = {}
    for i, j, cls in _kernels.segment_pair_classes(p, q, backend=backend):
        i, j = int(i), int(j)
        adjacent = j == i + 1 or (i == 0 and j == m - 1)
        if cls == _kernels.TOUCH:
            if adjacent and _only_share_corner(p, q, i, j):
                continue
            raise GenericityError(f"segments {i} and {j} touch", (i, j))
        if adjacent:
            raise GenericityError(f"adjacent segments {i} and {j} cross", (i, j))
        ti, tj = _crossing_params(p[i], q[i], p[j], q[j])
        point = (p[i][0] + ti * (q[i][0] - p[i][0]), p[i][1] + ti * (q[i][1] - p[i][1]))
        if point in where:
            raise GenericityError(f"triple point at {point}", (where[point], i))
        where[point] = i
        i_over = over_first(i, ti, j, tj)
        o, u = (i, j) if i_over else (j, i)
        d_over = (q[o][0] - p[o][0], q[o][1] - p[o][1])
        d_under = (q[u][0] - p[u][0], q[u][1] - p[u][1])
        sign = 1 if _cross2(d_over, d_under) > 0 else -1
        c = len(raw)
        raw.append((sign, i_over))
        passages.append(_Passage(i, ti, c, not i_over))
        passages.append(_Passage(j, tj, c, i_over))
    return _label_strands(passages, raw)


def _only_share_corner(p, q, i, j) -> bool:
    # adjacent segments share exactly one endpoint and are not parallel
    r = (q[i][0] - p[i][0], q[i][1] - p[i][1])
    s = (q[j][0] - p[j][0], q[j][1] - p[j][1])
    return _cross2(r, s) != 0


# ------------------------------------------------------------- projection


def _retries() -> int:
    return int(os.environ.get("KNOTFORGE_EPSILON_RETRIES", "8"))


def shear_scale(k: LatticeKnot) -> int:
    """Denominator ``1/epsilon = 4 (L + 1)^2`` of the default shear."""
    return 4 * (k.extent() + 1) ** 2


def project(k: LatticeKnot, retries: int | None = None, backend: str | None = None) -> PlanarDiagram:
    """Planar diagram of ``k`` under the shear ``(x + z e, y + z e^2)``.

    With ``e = 1/s`` the projected points are scaled by ``s^2`` so every
    coordinate is an integer and all tests are exact. On a genericity
    failure ``e`` is halved, at most ``retries`` times.
    """
    k = k.translated_to_origin()
    s = shear_scale(k)
    retries = _retries() if retries is None else retries
    zs = [v[2] for v in k.vertices]
    m = len(zs)

    def height(i, t):
        return zs[i] + t * (zs[(i + 1) % m] - zs[i])

    def over_first(i, ti, j, tj):
        hi, hj = height(i, ti), height(j, tj)
        if hi == hj:
            raise GenericityError(f"segments {i} and {j} meet in space", (i, j))
        return hi > hj

    last = None
    for attempt in range(retries + 1):
        scale = s * 2**attempt
        points = [(x * scale * scale + z * scale, y * scale * scale + z) for x, y, z in k.vertices]
        try:
            return _diagram_from_polygon(points, over_first, backend=backend)
        except GenericityError as exc:
            last = exc
    raise GenericityError(f"projection not generic after {retries} retries: {last}", last.pair)


def grid_diagram(ap: ArcPresentation) -> PlanarDiagram:
    """Diagram drawn on the (binding, page) grid, verticals over horizontals.

    Each arc is the horizontal segment at height ``page`` between its
    binding indices; each binding index is the vertical segment joining
    its two arcs.
    """
    points = []
    for b, arc in ap.cycle():
        points.append((b, arc.page))
        points.append((arc.other_end(b), arc.page))

    def over_first(i, ti, j, tj):
        # odd segments are the verticals
        return i % 2 == 1

    return _diagram_from_polygon(points, over_first)


# --------------------------------------------------------------- Alexander


def alexander_matrix(d: PlanarDiagram) -> list[list[LaurentPolynomial]]:
    """One row per crossing, one column per strand.

    Sign convention (Fox derivatives of the Wirtinger relation):

    ========  ==========  ============  =============
    sign      over        under in      under out
    ========  ==========  ============  =============
    +1        1 - t       t             -1
    -1        1 - t       -1            t
    ========  ==========  ============  =============
    """
    m = d.num_strands
    rows = []
    for c in d.crossings:
        row = [LaurentPolynomial() for _ in range(m)]
        row[c.over] = row[c.over] + (ONE - T)
        if c.sign > 0:
            row[c.under_in] = row[c.under_in] + T
            row[c.under_out] = row[c.under_out] - ONE
        else:
            row[c.under_in] = row[c.under_in] - ONE
            row[c.under_out] = row[c.under_out] + T
        rows.append(row)
    return rows


def alexander_from_diagram(d: PlanarDiagram) -> LaurentPolynomial:
    """Canonical Alexander polynomial of a knot diagram."""
    if d.components() != 1:
        raise ValueError("Alexander polynomial here is defined for knots only")
    m = d.num_strands
    if m == 0:
        return ONE
    mat = alexander_matrix(d)
    minor = [row[: m - 1] for row in mat[: m - 1]]
    return determinant(minor).canonical()


def alexander_from_arcs(ap: ArcPresentation) -> LaurentPolynomial:
    return alexander_from_diagram(grid_diagram(ap))


def alexander_of_knot(k: LatticeKnot) -> LaurentPolynomial:
    return alexander_from_diagram(project(k))


def poly_equal_up_to_units(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    return equal_up_to_units(p, q)
