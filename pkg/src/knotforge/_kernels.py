"""Pairwise geometric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``KNOTFORGE_DISABLE_NUMBA`` is unset (or ``0``). Both paths take
integer coordinates and return identical results; arithmetic is exact.
int64 is used only while every intermediate product is provably in range,
otherwise the numpy path runs on Python integers (``dtype=object``).
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

# |coordinate| bound under which 2D orientation tests cannot overflow int64
INT64_SAFE_COORD = 2**29

TOUCH = 2
CROSS = 1


def numba_enabled() -> bool:
    flag = os.environ.get("KNOTFORGE_DISABLE_NUMBA", "0").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def backend_name() -> str:
    return "numba" if numba_enabled() else "numpy"


# ---------------------------------------------------------------- boxes


def _box_pairs_numpy(lo, hi):
    overlap = np.all(
        (lo[:, None, :] <= hi[None, :, :]) & (lo[None, :, :] <= hi[:, None, :]),
        axis=2,
    )
    i, j = np.nonzero(np.triu(overlap, k=1))
    return np.stack([i, j], axis=1).astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _box_pairs_numba(lo, hi):  # pragma: no cover - compiled
        m = lo.shape[0]
        out = np.empty((m * (m - 1) // 2, 2), dtype=np.int64)
        k = 0
        for i in range(m):
            for j in range(i + 1, m):
                hit = True
                for a in range(3):
                    if lo[i, a] > hi[j, a] or lo[j, a] > hi[i, a]:
                        hit = False
                        break
                if hit:
                    out[k, 0] = i
                    out[k, 1] = j
                    k += 1
        return out[:k]


def box_overlap_pairs(lo, hi, backend: str | None = None) -> np.ndarray:
    """Index pairs ``(i, j)``, ``i < j``, of closed axis-aligned boxes that meet.

    ``lo`` and ``hi`` are ``(m, 3)`` integer arrays of box corners.
    """
    lo = np.asarray(lo)
    hi = np.asarray(hi)
    if lo.shape[0] < 2:
        return np.empty((0, 2), dtype=np.int64)
    backend = backend or backend_name()
    if backend == "numba" and HAVE_NUMBA:
        return _box_pairs_numba(lo.astype(np.int64), hi.astype(np.int64))
    return _box_pairs_numpy(lo, hi)


# ------------------------------------------------------------- segments


def _sign(a):
    return (a > 0).astype(np.int8) - (a < 0).astype(np.int8)


def _orient(ax, ay, bx, by, cx, cy):
    return _sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _segment_classes_numpy(p, q):
    px, py = p[:, 0], p[:, 1]
    qx, qy = q[:, 0], q[:, 1]
    # row index i is the segment being tested, column j the reference segment
    A = (px[None, :], py[None, :], qx[None, :], qy[None, :])
    d1 = _orient(*A, px[:, None], py[:, None])
    d2 = _orient(*A, qx[:, None], qy[:, None])
    d3 = d1.T
    d4 = d2.T
    crossing = (d1 * d2 < 0) & (d3 * d4 < 0)

    xmin = np.minimum(px, qx)
    xmax = np.maximum(px, qx)
    ymin = np.minimum(py, qy)
    ymax = np.maximum(py, qy)

    def on_ref(xs, ys, d):
        # point of row segment lies on column segment
        return (
            (d == 0)
            & (xmin[None, :] <= xs[:, None])
            & (xs[:, None] <= xmax[None, :])
            & (ymin[None, :] <= ys[:, None])
            & (ys[:, None] <= ymax[None, :])
        )

    touch_row = on_ref(px, py, d1) | on_ref(qx, qy, d2)
    touch = touch_row | touch_row.T
    cls = np.where(touch, TOUCH, np.where(crossing, CROSS, 0)).astype(np.int8)
    i, j = np.nonzero(np.triu(cls, k=1))
    return np.stack([i, j, cls[i, j]], axis=1).astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _orient_nb(ax, ay, bx, by, cx, cy):  # pragma: no cover - compiled
        v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if v > 0:
            return 1
        if v < 0:
            return -1
        return 0

    @njit(cache=True)
    def _on_seg_nb(ax, ay, bx, by, cx, cy):  # pragma: no cover - compiled
        return min(ax, bx) <= cx <= max(ax, bx) and min(ay, by) <= cy <= max(ay, by)

    @njit(cache=True)
    def _segment_classes_numba(p, q):  # pragma: no cover - compiled
        m = p.shape[0]
        out = np.empty((m * (m - 1) // 2, 3), dtype=np.int64)
        k = 0
        for i in range(m):
            ax, ay, bx, by = p[i, 0], p[i, 1], q[i, 0], q[i, 1]
            for j in range(i + 1, m):
                cx, cy, dx, dy = p[j, 0], p[j, 1], q[j, 0], q[j, 1]
                d1 = _orient_nb(cx, cy, dx, dy, ax, ay)
                d2 = _orient_nb(cx, cy, dx, dy, bx, by)
                d3 = _orient_nb(ax, ay, bx, by, cx, cy)
                d4 = _orient_nb(ax, ay, bx, by, dx, dy)
                touch = (
                    (d1 == 0 and _on_seg_nb(cx, cy, dx, dy, ax, ay))
                    or (d2 == 0 and _on_seg_nb(cx, cy, dx, dy, bx, by))
                    or (d3 == 0 and _on_seg_nb(ax, ay, bx, by, cx, cy))
                    or (d4 == 0 and _on_seg_nb(ax, ay, bx, by, dx, dy))
                )
                if touch:
                    cls = TOUCH
                elif d1 * d2 < 0 and d3 * d4 < 0:
                    cls = CROSS
                else:
                    continue
                out[k, 0] = i
                out[k, 1] = j
                out[k, 2] = cls
                k += 1
        return out[:k]


def segment_pair_classes(p, q, backend: str | None = None) -> np.ndarray:
    """Classify every pair of 2D integer segments ``p[i] -> q[i]``.

    Returns rows ``(i, j, cls)`` with ``i < j`` for pairs that meet:
    ``cls == CROSS`` for a transversal crossing of the open segments and
    ``cls == TOUCH`` when an endpoint of one lies on the other (this
    includes shared endpoints and collinear overlap).
    """
    p = np.asarray(p, dtype=object)
    q = np.asarray(q, dtype=object)
    m = p.shape[0]
    if m < 2:
        return np.empty((0, 3), dtype=np.int64)
    big = max(abs(int(v)) for v in np.concatenate([p.ravel(), q.ravel()]))
    backend = backend or backend_name()
    if big < INT64_SAFE_COORD:
        p64 = p.astype(np.int64)
        q64 = q.astype(np.int64)
        if backend == "numba" and HAVE_NUMBA:
            return _segment_classes_numba(p64, q64)
        return _segment_classes_numpy(p64, q64)
    return _segment_classes_numpy(p, q)
