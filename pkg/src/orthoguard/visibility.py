"""Exact vertex-to-vertex visibility on orthogonal terrains.

Two vertices see each other when the segment between them never dips
strictly below the chain; touching a vertex or running along an edge is
allowed.  A terrain edge can rise above a straight segment only if one of its
endpoints does, so checking the vertices strictly between the two indices is
enough.  All arithmetic is on integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .terrain import Terrain, VertexClassification, mirror_terrain

ORACLE_CAP = 512


class IndexOutOfRangeError(IndexError):
    pass


class OracleCapExceededError(ValueError):
    pass


def orient(a, b, c) -> int:
    """Sign of ``(b - a) x (c - a)``; +1 when ``c`` is left of the directed line a->b."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _check_index(t: Terrain, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < t.n:
            raise IndexOutOfRangeError(f"vertex index {i} outside [0, {t.n})")


def sees(t: Terrain, i: int, j: int) -> bool:
    _check_index(t, i, j)
    return bool(kernels.active.sees(t.xs, t.ys, i, j))


@dataclass(frozen=True)
class VisibilityMatrix:
    bits: np.ndarray

    @property
    def n(self) -> int:
        return self.bits.shape[0]

    def __getitem__(self, ij) -> bool:
        return bool(self.bits[ij])

    def row(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.bits[i])

    def to_text(self) -> str:
        return "\n".join("".join("1" if b else "0" for b in r) for r in self.bits)


def visibility_matrix(t: Terrain, cap: int = ORACLE_CAP) -> VisibilityMatrix:
    if t.n > cap:
        raise OracleCapExceededError(f"n={t.n} exceeds oracle cap {cap}")
    return VisibilityMatrix(kernels.active.visibility_matrix(t.xs, t.ys))


@dataclass(frozen=True)
class LeftmostMap:
    """``L(v)`` for every right convex vertex; ``left[i] == -1`` elsewhere."""

    left: np.ndarray

    def __getitem__(self, i: int) -> int:
        v = int(self.left[i])
        if v < 0:
            raise KeyError(i)
        return v

    def as_dict(self) -> dict[int, int]:
        idx = np.flatnonzero(self.left >= 0)
        return dict(zip(idx.tolist(), self.left[idx].tolist()))


@dataclass(frozen=True)
class RightmostMap:
    """``R(v)`` for every left convex vertex; ``right[i] == -1`` elsewhere."""

    right: np.ndarray

    def __getitem__(self, i: int) -> int:
        v = int(self.right[i])
        if v < 0:
            raise KeyError(i)
        return v

    def as_dict(self) -> dict[int, int]:
        idx = np.flatnonzero(self.right >= 0)
        return dict(zip(idx.tolist(), self.right[idx].tolist()))


def leftmost_visible_all(t: Terrain, c: VertexClassification | None = None) -> LeftmostMap:
    """Leftmost seer of each right convex vertex in one upper-hull sweep.

    Every seer of a right convex vertex ``v`` to its left is a record of
    elevation angle looking left from ``v``; the leftmost record is the
    farthest prefix point on the supporting line through ``v`` and the upper
    hull, which the stack exposes once collinear points are popped.
    """
    c = c if c is not None else t.classification
    return LeftmostMap(kernels.active.leftmost_visible(t.xs, t.ys, c.classes))


def rightmost_visible_all(t: Terrain, c: VertexClassification | None = None) -> RightmostMap:
    m = mirror_terrain(t)
    mirrored = leftmost_visible_all(m.terrain)
    # mirrored index k maps to original n-1-k, in both position and value
    src = mirrored.left[::-1]
    right = np.where(src >= 0, t.n - 1 - src, -1)
    return RightmostMap(right)


def visible_left(t: Terrain, i: int, stop: int = 0) -> list[int]:
    """Vertices in ``[stop, i)`` that see vertex ``i``, nearest first.

    Incremental elevation sweep; valid when ``i - 1`` lies strictly left of
    ``i`` (always the case for right convex vertices).
    """
    _check_index(t, i, stop)
    if i > 0 and t.xs[i - 1] == t.xs[i]:
        raise ValueError(f"vertex {i} sits on a vertical edge to its left")
    return kernels.active.visible_left(t.xs, t.ys, i, stop)
