"""Orthogonal 1.5D terrains: construction, validation, classification, mirroring.

A terrain is stored as two read-only ``int64`` arrays so the compiled kernels
can consume it without copying.  Vertex indices are 0-based internally; every
user-facing document renders them 1-based.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

COORD_LIMIT = 1 << 20
DOCUMENT_VERSION = 1


class TerrainError(ValueError):
    """Base class for invalid terrain input."""


class NotMonotoneError(TerrainError):
    pass


class DiagonalEdgeError(TerrainError):
    pass


class CollinearVertexError(TerrainError):
    pass


class TooFewVerticesError(TerrainError):
    pass


class CoordinateOutOfRangeError(TerrainError):
    pass


class VertexClass(enum.IntEnum):
    LEFT_CONVEX = 0
    RIGHT_CONVEX = 1
    LEFT_REFLEX = 2
    RIGHT_REFLEX = 3

    @property
    def short(self) -> str:
        return ("LC", "RC", "LR", "RR")[self]

    @property
    def is_convex(self) -> bool:
        return self in (VertexClass.LEFT_CONVEX, VertexClass.RIGHT_CONVEX)

    def swapped(self) -> "VertexClass":
        """Left <-> Right, keeping convexity."""
        return VertexClass(int(self) ^ 1)


LC, RC, LR, RR = (
    VertexClass.LEFT_CONVEX,
    VertexClass.RIGHT_CONVEX,
    VertexClass.LEFT_REFLEX,
    VertexClass.RIGHT_REFLEX,
)


class Vertex(NamedTuple):
    index: int
    x: int
    y: int


@dataclass(frozen=True)
class VertexClassification:
    classes: np.ndarray  # int8 codes, one VertexClass per vertex
    rc_indices: np.ndarray
    lc_indices: np.ndarray
    rr_indices: np.ndarray
    lr_indices: np.ndarray

    def __getitem__(self, i: int) -> VertexClass:
        return VertexClass(int(self.classes[i]))

    def labels(self) -> list[str]:
        return [VertexClass(int(c)).short for c in self.classes]

    @property
    def reflex_indices(self) -> np.ndarray:
        return np.flatnonzero(self.classes >= LR)

    @property
    def convex_indices(self) -> np.ndarray:
        return np.flatnonzero(self.classes <= RC)


class Terrain:
    """An x-monotone chain whose edges alternate between horizontal and vertical.

    Instances are immutable; construct them through :func:`build_terrain`
    (validating) or :meth:`Terrain.from_arrays` (trusted input).
    """

    __slots__ = ("xs", "ys", "__dict__")

    def __init__(self, xs: np.ndarray, ys: np.ndarray):
        xs = np.ascontiguousarray(xs, dtype=np.int64)
        ys = np.ascontiguousarray(ys, dtype=np.int64)
        xs.flags.writeable = False
        ys.flags.writeable = False
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_arrays(cls, xs, ys) -> "Terrain":
        return cls(xs, ys)

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def n(self) -> int:
        return len(self.xs)

    def vertex(self, i: int) -> Vertex:
        return Vertex(i, int(self.xs[i]), int(self.ys[i]))

    @property
    def vertices(self) -> list[Vertex]:
        return [Vertex(i, x, y) for i, (x, y) in enumerate(zip(self.xs.tolist(), self.ys.tolist()))]

    def coords(self) -> list[tuple[int, int]]:
        return list(zip(self.xs.tolist(), self.ys.tolist()))

    @cached_property
    def classification(self) -> VertexClassification:
        return classify_vertices(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Terrain):
            return NotImplemented
        return np.array_equal(self.xs, other.xs) and np.array_equal(self.ys, other.ys)

    def __hash__(self) -> int:
        return hash((self.xs.tobytes(), self.ys.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 8:
            return f"Terrain({self.coords()})"
        return f"Terrain(n={self.n}, x=[{self.xs[0]}..{self.xs[-1]}])"


def _normalize(xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # drop zero-length edges, then merge runs of same-axis edges
    keep = np.ones(len(xs), dtype=bool)
    keep[1:] = (np.diff(xs) != 0) | (np.diff(ys) != 0)
    xs, ys = xs[keep], ys[keep]
    if len(xs) < 3:
        return xs, ys
    horizontal = np.diff(ys) == 0
    keep = np.ones(len(xs), dtype=bool)
    keep[1:-1] = horizontal[:-1] != horizontal[1:]
    return xs[keep], ys[keep]


def build_terrain(coords: Iterable[Sequence[int]], mode: str = "strict") -> Terrain:
    """Validate ``coords`` and return a :class:`Terrain`.

    ``mode="normalize"`` first drops zero-length edges and merges collinear
    consecutive vertices; ``mode="strict"`` rejects them.
    """
    if mode not in ("strict", "normalize"):
        raise ValueError(f"unknown mode {mode!r}")
    pts = [tuple(p) for p in coords]
    if not pts:
        raise TooFewVerticesError("terrain needs at least 2 vertices, got 0")
    for p in pts:
        if len(p) != 2 or not all(isinstance(c, (int, np.integer)) and not isinstance(c, bool) for c in p):
            raise TerrainError(f"vertex {p!r} is not an integer pair")
    if any(abs(int(c)) > COORD_LIMIT for p in pts for c in p):
        raise CoordinateOutOfRangeError("coordinates must satisfy |c| <= 2^20")
    xs = np.array([int(p[0]) for p in pts], dtype=np.int64)
    ys = np.array([int(p[1]) for p in pts], dtype=np.int64)
    return _validated(xs, ys, mode)


def terrain_from_arrays(xs, ys, mode: str = "strict") -> Terrain:
    """Array-level twin of :func:`build_terrain` for large generated inputs."""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    if len(xs) != len(ys):
        raise TerrainError("coordinate arrays differ in length")
    if len(xs) and (np.abs(xs).max() > COORD_LIMIT or np.abs(ys).max() > COORD_LIMIT):
        raise CoordinateOutOfRangeError("coordinates must satisfy |c| <= 2^20")
    if len(xs) == 0:
        raise TooFewVerticesError("terrain needs at least 2 vertices, got 0")
    return _validated(xs, ys, mode)


def _validated(xs: np.ndarray, ys: np.ndarray, mode: str) -> Terrain:
    dx = np.diff(xs)
    dy = np.diff(ys)
    bad = np.flatnonzero(dx < 0)
    if len(bad):
        raise NotMonotoneError(f"x decreases along edge {bad[0] + 1}-{bad[0] + 2}")
    bad = np.flatnonzero((dx != 0) & (dy != 0))
    if len(bad):
        raise DiagonalEdgeError(f"edge {bad[0] + 1}-{bad[0] + 2} is neither horizontal nor vertical")
    if mode == "normalize":
        xs, ys = _normalize(xs, ys)
        dx = np.diff(xs)
        dy = np.diff(ys)
    if len(xs) < 2:
        raise TooFewVerticesError(f"terrain needs at least 2 vertices, got {len(xs)}")
    bad = np.flatnonzero((dx == 0) & (dy == 0))
    if len(bad):
        raise CollinearVertexError(f"zero-length edge {bad[0] + 1}-{bad[0] + 2}")
    horizontal = dy == 0
    bad = np.flatnonzero(horizontal[:-1] == horizontal[1:])
    if len(bad):
        raise CollinearVertexError(f"vertex {bad[0] + 2} joins two collinear edges")
    return Terrain(xs, ys)


def classify_vertices(t: Terrain) -> VertexClassification:
    """Label every vertex LC/RC/LR/RR.

    Interior vertices follow the edge pair around them.  An endpoint on a
    horizontal edge is convex and belongs to the side that sees inward
    (first vertex LC, last vertex RC).  An endpoint on a vertical edge is
    read as if the chain continued horizontally outward.
    """
    xs, ys = t.xs, t.ys
    n = len(xs)
    dy = np.diff(ys)
    up = dy > 0
    down = dy < 0
    classes = np.empty(n, dtype=np.int8)
    if n > 2:
        in_h = dy[:-1] == 0
        out_up = up[1:]
        in_up = up[:-1]
        classes[1:-1] = np.where(
            in_h,
            np.where(out_up, RC, RR),
            np.where(in_up, LR, LC),
        )
    if dy[0] == 0:
        classes[0] = LC
    else:
        classes[0] = RC if up[0] else RR
    if dy[-1] == 0:
        classes[-1] = RC
    else:
        classes[-1] = LC if down[-1] else LR
    return VertexClassification(
        classes=classes,
        rc_indices=np.flatnonzero(classes == RC),
        lc_indices=np.flatnonzero(classes == LC),
        rr_indices=np.flatnonzero(classes == RR),
        lr_indices=np.flatnonzero(classes == LR),
    )


@dataclass(frozen=True)
class Mirrored:
    terrain: Terrain
    offset: int  # x' = offset - x

    def to_original(self, j):
        """Map a mirrored index (or index array) back to the original terrain."""
        return self.terrain.n - 1 - j

    to_mirrored = to_original  # the index map is an involution


def mirror_terrain(t: Terrain) -> Mirrored:
    """Reflect through ``x -> min_x + max_x - x`` and reverse the vertex order.

    The x-range is preserved, so coordinates stay within bounds.
    Vertex ``i`` of ``t`` becomes vertex ``n - 1 - i`` of the result.
    """
    offset = int(t.xs[0] + t.xs[-1])
    return Mirrored(Terrain(offset - t.xs[::-1], t.ys[::-1].copy()), offset)


def terrain_to_json(t: Terrain) -> str:
    verts = ",".join(f"[{x},{y}]" for x, y in zip(t.xs.tolist(), t.ys.tolist()))
    return f'{{"version":{DOCUMENT_VERSION},"vertices":[{verts}]}}'


def terrain_from_json(text: str, mode: str = "strict") -> Terrain:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TerrainError(f"not a terrain document: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != DOCUMENT_VERSION:
        raise TerrainError("terrain document must be an object with version 1")
    verts = doc.get("vertices")
    if not isinstance(verts, list):
        raise TerrainError("terrain document lacks a vertex list")
    return build_terrain(verts, mode)
