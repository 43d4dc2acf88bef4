"""Seeded random and patterned orthogonal terrains.

Random terrains are driven by SplitMix64 so any implementation can reproduce
a corpus bit for bit:

    state  <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2^64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2^64)
    output <- z ^ (z >> 31)

The initial state is the seed.  Starting at (0, 0), step ``s`` of ``steps``
consumes outputs in this order:

    run  = 1 + out % max_run            move right by run
    (not on the last step)
    rise = 1 + out % max_rise
    sign = out & 1                      1 means downward
                                        move vertically by +-rise

so a terrain of ``steps`` horizontal runs has exactly ``2 * steps`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .terrain import COORD_LIMIT, Terrain, terrain_from_arrays

PATTERNS = ("ascending_stairs", "descending_stairs", "comb", "plateau_valleys")

_GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1


class SpecOutOfRangeError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _M1) & _MASK
        z = ((z ^ (z >> 27)) * _M2) & _MASK
        return z ^ (z >> 31)


def splitmix_block(seed: int, count: int) -> np.ndarray:
    """The first ``count`` outputs of ``SplitMix64(seed)`` as uint64."""
    k = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK) + k * np.uint64(_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


@dataclass(frozen=True)
class GenSpec:
    """Generator parameters.

    For the ``comb`` and ``plateau_valleys`` patterns ``steps`` is the number
    of teeth / valleys; for everything else it is the number of horizontal
    runs.
    """

    seed: int = 0
    steps: int = 8
    max_run: int = 4
    max_rise: int = 4
    pattern: str | None = None

    def validate(self) -> None:
        if not 0 <= self.seed <= _MASK:
            raise SpecOutOfRangeError("seed must fit in 64 unsigned bits")
        if self.steps < 1:
            raise SpecOutOfRangeError("steps must be >= 1")
        if self.max_run < 1 or self.max_rise < 1:
            raise SpecOutOfRangeError("max_run and max_rise must be >= 1")
        if self.pattern is not None and self.pattern not in PATTERNS:
            raise SpecOutOfRangeError(f"unknown pattern {self.pattern!r}")
        if self.pattern is None and self.steps * self.max_run > COORD_LIMIT:
            raise SpecOutOfRangeError("steps * max_run exceeds the coordinate range")


def generate_random(spec: GenSpec) -> Terrain:
    spec.validate()
    k = spec.steps
    out = splitmix_block(spec.seed, 3 * k - 2)
    runs = np.empty(k, dtype=np.int64)
    runs[:-1] = (out[0:-1:3] % np.uint64(spec.max_run)).astype(np.int64) + 1
    runs[-1] = int(out[-1] % np.uint64(spec.max_run)) + 1
    rises = (out[1::3] % np.uint64(spec.max_rise)).astype(np.int64) + 1
    down = (out[2::3] & np.uint64(1)).astype(bool)
    rises = np.where(down, -rises, rises)
    xs = np.empty(2 * k, dtype=np.int64)
    ys = np.empty(2 * k, dtype=np.int64)
    xs[0] = ys[0] = 0
    xs[1::2] = np.cumsum(runs)
    xs[2::2] = xs[1:-1:2]
    ys[1::2] = np.concatenate(([0], np.cumsum(rises)))
    ys[2::2] = ys[1:-1:2] + rises
    if np.abs(ys).max() > COORD_LIMIT:
        raise SpecOutOfRangeError("random walk left the coordinate range")
    return terrain_from_arrays(xs, ys)


def generate_random_slow(spec: GenSpec) -> Terrain:
    """Scalar rendition of :func:`generate_random`, kept as its test oracle."""
    spec.validate()
    rng = SplitMix64(spec.seed)
    x = y = 0
    pts = [(0, 0)]
    for s in range(spec.steps):
        x += 1 + rng.next() % spec.max_run
        pts.append((x, y))
        if s < spec.steps - 1:
            rise = 1 + rng.next() % spec.max_rise
            y += -rise if rng.next() & 1 else rise
            pts.append((x, y))
    xs, ys = zip(*pts)
    return terrain_from_arrays(xs, ys)


def _stairs(k: int) -> tuple[list[int], list[int]]:
    xs, ys = [0], [0]
    for s in range(k):
        xs.append(s + 1)
        ys.append(s)
        if s < k - 1:
            xs.append(s + 1)
            ys.append(s + 1)
    return xs, ys


def generate_pattern(spec: GenSpec) -> Terrain:
    """Deterministic adversarial families.

    ``ascending_stairs`` / ``descending_stairs``: unit steps, ``2k`` vertices.
    ``comb``: ``k`` unit-wide notches of depth 3 whose left rim (height 3)
    stands above the right rim (height 2); ``6k + 2`` vertices.
    ``plateau_valleys``: ``k`` copies of a width-2 valley of depth 2 on a
    plateau; ``4k + 2`` vertices.
    """
    spec.validate()
    if spec.pattern is None:
        raise SpecOutOfRangeError("generate_pattern needs a pattern")
    k = spec.steps
    if spec.pattern == "ascending_stairs":
        xs, ys = _stairs(k)
    elif spec.pattern == "descending_stairs":
        xs, ys = _stairs(k)
        xs = [k - x for x in reversed(xs)]
        ys = ys[::-1]
    elif spec.pattern == "comb":
        xs, ys = [0], [3]
        for j in range(k):
            a = 1 + 3 * j
            xs += [a, a, a + 1, a + 1, a + 2, a + 2]
            ys += [3, 0, 0, 2, 2, 3]
        xs.append(3 * k + 1)
        ys.append(3)
    else:
        xs, ys = [0], [2]
        for j in range(k):
            b = 4 * j
            xs += [b + 1, b + 1, b + 3, b + 3]
            ys += [2, 0, 0, 2]
        xs.append(4 * k)
        ys.append(2)
    if max(xs) > COORD_LIMIT or max(map(abs, ys)) > COORD_LIMIT:
        raise SpecOutOfRangeError("pattern exceeds the coordinate range")
    return terrain_from_arrays(xs, ys)


def generate(spec: GenSpec) -> Terrain:
    return generate_random(spec) if spec.pattern is None else generate_pattern(spec)


def corpus_spec(seed: int, max_steps: int) -> GenSpec:
    """Spec for corpus member ``seed``: sizes and step bounds vary with the seed."""
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    return GenSpec(
        seed=seed,
        steps=1 + rng.next() % max_steps,
        max_run=1 + rng.next() % 4,
        max_rise=1 + rng.next() % 4,
    )


def random_corpus(count: int, max_steps: int, start: int = 0):
    """Yield ``(seed, terrain)`` for seeds ``start .. start + count - 1``."""
    for seed in range(start, start + count):
        yield seed, generate_random(corpus_spec(seed, max_steps))
