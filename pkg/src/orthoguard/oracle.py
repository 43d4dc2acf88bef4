"""Exact brute-force guarding and the structural property suite.

Everything here is deliberately slow and literal: visibility comes from the
pairwise predicate (or the full matrix built from it), never from the
sweeps the fast solver relies on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .solver import GuardSolution
from .terrain import LR, RC, RR, Terrain, mirror_terrain, terrain_to_json
from .visibility import ORACLE_CAP, leftmost_visible_all, orient, sees, visibility_matrix, visible_left

COUNTEREXAMPLE_LIMIT = 8
EXHAUSTIVE_MAX_N = 30


class BudgetExceededError(RuntimeError):
    pass


class InfeasibleCoverError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    optimum_size: int
    optimum_set: list[int]
    explored: int


def _oracle_bits(t: Terrain, cands: list[int], wits: list[int]) -> np.ndarray:
    """Visibility between candidates (rows) and witnesses (columns)."""
    if t.n <= ORACLE_CAP:
        return visibility_matrix(t).bits[np.ix_(cands, wits)]
    return np.array([[sees(t, c, w) for w in wits] for c in cands], dtype=bool).reshape(len(cands), len(wits))


def _as_int(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def min_guard_set_exact(
    t: Terrain,
    candidates: Iterable[int],
    witnesses: Iterable[int],
    cap: int = 2_000_000,
    bits: np.ndarray | None = None,
) -> OracleResult:
    """Minimum subset of ``candidates`` seeing every witness.

    Iterative deepening on the cover size; each level branches on the
    uncovered witness with the fewest seers, trying seers in ascending index
    order, so the first cover found is both minimum and reproducible.  A
    disjoint-witness packing bound prunes the search and failed states are
    memoised.  ``cap`` bounds the number of search nodes.  ``bits`` may
    supply a precomputed full visibility matrix.
    """
    cands = sorted(set(int(c) for c in candidates))
    wits = sorted(set(int(w) for w in witnesses))
    if not wits:
        return OracleResult(0, [], 0)
    sub = bits[np.ix_(cands, wits)] if bits is not None else _oracle_bits(t, cands, wits)
    empty = np.flatnonzero(~sub.any(axis=0))
    if len(empty):
        raise InfeasibleCoverError(f"witness {wits[empty[0]]} is seen by no candidate")
    seers = [_as_int(sub[:, j]) for j in range(len(wits))]
    covers = [_as_int(sub[k]) for k in range(len(cands))]
    popcount = [bin(m).count("1") for m in seers]
    order = sorted(range(len(wits)), key=lambda j: (popcount[j], j))
    explored = 0
    failed: set[tuple[int, int]] = set()

    def packing_bound(uncovered: int) -> int:
        used = 0
        bound = 0
        for j in order:
            if uncovered >> j & 1 and not seers[j] & used:
                used |= seers[j]
                bound += 1
        return bound

    def search(uncovered: int, budget: int, chosen: list[int]) -> bool:
        nonlocal explored
        explored += 1
        if explored > cap:
            raise BudgetExceededError(f"search exceeded {cap} nodes")
        if not uncovered:
            return True
        if budget == 0 or (uncovered, budget) in failed:
            return False
        if packing_bound(uncovered) > budget:
            failed.add((uncovered, budget))
            return False
        pick = next(j for j in order if uncovered >> j & 1)
        m = seers[pick]
        k = 0
        while m:
            if m & 1:
                chosen.append(k)
                if search(uncovered & ~covers[k], budget - 1, chosen):
                    return True
                chosen.pop()
            m >>= 1
            k += 1
        failed.add((uncovered, budget))
        return False

    full = (1 << len(wits)) - 1
    for size in range(packing_bound(full), len(wits) + 1):
        chosen: list[int] = []
        if search(full, size, chosen):
            return OracleResult(size, sorted(cands[k] for k in chosen), explored)
    raise AssertionError("unreachable: every witness sees itself or a candidate")


def right_problem_optimum(t: Terrain, cap: int = 2_000_000) -> OracleResult:
    c = t.classification
    return min_guard_set_exact(t, c.reflex_indices, c.rc_indices, cap)


def left_problem_optimum(t: Terrain, cap: int = 2_000_000) -> OracleResult:
    c = t.classification
    return min_guard_set_exact(t, c.reflex_indices, c.lc_indices, cap)


def full_problem_optimum(t: Terrain, cap: int = 2_000_000) -> OracleResult:
    return min_guard_set_exact(t, range(t.n), range(t.n), cap)


def independence_violation(t: Terrain, sol: GuardSolution) -> tuple[int, int, int] | None:
    """A reflex vertex seeing two witnesses of ``sol`` as ``(r, w1, w2)``, or None."""
    if sol.side == "left":
        m = mirror_terrain(t)
        mirrored = GuardSolution("right", [], {}, sorted(t.n - 1 - w for w in sol.witnesses))
        hit = independence_violation(m.terrain, mirrored)
        if hit is None:
            return None
        r, a, b = (t.n - 1 - k for k in hit)
        return (r, min(a, b), max(a, b))
    c = t.classification
    reflex = c.classes >= LR
    first_seen: dict[int, int] = {}
    witnesses = sorted(sol.witnesses)
    if t.n <= ORACLE_CAP:
        bits = visibility_matrix(t).bits
        for w in witnesses:
            for r in np.flatnonzero(bits[:, w] & reflex).tolist():
                if r in first_seen:
                    return (r, first_seen[r], w)
                first_seen[r] = w
        return None
    left = leftmost_visible_all(t, c).left
    for w in witnesses:
        if c.classes[w] != RC:
            raise ValueError(f"witness {w} is not right convex")
        seers = visible_left(t, w, int(left[w]))
        if w + 1 < t.n:
            seers.append(w + 1)
        for r in seers:
            if reflex[r]:
                if r in first_seen:
                    return (r, first_seen[r], w)
                first_seen[r] = w
    return None


def certify_witness_independence(t: Terrain, sol: GuardSolution) -> bool:
    """True iff no reflex vertex sees two witnesses, which certifies |guards| <= OPT."""
    return independence_violation(t, sol) is None


@dataclass
class PropertyCounter:
    checked: int = 0
    violations: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    def record(self, t: Terrain, ok: bool, indices: Iterable[int]) -> None:
        self.record_many(t, 1, [] if ok else [indices])

    def record_many(self, t: Terrain, checked: int, bad: list) -> None:
        """Add ``checked`` instances of which ``bad`` (index tuples) failed."""
        self.checked += int(checked)
        self.violations += len(bad)
        room = COUNTEREXAMPLE_LIMIT - len(self.counterexamples)
        if bad and room > 0:
            doc = json.loads(terrain_to_json(t))
            for indices in bad[:room]:
                self.counterexamples.append({"terrain": doc, "indices": [int(i) + 1 for i in indices]})


PROPERTIES = (
    "order_claim",
    "observation_1",
    "observation_2",
    "observation_3",
    "left_side",
    "higher_cannot_see",
    "left_seer_cannot_guard",
    "angle_see",
    "oracle_consistency",
)


@dataclass
class PropertyReport:
    counters: dict[str, PropertyCounter] = field(default_factory=lambda: {p: PropertyCounter() for p in PROPERTIES})
    terrains: int = 0

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.counters.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def failing(self) -> list[str]:
        return [name for name, c in self.counters.items() if c.violations]

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        out = PropertyReport(terrains=self.terrains + other.terrains)
        for name in PROPERTIES:
            a, b = self.counters[name], other.counters[name]
            out.counters[name] = PropertyCounter(
                a.checked + b.checked,
                a.violations + b.violations,
                (a.counterexamples + b.counterexamples)[:COUNTEREXAMPLE_LIMIT],
            )
        return out

    def to_json(self) -> str:
        doc = {
            "terrains": self.terrains,
            "properties": {
                name: {
                    "checked": c.checked,
                    "violations": c.violations,
                    "counterexamples": c.counterexamples,
                }
                for name, c in self.counters.items()
            },
        }
        return json.dumps(doc, separators=(",", ":"))

    def summary(self) -> str:
        width = max(map(len, PROPERTIES))
        lines = [f"{'property':<{width}}  {'checked':>9}  {'violations':>10}"]
        for name, c in self.counters.items():
            lines.append(f"{name:<{width}}  {c.checked:>9}  {c.violations:>10}")
        return "\n".join(lines)


def _order_claim_exhaustive(bits: np.ndarray) -> tuple[int, list]:
    n = bits.shape[0]
    a, b, c, d = np.ogrid[:n, :n, :n, :n]
    mask = (a < b) & (b < c) & (c < d)
    bad = mask & bits[a, c] & bits[b, d] & ~bits[a, d]
    return int(mask.sum()), np.argwhere(bad).tolist()


def property_suite(t: Terrain, mode: str = "sampled", samples: int = 64, seed: int = 0) -> PropertyReport:
    """Check every structural visibility claim the greedy relies on.

    ``exhaustive`` (n <= 30) enumerates every instance of every property,
    including all index quadruples for the order claim.  ``sampled`` checks
    the per-vertex and per-pair properties in full and draws ``samples``
    random quadruples, angle pairs and single-witness oracle calls.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and t.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive mode needs n <= {EXHAUSTIVE_MAX_N}, got {t.n}")
    rng = np.random.default_rng(seed)
    report = PropertyReport(terrains=1)
    cnt = report.counters
    n = t.n
    xs_a, ys_a = t.xs, t.ys
    xs = xs_a.tolist()
    ys = ys_a.tolist()
    cls = t.classification
    classes = cls.classes
    bits = visibility_matrix(t).bits
    rc = cls.rc_indices.tolist()
    rc_mask = classes == RC
    # leftmost seer by definition: lowest index that sees v
    leftmost = np.argmax(bits, axis=0)

    if mode == "exhaustive":
        checked, bad = _order_claim_exhaustive(bits)
        cnt["order_claim"].record_many(t, checked, bad)
    elif n >= 4:
        quads = np.sort(np.array([rng.choice(n, 4, replace=False) for _ in range(samples)]), axis=1)
        a, b, c, d = quads.T
        ok = ~(bits[a, c] & bits[b, d]) | bits[a, d]
        cnt["order_claim"].record_many(t, samples, quads[~ok].tolist())

    bad = []
    for i in cls.lr_indices.tolist():
        extra = [j for j in np.flatnonzero(bits[i] & rc_mask).tolist() if j not in (i - 1, i + 1)]
        if extra:
            bad.append([i] + extra)
    cnt["observation_1"].record_many(t, len(cls.lr_indices), bad)

    if rc:
        v = rc[0]
        seen_lr = np.flatnonzero(bits[v] & (classes == LR)).tolist()
        ok = len(seen_lr) <= 1 and all(xs[u] == xs[v] for u in seen_lr)
        cnt["observation_2"].record(t, ok, [v] + seen_lr)

    bad = []
    for v in rc:
        lv = int(leftmost[v])
        high = np.flatnonzero((xs_a > xs[lv]) & (xs_a < xs[v]) & (ys_a > ys[lv])).tolist()
        if high:
            bad.append([v, lv] + high)
    cnt["observation_3"].record_many(t, len(rc), bad)

    pairs = (classes == RR)[:, None] & rc_mask[None, :] & bits
    bad = np.argwhere(pairs & ~(xs_a[:, None] < xs_a[None, :])).tolist()
    cnt["left_side"].record_many(t, pairs.sum(), bad)

    pairs = (classes >= LR)[:, None] & (classes <= RC)[None, :] & (ys_a[None, :] > ys_a[:, None])
    cnt["higher_cannot_see"].record_many(t, pairs.sum(), np.argwhere(pairs & bits).tolist())

    checked, bad = 0, []
    for i in rc:
        if i + 1 < n:
            lv = int(leftmost[i])
            if ys[lv] < ys[i + 1]:
                checked += 1
                seen = [j for j in rc if j > i + 1 and bits[lv, j]]
                if seen:
                    bad.append([i, lv] + seen)
    cnt["left_seer_cannot_guard"].record_many(t, checked, bad)

    angle = cnt["angle_see"]

    def angle_case(i: int, j: int) -> None:
        ks = np.flatnonzero(bits[i, j + 1:i])
        if not len(ks):
            return
        k = j + 1 + int(ks[0])
        if orient((xs[i], ys[i]), (xs[k], ys[k]), (xs[j], ys[j])) <= 0:
            angle.record(t, bool(bits[i, j]), (i, k, j))

    if mode == "exhaustive":
        for i in range(n):
            for j in range(i - 1):
                angle_case(i, j)
        single = range(n)
    else:
        if n >= 3:
            for _ in range(samples):
                j, i = sorted(rng.choice(n, 2, replace=False).tolist())
                angle_case(i, j)
        single = rng.choice(n, min(n, samples), replace=False).tolist()
    everyone = list(range(n))
    for w in single:
        res = min_guard_set_exact(t, everyone, [w], bits=bits)
        cnt["oracle_consistency"].record(t, res.optimum_size == 1, [w])
    return report


def suite_over(terrains: Iterable[Terrain], mode: str = "sampled", samples: int = 64) -> PropertyReport:
    report = PropertyReport(terrains=0)
    for k, t in enumerate(terrains):
        report = report.merge(property_suite(t, mode, samples, seed=k))
    return report
