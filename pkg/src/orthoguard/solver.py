"""Greedy guard placement for right/left convex vertices and the union bound.

The right-convex greedy walks right convex vertices left to right; whenever
one is unguarded it adds the higher of its leftmost seer ``L(v)`` and the top
of its wall ``v+1`` (ties go to ``L(v)``).  ``solve_right_convex_reference``
runs that loop literally against the visibility predicate;
``solve_right_convex_fast`` is the amortised linear version over an
:class:`ActiveChain`.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ._pykernels import ActiveChain
from .terrain import Terrain, mirror_terrain
from .visibility import ORACLE_CAP, IndexOutOfRangeError, sees, visibility_matrix

__all__ = [
    "ActiveChain",
    "GuardSolution",
    "solve_right_convex_reference",
    "solve_right_convex_fast",
    "solve_left_convex",
    "solve_full",
    "verify_coverage",
]

SIDES = ("right", "left", "full")


class IndexMap(Mapping):
    """Read-only ``{witness: guard}`` view over two parallel int arrays.

    The fast solvers produce assignments for up to millions of vertices;
    keeping them as arrays avoids building a dict nobody may read.
    """

    def __init__(self, keys, values):
        order = np.argsort(keys, kind="stable")
        self.keys_array = np.asarray(keys, dtype=np.int64)[order]
        self.values_array = np.asarray(values, dtype=np.int64)[order]

    def __getitem__(self, key):
        k = int(key)
        pos = int(np.searchsorted(self.keys_array, k))
        if pos < len(self.keys_array) and self.keys_array[pos] == k:
            return int(self.values_array[pos])
        raise KeyError(key)

    def __iter__(self):
        return iter(self.keys_array.tolist())

    def __len__(self):
        return len(self.keys_array)

    def items(self):
        return list(zip(self.keys_array.tolist(), self.values_array.tolist()))

    def __repr__(self):
        return f"IndexMap({dict(self.items())!r})"


@dataclass
class GuardSolution:
    side: str
    guards: list[int]
    assignment: Mapping[int, int]
    witnesses: list[int]
    visits: int = 0
    degenerate: bool = False
    extra: dict = field(default_factory=dict, compare=False, repr=False)

    def same_result(self, other: "GuardSolution") -> bool:
        return (
            self.guards == other.guards
            and self.assignment == other.assignment
            and self.witnesses == other.witnesses
        )

    def to_json(self) -> str:
        doc = {
            "side": self.side,
            "guards": [g + 1 for g in self.guards],
            "assignment": {str(w + 1): str(g + 1) for w, g in sorted(self.assignment.items())},
            "witnesses": [w + 1 for w in self.witnesses],
            "visits": int(self.visits),
        }
        if self.degenerate:
            doc["degenerate"] = True  # a convex vertex had to be used as a guard
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GuardSolution":
        doc = json.loads(text)
        if doc.get("side") not in SIDES:
            raise ValueError("solution document has no valid side")
        return cls(
            side=doc["side"],
            guards=[int(g) - 1 for g in doc["guards"]],
            assignment={int(w) - 1: int(g) - 1 for w, g in doc.get("assignment", {}).items()},
            witnesses=[int(w) - 1 for w in doc.get("witnesses", [])],
            visits=int(doc.get("visits", 0)),
            degenerate=bool(doc.get("degenerate", False)),
        )


def _higher_candidate(t: Terrain, left: int, i: int) -> int:
    if i + 1 < t.n and t.ys[i + 1] > t.ys[left]:
        return i + 1
    return left


def solve_right_convex_reference(t: Terrain) -> GuardSolution:
    """Quadratic greedy straight from the visibility predicate.

    ``L(v)`` is the lowest index that sees ``v``.  A vertex counts as guarded
    when any guard so far sees it.  Its assigned guard is the rightmost
    *active* guard that sees it, where a guard retires once it falls strictly
    between an already processed right convex vertex and that vertex's
    assigned guard (or its ``L(v)`` when a new guard was placed).  Uses the
    full visibility matrix when ``t`` fits under the oracle cap and pairwise
    ``sees`` otherwise.
    """
    c = t.classification
    if t.n <= ORACLE_CAP:
        bits = visibility_matrix(t).bits
        seen = lambda u, v: bool(bits[u, v])
    else:
        seen = lambda u, v: sees(t, u, v)
    guards: list[int] = []
    active: list[int] = []
    assignment: dict[int, int] = {}
    witnesses: list[int] = []
    degenerate = False
    for i in c.rc_indices.tolist():
        if any(seen(g, i) for g in guards):
            # falls back to any seer so a broken invariant shows up as a diff
            seer = next((g for g in sorted(active, reverse=True) if seen(g, i)), None)
            if seer is None:
                seer = max(g for g in guards if seen(g, i))
            anchor = seer
        else:
            anchor = next(u for u in range(i + 1) if seen(u, i))
            seer = _higher_candidate(t, anchor, i)
            guards.append(seer)
            active.append(seer)
            witnesses.append(i)
            degenerate |= c[seer].is_convex
        assignment[i] = seer
        active = [g for g in active if not anchor < g < i]
    return GuardSolution("right", sorted(guards), assignment, witnesses, 0, degenerate)


def _fast_raw(t: Terrain, backend):
    c = t.classification
    left = backend.leftmost_visible(t.xs, t.ys, c.classes)
    guards, assign, witnesses, visits, degenerate = backend.solve_right_fast(t.xs, t.ys, c.classes, left)
    rc = c.rc_indices
    return guards, rc, np.asarray(assign)[rc], witnesses, int(visits), bool(degenerate)


def solve_right_convex_fast(t: Terrain, backend: str = "active") -> GuardSolution:
    """Linear-time greedy over a shrinking active chain.

    For each right convex ``v`` the chain is walked leftwards from ``v``,
    keeping the leftmost vertex seen so far that sees ``v`` (the pivot).  A
    live vertex sees ``v`` iff it is on or above the ray from ``v`` through
    the pivot, so the first guard passing that test is the rightmost live
    guard of ``v``.  The walk stops at ``L(v)``, past which nothing sees
    ``v``.  Afterwards every vertex strictly between ``v`` and the guard (or
    ``L(v)``) leaves the chain; it lies under a segment joining two live
    vertices and can never again be the highest obstacle.
    """
    guards, keys, vals, witnesses, visits, degenerate = _fast_raw(t, kernels.get(backend))
    return GuardSolution("right", guards.tolist(), IndexMap(keys, vals), witnesses.tolist(), visits, degenerate)


def _mirror_back(t: Terrain, sol: GuardSolution) -> GuardSolution:
    last = t.n - 1
    if isinstance(sol.assignment, IndexMap):
        assignment = IndexMap(last - sol.assignment.keys_array, last - sol.assignment.values_array)
    else:
        assignment = {last - w: last - g for w, g in sol.assignment.items()}
    return GuardSolution(
        "left",
        (last - np.asarray(sol.guards[::-1], dtype=np.int64)).tolist(),
        assignment,
        (last - np.asarray(sol.witnesses[::-1], dtype=np.int64)).tolist(),
        sol.visits,
        sol.degenerate,
    )


def solve_left_convex(t: Terrain, engine: str = "fast", backend: str = "active") -> GuardSolution:
    m = mirror_terrain(t)
    if engine == "fast":
        sol = solve_right_convex_fast(m.terrain, backend)
    elif engine == "reference":
        sol = solve_right_convex_reference(m.terrain)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return _mirror_back(t, sol)


def solve_full(t: Terrain, engine: str = "fast", verify: bool = False, backend: str = "active") -> GuardSolution:
    """Union of the right and left convex solutions: at most twice optimal.

    Right and left witnesses are disjoint classes, so the assignment is the
    plain union of both.  ``verify=True`` asserts that the union sees every
    vertex (quadratic).
    """
    if engine == "fast":
        right = solve_right_convex_fast(t, backend)
    elif engine == "reference":
        right = solve_right_convex_reference(t)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    left = solve_left_convex(t, engine, backend)
    if isinstance(right.assignment, IndexMap):
        ra, la = right.assignment, left.assignment
        assignment = IndexMap(
            np.concatenate((la.keys_array, ra.keys_array)),
            np.concatenate((la.values_array, ra.values_array)),
        )
    else:
        assignment = {**left.assignment, **right.assignment}
    sol = GuardSolution(
        "full",
        np.union1d(right.guards, left.guards).astype(np.int64).tolist(),
        assignment,
        np.union1d(right.witnesses, left.witnesses).astype(np.int64).tolist(),
        right.visits + left.visits,
        right.degenerate or left.degenerate,
        extra={"right": right, "left": left},
    )
    if verify:
        missed = verify_coverage(t, sol.guards, range(t.n))
        assert not missed, f"union leaves vertices unguarded: {missed}"
    return sol


def verify_coverage(t: Terrain, guards, witnesses) -> list[int]:
    """Witnesses (ascending) that no guard sees."""
    guards = sorted(set(int(g) for g in guards))
    witnesses = sorted(set(int(w) for w in witnesses))
    for v in guards + witnesses:
        if not 0 <= v < t.n:
            raise IndexOutOfRangeError(f"vertex index {v} outside [0, {t.n})")
    gs = set(guards)
    return [w for w in witnesses if w not in gs and not any(sees(t, g, w) for g in guards)]
