import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoguard.generator import GenSpec, generate_random, random_corpus
from orthoguard.solver import (
    GuardSolution,
    IndexMap,
    solve_full,
    solve_left_convex,
    solve_right_convex_fast,
    solve_right_convex_reference,
    verify_coverage,
)
from orthoguard.terrain import VertexClass
from orthoguard.visibility import IndexOutOfRangeError

from conftest import one_based


def assign1(sol):
    return {w + 1: g + 1 for w, g in sol.assignment.items()}


def test_valley_right(valley):
    sol = solve_right_convex_fast(valley)
    assert one_based(sol.guards) == [2]
    assert assign1(sol) == {4: 2, 6: 2}
    assert one_based(sol.witnesses) == [4]
    assert sol.visits > 0 and not sol.degenerate
    assert sol.same_result(solve_right_convex_reference(valley))


def test_stairs_right(stairs):
    sol = solve_right_convex_fast(stairs)
    assert one_based(sol.guards) == [3, 5]
    assert assign1(sol) == {2: 3, 4: 3, 6: 5}
    assert one_based(sol.witnesses) == [2, 6]
    assert sol.same_result(solve_right_convex_reference(stairs))


def test_flat_is_degenerate(flat):
    sol = solve_right_convex_fast(flat)
    assert sol.guards == [0] and sol.degenerate
    assert solve_left_convex(flat).guards == [1]
    assert '"degenerate":true' in sol.to_json()


def test_wells_guard_sequence(wells):
    # guard reuse, a higher wall top winning over L(v), and a retired guard
    sol = solve_right_convex_fast(wells)
    assert assign1(sol) == {7: 1, 9: 1, 11: 12, 17: 15, 19: 15, 21: 12}
    assert one_based(sol.guards) == [1, 12, 15]
    assert sol.same_result(solve_right_convex_reference(wells))


def test_left_fixtures(valley, stairs):
    sol = solve_left_convex(valley)
    assert one_based(sol.guards) == [5] and assign1(sol) == {1: 5, 3: 5}
    sol = solve_left_convex(stairs)
    assert one_based(sol.guards) == [5] and assign1(sol) == {1: 5}
    assert solve_left_convex(valley, engine="reference").same_result(solve_left_convex(valley))


def test_full_fixtures(valley, stairs, flat):
    assert one_based(solve_full(valley).guards) == [2, 5]
    assert one_based(solve_full(stairs).guards) == [3, 5]
    assert one_based(solve_full(flat).guards) == [1, 2]
    full = solve_full(valley, verify=True)
    assert full.visits == full.extra["right"].visits + full.extra["left"].visits


def test_unknown_engine(valley):
    with pytest.raises(ValueError):
        solve_full(valley, engine="magic")


def test_verify_coverage(valley):
    assert verify_coverage(valley, [1, 4], range(6)) == []
    assert verify_coverage(valley, [0], range(6)) == [2, 3]
    assert verify_coverage(valley, range(6), range(6)) == []
    with pytest.raises(IndexOutOfRangeError):
        verify_coverage(valley, [6], [0])


def test_solution_json_round_trip(stairs):
    sol = solve_full(stairs)
    text = sol.to_json()
    doc = json.loads(text)
    assert list(doc) == ["side", "guards", "assignment", "witnesses", "visits"]
    assert doc["guards"] == [3, 5]
    assert all(isinstance(v, str) for v in doc["assignment"].values())
    back = GuardSolution.from_json(text)
    assert back.same_result(sol) and back.visits == sol.visits
    assert back.to_json() == text


def test_index_map_behaves_like_dict():
    m = IndexMap([5, 1, 3], [0, 0, 2])
    assert list(m) == [1, 3, 5] and m[3] == 2 and len(m) == 3
    assert m == {1: 0, 3: 2, 5: 0}
    with pytest.raises(KeyError):
        m[2]


terrains = st.builds(
    lambda seed, steps, run, rise: generate_random(GenSpec(seed, steps, run, rise)),
    st.integers(0, 2**64 - 1),
    st.integers(1, 80),
    st.integers(1, 6),
    st.integers(1, 6),
)


@settings(max_examples=300, deadline=None)
@given(terrains)
def test_fast_equals_reference(t):
    assert solve_right_convex_fast(t).same_result(solve_right_convex_reference(t))
    assert solve_left_convex(t).same_result(solve_left_convex(t, engine="reference"))


@settings(max_examples=200, deadline=None)
@given(terrains)
def test_full_covers_everything(t):
    sol = solve_full(t)
    assert verify_coverage(t, sol.guards, range(t.n)) == []
    c = t.classification
    for w, g in sol.assignment.items():
        assert verify_coverage(t, [g], [w]) == []
    assert set(sol.assignment) == set(c.rc_indices.tolist()) | set(c.lc_indices.tolist())


def test_guards_reflex_unless_degenerate():
    for _, t in random_corpus(500, 30):
        sol = solve_right_convex_fast(t)
        convex = [g for g in sol.guards if t.classification[g].is_convex]
        assert bool(convex) == sol.degenerate


def test_large_instance_runs():
    t = generate_random(GenSpec(seed=3, steps=50_000, max_run=4, max_rise=4))
    sol = solve_full(t)
    assert sol.visits <= 6 * t.n
    assert max(sol.extra["right"].visits, sol.extra["left"].visits) <= 3 * t.n
    assert t.classification[sol.guards[0]] in tuple(VertexClass)
