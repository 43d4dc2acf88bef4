import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoguard import kernels
from orthoguard.generator import GenSpec, generate_random, random_corpus
from orthoguard.terrain import build_terrain, mirror_terrain
from orthoguard.visibility import (
    IndexOutOfRangeError,
    OracleCapExceededError,
    leftmost_visible_all,
    orient,
    rightmost_visible_all,
    sees,
    visibility_matrix,
    visible_left,
)


def brute_sees(t, i, j):
    """Literal definition: nothing strictly above the segment between them."""
    if i > j:
        i, j = j, i
    (ax, ay), (bx, by) = t.coords()[i], t.coords()[j]
    for k in range(i + 1, j):
        x, y = t.coords()[k]
        if (bx - ax) * (y - ay) - (by - ay) * (x - ax) > 0:
            return False
    return True


def test_orient():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 0), (0, -1)) == -1
    assert orient((0, 0), (1, 1), (2, 2)) == 0


def test_valley_examples(valley):
    assert sees(valley, 0, 5)
    assert not sees(valley, 0, 3)
    assert visibility_matrix(valley).row(1).tolist() == [0, 1, 2, 3, 4, 5]


def test_stairs_and_flat(stairs, flat):
    assert not sees(stairs, 1, 3)
    assert visibility_matrix(flat).bits.all()


def test_trivial_pairs(wells):
    for i in range(wells.n):
        assert sees(wells, i, i)
        if i + 1 < wells.n:
            assert sees(wells, i, i + 1)


def test_index_errors(valley):
    with pytest.raises(IndexOutOfRangeError):
        sees(valley, 0, 6)
    with pytest.raises(IndexOutOfRangeError):
        sees(valley, -1, 2)


def test_matrix_cap(valley):
    with pytest.raises(OracleCapExceededError):
        visibility_matrix(valley, cap=5)


def test_matrix_matches_literal_definition():
    for _, t in random_corpus(60, 15):
        bits = visibility_matrix(t).bits
        assert np.array_equal(bits, bits.T)
        expect = np.array([[brute_sees(t, i, j) for j in range(t.n)] for i in range(t.n)])
        assert np.array_equal(bits, expect)


def test_leftmost_fixtures(valley, stairs, flat):
    assert leftmost_visible_all(valley).as_dict() == {3: 1, 5: 0}
    assert leftmost_visible_all(stairs).as_dict() == {1: 0, 3: 2, 5: 4}
    assert leftmost_visible_all(flat).as_dict() == {1: 0}
    with pytest.raises(KeyError):
        leftmost_visible_all(valley)[0]


def test_rightmost_fixtures(valley, stairs, flat):
    assert rightmost_visible_all(valley).as_dict() == {0: 5, 2: 4}
    assert rightmost_visible_all(stairs).as_dict() == {0: 4}
    assert rightmost_visible_all(flat).as_dict() == {0: 1}


terrains = st.builds(
    lambda seed, steps, run, rise: generate_random(GenSpec(seed, steps, run, rise)),
    st.integers(0, 2**64 - 1),
    st.integers(1, 60),
    st.integers(1, 6),
    st.integers(1, 6),
)


@settings(max_examples=300, deadline=None)
@given(terrains)
def test_leftmost_and_rightmost_against_matrix(t):
    bits = visibility_matrix(t).bits
    c = t.classification
    left = leftmost_visible_all(t).left
    for v in c.rc_indices.tolist():
        assert left[v] == np.flatnonzero(bits[:, v])[0]
    right = rightmost_visible_all(t).right
    for v in c.lc_indices.tolist():
        assert right[v] == np.flatnonzero(bits[:, v])[-1]


@settings(max_examples=200, deadline=None)
@given(terrains)
def test_visible_left_matches_matrix(t):
    bits = visibility_matrix(t).bits
    for v in t.classification.rc_indices.tolist():
        expect = sorted(np.flatnonzero(bits[:v, v]).tolist(), reverse=True)
        assert visible_left(t, v) == expect


def test_visible_left_rejects_vertical_wall(valley):
    with pytest.raises(ValueError):
        visible_left(valley, 2)


def test_mirror_preserves_visibility(wells):
    m = mirror_terrain(wells).terrain
    a = visibility_matrix(wells).bits
    b = visibility_matrix(m).bits
    assert np.array_equal(a, b[::-1, ::-1])


@pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")
def test_backends_agree_on_visibility():
    for _, t in random_corpus(100, 40):
        assert np.array_equal(
            np.asarray(kernels.compiled.visibility_matrix(t.xs, t.ys), dtype=bool),
            np.asarray(kernels.pure.visibility_matrix(t.xs, t.ys), dtype=bool),
        )
        for i in range(0, t.n, 3):
            for j in range(t.n):
                assert bool(kernels.compiled.sees(t.xs, t.ys, i, j)) == bool(kernels.pure.sees(t.xs, t.ys, i, j))
