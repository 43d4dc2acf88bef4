import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoguard.generator import GenSpec, generate_random
from orthoguard.terrain import (
    COORD_LIMIT,
    CollinearVertexError,
    CoordinateOutOfRangeError,
    DiagonalEdgeError,
    NotMonotoneError,
    TerrainError,
    TooFewVerticesError,
    VertexClass,
    build_terrain,
    mirror_terrain,
    terrain_from_json,
    terrain_to_json,
)

from conftest import FLAT, STAIRS, VALLEY


def test_valley_is_valid(valley):
    assert valley.n == 6
    assert valley.coords() == VALLEY
    assert valley.vertex(2) == (2, 1, 0)


@pytest.mark.parametrize(
    "coords, err",
    [
        ([(0, 0), (1, 1)], DiagonalEdgeError),
        ([(0, 0), (2, 0), (2, 1), (1, 1)], NotMonotoneError),
        ([(0, 0), (1, 0), (2, 0)], CollinearVertexError),
        ([(0, 0), (0, 0), (1, 0)], CollinearVertexError),
        ([(0, 0)], TooFewVerticesError),
        ([], TooFewVerticesError),
        ([(0, 0), (COORD_LIMIT + 1, 0)], CoordinateOutOfRangeError),
        ([(0, 0), (1.5, 0)], TerrainError),
    ],
)
def test_strict_rejects(coords, err):
    with pytest.raises(err):
        build_terrain(coords)


def test_normalize_merges_and_drops():
    t = build_terrain([(0, 0), (1, 0), (1, 0), (2, 0), (2, 1), (2, 3), (4, 3)], mode="normalize")
    assert t.coords() == [(0, 0), (2, 0), (2, 3), (4, 3)]


def test_normalize_still_rejects_diagonals():
    with pytest.raises(DiagonalEdgeError):
        build_terrain([(0, 0), (1, 0), (2, 1)], mode="normalize")


def test_terrain_is_read_only(valley):
    with pytest.raises(ValueError):
        valley.xs[0] = 7


@pytest.mark.parametrize(
    "coords, labels",
    [
        (VALLEY, ["LC", "RR", "LC", "RC", "LR", "RC"]),
        (STAIRS, ["LC", "RC", "LR", "RC", "LR", "RC"]),
        (FLAT, ["LC", "RC"]),
        ([(0, 5), (0, 0), (3, 0)], ["RR", "LC", "RC"]),
        ([(0, 0), (0, 5), (3, 5)], ["RC", "LR", "RC"]),
        ([(0, 0), (3, 0), (3, 5)], ["LC", "RC", "LR"]),
        ([(0, 5), (3, 5), (3, 0)], ["LC", "RR", "LC"]),
    ],
)
def test_classification(coords, labels):
    assert build_terrain(coords).classification.labels() == labels


def test_classification_index_lists(stairs):
    c = stairs.classification
    assert c.rc_indices.tolist() == [1, 3, 5]
    assert c.lr_indices.tolist() == [2, 4]
    assert c.lc_indices.tolist() == [0]
    assert c.rr_indices.tolist() == []
    assert c[1] is VertexClass.RIGHT_CONVEX


def test_mirror_flat(flat):
    m = mirror_terrain(flat)
    assert m.terrain.coords() == FLAT
    assert m.to_original(0) == 1 and m.to_mirrored(1) == 0


def test_mirror_swaps_classes(valley):
    m = mirror_terrain(valley).terrain
    swapped = [VertexClass(int(c)).swapped().short for c in valley.classification.classes[::-1]]
    assert m.classification.labels() == swapped


terrains = st.builds(
    lambda seed, steps, run, rise: generate_random(GenSpec(seed, steps, run, rise)),
    st.integers(0, 2**64 - 1),
    st.integers(1, 40),
    st.integers(1, 5),
    st.integers(1, 5),
)


@settings(max_examples=200, deadline=None)
@given(terrains)
def test_mirror_involution_and_classes(t):
    m = mirror_terrain(t).terrain
    assert mirror_terrain(m).terrain == t
    assert m.xs.min() == t.xs.min() and m.xs.max() == t.xs.max()
    back = np.array([int(VertexClass(int(c)).swapped()) for c in m.classification.classes[::-1]])
    assert np.array_equal(back, t.classification.classes)


@settings(max_examples=200, deadline=None)
@given(terrains)
def test_json_round_trip(t):
    text = terrain_to_json(t)
    assert terrain_from_json(text) == t
    assert terrain_to_json(terrain_from_json(text)) == text


def test_json_format(valley):
    assert terrain_to_json(valley) == '{"version":1,"vertices":[[0,2],[1,2],[1,0],[3,0],[3,2],[4,2]]}'


@pytest.mark.parametrize("text", ["not json", '{"version":2,"vertices":[[0,0],[1,0]]}', '{"version":1}', "[]"])
def test_json_rejects(text):
    with pytest.raises(TerrainError):
        terrain_from_json(text)
