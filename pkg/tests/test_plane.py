"""Plane incidence structure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgarc.plane import (
    CapacityExceededError,
    DuplicatePointsError,
    SamePointError,
    build_plane,
)
from oracles import det3
from support import get_field, get_plane

SMALL_Q = [2, 3, 4, 5, 7, 8, 9]


def test_counts():
    assert get_plane(2).size == 7
    assert get_plane(31).size == 993
    pl32 = get_plane(32)
    assert pl32.size == 1057
    assert all(len(pts) == 33 for pts in pl32.points_on_line)
    assert all(len(pts) == 3 for pts in get_plane(2).points_on_line)


def test_capacity_limit():
    with pytest.raises(CapacityExceededError):
        build_plane(get_field(128))


@pytest.mark.parametrize("q", SMALL_Q)
def test_two_points_one_line_exhaustive(q):
    pl = get_plane(q)
    n = pl.size
    for i in range(n):
        for j in range(i + 1, n):
            li = pl.line_through(i, j)
            mask = pl.line_masks[li]
            assert (mask >> i) & 1 and (mask >> j) & 1
            # unique: no other line contains both
            both = (1 << i) | (1 << j)
            assert sum(1 for m in pl.line_masks if m & both == both) == 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_two_lines_one_point_exhaustive(q):
    pl = get_plane(q)
    for a in range(pl.size):
        ma = pl.line_masks[a]
        for b in range(a + 1, pl.size):
            assert bin(ma & pl.line_masks[b]).count("1") == 1


@pytest.mark.parametrize("q", SMALL_Q + [31, 32])
def test_degree_regularity(q):
    pl = get_plane(q)
    assert all(len(pts) == q + 1 for pts in pl.points_on_line)
    on_point = [0] * pl.size
    for pts in pl.points_on_line:
        for p in pts:
            on_point[p] += 1
    assert all(c == q + 1 for c in on_point)


@given(
    st.sampled_from([2, 3, 5, 8, 9, 16, 27, 31, 32]),
    st.data(),
)
@settings(max_examples=300, deadline=None)
def test_normalization_idempotent_and_scale_invariant(q, data):
    pl = get_plane(q)
    f = get_field(q)
    triple = tuple(
        data.draw(st.integers(min_value=0, max_value=q - 1)) for _ in range(3)
    )
    if triple == (0, 0, 0):
        with pytest.raises(ValueError):
            pl.normalize(triple)
        return
    norm = pl.normalize(triple)
    assert pl.normalize(norm) == norm
    assert next(c for c in norm if c) == 1
    scalar = data.draw(st.integers(min_value=1, max_value=q - 1))
    scaled = tuple(f.mul(scalar, c) for c in triple)
    assert pl.normalize(scaled) == norm


def test_line_through_symmetric_and_incident():
    for q in (3, 7, 9):
        pl = get_plane(q)
        for i in range(0, pl.size, 3):
            for j in range(1, pl.size, 7):
                if i == j:
                    continue
                li = pl.line_through(i, j)
                assert li == pl.line_through(j, i)
                assert i in pl.points_on_line[li] and j in pl.points_on_line[li]


def test_line_through_same_point_rejected():
    with pytest.raises(SamePointError):
        get_plane(3).line_through(5, 5)


def test_fano_line_through_solves():
    pl = get_plane(2)
    a = pl.point_index[(0, 0, 1)]
    b = pl.point_index[(0, 1, 0)]
    li = pl.line_through(a, b)
    want = {pl.point_index[t] for t in [(0, 0, 1), (0, 1, 0), (0, 1, 1)]}
    assert set(pl.points_on_line[li]) == want
    assert pl.lines[li] == (1, 0, 0)  # the line x0 = 0


def test_q3_pair_cover_double_count():
    """13 points pair into 78 pairs; each of the 13 lines is hit by exactly
    C(4,2) = 6 of them (brute-force double count)."""
    pl = get_plane(3)
    assert pl.size == 13
    hits = [0] * pl.size
    pairs = 0
    for i in range(pl.size):
        for j in range(i + 1, pl.size):
            hits[pl.line_through(i, j)] += 1
            pairs += 1
    assert pairs == 78
    assert hits == [6] * 13


def test_collinear_examples():
    pl = get_plane(7)
    c = pl.point_index
    assert pl.collinear(c[(0, 0, 1)], c[(0, 1, 0)], c[(0, 1, 1)])
    assert not pl.collinear(c[(0, 0, 1)], c[(0, 1, 0)], c[(1, 0, 0)])
    with pytest.raises(DuplicatePointsError):
        pl.collinear(1, 2, 1)


def test_frame_in_general_position_q31():
    pl = get_plane(31)
    frame = [pl.point_index[t] for t in [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]]
    from itertools import combinations

    for tri in combinations(frame, 3):
        assert not pl.collinear(*tri)


@pytest.mark.parametrize("q", [2, 5, 8, 9])
def test_collinear_matches_determinant(q):
    pl = get_plane(q)
    f = pl.field
    import random

    rng = random.Random(q)
    for _ in range(300):
        i, j, k = rng.sample(range(pl.size), 3)
        want = det3(f, pl.points[i], pl.points[j], pl.points[k]) == 0
        assert pl.collinear(i, j, k) == want


def test_cross_product_gives_joining_line():
    for q in (4, 7):
        pl = get_plane(q)
        import random

        rng = random.Random(q)
        for _ in range(100):
            i, j = rng.sample(range(pl.size), 2)
            li = pl.line_through(i, j)
            assert pl.lines[li] == pl.cross(pl.points[i], pl.points[j])
