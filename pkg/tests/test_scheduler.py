"""Static proportional partitioning and deterministic parallel execution."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgarc.scheduler import (
    BadProportionsError,
    equal_proportions,
    partition,
    run_jobs,
)

DECAY_SPLIT = (10, 20, 30, 40)


def sizes(part):
    return [e - s for s, e in part.ranges]


def test_reference_proportions_exact():
    assert sizes(partition(100, DECAY_SPLIT)) == [10, 20, 30, 40]


def test_single_worker_gets_everything():
    for n in (0, 1, 17):
        assert sizes(partition(n, (100,))) == [n]


def test_rounding_rule_hand_applied():
    """floors are (0, 1, 2, 2); remainder 2 goes one each to the last two
    workers, hence (0, 1, 3, 3)."""
    floors = [7 * p // 100 for p in DECAY_SPLIT]
    assert floors == [0, 1, 2, 2]
    remainder = 7 - sum(floors)
    assert remainder == 2
    want = floors.copy()
    for k in range(len(want) - remainder, len(want)):
        want[k] += 1
    assert sizes(partition(7, DECAY_SPLIT)) == want == [0, 1, 3, 3]


def test_bad_proportions_rejected():
    for bad in [(10, 20, 30), (0, 100), (50, 60), (), (-10, 110)]:
        with pytest.raises(BadProportionsError):
            partition(10, bad)


@st.composite
def proportion_tuples(draw):
    k = draw(st.integers(min_value=1, max_value=6))
    cuts = sorted(
        draw(
            st.lists(
                st.integers(min_value=1, max_value=99),
                min_size=k - 1,
                max_size=k - 1,
                unique=True,
            )
        )
    )
    edges = [0, *cuts, 100]
    return tuple(edges[i + 1] - edges[i] for i in range(k))


@given(st.integers(min_value=0, max_value=500), proportion_tuples())
@settings(max_examples=300, deadline=None)
def test_partition_covers_disjointly(job_count, props):
    part = partition(job_count, props)
    assert sum(sizes(part)) == job_count
    cursor = 0
    for s, e in part.ranges:
        assert s == cursor and e >= s
        cursor = e
    assert cursor == job_count


def test_partition_covers_disjointly_bulk():
    rng = random.Random(0)
    for _ in range(10000):
        k = rng.randint(1, 6)
        cuts = sorted(rng.sample(range(1, 100), k - 1))
        props = tuple(
            b - a for a, b in zip([0, *cuts], [*cuts, 100])
        )
        n = rng.randrange(0, 400)
        part = partition(n, props)
        assert sum(sizes(part)) == n
        cursor = 0
        for s, e in part.ranges:
            assert s == cursor
            cursor = e


def _square(i):
    return i * i


def _fail_on_some(i):
    if i in (11, 5, 23):
        raise ValueError(f"job {i} failed")
    return i


def test_run_jobs_empty():
    assert run_jobs(partition(0, DECAY_SPLIT), _square) == []


def test_run_jobs_matches_inline_map():
    want = [_square(i) for i in range(57)]
    assert run_jobs(partition(57, (100,)), _square) == want
    assert run_jobs(partition(57, DECAY_SPLIT), _square) == want
    assert run_jobs(partition(57, DECAY_SPLIT), _square, stealing=True) == want


def test_run_jobs_deterministic_across_worker_counts():
    results = [
        run_jobs(partition(40, props), _square)
        for props in [(100,), (50, 50), DECAY_SPLIT, equal_proportions(3)]
    ]
    assert all(r == results[0] for r in results)


def test_run_jobs_propagates_first_error_by_index():
    with pytest.raises(ValueError, match="job 5 failed"):
        run_jobs(partition(30, DECAY_SPLIT), _fail_on_some)
    with pytest.raises(ValueError, match="job 5 failed"):
        run_jobs(partition(30, (100,)), _fail_on_some)


def test_equal_proportions_sum():
    for w in range(1, 9):
        props = equal_proportions(w)
        assert len(props) == w and sum(props) == 100
