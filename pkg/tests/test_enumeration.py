from itertools import product

import numpy as np
import pytest

from oracles import all_ecs, bell, ec_leq, set_partitions, to_sets
from pfpower import (
    CapacityError,
    EmbeddedCoalition,
    MalformedInputError,
    bell_numbers,
    enumerate_embedded_coalitions,
    enumerate_partitions,
    is_ec_subset,
    is_proper_ec_subset,
)
from pfpower.enumeration import iter_rgs, rgs_chunks


def ec(n, active, *outside):
    # players are written 1-based as in the usual textbook examples
    return EmbeddedCoalition.from_outside(
        n, [i - 1 for i in active], [[i - 1 for i in b] for b in outside])


@pytest.mark.parametrize("n, count", [(1, 1), (3, 5), (6, 203)])
def test_partition_counts(n, count):
    assert sum(1 for _ in enumerate_partitions(n)) == count


def test_single_player_partition():
    (p,) = enumerate_partitions(1)
    assert p.blocks == (1,)


@pytest.mark.parametrize("n, count", [(1, 1), (3, 10), (6, 674)])
def test_embedded_coalition_counts(n, count):
    assert sum(1 for _ in enumerate_embedded_coalitions(n)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_ec_count_law(n):
    b = [bell(k) for k in range(n + 2)]
    assert sum(1 for _ in enumerate_embedded_coalitions(n)) == b[n + 1] - b[n]


def test_bell_numbers_match_stirling_sum():
    assert bell_numbers(12) == [bell(k) for k in range(13)]


@pytest.mark.parametrize("n", range(1, 7))
def test_partitions_match_oracle_without_duplicates(n):
    ours = [frozenset(to_sets(EmbeddedCoalition(p.blocks[0], p))[1])
            for p in enumerate_partitions(n)]
    assert len(ours) == len(set(ours))
    assert set(ours) == {frozenset(p) for p in set_partitions(range(n))}


def test_rgs_lexicographic_order():
    strings = list(iter_rgs(5))
    assert strings == sorted(strings)
    assert strings[0] == (0, 0, 0, 0, 0)
    assert strings[-1] == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("n, chunk", [(5, 3), (7, 40), (9, 1000)])
def test_chunked_stream_equals_sequential(n, chunk):
    parts = list(rgs_chunks(n, chunk_rows=chunk))
    assert len(parts) > 1
    assert np.array_equal(np.concatenate(parts), np.array(list(iter_rgs(n))))


def test_capacity_errors():
    with pytest.raises(CapacityError):
        next(enumerate_partitions(0))
    with pytest.raises(CapacityError):
        next(enumerate_partitions(13))
    with pytest.raises(CapacityError):
        next(enumerate_partitions(3, capacity=16))
    next(enumerate_partitions(13, capacity=13))


def test_inclusion_examples():
    a = ec(4, [1], [2, 3, 4])
    b = ec(4, [1, 2], [3, 4])
    c = ec(4, [1, 2], [3], [4])
    d = ec(4, [1], [2], [3], [4])
    assert is_ec_subset(a, b)
    assert is_ec_subset(b, c)
    assert not is_ec_subset(d, b)
    assert not is_ec_subset(b, d)
    assert is_proper_ec_subset(a, b)
    assert not is_proper_ec_subset(b, a)
    assert not is_proper_ec_subset(a, a)


def test_inclusion_mismatched_players():
    with pytest.raises(MalformedInputError):
        is_ec_subset(ec(3, [1], [2, 3]), ec(4, [1], [2, 3, 4]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inclusion_matches_oracle(n):
    ecs = list(enumerate_embedded_coalitions(n))
    sets = [to_sets(e) for e in ecs]
    for (x, xs), (y, ys) in product(zip(ecs, sets), repeat=2):
        assert is_ec_subset(x, y) == ec_leq(xs, ys)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inclusion_is_partial_order(n):
    ecs = list(enumerate_embedded_coalitions(n))
    leq = {(a, b): is_ec_subset(a, b) for a, b in product(ecs, repeat=2)}
    for a in ecs:
        assert leq[a, a]
    for a, b in product(ecs, repeat=2):
        if a != b:
            assert not (leq[a, b] and leq[b, a])
    for a, b, c in product(ecs, repeat=3):
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]


@pytest.mark.parametrize("n", range(1, 6))
def test_grand_coalition_is_maximum(n):
    grand = ec(n, range(1, n + 1))
    assert all(is_ec_subset(e, grand) for e in enumerate_embedded_coalitions(n))


def test_oracle_ec_listing_size():
    assert len(all_ecs(3)) == 10
