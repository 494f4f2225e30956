"""Partitions, embedded coalitions and the inclusion order between them.

Partitions are produced as restricted growth strings: player 0 gets label 0
and every later player takes a label at most one above the largest label
used so far.  The lexicographic order of these strings is the enumeration
order everywhere in the package.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import CapacityError, MalformedInputError
from .model import (
    DEFAULT_CAPACITY,
    MAX_CAPACITY,
    EmbeddedCoalition,
    Partition,
)

# rows per numpy chunk; bounds memory of the vectorised engine
CHUNK_ROWS = 1 << 18


def check_capacity(n: int, capacity: int | None = None) -> None:
    limit = DEFAULT_CAPACITY if capacity is None else capacity
    if limit > MAX_CAPACITY:
        raise CapacityError(f"capacity cannot be raised above {MAX_CAPACITY} players")
    if n < 1:
        raise CapacityError("at least one player is required")
    if n > limit:
        raise CapacityError(
            f"{n} players exceeds the enumeration capacity of {limit} "
            f"(override up to {MAX_CAPACITY})"
        )


def bell_numbers(upto: int) -> list[int]:
    """Bell numbers ``B(0) .. B(upto)`` from the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(upto):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def iter_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order."""
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        top = b[j] + (a[j] == b[j])
        for k in range(j + 1, n):
            a[k] = 0
            b[k] = top


def enumerate_partitions(n: int, capacity: int | None = None) -> Iterator[Partition]:
    """Every partition of ``{0..n-1}`` exactly once; ``Bell(n)`` in total."""
    check_capacity(n, capacity)
    for rgs in iter_rgs(n):
        yield Partition.from_rgs(rgs)


def enumerate_embedded_coalitions(n: int, capacity: int | None = None
                                  ) -> Iterator[EmbeddedCoalition]:
    for p in enumerate_partitions(n, capacity):
        for s in p.blocks:
            yield EmbeddedCoalition(s, p)


def count_embedded_coalitions(n: int) -> int:
    b = bell_numbers(n + 1)
    return b[n + 1] - b[n]


def _check_same_players(a: EmbeddedCoalition, b: EmbeddedCoalition) -> None:
    if a.partition.n != b.partition.n:
        raise MalformedInputError(
            f"embedded coalitions over {a.partition.n} and {b.partition.n} players"
        )


def is_ec_subset(a: EmbeddedCoalition, b: EmbeddedCoalition) -> bool:
    """Inclusion ``a ⊑ b``.

    True when the active coalition of ``a`` lies inside that of ``b`` and each
    block of ``b`` other than its active one sits inside a block of ``a``.
    The smaller element therefore has the coarser outside partition.
    """
    _check_same_players(a, b)
    s, p = a
    t, q = b
    if s & ~t:
        return False
    for tb in q.blocks:
        if tb == t:
            continue
        if not any(tb & ~sb == 0 for sb in p.blocks):
            return False
    return True


def is_proper_ec_subset(a: EmbeddedCoalition, b: EmbeddedCoalition) -> bool:
    return is_ec_subset(a, b) and a != b


# -- vectorised partition stream ---------------------------------------------

def _grow(rgs: np.ndarray, top: np.ndarray):
    """Extend every string by one position; ``top`` is 1 + max label per row."""
    reps = top + 1
    idx = np.repeat(np.arange(len(rgs)), reps)
    starts = np.cumsum(reps) - reps
    labels = np.arange(len(idx)) - np.repeat(starts, reps)
    new = np.empty((len(idx), rgs.shape[1] + 1), dtype=np.int8)
    new[:, :-1] = rgs[idx]
    new[:, -1] = labels
    new_top = np.maximum(top[idx], labels + 1)
    return new, new_top


def rgs_chunks(n: int, capacity: int | None = None,
               chunk_rows: int = CHUNK_ROWS) -> Iterator[np.ndarray]:
    """Restricted growth strings as ``int8`` arrays of shape ``(rows, n)``.

    Concatenating the chunks gives all ``Bell(n)`` strings in lexicographic
    order.  Splitting happens on prefixes, so each chunk holds at most
    roughly ``chunk_rows`` rows.
    """
    check_capacity(n, capacity)

    def expand(rgs, top):
        k = rgs.shape[1]
        if k == n:
            yield rgs
            return
        rows = _total_completions(n - k, top)
        if rows > chunk_rows and len(rgs) > 1:
            half = len(rgs) // 2
            yield from expand(rgs[:half], top[:half])
            yield from expand(rgs[half:], top[half:])
            return
        yield from expand(*_grow(rgs, top))

    yield from expand(np.zeros((1, 1), dtype=np.int8), np.ones(1, dtype=np.int64))


def _total_completions(rest: int, top: np.ndarray) -> int:
    labels, counts = np.unique(top, return_counts=True)
    return sum(int(c) * _completions(rest, int(m)) for m, c in zip(labels, counts))


@lru_cache(maxsize=None)
def _completions(rest: int, used: int) -> int:
    """Number of ways to append ``rest`` labels to a string using ``used`` labels."""
    if rest == 0:
        return 1
    return used * _completions(rest - 1, used) + _completions(rest - 1, used + 1)
