"""Power indices built on minimal winning (embedded) coalitions.

Every index is computed in exact rational arithmetic.  For the partition
form the formulas only look at the active coalition of each minimal winning
embedded coalition, so one implementation serves both forms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .enumeration import check_capacity, enumerate_partitions
from .errors import DegenerateGameError, FormMismatchError, NotMergeableError
from .games import (
    MWCSet,
    as_partition_game,
    as_simple_game,
    is_mergeable,
    minimal_winning_coalitions,
    participation_counts,
    union_game,
)
from .model import EmbeddedCoalition, GameSpec, Partition, PlayerTable, full_mask, members

INDEX_KINDS = ("dp", "pg", "cm", "hcm")


def round_half_up(x: Fraction, places: int = 4) -> str:
    """Decimal string of the non-negative ``x`` rounded half-up to ``places`` digits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("only non-negative values are rounded")
    scale = 10 ** places
    units, rem = divmod(x.numerator * scale, x.denominator)
    if 2 * rem >= x.denominator:
        units += 1
    return f"{units // scale}.{units % scale:0{places}d}"


@dataclass(frozen=True)
class IndexVector:
    kind: str
    form: str
    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def rounded(self, places: int = 4) -> tuple[str, ...]:
        return tuple(round_half_up(v, places) for v in self.values)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)


def _require_nonempty(m: MWCSet) -> None:
    if len(m) == 0:
        raise DegenerateGameError("power indices need a non-empty minimal winning set")


def _weights(m: MWCSet, t: PlayerTable | Sequence[int]) -> tuple[int, ...]:
    w = t.weights if isinstance(t, PlayerTable) else tuple(t)
    if len(w) != m.n:
        raise FormMismatchError(f"{len(w)} weights for a game of {m.n} players")
    return w


def dp(m: MWCSet) -> IndexVector:
    """Deegan-Packel: average over minimal coalitions of an equal share of each."""
    _require_nonempty(m)
    vals = [Fraction(0)] * m.n
    for a, c in Counter(m.actives).items():
        share = Fraction(c, a.bit_count())
        for i in members(a):
            vals[i] += share
    total = len(m)
    return IndexVector("dp", m.form, tuple(v / total for v in vals))


def pg(m: MWCSet) -> IndexVector:
    """Public Good: participation counts normalised to sum to one."""
    _require_nonempty(m)
    counts = participation_counts(m)
    total = sum(counts)
    return IndexVector("pg", m.form, tuple(Fraction(c, total) for c in counts))


def cm(m: MWCSet, t: PlayerTable | Sequence[int]) -> IndexVector:
    """Colomer-Martínez: like Deegan-Packel but shares split in proportion to weight."""
    _require_nonempty(m)
    w = _weights(m, t)
    vals = [Fraction(0)] * m.n
    for a, c in Counter(m.actives).items():
        ws = sum(w[i] for i in members(a))
        if ws == 0:
            raise DegenerateGameError(
                f"minimal coalition {members(a)} has zero total weight")
        for i in members(a):
            vals[i] += Fraction(c * w[i], ws)
    total = len(m)
    return IndexVector("cm", m.form, tuple(v / total for v in vals))


def hcm(m: MWCSet, t: PlayerTable | Sequence[int]) -> IndexVector:
    """Holler-Colomer-Martínez: participation counts weighted by seat weight."""
    _require_nonempty(m)
    w = _weights(m, t)
    counts = participation_counts(m)
    den = sum(c * wi for c, wi in zip(counts, w))
    if den == 0:
        raise DegenerateGameError("every minimal coalition member has zero weight")
    return IndexVector("hcm", m.form, tuple(Fraction(c * wi, den) for c, wi in zip(counts, w)))


def hcm_alternative(m: MWCSet, t: PlayerTable | Sequence[int]) -> IndexVector:
    """HCM written as a sum over coalitions of ``w_i`` over the total coalition weight."""
    _require_nonempty(m)
    w = _weights(m, t)
    tally = Counter(m.actives)
    den = sum(c * sum(w[j] for j in members(a)) for a, c in tally.items())
    if den == 0:
        raise DegenerateGameError("every minimal coalition member has zero weight")
    vals = [Fraction(0)] * m.n
    for a, c in tally.items():
        for i in members(a):
            vals[i] += Fraction(c * w[i], den)
    return IndexVector("hcm", m.form, tuple(vals))


def compute_index(kind: str, m: MWCSet, t: PlayerTable | Sequence[int] | None = None
                  ) -> IndexVector:
    if kind == "dp":
        return dp(m)
    if kind == "pg":
        return pg(m)
    if t is None:
        raise FormMismatchError(f"{kind} needs player weights")
    if kind == "cm":
        return cm(m, t)
    if kind == "hcm":
        return hcm(m, t)
    raise ValueError(f"unknown index {kind!r}; expected one of {INDEX_KINDS}")


def null_players(m: MWCSet) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(participation_counts(m)) if c == 0)


# -- symmetry ----------------------------------------------------------------------

def symmetric_pairs_characteristic(v) -> frozenset[tuple[int, int]]:
    """Pairs ``(i, j)`` that can replace each other in every losing coalition."""
    if isinstance(v, GameSpec) and not v.is_characteristic:
        raise FormMismatchError("operation needs a characteristic-form game")
    g = as_simple_game(v)
    grand = full_mask(g.n)
    out = set()
    for i, j in combinations(range(g.n), 2):
        rest = grand & ~(1 << i) & ~(1 << j)
        s = rest
        ok = True
        while True:
            if not g.winning(s) and g.winning(s | 1 << i) != g.winning(s | 1 << j):
                ok = False
                break
            if s == 0:
                break
            s = (s - 1) & rest
        if ok:
            out.add((i, j))
    return frozenset(out)


@dataclass(frozen=True)
class PartitionSymmetry:
    """Symmetric pairs of a partition-form game.

    ``flagged`` holds pairs whose verdict changes when the embedded
    coalitions where ``i`` and ``j`` start in the same block are ignored;
    for those the literal reading of the swap is doubtful.
    """

    pairs: frozenset[tuple[int, int]]
    flagged: frozenset[tuple[int, int]]


def _move_into(p: Partition, s: int, k: int) -> EmbeddedCoalition:
    """``(S ∪ k; P without S and P(k), plus S ∪ k and P(k) minus k)``."""
    home = p.block_of(k)
    blocks = [b for b in p.blocks if b != s and b != home]
    blocks.append(s | 1 << k)
    if home & ~(1 << k):
        blocks.append(home & ~(1 << k))
    return EmbeddedCoalition(s | 1 << k, Partition(p.n, tuple(blocks)))


def symmetric_pairs_partition(v, capacity: int | None = None) -> PartitionSymmetry:
    """Players whose exchange never changes the type of an embedded coalition.

    For each partition ``P`` and each active ``S`` in ``P`` avoiding ``i`` and
    ``j``, player ``i`` is moved from its block into ``S`` and the result
    compared with doing the same for ``j``.
    """
    g = as_partition_game(v)
    n = g.n
    check_capacity(n, capacity)
    verdict = {}
    for i, j in combinations(range(n), 2):
        verdict[(i, j)] = [True, True]  # literal, ignoring same-block cases
    for p in enumerate_partitions(n, capacity):
        for s in p.blocks:
            for (i, j), flags in verdict.items():
                pij = (1 << i) | (1 << j)
                if s & pij:
                    continue
                same = p.block_of(i) == p.block_of(j)
                if g(_move_into(p, s, i)) != g(_move_into(p, s, j)):
                    flags[0] = False
                    if not same:
                        flags[1] = False
    pairs = frozenset(k for k, f in verdict.items() if f[0])
    flagged = frozenset(k for k, f in verdict.items() if f[0] != f[1])
    return PartitionSymmetry(pairs, flagged)


@dataclass(frozen=True)
class WeightedSymmetryCheck:
    applicable: bool
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def check_weighted_symmetry(index: IndexVector, m: MWCSet,
                            t: PlayerTable | Sequence[int]) -> WeightedSymmetryCheck:
    """``w_j f_i == w_i f_j`` inside the unique minimal coalition, when there is one."""
    if len(m) != 1:
        return WeightedSymmetryCheck(False, True)
    w = _weights(m, t)
    a = m.actives[0]
    holds = all(w[j] * index[i] == w[i] * index[j]
                for i, j in combinations(members(a), 2))
    return WeightedSymmetryCheck(True, holds)


# -- merge identities --------------------------------------------------------------

def _merge_parts(v, w):
    if not is_mergeable(v, w):
        raise NotMergeableError("the games have nested minimal winning coalitions")
    mv = minimal_winning_coalitions(v)
    mw = minimal_winning_coalitions(w)
    mu = minimal_winning_coalitions(union_game(v, w))
    return mv, mw, mu


def dp_merge_check(v, w) -> bool:
    """Deegan-Packel of the union equals the size-weighted mix of the parts."""
    mv, mw, mu = _merge_parts(v, w)
    a, b, u = dp(mv), dp(mw), dp(mu)
    return all(u[i] == (len(mv) * a[i] + len(mw) * b[i]) / len(mu) for i in range(mu.n))


def pg_merge_check(v, w) -> bool:
    mv, mw, mu = _merge_parts(v, w)
    a, b, u = pg(mv), pg(mw), pg(mu)
    sv, sw, su = (sum(participation_counts(x)) for x in (mv, mw, mu))
    return all(u[i] == (sv * a[i] + sw * b[i]) / su for i in range(mu.n))
