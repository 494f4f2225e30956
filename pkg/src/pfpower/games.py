"""Simple games in characteristic and partition function form.

Characteristic games expose ``winning(mask) -> bool``; partition-form games
are callables ``v(ec) -> 0 | 1`` carrying an ``n`` attribute.  Weighted games
are described by a :class:`~pfpower.model.GameSpec` and can be passed
wherever a game is expected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, NamedTuple, Sequence, Union

import numpy as np

from .enumeration import (
    check_capacity,
    enumerate_embedded_coalitions,
    enumerate_partitions,
    is_ec_subset,
    is_proper_ec_subset,
    rgs_chunks,
)
from .errors import (
    AntichainViolationError,
    ConfigurationError,
    FormMismatchError,
    MalformedInputError,
)
from .model import (
    Characteristic,
    Coalition,
    EmbeddedCoalition,
    GameSpec,
    Partition,
    PartitionForm,
    TieRule,
    full_mask,
    members,
    size,
)

CHARACTERISTIC = "characteristic"
PARTITION = "partition"


# -- characteristic function form ---------------------------------------------

class SimpleGame:
    """Characteristic-form simple game over players ``0..n-1``."""

    n: int

    def winning(self, c: Coalition) -> bool:
        raise NotImplementedError

    def __call__(self, c: Coalition) -> int:
        return int(self.winning(c))


class WeightedGame(SimpleGame):
    """Weighted majority game ``[q; w]``."""

    def __init__(self, spec: GameSpec):
        _require_characteristic(spec)
        self.spec = spec
        self.n = spec.n
        self.quota = spec.form.quota
        self._w = spec.table.weights

    def winning(self, c: Coalition) -> bool:
        w = self._w
        return sum(w[i] for i in members(c)) >= self.quota

    def __repr__(self):
        return f"WeightedGame([{self.quota}; {', '.join(map(str, self._w))}])"


class UnanimityGame(SimpleGame):
    def __init__(self, n: int, s: Coalition):
        if s <= 0 or s >> n:
            raise MalformedInputError("a unanimity game needs a non-empty coalition")
        self.n = n
        self.s = s

    def winning(self, c: Coalition) -> bool:
        return self.s & ~c == 0

    def __repr__(self):
        return f"UnanimityGame(n={self.n}, s={members(self.s)})"


class UnionGame(SimpleGame):
    def __init__(self, v: SimpleGame, w: SimpleGame):
        self.n = v.n
        self.parts = (v, w)

    def winning(self, c: Coalition) -> bool:
        return any(g.winning(c) for g in self.parts)


class MinimalSetGame(SimpleGame):
    """The game whose winning coalitions are the supersets of given coalitions."""

    def __init__(self, n: int, minimal: Iterable[Coalition]):
        self.n = n
        self.minimal = tuple(minimal)

    def winning(self, c: Coalition) -> bool:
        return any(m & ~c == 0 for m in self.minimal)


CharacteristicGame = Union[SimpleGame, GameSpec]


def as_simple_game(v: CharacteristicGame) -> SimpleGame:
    if isinstance(v, GameSpec):
        return WeightedGame(v)
    if isinstance(v, SimpleGame):
        return v
    raise FormMismatchError(f"not a characteristic-form game: {v!r}")


def _require_characteristic(spec: GameSpec) -> None:
    if not isinstance(spec.form, Characteristic):
        raise FormMismatchError("operation needs a characteristic-form game")


def _require_partition(spec: GameSpec) -> None:
    if not isinstance(spec.form, PartitionForm):
        raise FormMismatchError("operation needs a partition-form game")


def is_winning_characteristic(c, spec: GameSpec) -> bool:
    _require_characteristic(spec)
    c = spec.table.coalition(c)
    w = spec.table.weights
    return sum(w[i] for i in members(c)) >= spec.form.quota


def unanimity_game_eval(s: Coalition, t: Coalition) -> int:
    if s <= 0:
        raise MalformedInputError("unanimity games are defined for non-empty coalitions")
    return int(s & ~t == 0)


def union_game(v: CharacteristicGame, w: CharacteristicGame) -> UnionGame:
    v, w = as_simple_game(v), as_simple_game(w)
    if v.n != w.n:
        raise MalformedInputError(f"games over {v.n} and {w.n} players")
    return UnionGame(v, w)


def is_decisive(v: CharacteristicGame) -> bool:
    """``S`` wins exactly when its complement loses, for every ``S``."""
    g = as_simple_game(v)
    grand = full_mask(g.n)
    return all(g.winning(s) != g.winning(grand & ~s) for s in range(grand + 1))


# -- minimal winning sets -----------------------------------------------------

@dataclass(frozen=True)
class MWCSet:
    """Minimal winning coalitions (characteristic) or embedded coalitions (partition).

    ``elements`` is sorted by active size, then active members, then the
    partition's blocks.
    """

    form: str
    n: int
    elements: tuple

    def __post_init__(self):
        key = (lambda c: (size(c), members(c))) if self.form == CHARACTERISTIC else (
            EmbeddedCoalition.sort_key)
        object.__setattr__(self, "elements", tuple(sorted(self.elements, key=key)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    @property
    def actives(self) -> tuple[Coalition, ...]:
        if self.form == CHARACTERISTIC:
            return self.elements
        return tuple(ec.active for ec in self.elements)

    def containing(self, i: int) -> tuple:
        return tuple(e for e, a in zip(self.elements, self.actives) if a >> i & 1)

    def comparable_pair(self):
        """A pair ``(x, y)`` with ``x`` properly below ``y``, or ``None``."""
        els = self.elements
        if self.form == CHARACTERISTIC:
            for x, y in combinations(els, 2):
                if x & ~y == 0:
                    return x, y
                if y & ~x == 0:
                    return y, x
            return None
        return _comparable_ec_pair(els)

    def is_antichain(self) -> bool:
        return self.comparable_pair() is None


def _comparable_ec_pair(els: Sequence[EmbeddedCoalition]):
    for x, y in combinations(els, 2):
        if is_ec_subset(x, y):
            return x, y
        if is_ec_subset(y, x):
            return y, x
    return None


def minimal_winning_coalitions(v: CharacteristicGame) -> MWCSet:
    """Winning coalitions whose every one-player reduction loses."""
    g = as_simple_game(v)
    out = []
    for s in range(1, full_mask(g.n) + 1):
        if not g.winning(s):
            continue
        if all(not g.winning(s & ~(1 << i)) for i in members(s)):
            out.append(s)
    return MWCSet(CHARACTERISTIC, g.n, tuple(out))


def participation_counts(m: MWCSet) -> tuple[int, ...]:
    """For each player, the number of elements whose active coalition holds them."""
    counts = [0] * m.n
    for a, c in Counter(m.actives).items():
        for i in members(a):
            counts[i] += c
    return tuple(counts)


# -- partition function form --------------------------------------------------

PartitionGame = Callable[[EmbeddedCoalition], int]


def _block_keys(spec: GameSpec):
    """Integer keys per player and whether ties at the maximum count as wins.

    Winning means the active key beats every other block key: strictly for
    TIES_LOSE and VOTES, weakly for TIES_ALL_WIN.  Under VOTES the key
    ``weight * (V + 1) + votes`` orders blocks by weight, then votes.
    """
    t = spec.table
    rule = spec.form.tie_rule
    if rule is TieRule.VOTES:
        if not t.has_votes:
            raise ConfigurationError("the votes tie rule needs vote counts")
        base = sum(t.votes) + 1
        return [w * base + v for w, v in zip(t.weights, t.votes)], True
    return list(t.weights), rule is TieRule.TIES_LOSE


def _beats(active_key: int, other_key: int, strict: bool) -> bool:
    return active_key > other_key if strict else active_key >= other_key


class WeightedPartitionGame:
    """Plurality game: a block wins when it outweighs every other block."""

    def __init__(self, spec: GameSpec):
        _require_partition(spec)
        self.spec = spec
        self.n = spec.n
        self.keys, self.strict = _block_keys(spec)

    def key(self, c: Coalition) -> int:
        k = self.keys
        return sum(k[i] for i in members(c))

    def __call__(self, ec: EmbeddedCoalition) -> int:
        s, p = ec
        if s == 0:
            return 0
        if p.n != self.n:
            raise MalformedInputError(f"partition over {p.n} players, game has {self.n}")
        ks = self.key(s)
        return int(all(_beats(ks, self.key(b), self.strict) for b in p.blocks if b != s))

    def __repr__(self):
        return f"WeightedPartitionGame({self.spec.table.weights}, {self.spec.form.tie_rule.name})"


def is_winning_embedded(ec: EmbeddedCoalition, spec: GameSpec) -> bool:
    return bool(WeightedPartitionGame(spec)(ec))


class FunctionGame:
    """Partition-form game defined by an arbitrary 0/1 function."""

    def __init__(self, n: int, func: Callable[[EmbeddedCoalition], int]):
        self.n = n
        self._func = func

    def __call__(self, ec: EmbeddedCoalition) -> int:
        if ec.active == 0:
            return 0
        return int(bool(self._func(ec)))


class AntichainGame:
    """The unique simple game whose minimal winning embedded coalitions are ``basis``."""

    def __init__(self, n: int, basis: Sequence[EmbeddedCoalition]):
        self.n = n
        self.basis = tuple(basis)

    def __call__(self, ec: EmbeddedCoalition) -> int:
        if ec.active == 0:
            return 0
        return int(any(is_ec_subset(b, ec) for b in self.basis))


def basis_game_eval(base: EmbeddedCoalition, at: EmbeddedCoalition) -> int:
    if base.active == 0:
        raise MalformedInputError("basis games need a non-empty active coalition")
    return int(is_ec_subset(base, at))


def game_from_antichain(c: Iterable[EmbeddedCoalition]) -> AntichainGame:
    c = list(dict.fromkeys(c))
    if not c:
        raise MalformedInputError("the antichain must be non-empty")
    n = c[0].partition.n
    for ec in c:
        if ec.partition.n != n:
            raise MalformedInputError("embedded coalitions over different player sets")
        if ec.active == 0:
            raise MalformedInputError("embedded coalitions in the antichain need active players")
    pair = _comparable_ec_pair(c)
    if pair is not None:
        raise AntichainViolationError(
            f"{_fmt_ec(pair[0])} lies below {_fmt_ec(pair[1])}", pair)
    return AntichainGame(n, c)


def _fmt_ec(ec: EmbeddedCoalition) -> str:
    blocks = "|".join(",".join(map(str, members(b))) for b in ec.partition.blocks)
    return f"({','.join(map(str, members(ec.active)))}; {blocks})"


def as_partition_game(v) -> PartitionGame:
    if isinstance(v, GameSpec):
        return WeightedPartitionGame(v)
    if callable(v) and hasattr(v, "n"):
        return v
    raise FormMismatchError(f"not a partition-form game: {v!r}")


def is_monotone(v, n: int | None = None, capacity: int | None = None) -> bool:
    """``v(a) <= v(b)`` for every comparable pair ``a ⊑ b``.

    Only cover pairs are examined: dropping one active player into a new
    singleton block, or merging two outside blocks.  Every ``⊑`` chain is a
    sequence of such steps, so this is equivalent to checking all pairs.
    """
    g = as_partition_game(v)
    n = g.n if n is None else n
    for ec in enumerate_embedded_coalitions(n, capacity):
        if not g(ec) and any(g(lo) for lo in lower_covers(ec) if lo.active):
            return False
    return True


def lower_covers(ec: EmbeddedCoalition) -> list[EmbeddedCoalition]:
    """Embedded coalitions directly below ``ec`` in the inclusion order.

    Removing player ``i`` from a one-player active coalition yields an empty
    active coalition; such entries are included with ``active == 0``.
    """
    s, p = ec
    n = p.n
    out = p.outside(s)
    result = []
    for i in members(s):
        rest = s & ~(1 << i)
        blocks = out + (1 << i,) + ((rest,) if rest else ())
        result.append(EmbeddedCoalition(rest, Partition(n, blocks)))
    for a, b in combinations(range(len(out)), 2):
        merged = tuple(x for k, x in enumerate(out) if k not in (a, b)) + (out[a] | out[b], s)
        result.append(EmbeddedCoalition(s, Partition(n, merged)))
    return result


def minimal_winning_embedded_coalitions(v, method: str = "auto",
                                        capacity: int | None = None) -> MWCSet:
    """Winning embedded coalitions with no winning proper ``⊑``-subset.

    ``method``:

    * ``"pairwise"``: collect all winning embedded coalitions, keep those with
      no other winning one properly below them.  Quadratic in the number of
      winning coalitions.
    * ``"covers"``: keep winning coalitions whose lower covers all lose; valid
      for monotone games.
    * ``"vectorized"``: the covers test evaluated with numpy over chunks of
      the partition stream.  Weighted specs only.
    * ``"auto"``: ``vectorized`` for a :class:`GameSpec`, ``pairwise`` otherwise.
    """
    if method == "auto":
        method = "vectorized" if isinstance(v, GameSpec) else "pairwise"
    if method == "vectorized":
        if not isinstance(v, GameSpec):
            raise FormMismatchError("the vectorized engine needs a weighted GameSpec")
        return _mwec_vectorized(v, capacity)
    g = as_partition_game(v)
    n = g.n
    if method == "covers":
        found = [ec for ec in enumerate_embedded_coalitions(n, capacity)
                 if g(ec) and not any(g(lo) for lo in lower_covers(ec) if lo.active)]
    elif method == "pairwise":
        wins = [ec for ec in enumerate_embedded_coalitions(n, capacity) if g(ec)]
        found = [ec for ec in wins if not any(is_proper_ec_subset(o, ec) for o in wins)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return MWCSet(PARTITION, n, tuple(found))


def _chunk_block_keys(rgs: np.ndarray, keys: np.ndarray):
    """Per-row block keys (-1 where a label is unused), masks and sizes."""
    rows, n = rgs.shape
    r = np.arange(rows)
    k = np.zeros((rows, n), dtype=np.int64)
    masks = np.zeros((rows, n), dtype=np.int64)
    sizes = np.zeros((rows, n), dtype=np.int64)
    for i in range(n):
        col = rgs[:, i]
        k[r, col] += keys[i]
        masks[r, col] |= 1 << i
        sizes[r, col] += 1
    k[sizes == 0] = -1
    return k, masks, sizes


def _mwec_vectorized(spec: GameSpec, capacity: int | None) -> MWCSet:
    _require_partition(spec)
    n = spec.n
    check_capacity(n, capacity)
    keys_list, strict = _block_keys(spec)
    if sum(keys_list) * 2 >= 2 ** 62:
        # composite keys would overflow int64
        return minimal_winning_embedded_coalitions(spec, "covers", capacity)
    keys = np.asarray(keys_list, dtype=np.int64)
    found = []
    for rgs in rgs_chunks(n, capacity):
        rows = len(rgs)
        r = np.arange(rows)
        k, masks, sizes = _chunk_block_keys(rgs, keys)
        nblocks = (sizes > 0).sum(axis=1)
        srt = np.sort(k, axis=1)
        top1 = srt[:, -1]
        top2 = srt[:, -2] if n > 1 else np.full(rows, -1, dtype=np.int64)
        argmax = np.argmax(k, axis=1)
        # best competitor of each block
        other = np.where(np.arange(n)[None, :] == argmax[:, None], top2[:, None], top1[:, None])
        if strict:
            win = (k > other) & (sizes > 0)
        else:
            win = (k >= other) & (sizes > 0)
        # a winning block holds the maximum key, so its competitors are the
        # remaining blocks; a merge predecessor must lose for every pair of
        # outside blocks, the hardest being the two smallest
        first = n - nblocks
        lo1 = np.take_along_axis(srt, np.minimum(first, n - 1)[:, None], axis=1)[:, 0]
        lo2 = np.take_along_axis(srt, np.minimum(first + 1, n - 1)[:, None], axis=1)[:, 0]
        pair = (lo1 + lo2)[:, None]
        if strict:
            merge_ok = pair >= k
        else:
            merge_ok = pair > k
        merge_ok |= (nblocks < 3)[:, None]
        # dropping player i into a singleton: the reduced block faces the
        # largest outside block (top2) and i itself
        bad = np.zeros((rows, n), dtype=bool)
        for i in range(n):
            col = rgs[:, i]
            ks = k[r, col]
            rest = ks - keys[i]
            rival = np.maximum(top2, keys[i])
            if strict:
                still_wins = rest > rival
            else:
                still_wins = rest >= rival
            still_wins &= sizes[r, col] > 1
            bad[r, col] |= still_wins
        minimal = win & merge_ok & ~bad
        rr, bb = np.nonzero(minimal)
        # label order of a restricted growth string is canonical block order
        rows_hit, first_hit = np.unique(rr, return_index=True)
        parts = [Partition._trusted(n, tuple(m for m in row if m))
                 for row in masks[rows_hit].tolist()]
        slot = np.repeat(np.arange(len(rows_hit)), np.diff(np.append(first_hit, len(rr))))
        for k_, b in zip(slot.tolist(), bb.tolist()):
            p = parts[k_]
            found.append(EmbeddedCoalition(p.blocks[b], p))
    return MWCSet(PARTITION, n, tuple(found))


# -- mergeability ---------------------------------------------------------------

def is_mergeable(v: CharacteristicGame, w: CharacteristicGame) -> bool:
    """No minimal winning coalition of one game contains one of the other."""
    mv = minimal_winning_coalitions(v)
    mw = minimal_winning_coalitions(w)
    if mv.n != mw.n:
        raise MalformedInputError(f"games over {mv.n} and {mw.n} players")
    return all(s & ~t and t & ~s for s in mv for t in mw)


# -- ties -----------------------------------------------------------------------

class TiedPartition(NamedTuple):
    """A partition whose maximum block weight is reached by two or more blocks.

    ``winners`` lists the tied blocks that still win under the game's tie
    rule: none for TIES_LOSE, all of them for TIES_ALL_WIN, at most one
    for VOTES.
    """

    partition: Partition
    blocks: tuple[Coalition, ...]
    block_weights: tuple[int, ...]
    tied: tuple[Coalition, ...]
    winners: tuple[Coalition, ...]


def tied_partitions(spec: GameSpec, capacity: int | None = None) -> list[TiedPartition]:
    """All partitions with a tie at the maximum block weight, in enumeration order.

    Blocks within each report are listed by decreasing weight, ties broken
    by canonical order.
    """
    _require_partition(spec)
    n = spec.n
    check_capacity(n, capacity)
    rule = spec.form.tie_rule
    weights = np.asarray(spec.table.weights, dtype=np.int64)
    votes = np.asarray(spec.table.votes, dtype=np.int64) if rule is TieRule.VOTES else None
    out = []
    for rgs in rgs_chunks(n, capacity):
        k, masks, _ = _chunk_block_keys(rgs, weights)
        at_top = k == k.max(axis=1)[:, None]
        ntop = at_top.sum(axis=1)
        hits = np.nonzero(ntop >= 2)[0]
        if not len(hits):
            continue
        k, masks, at_top, ntop = k[hits], masks[hits], at_top[hits], ntop[hits]
        # empty labels carry -1 and sort last; the stable sort keeps canonical order
        order = np.argsort(-k, axis=1, kind="stable")
        k_sorted = np.take_along_axis(k, order, axis=1).tolist()
        m_sorted = np.take_along_axis(masks, order, axis=1).tolist()
        if votes is not None:
            vk = np.where(at_top, _chunk_block_keys(rgs[hits], votes)[0], -1)
            unique = (vk == vk.max(axis=1)[:, None]).sum(axis=1) == 1
            win_col = np.where(unique, vk.argmax(axis=1), -1).tolist()
        for row, (mrow, ms, ks, t) in enumerate(zip(masks.tolist(), m_sorted, k_sorted,
                                                     ntop.tolist())):
            blocks = tuple(m for m in mrow if m)
            nb = len(blocks)
            tied = tuple(ms[:t])
            if rule is TieRule.TIES_ALL_WIN:
                winners = tied
            elif votes is not None and win_col[row] >= 0:
                winners = (mrow[win_col[row]],)
            else:
                winners = ()
            out.append(TiedPartition(Partition._trusted(n, blocks), tuple(ms[:nb]),
                                     tuple(ks[:nb]), tied, winners))
    return out
