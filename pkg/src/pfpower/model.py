"""Domain vocabulary: players, coalitions, partitions and embedded coalitions.

Players are addressed by their position in a :class:`PlayerTable`.  A
coalition is a plain ``int`` used as a bitset (bit ``i`` set means player
``i`` belongs to it); ``0`` is the empty coalition.  Partitions store their
blocks as such bitsets in canonical order, i.e. sorted by smallest member.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import ConfigurationError, MalformedInputError, ValidationError

Coalition = int
CoalitionLike = Union[int, Iterable[Union[int, str]]]

DEFAULT_CAPACITY = 12
MAX_CAPACITY = 15


def members(c: Coalition) -> tuple[int, ...]:
    """Indices of the players in ``c``, ascending."""
    out = []
    i = 0
    while c:
        if c & 1:
            out.append(i)
        c >>= 1
        i += 1
    return tuple(out)


def size(c: Coalition) -> int:
    return c.bit_count()


def lowest(c: Coalition) -> int:
    return (c & -c).bit_length() - 1


def mask_of(indices: Iterable[int]) -> Coalition:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(n: int) -> Coalition:
    return (1 << n) - 1


@dataclass(frozen=True)
class Player:
    id: str
    weight: int
    votes: int | None = None


@dataclass(frozen=True)
class PlayerTable:
    """Ordered registry of players with seat weights and optional vote counts."""

    players: tuple[Player, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        players = tuple(self.players)
        object.__setattr__(self, "players", players)
        if not players:
            raise ValidationError("at least one player is required", "players")
        index = {}
        for k, p in enumerate(players):
            where = f"players[{k}]"
            if not isinstance(p.id, str) or not p.id:
                raise ValidationError("player id must be a non-empty string", f"{where}.id")
            if p.id in index:
                raise ValidationError(f"duplicate player id {p.id!r}", f"{where}.id")
            if not _is_count(p.weight):
                raise ValidationError("weight must be a non-negative integer", f"{where}.weight")
            if p.votes is not None and not _is_count(p.votes):
                raise ValidationError("votes must be a non-negative integer", f"{where}.votes")
            index[p.id] = k
        if not any(p.weight > 0 for p in players):
            raise ValidationError("at least one player needs positive weight", "players")
        carrying = [p.votes is not None for p in players]
        if any(carrying) and not all(carrying):
            k = carrying.index(False)
            raise ValidationError(
                "votes must be given for every player or for none", f"players[{k}].votes"
            )
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_weights(cls, weights: Sequence[int], ids: Sequence[str] | None = None,
                     votes: Sequence[int] | None = None) -> "PlayerTable":
        """Build a table from parallel sequences; ids default to ``a, b, c, ...``."""
        if ids is None:
            ids = _default_ids(len(weights))
        if votes is None:
            votes = [None] * len(weights)
        if not (len(ids) == len(weights) == len(votes)):
            raise ValidationError("ids, weights and votes must have equal length", "players")
        return cls(tuple(Player(i, w, v) for i, w, v in zip(ids, weights, votes)))

    def __len__(self) -> int:
        return len(self.players)

    @property
    def n(self) -> int:
        return len(self.players)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.players)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(p.weight for p in self.players)

    @property
    def votes(self) -> tuple[int, ...] | None:
        if not self.has_votes:
            return None
        return tuple(p.votes for p in self.players)

    @property
    def has_votes(self) -> bool:
        return self.players[0].votes is not None

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def grand(self) -> Coalition:
        return full_mask(self.n)

    def index(self, player_id: str) -> int:
        try:
            return self._index[player_id]
        except KeyError:
            raise MalformedInputError(f"unknown player id {player_id!r}") from None

    def coalition(self, c: CoalitionLike) -> Coalition:
        """Coerce a bitset, or an iterable of ids/indices, into a checked bitset."""
        if isinstance(c, int):
            if c < 0 or c >> self.n:
                raise MalformedInputError(f"coalition {c:#b} refers to unknown players")
            return c
        if isinstance(c, str):
            c = [c]
        m = 0
        for x in c:
            if isinstance(x, str):
                m |= 1 << self.index(x)
            elif isinstance(x, int) and 0 <= x < self.n:
                m |= 1 << x
            else:
                raise MalformedInputError(f"unknown player {x!r}")
        return m

    def names(self, c: Coalition) -> tuple[str, ...]:
        return tuple(self.players[i].id for i in members(c))

    def scaled(self, k: int) -> "PlayerTable":
        """Every weight and vote count multiplied by the positive integer ``k``."""
        return PlayerTable(tuple(
            Player(p.id, p.weight * k, None if p.votes is None else p.votes * k)
            for p in self.players
        ))


def _is_count(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _default_ids(n: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n <= len(letters):
        return list(letters[:n])
    return [f"p{i + 1}" for i in range(n)]


def block_weight(c: CoalitionLike, t: PlayerTable) -> int:
    """Total seat weight of coalition ``c``; 0 for the empty coalition."""
    c = t.coalition(c)
    w = t.weights
    return sum(w[i] for i in members(c))


def block_votes(c: CoalitionLike, t: PlayerTable) -> int:
    """Total election votes of coalition ``c``."""
    if not t.has_votes:
        raise ConfigurationError("the player table carries no vote counts")
    c = t.coalition(c)
    v = t.votes
    return sum(v[i] for i in members(c))


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``{0, ..., n-1}`` with blocks stored as bitsets.

    Blocks are kept in canonical order (ascending smallest member), so two
    partitions with the same blocks compare equal however they were built.
    """

    n: int
    blocks: tuple[Coalition, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=lowest))
        object.__setattr__(self, "blocks", blocks)
        seen = 0
        for b in blocks:
            if b <= 0:
                raise MalformedInputError("partition blocks must be non-empty")
            if b & seen:
                raise MalformedInputError("partition blocks must be pairwise disjoint")
            seen |= b
        if seen != full_mask(self.n):
            raise MalformedInputError(f"blocks do not cover the {self.n} players")

    @classmethod
    def _trusted(cls, n: int, blocks: tuple[Coalition, ...]) -> "Partition":
        """Skip canonicalisation and checks; ``blocks`` must already be canonical."""
        p = object.__new__(cls)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "blocks", blocks)
        return p

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int] | int]) -> "Partition":
        return cls(n, tuple(b if isinstance(b, int) else mask_of(b) for b in blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "Partition":
        """Partition encoded by a restricted growth string (block label per player)."""
        acc: dict[int, int] = {}
        for i, label in enumerate(rgs):
            acc[int(label)] = acc.get(int(label), 0) | (1 << i)
        return cls(len(rgs), tuple(acc.values()))

    def canonical(self) -> "Partition":
        return Partition(self.n, self.blocks)

    def rgs(self) -> tuple[int, ...]:
        labels = [0] * self.n
        for k, b in enumerate(self.blocks):
            for i in members(b):
                labels[i] = k
        return tuple(labels)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.blocks)

    def __contains__(self, c) -> bool:
        return c in self.blocks

    def block_of(self, i: int) -> Coalition:
        for b in self.blocks:
            if b >> i & 1:
                return b
        raise MalformedInputError(f"player {i} outside the partition")

    def outside(self, s: Coalition) -> tuple[Coalition, ...]:
        """Blocks other than ``s``."""
        return tuple(b for b in self.blocks if b != s)


class EmbeddedCoalition(NamedTuple):
    """An active coalition together with a partition containing it as a block."""

    active: Coalition
    partition: Partition

    @classmethod
    def make(cls, active: Coalition, partition: Partition) -> "EmbeddedCoalition":
        if active != 0 and active not in partition.blocks:
            raise MalformedInputError("the active coalition must be a block of the partition")
        return cls(active, partition)

    @classmethod
    def from_outside(cls, n: int, active: Iterable[int] | int,
                     outside: Iterable[Iterable[int] | int]) -> "EmbeddedCoalition":
        """Build ``(S; P)`` from the active block and the blocks of the other players."""
        s = active if isinstance(active, int) else mask_of(active)
        blocks = [s] + [b if isinstance(b, int) else mask_of(b) for b in outside]
        return cls(s, Partition(n, tuple(blocks)))

    @property
    def n(self) -> int:
        return self.partition.n

    def outside(self) -> tuple[Coalition, ...]:
        return self.partition.outside(self.active)

    def sort_key(self):
        return (size(self.active), members(self.active),
                tuple(members(b) for b in self.partition.blocks))


def ec_from_names(t: PlayerTable, active: Iterable[str],
                  partition: Iterable[Iterable[str]]) -> EmbeddedCoalition:
    """Embedded coalition given by player ids; ``partition`` lists every block."""
    s = t.coalition(list(active))
    blocks = tuple(t.coalition(list(b)) for b in partition)
    return EmbeddedCoalition.make(s, Partition(t.n, blocks))


class TieRule(enum.Enum):
    """Policy applied when several blocks share the maximum weight."""

    TIES_LOSE = "ties_lose"
    TIES_ALL_WIN = "ties_all_win"
    VOTES = "votes"


@dataclass(frozen=True)
class Characteristic:
    quota: int


@dataclass(frozen=True)
class PartitionForm:
    tie_rule: TieRule = TieRule.TIES_LOSE


@dataclass(frozen=True)
class GameSpec:
    """Weights plus a winning rule; determines a simple game completely."""

    table: PlayerTable
    form: Union[Characteristic, PartitionForm]

    def __post_init__(self):
        if isinstance(self.form, Characteristic):
            q = self.form.quota
            if not _is_count(q) or q <= 0:
                raise ValidationError("quota must be a positive integer", "quota")
            if q > self.table.total_weight:
                raise ValidationError(
                    f"quota {q} exceeds total weight {self.table.total_weight}", "quota")
        elif isinstance(self.form, PartitionForm):
            if not isinstance(self.form.tie_rule, TieRule):
                raise ValidationError("unknown tie rule", "tie_rule")
            if self.form.tie_rule is TieRule.VOTES and not self.table.has_votes:
                raise ConfigurationError("the votes tie rule needs vote counts for every player")
        else:
            raise ValidationError("form must be characteristic or partition", "form")

    @classmethod
    def characteristic(cls, quota: int, weights: Sequence[int], **kw) -> "GameSpec":
        return cls(PlayerTable.from_weights(weights, **kw), Characteristic(quota))

    @classmethod
    def partition(cls, weights: Sequence[int], tie_rule: TieRule = TieRule.TIES_LOSE,
                  **kw) -> "GameSpec":
        return cls(PlayerTable.from_weights(weights, **kw), PartitionForm(tie_rule))

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def is_characteristic(self) -> bool:
        return isinstance(self.form, Characteristic)

    @property
    def is_partition(self) -> bool:
        return isinstance(self.form, PartitionForm)

    def with_tie_rule(self, rule: TieRule) -> "GameSpec":
        return GameSpec(self.table, PartitionForm(rule))

    def scaled(self, k: int) -> "GameSpec":
        form = self.form
        if isinstance(form, Characteristic):
            form = Characteristic(form.quota * k)
        return GameSpec(self.table.scaled(k), form)
