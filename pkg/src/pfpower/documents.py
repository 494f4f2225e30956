"""Reading and writing game-spec documents and player tables.

A game-spec document is a JSON object::

    {
      "schema_version": 1,
      "form": "partition",
      "tie_rule": "votes",
      "players": [{"id": "UNES", "weight": 49, "votes": 5060922}, ...]
    }

Characteristic-form documents carry ``"quota"`` instead of ``"tie_rule"``.
Player tables may also come from CSV with the header ``id,weight,votes``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from typing import IO, Any, Mapping, Union

from .enumeration import check_capacity
from .errors import ConfigurationError, PfpowerError, ValidationError
from .model import Characteristic, GameSpec, PartitionForm, Player, PlayerTable, TieRule

SCHEMA_VERSION = 1

Source = Union[str, os.PathLike, IO[str], Mapping[str, Any]]


class ParseError(PfpowerError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


def _read_text(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    return doc


def _int_field(obj: Mapping, key: str, path: str, required: bool = True):
    if key not in obj or obj[key] is None:
        if required:
            raise ValidationError("missing field", path)
        return None
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise ValidationError(f"expected an integer, got {val!r}", path)
    if val < 0:
        raise ValidationError("must be non-negative", path)
    return val


def spec_from_document(doc: Mapping[str, Any], capacity: int | None = None) -> GameSpec:
    """Validate a parsed document and build the :class:`GameSpec` it describes."""
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema version {version!r}", "schema_version")
    players = doc.get("players")
    if not isinstance(players, list):
        raise ValidationError("expected a list of players", "players")
    if not players:
        raise ValidationError("at least one player is required", "players")
    entries = []
    for k, p in enumerate(players):
        path = f"players[{k}]"
        if not isinstance(p, Mapping):
            raise ValidationError("expected an object", path)
        unknown = set(p) - {"id", "weight", "votes"}
        if unknown:
            raise ValidationError(f"unknown fields {sorted(unknown)}", path)
        pid = p.get("id")
        if not isinstance(pid, str) or not pid:
            raise ValidationError("expected a non-empty string", f"{path}.id")
        entries.append(Player(pid, _int_field(p, "weight", f"{path}.weight"),
                              _int_field(p, "votes", f"{path}.votes", required=False)))
    table = PlayerTable(tuple(entries))
    check_capacity(table.n, capacity)
    form = doc.get("form")
    if form == "characteristic":
        if "tie_rule" in doc:
            raise ValidationError("characteristic form takes no tie rule", "tie_rule")
        quota = _int_field(doc, "quota", "quota")
        return GameSpec(table, Characteristic(quota))
    if form == "partition":
        if "quota" in doc:
            raise ValidationError("partition form takes no quota", "quota")
        rule = doc.get("tie_rule", TieRule.TIES_LOSE.value)
        try:
            rule = TieRule(rule)
        except ValueError:
            raise ValidationError(
                f"expected one of {[r.value for r in TieRule]}, got {rule!r}", "tie_rule"
            ) from None
        return GameSpec(table, PartitionForm(rule))
    raise ValidationError(f"expected 'characteristic' or 'partition', got {form!r}", "form")


def load_spec(source: Source, capacity: int | None = None) -> GameSpec:
    """Load a game spec from a path, an open text stream or a parsed mapping."""
    if isinstance(source, Mapping):
        return spec_from_document(source, capacity)
    return spec_from_document(parse_document(_read_text(source)), capacity)


def spec_to_document(spec: GameSpec) -> dict:
    doc: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    if isinstance(spec.form, Characteristic):
        doc["form"] = "characteristic"
        doc["quota"] = spec.form.quota
    else:
        doc["form"] = "partition"
        doc["tie_rule"] = spec.form.tie_rule.value
    players = []
    for p in spec.table.players:
        entry: dict[str, Any] = {"id": p.id, "weight": p.weight}
        if p.votes is not None:
            entry["votes"] = p.votes
        players.append(entry)
    doc["players"] = players
    return doc


def dump_spec(spec: GameSpec) -> str:
    return json.dumps(spec_to_document(spec), indent=2, ensure_ascii=False) + "\n"


def load_players_csv(source) -> PlayerTable:
    """Player table from CSV with header ``id,weight,votes`` (votes may be blank)."""
    text = _read_text(source)
    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames or []
    if header[:2] != ["id", "weight"] or not set(header) <= {"id", "weight", "votes"}:
        raise ValidationError("CSV header must be id,weight[,votes]", "header")
    players = []
    for k, row in enumerate(reader):
        path = f"players[{k}]"
        try:
            weight = int(row["weight"])
        except (TypeError, ValueError):
            raise ValidationError(f"expected an integer, got {row['weight']!r}",
                                  f"{path}.weight") from None
        votes = (row.get("votes") or "").strip()
        try:
            votes = int(votes) if votes else None
        except ValueError:
            raise ValidationError(f"expected an integer, got {votes!r}",
                                  f"{path}.votes") from None
        players.append(Player(row["id"], weight, votes))
    if not players:
        raise ValidationError("at least one player is required", "players")
    return PlayerTable(tuple(players))


def spec_from_csv(source, quota: int | None = None,
                  tie_rule: TieRule | str | None = None,
                  capacity: int | None = None) -> GameSpec:
    """Game spec from a players CSV plus a rule: ``quota`` or ``tie_rule``."""
    table = load_players_csv(source)
    check_capacity(table.n, capacity)
    if quota is not None and tie_rule is not None:
        raise ConfigurationError("give either a quota or a tie rule, not both")
    if quota is not None:
        return GameSpec(table, Characteristic(quota))
    return GameSpec(table, PartitionForm(TieRule(tie_rule or TieRule.TIES_LOSE)))
