"""Rendering of analyses as aligned text tables, CSV or JSON.

Each ``cmd_*`` function returns the full output as a string; the CLI only
prints it.  Output depends on nothing but the inputs, so identical specs
give byte-identical results.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .enumeration import bell_numbers
from .errors import ConfigurationError, FormMismatchError
from .fixtures import load_fixture
from .games import (
    MWCSet,
    minimal_winning_coalitions,
    minimal_winning_embedded_coalitions,
    participation_counts,
    tied_partitions,
)
from .indices import INDEX_KINDS, IndexVector, compute_index, round_half_up
from .model import Coalition, GameSpec, Partition, PlayerTable, TieRule

FORMATS = ("table", "csv", "json")


def minimal_winning_set(spec: GameSpec, capacity: int | None = None) -> MWCSet:
    if spec.is_characteristic:
        return minimal_winning_coalitions(spec)
    return minimal_winning_embedded_coalitions(spec, capacity=capacity)


def compute_indices(spec: GameSpec, kinds: Iterable[str] = INDEX_KINDS,
                    capacity: int | None = None, m: MWCSet | None = None
                    ) -> dict[str, IndexVector]:
    m = minimal_winning_set(spec, capacity) if m is None else m
    return {k: compute_index(k, m, spec.table) for k in kinds}


# -- formatting helpers -----------------------------------------------------------

def fmt_coalition(c: Coalition, t: PlayerTable) -> str:
    return "{" + ", ".join(t.names(c)) + "}"


def fmt_partition(p: Partition, t: PlayerTable, blocks: Sequence[Coalition] | None = None) -> str:
    return ", ".join(fmt_coalition(b, t) for b in (p.blocks if blocks is None else blocks))


def _ids(c: Coalition, t: PlayerTable) -> list[str]:
    return list(t.names(c))


def _text_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"


def _csv(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ConfigurationError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _exact(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "rounded": round_half_up(x)}


# -- commands ------------------------------------------------------------------------

def cmd_mwec(spec: GameSpec, fmt: str = "table", capacity: int | None = None) -> str:
    """Minimal winning (embedded) coalitions, one per row."""
    _check_format(fmt)
    t = spec.table
    m = minimal_winning_set(spec, capacity)
    if spec.is_characteristic:
        if fmt == "json":
            return _json({"form": "characteristic", "count": len(m),
                          "coalitions": [_ids(c, t) for c in m]})
        if fmt == "csv":
            return _csv(["active"], ([";".join(_ids(c, t))] for c in m))
        return _text_table(["Minimal winning coalition"], [[fmt_coalition(c, t)] for c in m])
    if fmt == "json":
        return _json({
            "form": "partition",
            "tie_rule": spec.form.tie_rule.value,
            "count": len(m),
            "coalitions": [{"active": _ids(ec.active, t),
                            "partition": [_ids(b, t) for b in ec.partition.blocks]}
                           for ec in m],
        })
    if fmt == "csv":
        return _csv(["active", "partition"], (
            [";".join(_ids(ec.active, t)),
             "|".join(";".join(_ids(b, t)) for b in ec.partition.blocks)] for ec in m))
    rows = [[fmt_coalition(ec.active, t), fmt_partition(ec.partition, t)] for ec in m]
    return _text_table(["Active coalition", "Partition"], rows) + f"\n{len(m)} minimal winning embedded coalitions\n"


def cmd_ties(spec: GameSpec, fmt: str = "table", capacity: int | None = None) -> str:
    """Partitions whose largest block weight is shared by two or more blocks."""
    _check_format(fmt)
    if not spec.is_partition:
        raise FormMismatchError("tie reports need a partition-form game")
    t = spec.table
    ties = tied_partitions(spec, capacity)
    votes = spec.form.tie_rule is TieRule.VOTES

    def winner(tp):
        return ", ".join(fmt_coalition(b, t) for b in tp.winners) or "none"

    if fmt == "json":
        return _json({
            "tie_rule": spec.form.tie_rule.value,
            "count": len(ties),
            "partitions": [{"blocks": [_ids(b, t) for b in tp.blocks],
                            "seats": list(tp.block_weights),
                            "winners": [_ids(b, t) for b in tp.winners]} for tp in ties],
        })
    if fmt == "csv":
        return _csv(["partition", "seats", "winners"], (
            ["|".join(";".join(_ids(b, t)) for b in tp.blocks),
             ";".join(map(str, tp.block_weights)),
             "|".join(";".join(_ids(b, t)) for b in tp.winners)] for tp in ties))
    width = max((len(tp.blocks) for tp in ties), default=0)
    headers = ["Partition"] + [f"Seats P{k + 1}" for k in range(width)]
    if votes:
        headers.append("Winner")
    rows = []
    for tp in ties:
        seats = [str(x) for x in tp.block_weights] + ["--"] * (width - len(tp.blocks))
        row = [fmt_partition(tp.partition, t, tp.blocks)] + seats
        if votes:
            row.append(winner(tp))
        rows.append(row)
    return _text_table(headers, rows) + f"\n{len(ties)} tied partitions\n"


def cmd_indices(spec: GameSpec, kinds: Sequence[str] = INDEX_KINDS, fmt: str = "table",
                capacity: int | None = None) -> str:
    """One row per index, one column per player, rounded to four places."""
    _check_format(fmt)
    t = spec.table
    m = minimal_winning_set(spec, capacity)
    vecs = compute_indices(spec, kinds, m=m)
    if fmt == "json":
        return _json({
            "form": "characteristic" if spec.is_characteristic else "partition",
            "players": list(t.ids),
            "minimal_winning_count": len(m),
            "participation": dict(zip(t.ids, participation_counts(m))),
            "indices": {k: {pid: _exact(x) for pid, x in zip(t.ids, v)} for k, v in vecs.items()},
        })
    if fmt == "csv":
        return _csv(["index", "player", "num", "den", "rounded"], (
            [k, pid, x.numerator, x.denominator, round_half_up(x)]
            for k, v in vecs.items() for pid, x in zip(t.ids, v)))
    rows = [[k.upper()] + list(v.rounded()) for k, v in vecs.items()]
    return _text_table(["Index"] + list(t.ids), rows)


def cmd_compare(labels: Sequence[str], kinds: Sequence[str] = INDEX_KINDS,
                fmt: str = "table", capacity: int | None = None) -> str:
    """Players by periods for the selected indices, with change from the previous period."""
    _check_format(fmt)
    if len(labels) < 2:
        raise ConfigurationError("compare needs at least two fixture labels")
    periods = []
    players: list[str] = []
    for label in labels:
        spec = load_fixture(label).spec
        vecs = compute_indices(spec, kinds, capacity)
        periods.append((label, {k: dict(zip(spec.table.ids, v)) for k, v in vecs.items()}))
        players.extend(p for p in spec.table.ids if p not in players)

    def cell(label_vals, k, p):
        return label_vals[k].get(p)

    if fmt == "json":
        return _json({
            "periods": list(labels),
            "rows": [{"player": p, "index": k,
                      "values": [None if (x := cell(vals, k, p)) is None else _exact(x)
                                 for _, vals in periods]}
                     for p in players for k in kinds],
        })
    if fmt == "csv":
        out = []
        for p in players:
            for k in kinds:
                prev = None
                for label, vals in periods:
                    x = cell(vals, k, p)
                    delta = "" if x is None or prev is None else _signed(x - prev)
                    out.append([p, k, label, "" if x is None else x.numerator,
                                "" if x is None else x.denominator,
                                "" if x is None else round_half_up(x), delta])
                    prev = x
        return _csv(["player", "index", "period", "num", "den", "rounded", "delta"], out)
    rows = []
    for p in players:
        for k in kinds:
            row = [p, k.upper()]
            prev = None
            for _, vals in periods:
                x = cell(vals, k, p)
                if x is None:
                    row.append("--")
                elif prev is None:
                    row.append(round_half_up(x))
                else:
                    row.append(f"{round_half_up(x)} ({_signed(x - prev)})")
                prev = x
            rows.append(row)
    return _text_table(["Player", "Index"] + list(labels), rows)


def _signed(d: Fraction) -> str:
    if d < 0:
        return "-" + round_half_up(-d)
    return "+" + round_half_up(d)


def cmd_validate(spec: GameSpec) -> str:
    t = spec.table
    lines = [f"players: {t.n}", f"total weight: {t.total_weight}"]
    if spec.is_characteristic:
        lines.append(f"form: characteristic, quota {spec.form.quota}")
    else:
        b = bell_numbers(t.n + 1)
        lines.append(f"form: partition, tie rule {spec.form.tie_rule.value}")
        lines.append(f"partitions: {b[t.n]}, embedded coalitions: {b[t.n + 1] - b[t.n]}")
    lines.append(f"votes: {'yes' if t.has_votes else 'no'}")
    return "\n".join(lines) + "\n"
