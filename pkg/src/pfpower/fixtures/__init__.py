"""Bundled National Assembly of Ecuador games, May to December 2021.

Each fixture holds the game-spec document for one period together with the
published figures for it: the number of minimal winning embedded coalitions,
the tied partitions, the power-index table and, for May and June, the full
list of minimal winning embedded coalitions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Any

from ..errors import PfpowerError
from ..documents import spec_from_document
from ..model import GameSpec

LABELS = ("may_2021", "jun_2021", "jul_2021", "oct12_2021", "oct26_2021", "dec_2021")
BENCH_PERIODS = LABELS[1:]


class UnknownFixtureError(PfpowerError, KeyError):
    pass


@dataclass(frozen=True)
class PeriodFixture:
    label: str
    title: str
    document: dict
    expected: dict

    @property
    def spec(self) -> GameSpec:
        return spec_from_document(self.document)


def load_fixture(label: str) -> PeriodFixture:
    if label not in LABELS:
        raise UnknownFixtureError(f"unknown fixture {label!r}; available: {', '.join(LABELS)}")
    raw: dict[str, Any] = json.loads(
        resources.files(__name__).joinpath(f"{label}.json").read_text(encoding="utf-8"))
    return PeriodFixture(raw["label"], raw["title"], raw["spec"], raw["expected"])


def fixture_spec(label: str) -> GameSpec:
    return load_fixture(label).spec
