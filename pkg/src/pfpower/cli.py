"""Command-line entry point.

Exit codes: 0 on success, 1 on other errors, 2 on validation or usage
errors, 3 when the player count exceeds the enumeration capacity.
"""

from __future__ import annotations

import argparse
import sys

from . import commands
from .documents import ParseError, load_spec, spec_from_csv
from .errors import CapacityError, ConfigurationError, PfpowerError, ValidationError
from .fixtures import LABELS, UnknownFixtureError, load_fixture
from .indices import INDEX_KINDS
from .model import MAX_CAPACITY, GameSpec, PartitionForm, TieRule

EXIT_VALIDATION = 2
EXIT_CAPACITY = 3


def _common(parser: argparse.ArgumentParser, source: bool = True) -> None:
    parser.add_argument("--format", choices=commands.FORMATS, default="table")
    parser.add_argument("--capacity", type=int, default=None,
                        help=f"raise the player limit (at most {MAX_CAPACITY})")
    if source:
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--fixture", choices=LABELS)
        group.add_argument("--spec", metavar="PATH",
                           help="game-spec JSON, or a players CSV (id,weight,votes)")
        parser.add_argument("--tie-rule", choices=[r.value for r in TieRule],
                            help="override the tie rule of a partition-form game")
        parser.add_argument("--quota", type=int,
                            help="characteristic-form quota for a players CSV")


def _indices_arg(value: str) -> list[str]:
    kinds = [k.strip().lower() for k in value.split(",") if k.strip()]
    if kinds == ["all"]:
        return list(INDEX_KINDS)
    bad = [k for k in kinds if k not in INDEX_KINDS]
    if bad or not kinds:
        raise argparse.ArgumentTypeError(f"indices must be drawn from {','.join(INDEX_KINDS)}")
    return kinds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfpower",
        description="Minimal winning embedded coalitions and power indices "
                    "for weighted majority games.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("mwec", help="list minimal winning (embedded) coalitions")
    _common(p)
    p = sub.add_parser("ties", help="list partitions with a tie at the top")
    _common(p)
    p = sub.add_parser("indices", help="compute power indices")
    _common(p)
    p.add_argument("--indices", type=_indices_arg, default=list(INDEX_KINDS),
                   help="comma-separated subset of dp,pg,cm,hcm (default all)")
    p = sub.add_parser("compare", help="compare bundled periods side by side")
    _common(p, source=False)
    p.add_argument("labels", nargs="+", choices=LABELS, metavar="LABEL")
    p.add_argument("--indices", type=_indices_arg, default=list(INDEX_KINDS))
    p = sub.add_parser("validate", help="check a game spec and summarise it")
    _common(p)
    return parser


def _resolve_spec(args) -> GameSpec:
    if args.fixture:
        spec = load_fixture(args.fixture).spec
    elif args.spec.lower().endswith(".csv"):
        spec = spec_from_csv(args.spec, quota=args.quota, tie_rule=args.tie_rule,
                             capacity=args.capacity)
    else:
        spec = load_spec(args.spec, capacity=args.capacity)
    if args.tie_rule:
        if not spec.is_partition:
            raise ConfigurationError("--tie-rule applies to partition-form games only")
        spec = GameSpec(spec.table, PartitionForm(TieRule(args.tie_rule)))
    return spec


def run(argv=None) -> str:
    """Parse ``argv`` and return the rendered output; errors propagate."""
    args = build_parser().parse_args(argv)
    if args.command == "compare":
        if len(args.labels) < 2:
            raise ConfigurationError("compare needs at least two fixture labels")
        return commands.cmd_compare(args.labels, args.indices, args.format, args.capacity)
    spec = _resolve_spec(args)
    if args.command == "mwec":
        return commands.cmd_mwec(spec, args.format, args.capacity)
    if args.command == "ties":
        return commands.cmd_ties(spec, args.format, args.capacity)
    if args.command == "indices":
        return commands.cmd_indices(spec, args.indices, args.format, args.capacity)
    return commands.cmd_validate(spec)


def main(argv=None) -> int:
    try:
        out = run(argv)
    except CapacityError as exc:
        print(f"pfpower: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValidationError, ParseError, ConfigurationError, UnknownFixtureError) as exc:
        print(f"pfpower: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PfpowerError as exc:
        print(f"pfpower: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pfpower: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
