"""
Seat changes from June to December 2021
=======================================

"""

from pfpower import minimal_winning_embedded_coalitions
from pfpower.commands import cmd_compare, fmt_coalition, fmt_partition
from pfpower.fixtures import BENCH_PERIODS, load_fixture


def named_set(label):
    spec = load_fixture(label).spec
    t = spec.table
    return spec, {(fmt_coalition(e.active, t), fmt_partition(e.partition, t))
                  for e in minimal_winning_embedded_coalitions(spec)}


# bench sizes per period
for label in BENCH_PERIODS:
    t = load_fixture(label).spec.table
    print(f"{label:11s}", " ".join(f"{i}={w}" for i, w in zip(t.ids, t.weights)))

# what enters and leaves the minimal winning set between consecutive periods
prev = None
for label in BENCH_PERIODS:
    spec, cur = named_set(label)
    if prev is not None:
        print(f"\n{label}: {len(cur)} coalitions")
        for a, p in sorted(cur - prev):
            print("  +", a, "in", p)
        for a, p in sorted(prev - cur):
            print("  -", a, "in", p)
    else:
        print(f"\n{label}: {len(cur)} coalitions")
    prev = cur

# the whole index table with deltas
print()
print(cmd_compare(list(BENCH_PERIODS), ["dp", "pg", "cm", "hcm"], "table"))
