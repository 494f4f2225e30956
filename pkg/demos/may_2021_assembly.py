"""
Ecuador National Assembly, May 2021
===================================

Six blocs, ties settled by the February 2021 vote totals.
"""

from pfpower import minimal_winning_embedded_coalitions, participation_counts
from pfpower.commands import cmd_indices, cmd_ties, fmt_coalition, fmt_partition
from pfpower.fixtures import load_fixture

fx = load_fixture("may_2021")
spec = fx.spec
t = spec.table
print(fx.title)
for p in t.players:
    print(f"  {p.id:5s} {p.weight:3d} seats {p.votes:>9,d} votes")

# every minimal winning embedded coalition
m = minimal_winning_embedded_coalitions(spec)
for e in m:
    print(f"{fmt_coalition(e.active, t):24s} {fmt_partition(e.partition, t)}")
print(len(m), "minimal winning embedded coalitions")

# how often each bloc shows up in them
print(dict(zip(t.ids, participation_counts(m))))

# partitions where two blocks tie for the most seats
print(cmd_ties(spec, "table"))

# power
print(cmd_indices(spec, ["dp", "pg", "cm", "hcm"], "table"))

# the published list has one extra coalition that contains another one on it
published = fx.expected["mwec"]
print(len(published), "published entries;", len(m), "found")
