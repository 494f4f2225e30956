"""
Same seats, two game models
===========================

A weighted majority game decides by quota alone. Under the plurality rule
the outcome depends on how the remaining players group themselves.
"""

from pfpower import GameSpec, TieRule, minimal_winning_coalitions
from pfpower import minimal_winning_embedded_coalitions
from pfpower.indices import cm, dp, hcm, pg

weights = [4, 3, 2, 2]
ids = ["a", "b", "c", "d"]

quota = GameSpec.characteristic(6, weights, ids=ids)
m = minimal_winning_coalitions(quota)
print("quota 6:", [quota.table.names(s) for s in m])

plural = GameSpec.partition(weights, TieRule.TIES_LOSE, ids=ids)
pm = minimal_winning_embedded_coalitions(plural)
for e in pm:
    t = plural.table
    print(t.names(e.active), "with", [t.names(b) for b in e.partition.outside(e.active)])

# the four indices, side by side
for name, mm, spec in (("quota", m, quota), ("plurality", pm, plural)):
    w = spec.table.weights
    for f in (dp(mm), pg(mm), cm(mm, w), hcm(mm, w)):
        print(f"{name:9s} {f.kind:3s}", " ".join(f.rounded()))

# changing the tie rule changes which embedded coalitions win
for rule in TieRule:
    if rule is TieRule.VOTES:
        spec = GameSpec.partition(weights, rule, votes=[40, 35, 30, 20], ids=ids)
    else:
        spec = GameSpec.partition(weights, rule, ids=ids)
    print(rule.value, len(minimal_winning_embedded_coalitions(spec)))
