"""
Embedded coalitions and the inclusion order
===========================================

"""

from pfpower import (
    EmbeddedCoalition,
    enumerate_embedded_coalitions,
    enumerate_partitions,
    is_ec_subset,
)
from pfpower.enumeration import count_embedded_coalitions
from pfpower.games import lower_covers
from pfpower.model import members

# three players give five partitions and ten embedded coalitions
for p in enumerate_partitions(3):
    print(p.rgs(), [members(b) for b in p.blocks])
print(count_embedded_coalitions(3), "embedded coalitions of 3 players")

# an embedded coalition is an active block together with the rest of the partition
small = EmbeddedCoalition.from_outside(4, [0], [[1, 2, 3]])
big = EmbeddedCoalition.from_outside(4, [0, 1], [[2], [3]])

# growing the active block and splitting the outside both move upwards
print(is_ec_subset(small, big), is_ec_subset(big, small))

# the immediate predecessors of an embedded coalition
for lo in lower_covers(big):
    print(members(lo.active), [members(b) for b in lo.partition.blocks])

# the grand coalition sits above everything
grand = EmbeddedCoalition.from_outside(4, [0, 1, 2, 3], [])
print(all(is_ec_subset(x, grand) for x in enumerate_embedded_coalitions(4)))
