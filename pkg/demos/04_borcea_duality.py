"""
The A1 level 2 side
===================

Partitions with the eleven level 2 difference conditions of A1(1), read
with the (2,1) grading, are counted by the same product as the level 5
A2(2) quotient character.
"""

from a22lead import borcea_compare, builtin_condition_set
from a22lead.partitions import enumerate_partitions, format_condition_set

cs = builtin_condition_set("a11-level2")
print(format_condition_set(cs))

# an occurrence may use any parts of mu, not only neighbouring ones
print(sorted(enumerate_partitions(cs, 13, weight=13)))

rows = borcea_compare(50)
print("n   A1  chi")
for n, a, c in rows[::5]:
    print(f"{n:2d} {a:5d} {c:5d}")
print("all equal:", all(a == c for _, a, c in rows))
