"""
Scanning for leading terms
==========================

For each degree, enumerate every relation of leading length 4, reduce, and
list the pivots that no shorter condition explains.  Each one is matched
against the list of four-part conditions.
"""

import time

from a22lead import scan
from a22lead.vertexrel import format_partition

t0 = time.perf_counter()
reports = scan(range(12, 28), [4], jobs=2)
print(f"{len(reports)} cells in {time.perf_counter() - t0:.1f}s\n")

for r in reports:
    new = [format_partition(p) for p in r.new_pivots]
    matched = {format_partition(p): ids for p, ids in r.matched_conditions.items() if p in r.new_pivots}
    print(f"degree {r.degree:2d}: {r.n_relations:3d} relations, {r.n_columns:3d} columns, rank {len(r.pivots):3d}  new {new}  {matched}")

# length 3 gives back the three-part conditions, one residue class at a time
print()
for r in scan(range(6, 16), [3]):
    print(r.degree, {format_partition(p): ids for p, ids in r.matched_conditions.items()})
