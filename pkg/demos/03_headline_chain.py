"""
Three rounds from 10^100 colours to 3
=====================================

The headline run: nodes start with arbitrary distinct identifiers up to
10^100, and three synchronous rounds of collection-compiled rules bring
the palette down to three colours. Round one uses construct(12), whose
2^462 + 12 families cover any palette up to 10^139; round two uses
construct(4); round three the base collection over [3].
"""

import random

from colred import ColouredGraph, default_chain, run_chain, validate

n, k = 2000, 10**100

# distinct random identifiers stand in for whatever unique ids a real
# network would carry
rng = random.Random(7)
ids = []
seen = set()
while len(ids) < n:
    v = rng.randrange(1, k + 1)
    if v not in seen:
        seen.add(v)
        ids.append(v)

g = ColouredGraph("cycle", ids, k)
print(f"cycle on {n} nodes, palette [10^100]")
print(f"first three ids: {ids[0]}, {ids[1]}, {ids[2]}")
print()

final, trace = run_chain(g, default_chain())
for i, rec in enumerate(trace.rounds, start=1):
    print(f"round {i}: {rec.stage}: palette {rec.k_in} -> {rec.k_out}")
print()
print("palettes:", trace.palette_line(k))
print(f"final colouring proper: {validate(final) == []}")
print(f"colours used: {sorted(set(final.colours))}")
