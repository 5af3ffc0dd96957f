"""
Brute-force search as an independent oracle
===========================================

For tiny palettes the space of collections can be searched outright:
enumerate every intersecting family over [c], then grow the largest
cross-disjoint set of them. The search knows nothing about the halved
pair construction, so agreement between the two is real evidence.
"""

from colred import (
    construction_lower_bound,
    enumerate_intersecting_families,
    exists_algorithm,
    max_colourful,
)

# over [2] there are exactly 5 intersecting families; over [3], 39
for c in (2, 3):
    fams = enumerate_intersecting_families(c)
    print(f"c={c}: {len(fams)} intersecting families")
print()

# exhaustive answer at c = 3: the largest colourful collection has
# exactly 4 families. so one round can take 4 colours to 3 but never 5.
res = max_colourful(3)
print(f"max colourful collection over [3]: size {res.best_size}"
      f" (exhaustive: {res.exhaustive}, {res.nodes_expanded} nodes)")
print("witness families:")
for i in range(1, res.witness.size + 1):
    print(f"  {res.witness.family(i)}")
print()

print(f"one-round 4 -> 3 possible: {exists_algorithm(4, 3)}")
print(f"one-round 5 -> 3 possible: {exists_algorithm(5, 3)}")
print()

# beyond c = 5 enumeration is hopeless, but the construction still
# gives certified lower bounds
for c in (4, 6, 12):
    print(f"c={c}: construction gives a collection of size"
          f" {construction_lower_bound(c)}")
