"""
Colourful collections from the ground up
========================================

A colourful collection over the palette [c] is an indexed list of set
families with two properties: inside each family every two subsets share
a colour, and between any two distinct families some pair of subsets is
disjoint. These two facts are exactly what a one-round colour reduction
rule needs, so the size of the largest collection over [c] is the
largest palette a single round can shrink to c.
"""

from colred import base_collection_c3, construct, collection_sizes, is_colourful

# the hand-built collection over three colours: it has four families,
# so four input colours can be reduced to three in one round
base = base_collection_c3()
print("base collection over [3]:")
for i in range(1, base.size + 1):
    print(f"  family {i}: {base.family(i)}")

report = is_colourful(base)
print(f"colourful: {report.ok} ({report.checked_pairs} cross pairs checked)")
print()

# the general construction pairs up complementary halves of [c].
# at c = 4 it yields 12 families: every binary choice over the three
# complement pairs, plus one singleton family per colour.
coll = construct(4)
print(f"construct(4): {coll.size} families")
for i in (1, 5, 12):
    print(f"  family {i}: {coll.family(i)}")
print(f"colourful: {is_colourful(coll).ok}")
print()

# sizes explode quickly: with c = 12 there are 924 complementary pairs
# of 6-subsets, giving 2^462 + 12 families. the collection object stays
# lazy, so asking for any single family is still instant.
s, size = collection_sizes(12)
big = construct(12)
print(f"construct(12): {s} halves containing colour 1, size 2^{s // 2} + 12")
print(f"  exact size: {size}")
print(f"  family 3:   {big.family(3)}")
print(f"  family {10**100} has {len(big.family(10**100).masks)} subsets")
