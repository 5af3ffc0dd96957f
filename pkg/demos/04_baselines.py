"""
Two classic baselines for comparison
====================================

Two standard one-round-per-step reducers, useful as yardsticks for the
collection-compiled rules. The naive reducer retires one colour per
round, so 6 colours take three rounds to reach 3. Cole-Vishkin works on
directed paths and crushes b-bit colours to fewer than 2b values in a
single round, but needs the orientation and never gets below 6 on its
own.
"""

from colred import cole_vishkin_step, naive_step, random_proper, validate

# naive reduction: everyone holding the top colour k repaints with the
# smallest colour in {1,2,3} not used by a neighbour
g = random_proper("path", 10**4, 6, seed=1)
print(f"naive reduction, path on {g.n} nodes, palette [{g.k}]")
while g.k > 3:
    g = naive_step(g)
    print(f"  round -> palette [{g.k}], proper: {validate(g) == []}")
print()

# cole-vishkin: compare your colour with your predecessor's bit by bit,
# send the index of the first difference plus your bit at it. 16-bit
# colours become values below 32 after one round.
b = 16
g = random_proper("path", 10**4, 2**b, seed=2, oriented=True)
print(f"cole-vishkin, directed path on {g.n} nodes, {b}-bit colours")
out = cole_vishkin_step(g, b)
print(f"  one round -> palette [{out.k}], proper: {validate(out) == []}")
print(f"  largest value used: {max(out.colours)} (bound {2 * b})")
