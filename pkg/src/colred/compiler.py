"""Compiling colourful collections into one-round colour reduction rules.

A colourful collection of size k over [c] defines a rule A(x, y, z) that a
node of colour y applies after seeing only its neighbours' colours x and z.
Every edge between colours x and y resolves, deterministically and from the
two colours alone, to a disjoint pair of subsets, one from family(x) and
one from family(y); the node collects the subset handed to it by each of
its two edges and moves to the smallest colour in their intersection.

Both endpoints of an edge compute the same pair, so A(x, y, z) = A(z, y, x)
and one communication round suffices. The two subsets across an edge are
disjoint, so neighbouring nodes can never pick the same new colour. The
intersection at a node is non-empty because its family is intersecting.

Rules exist in two forms: `ImplicitAlgorithm` evaluates A(x, y, z) on
demand straight from the collection (the only option when the collection
has 2**462 + 12 families), and `AlgorithmTable` is the full function table
for small k, the form that `check_symmetry`, `check_properness` and
`extract` operate on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .core import (
    Collection,
    ConstructCollection,
    ExplicitCollection,
    Family,
    LazyCollection,
    NotColourfulError,
    Subset,
    _first_disjoint_cross_masks,
    is_colourful,
    sample_colourful,
)

#: Refuse to tabulate input palettes larger than this without an override.
DEFAULT_TABULATION_BOUND = 64


class AlgorithmCheckError(ValueError):
    """A table failed a required symmetry or properness check."""

    def __init__(self, check: str, counterexample):
        self.check = check
        self.counterexample = counterexample
        super().__init__(f"table fails the {check} check at {counterexample}")


def _construct_edge_pair(coll: ConstructCollection, lo: int, hi: int):
    """Disjoint pair for a halved-pair collection without touching families.

    Matches the generic sorted scan exactly; the correspondence is pinned
    down by an exhaustive test at c = 4. Three cases by which side of the
    singleton/pair-family boundary the two indices fall on.
    """
    c = coll.c
    if hi <= c:
        return 1 << (lo - 1), 1 << (hi - 1)
    if lo <= c:
        # Singleton {lo} against a pair family: first member subset that
        # avoids colour lo. Candidates are the halves the family picked
        # plus the one augmenting (c-1)-subset missing lo.
        m = 1 << (lo - 1)
        o = hi - c - 1
        aug = coll.full_mask ^ m
        for code, j, which in coll.half_order:
            if code > aug:
                break
            if not code & m and (o >> j) & 1 == which:
                return m, code
        return m, aug
    # Two pair families: disjoint cross pairs are exactly the complement
    # pairs they split differently, so take the first differing pair in
    # the lower family's subset order.
    o1 = lo - c - 1
    o2 = hi - c - 1
    diff = o1 ^ o2
    for code, j, which in coll.half_order:
        if diff >> j & 1 and (o1 >> j) & 1 == which:
            partner = coll.pair_comps[j] if which == 0 else coll.pair_reps[j]
            return code, partner
    raise NotColourfulError(f"families {lo} and {hi} have no disjoint cross pair")


def _edge_pair_masks(coll: Collection, lo: int, hi: int) -> tuple[int, int]:
    if isinstance(coll, ConstructCollection):
        return _construct_edge_pair(coll, lo, hi)
    found = _first_disjoint_cross_masks(coll.family(lo).masks, coll.family(hi).masks)
    if found is None:
        raise NotColourfulError(
            f"families {lo} and {hi} have no disjoint cross pair; "
            "the collection is not colourful"
        )
    return found


def _check_edge_args(coll: Collection, x: int, y: int) -> None:
    if x == y:
        raise ValueError(f"edge endpoints must have different colours, got {x}, {y}")
    if not 1 <= x <= coll.size or not 1 <= y <= coll.size:
        raise ValueError(f"colours {x}, {y} outside the input palette [{coll.size}]")


def edge_label_pair(x: int, y: int, a: Collection) -> tuple[Subset, Subset]:
    """The disjoint subset pair for an edge between colours x and y.

    Returns (X, Y) with X from family(x), Y from family(y), X disjoint
    from Y. The pair is a function of the unordered edge: the subsets are
    scanned in code order starting from the smaller colour's family, and
    the first disjoint pair wins, so both endpoints agree on it.
    """
    _check_edge_args(a, x, y)
    lo, hi = (x, y) if x < y else (y, x)
    p, q = _edge_pair_masks(a, lo, hi)
    return (Subset(p), Subset(q)) if x == lo else (Subset(q), Subset(p))


def new_colour(x: int, y: int, z: int, a: Collection) -> int:
    """A(x, y, z): the new colour of a y-coloured node with neighbours x, z.

    Takes the y-side subset of each incident edge and returns the smallest
    shared colour. Empty intersections mean family(y) is not intersecting.
    """
    _check_edge_args(a, x, y)
    _check_edge_args(a, z, y)
    lo, hi = (x, y) if x < y else (y, x)
    p, q = _edge_pair_masks(a, lo, hi)
    from_x = q if y == hi else p
    lo, hi = (z, y) if z < y else (y, z)
    p, q = _edge_pair_masks(a, lo, hi)
    from_z = q if y == hi else p
    meet = from_x & from_z
    if not meet:
        raise NotColourfulError(
            f"family {y} handed disjoint subsets to its two edges; "
            "it is not an intersecting family"
        )
    return (meet & -meet).bit_length()


class ImplicitAlgorithm:
    """One-round rule evaluated directly from a colourful collection.

    Input palette [k] with k the collection size, output palette [c]. The
    collection's colourfulness is what makes the rule total and proper;
    `verify` controls how much of it is checked up front:

    * "auto" (default): halved-pair collections are trusted, explicit
      collections are fully checked, other lazy collections spot-checked;
    * True: full check (refused for oversized lazy collections);
    * False: trust the caller.
    """

    __slots__ = ("collection", "label")

    def __init__(self, collection: Collection, *, verify="auto"):
        if verify == "auto":
            if isinstance(collection, ConstructCollection):
                report = None
            elif isinstance(collection, LazyCollection):
                report = sample_colourful(collection)
            else:
                report = is_colourful(collection)
        elif verify:
            report = is_colourful(collection)
        else:
            report = None
        if report is not None and not report.ok:
            raise NotColourfulError(
                f"collection {collection.label} is not colourful: {report.detail}"
            )
        self.collection = collection
        self.label = collection.label

    @property
    def k(self) -> int:
        return self.collection.size

    @property
    def c(self) -> int:
        return self.collection.c

    def __call__(self, x: int, y: int, z: int) -> int:
        return new_colour(x, y, z, self.collection)

    def __repr__(self) -> str:
        return f"<ImplicitAlgorithm {self.label}: {self.k} -> {self.c}>"


@dataclass(frozen=True, eq=True)
class AlgorithmTable:
    """Full table of a one-round rule: entries (x, y, z) -> colour in [c].

    The domain is every triple over [k] with x != y and z != y (x = z is a
    legal sight for a middle node). Construction checks the table is total
    on exactly that domain with all values in range.
    """

    k: int
    c: int
    entries: Mapping[tuple[int, int, int], int]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        k, c = self.k, self.c
        if k < 2 or c < 1:
            raise ValueError(f"need k >= 2 and c >= 1, got k={k}, c={c}")
        expected = k * (k - 1) * (k - 1)
        if len(self.entries) != expected:
            raise ValueError(
                f"table has {len(self.entries)} entries, expected {expected} "
                f"for k={k}"
            )
        for (x, y, z), v in self.entries.items():
            if not (1 <= x <= k and 1 <= y <= k and 1 <= z <= k):
                raise ValueError(f"entry {(x, y, z)} outside [{k}]^3")
            if x == y or z == y:
                raise ValueError(f"entry {(x, y, z)} violates x != y != z")
            if not 1 <= v <= c:
                raise ValueError(f"entry {(x, y, z)} -> {v} outside [{c}]")

    def __call__(self, x: int, y: int, z: int) -> int:
        try:
            return self.entries[(x, y, z)]
        except KeyError:
            raise ValueError(f"triple {(x, y, z)} outside the table domain") from None

    def triples(self):
        """All valid (x, y, z) in canonical lexicographic order."""
        k = self.k
        for x in range(1, k + 1):
            for y in range(1, k + 1):
                if y == x:
                    continue
                for z in range(1, k + 1):
                    if z != y:
                        yield (x, y, z)

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"<AlgorithmTable{tag}: {self.k} -> {self.c}>"


def tabulate(
    alg: ImplicitAlgorithm | Collection, k: int, *, bound: int = DEFAULT_TABULATION_BOUND
) -> AlgorithmTable:
    """Materialize the rule as a full table on input palette [k].

    Accepts the collection itself or an already-wrapped rule; k may be any
    size up to the collection's (a rule for more colours restricts to
    fewer). Guarded by `bound` since tables grow as k^3.
    """
    if isinstance(alg, Collection):
        alg = ImplicitAlgorithm(alg)
    if k > alg.k:
        raise ValueError(f"k={k} exceeds the rule's input palette [{alg.k}]")
    if k < 2:
        raise ValueError(f"tables need k >= 2, got {k}")
    if k > bound:
        raise ValueError(f"k={k} exceeds the tabulation bound {bound}")
    entries = {}
    for y in range(1, k + 1):
        for x in range(1, k + 1):
            if x == y:
                continue
            for z in range(1, k + 1):
                if z != y:
                    entries[(x, y, z)] = alg(x, y, z)
    return AlgorithmTable(k=k, c=alg.c, entries=entries, label=alg.label)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a table check; truthy iff the property holds everywhere."""

    ok: bool
    counterexample: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_symmetry(t: AlgorithmTable) -> CheckResult:
    """Does A(x, y, z) = A(z, y, x) hold for every valid triple?"""
    for (x, y, z), v in t.entries.items():
        if x < z and t.entries[(z, y, x)] != v:
            return CheckResult(
                ok=False,
                counterexample=(x, y, z),
                detail=f"A{(x, y, z)} = {v} but A{(z, y, x)} = {t.entries[(z, y, x)]}",
            )
    return CheckResult(ok=True)


def check_properness(t: AlgorithmTable) -> CheckResult:
    """Do adjacent nodes always end up with different colours?

    Checks A(x1, x2, x3) != A(x2, x3, x4) over every path x1 x2 x3 x4 with
    consecutive colours distinct, which is exactly the condition for the
    output colouring to be proper on paths and cycles.
    """
    k = t.k
    e = t.entries
    for x2 in range(1, k + 1):
        for x3 in range(1, k + 1):
            if x3 == x2:
                continue
            for x1 in range(1, k + 1):
                if x1 == x2:
                    continue
                left = e[(x1, x2, x3)]
                for x4 in range(1, k + 1):
                    if x4 != x3 and e[(x2, x3, x4)] == left:
                        return CheckResult(
                            ok=False,
                            counterexample=(x1, x2, x3, x4),
                            detail=(
                                f"A{(x1, x2, x3)} = A{(x2, x3, x4)} = {left}: "
                                "adjacent outputs collide"
                            ),
                        )
    return CheckResult(ok=True)


def extract(t: AlgorithmTable) -> ExplicitCollection:
    """Recover a colourful collection from any symmetric proper rule.

    Family y collects, for each other colour x, the subset of outputs the
    rule can produce at a y-coloured node whose one neighbour is x; the
    families are returned in colour order 1..k. Symmetry and properness
    are verified first since they are exactly what makes the result
    colourful.
    """
    sym = check_symmetry(t)
    if not sym:
        raise AlgorithmCheckError("symmetry", sym.counterexample)
    prop = check_properness(t)
    if not prop:
        raise AlgorithmCheckError("properness", prop.counterexample)
    k = t.k
    families = []
    for y in range(1, k + 1):
        masks = set()
        for x in range(1, k + 1):
            if x == y:
                continue
            mask = 0
            for z in range(1, k + 1):
                if z != y:
                    mask |= 1 << (t.entries[(x, y, z)] - 1)
            masks.add(mask)
        families.append(Family(masks))
    label = f"extract({t.label})" if t.label else "extracted"
    return ExplicitCollection(t.c, families, label=label)


def example_4to3() -> AlgorithmTable:
    """The textbook one-round rule from 4 to 3 colours.

    Nodes already coloured in [3] keep their colour; a node of colour 4
    moves to the smallest colour in [3] that neither neighbour has.
    """
    entries = {}
    for y in range(1, 5):
        for x in range(1, 5):
            if x == y:
                continue
            for z in range(1, 5):
                if z != y:
                    entries[(x, y, z)] = y if y <= 3 else min({1, 2, 3} - {x, z})
    return AlgorithmTable(k=4, c=3, entries=entries, label="4to3")
