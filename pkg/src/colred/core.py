"""Subsets, set families, and indexed collections for one-round colour reduction.

Colours are positive integers; the target palette [c] is {1, ..., c}. A
subset of [c] is stored as a bitmask (bit i-1 set means colour i is
present), a family is a finite set of such subsets, and a collection
assigns one family to every input colour, so a collection of size k is a
labelling of the input palette [k].

A collection is *colourful* when

* every family is intersecting: any two of its subsets share a colour, and
* any two distinct families contain a cross pair of disjoint subsets.

Colourful collections are exactly the labellings that compile into
one-round colour reduction rules on paths and cycles (`colred.compiler`).
The halved-pair construction `construct` yields colourful collections of
size 2**(s//2) + c over [c] for even c, with s = C(c, c/2). At c = 12 that
is 2**462 + 12 families, far beyond anything that fits in memory, so large
collections stay lazy: families are generated from the index on demand,
`is_colourful` refuses to materialize them, and `sample_colourful`
spot-checks them instead.

Everything here is an immutable value; all operations are safe to call
concurrently on shared data.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

#: Collections with more families than this are treated as lazy-only.
DEFAULT_MATERIALIZATION_BOUND = 1 << 20


class NotColourfulError(ValueError):
    """An operation needed colourful structure the collection lacks."""


class MaterializationLimitError(ValueError):
    """A lazy collection is too large to materialize."""


def _colour_list(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class Subset:
    """Non-empty subset of a palette, stored as a bitmask.

    Bit i-1 of `mask` corresponds to colour i. The integer value of the
    mask (`code`) is the canonical ordering key; `order=True` sorts
    subsets by it.
    """

    mask: int

    def __post_init__(self) -> None:
        if self.mask <= 0:
            raise ValueError("subsets must be non-empty")

    @classmethod
    def of(cls, *colours: int) -> "Subset":
        mask = 0
        for colour in colours:
            if colour < 1:
                raise ValueError(f"colours are positive integers, got {colour}")
            mask |= 1 << (colour - 1)
        return cls(mask)

    @property
    def code(self) -> int:
        return self.mask

    @property
    def colours(self) -> tuple[int, ...]:
        return _colour_list(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def max_colour(self) -> int:
        return self.mask.bit_length()

    def __contains__(self, colour: int) -> bool:
        return colour >= 1 and bool(self.mask >> (colour - 1) & 1)

    def intersects(self, other: "Subset") -> bool:
        return bool(self.mask & other.mask)

    def isdisjoint(self, other: "Subset") -> bool:
        return not self.mask & other.mask

    def complement(self, c: int) -> "Subset":
        if self.mask >> c:
            raise ValueError(f"subset {self.colours} is not over [{c}]")
        full = (1 << c) - 1
        return Subset(full ^ self.mask)

    def compact(self) -> str:
        colours = self.colours
        if colours[-1] <= 9:
            return "".join(str(colour) for colour in colours)
        return ",".join(str(colour) for colour in colours)

    def __repr__(self) -> str:
        return f"Subset.of({', '.join(str(colour) for colour in self.colours)})"


class Family:
    """A set of subsets, kept sorted by subset code.

    Accepts subsets as `Subset` values or raw masks; duplicates collapse.
    Families compare and hash by content. Only the mask tuple is stored;
    `subsets` wraps it on demand, which keeps bulk enumeration (a million
    families at palette size 5) affordable.
    """

    __slots__ = ("masks", "_hash")

    def __init__(self, subsets: Iterable[Subset | int]):
        masks = set()
        for s in subsets:
            masks.add(s.mask if isinstance(s, Subset) else int(s))
        if not masks:
            raise ValueError("families must contain at least one subset")
        ordered = tuple(sorted(masks))
        if ordered[0] <= 0:
            raise ValueError("subsets must be non-empty")
        self.masks: tuple[int, ...] = ordered
        self._hash = hash(ordered)

    @property
    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(m) for m in self.masks)

    @classmethod
    def of(cls, *subsets: Iterable[int]) -> "Family":
        return cls(Subset.of(*colours) for colours in subsets)

    @property
    def max_colour(self) -> int:
        return self.masks[-1].bit_length()

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return (Subset(m) for m in self.masks)

    def __contains__(self, subset: Subset) -> bool:
        return subset.mask in self.masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.masks == other.masks

    def __hash__(self) -> int:
        return self._hash

    def compact(self) -> str:
        return " ".join(subset.compact() for subset in self)

    def __repr__(self) -> str:
        return f"Family({self.compact()})"


class ComplementPair(NamedTuple):
    """A half-size subset and its complement; the representative contains colour 1."""

    representative: Subset
    complement: Subset


@dataclass(frozen=True)
class ColourfulnessReport:
    """Outcome of a colourfulness check; truthy iff no violation was seen.

    `exhaustive` distinguishes a full check from a random sample. On
    failure exactly one of `failing_family` (1-based index of a family
    that is not intersecting) or `failing_pair` (1-based indices of a
    family pair with no disjoint cross pair) is set.
    """

    ok: bool
    detail: str = ""
    failing_family: int | None = None
    failing_pair: tuple[int, int] | None = None
    checked_families: int = 0
    checked_pairs: int = 0
    exhaustive: bool = True

    def __bool__(self) -> bool:
        return self.ok


class Collection:
    """Indexed families over a target palette [c]; index = input colour.

    Concrete collections are either explicit (a materialized tuple of
    families) or lazy (families generated from the index by a rule).
    Indices are 1-based and run over 1..size.
    """

    c: int
    size: int
    #: Materialized families, or None for lazy-only collections.
    families: tuple[Family, ...] | None
    label: str

    def family(self, index: int) -> Family:
        if not 1 <= index <= self.size:
            raise IndexError(f"family index {index} outside 1..{self.size}")
        return self._family(index)

    def _family(self, index: int) -> Family:
        raise NotImplementedError

    @property
    def is_lazy(self) -> bool:
        return self.families is None

    def iter_families(self) -> Iterator[Family]:
        if self.families is not None:
            return iter(self.families)
        return (self._family(i) for i in range(1, self.size + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Collection):
            return NotImplemented
        if self.c != other.c or self.size != other.size:
            return False
        if self.families is None or other.families is None:
            # Lazy collections compare by rule; `construct` is the only rule.
            return type(self) is type(other)
        return Counter(self.families) == Counter(other.families)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} c={self.c} k={self.size}>"


class ExplicitCollection(Collection):
    """Collection backed by a materialized tuple of families.

    Duplicate families are representable on purpose so that `is_colourful`
    can report them; validity is a property to check, not a construction
    guarantee.
    """

    def __init__(self, c: int, families: Iterable[Family], label: str = ""):
        if c < 1:
            raise ValueError(f"target palette size must be positive, got {c}")
        fams = tuple(families)
        if not fams:
            raise ValueError("collections must contain at least one family")
        for pos, fam in enumerate(fams, 1):
            if not isinstance(fam, Family):
                raise TypeError(f"family {pos} is not a Family")
            if fam.max_colour > c:
                raise ValueError(
                    f"family {pos} uses colour {fam.max_colour} outside [{c}]"
                )
        self.c = c
        self.families = fams
        self.size = len(fams)
        self.label = label or f"collection(c={c},k={self.size})"

    def _family(self, index: int) -> Family:
        return self.families[index - 1]


class LazyCollection(Collection):
    """Collection defined by an index -> family rule plus a size."""

    def __init__(self, c, size, rule, label=""):
        if c < 1:
            raise ValueError(f"target palette size must be positive, got {c}")
        if size < 1:
            raise ValueError(f"collection size must be positive, got {size}")
        self.c = c
        self.size = size
        self._rule = rule
        self.families = None
        self.label = label or f"lazy(c={c})"

    def _family(self, index: int) -> Family:
        return self._rule(index)


def _half_pair_masks(c: int) -> tuple[list[int], list[int]]:
    """Masks of all c/2-subset complement pairs over [c].

    Returns (representatives, complements): representatives are the halves
    containing colour 1, sorted ascending by code; complements[j] is the
    complement of representatives[j].
    """
    if c < 2 or c % 2:
        raise ValueError(f"complement pairs need an even palette size, got {c}")
    half = c // 2
    full = (1 << c) - 1
    reps = sorted(
        sum(1 << (colour - 1) for colour in comb)
        for comb in _combinations_containing_one(c, half)
    )
    comps = [full ^ rep for rep in reps]
    return reps, comps


def _combinations_containing_one(c: int, size: int) -> Iterator[tuple[int, ...]]:
    for rest in itertools.combinations(range(2, c + 1), size - 1):
        yield (1, *rest)


def complement_pairs(c: int) -> list[ComplementPair]:
    """All C(c, c/2)/2 complement pairs of half-size subsets of [c].

    Each pair is keyed by the half containing colour 1; pairs are sorted
    ascending by representative code.
    """
    reps, comps = _half_pair_masks(c)
    return [ComplementPair(Subset(r), Subset(x)) for r, x in zip(reps, comps)]


class ConstructCollection(Collection):
    """The halved-pair collection over [c] for even c >= 4.

    Indices 1..c map to the singleton families {{i}}, so input colours
    that are already in the target palette keep their colours. Index
    c + 1 + o for o in [0, 2**(s/2)) maps to the family that picks, for
    each complement pair j, the representative if bit j of o is 0 and the
    complement if it is 1 (bit 0 = first pair), plus every subset of size
    c - 1. Total size 2**(s/2) + c with s = C(c, c/2).

    The pair tables kept here (`pair_reps`, `pair_comps`, `half_order`)
    also back a fast disjoint-pair lookup in `colred.compiler` that avoids
    materializing the families.
    """

    def __init__(self, c: int, *, bound: int = DEFAULT_MATERIALIZATION_BOUND):
        if c % 2 or c < 4:
            if c == 2:
                raise ValueError(
                    "c = 2 degenerates: both pair families collapse to {{1},{2}}, "
                    "which is not intersecting"
                )
            raise ValueError(f"construction needs an even palette size >= 4, got {c}")
        reps, comps = _half_pair_masks(c)
        full = (1 << c) - 1
        self.c = c
        self.pair_reps = tuple(reps)
        self.pair_comps = tuple(comps)
        self.n_pairs = len(reps)
        self.full_mask = full
        # Every half, globally sorted by code; `which` says which offset
        # bit value makes the half present in a pair family.
        order = [(code, j, 0) for j, code in enumerate(reps)]
        order += [(code, j, 1) for j, code in enumerate(comps)]
        order.sort()
        self.half_order = tuple(order)
        self.aug_masks = tuple(sorted(full ^ (1 << i) for i in range(c)))
        self.size = (1 << self.n_pairs) + c
        self.label = f"construct({c})"
        self.families = (
            tuple(self._family(i) for i in range(1, self.size + 1))
            if self.size <= bound
            else None
        )

    def _family(self, index: int) -> Family:
        if index <= self.c:
            return Family([1 << (index - 1)])
        offset = index - self.c - 1
        masks = [
            self.pair_comps[j] if offset >> j & 1 else self.pair_reps[j]
            for j in range(self.n_pairs)
        ]
        masks.extend(self.aug_masks)
        return Family(masks)

    def __repr__(self) -> str:
        return f"<ConstructCollection c={self.c} k=2**{self.n_pairs}+{self.c}>"


def construct(c: int, *, bound: int = DEFAULT_MATERIALIZATION_BOUND) -> ConstructCollection:
    """Colourful collection of size 2**(s/2) + c over [c], s = C(c, c/2).

    Requires even c >= 4. Materializes the family list when the size fits
    under `bound`, otherwise the result is lazy.
    """
    return ConstructCollection(c, bound=bound)


def base_collection_c3() -> ExplicitCollection:
    """The size-4 colourful collection over [3]: {1}, {2}, {3}, {12 13 23}."""
    return ExplicitCollection(
        3,
        [
            Family.of([1]),
            Family.of([2]),
            Family.of([3]),
            Family.of([1, 2], [1, 3], [2, 3]),
        ],
        label="base-c3",
    )


def is_intersecting_family(family: Family) -> bool:
    """True iff every two subsets of the family share a colour.

    Subsets are non-empty by construction, so a subset always intersects
    itself; only distinct pairs can fail.
    """
    masks = family.masks
    for i, p in enumerate(masks):
        for q in masks[i + 1 :]:
            if not p & q:
                return False
    return True


def first_disjoint_cross(f: Family, g: Family) -> tuple[Subset, Subset] | None:
    """First disjoint (P in f, Q in g) under (code of P, code of Q) scan order."""
    found = _first_disjoint_cross_masks(f.masks, g.masks)
    if found is None:
        return None
    return Subset(found[0]), Subset(found[1])


def _first_disjoint_cross_masks(fm, gm):
    for p in fm:
        for q in gm:
            if not p & q:
                return p, q
    return None


def cross_disjoint(f: Family, g: Family) -> bool:
    """True iff some subset of f is disjoint from some subset of g."""
    return _first_disjoint_cross_masks(f.masks, g.masks) is not None


def is_colourful(
    collection: Collection, *, bound: int = DEFAULT_MATERIALIZATION_BOUND
) -> ColourfulnessReport:
    """Full colourfulness check over every family and every family pair.

    Checks families by index, so a collection listing the same family
    twice fails on that pair. Lazy collections larger than `bound` are
    refused; use `sample_colourful` for those.
    """
    if collection.size > bound:
        raise MaterializationLimitError(
            f"collection of size {collection.size} exceeds the materialization "
            f"bound {bound}; use sampled verification (sample_colourful)"
        )
    families = collection.families
    if families is None:
        families = tuple(collection.iter_families())
    for idx, fam in enumerate(families, 1):
        if not is_intersecting_family(fam):
            return ColourfulnessReport(
                ok=False,
                detail=f"family {idx} ({fam.compact()}) contains two disjoint subsets",
                failing_family=idx,
                checked_families=idx,
            )
    n = len(families)
    pairs = 0
    for i in range(n):
        fm = families[i].masks
        for j in range(i + 1, n):
            pairs += 1
            if _first_disjoint_cross_masks(fm, families[j].masks) is None:
                return ColourfulnessReport(
                    ok=False,
                    detail=(
                        f"families {i + 1} and {j + 1} have no disjoint cross pair"
                    ),
                    failing_pair=(i + 1, j + 1),
                    checked_families=n,
                    checked_pairs=pairs,
                )
    return ColourfulnessReport(ok=True, checked_families=n, checked_pairs=pairs)


def sample_colourful(
    collection: Collection, samples: int = 1000, seed: int = 0
) -> ColourfulnessReport:
    """Randomized spot-check of colourfulness for collections of any size.

    Draws `samples` family indices and `samples` index pairs (deterministic
    in `seed`) and checks the two defining properties on those. A passing
    report is evidence, not proof: `exhaustive` is False.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    size = collection.size
    for _ in range(samples):
        idx = rng.randrange(1, size + 1)
        fam = collection.family(idx)
        if not is_intersecting_family(fam):
            return ColourfulnessReport(
                ok=False,
                detail=f"family {idx} contains two disjoint subsets",
                failing_family=idx,
                exhaustive=False,
            )
    pairs = 0
    while pairs < samples:
        i = rng.randrange(1, size + 1)
        j = rng.randrange(1, size + 1)
        if i == j:
            continue
        pairs += 1
        fi, fj = collection.family(i), collection.family(j)
        if _first_disjoint_cross_masks(fi.masks, fj.masks) is None:
            return ColourfulnessReport(
                ok=False,
                detail=f"families {i} and {j} have no disjoint cross pair",
                failing_pair=(min(i, j), max(i, j)),
                checked_pairs=pairs,
                exhaustive=False,
            )
    return ColourfulnessReport(
        ok=True, checked_families=samples, checked_pairs=pairs, exhaustive=False
    )


def collection_sizes(c: int) -> tuple[int, int]:
    """(s, size) for the halved-pair construction: s = C(c, c/2), size = 2**(s/2)+c."""
    if c % 2 or c < 2:
        raise ValueError(f"even palette size required, got {c}")
    s = math.comb(c, c // 2)
    return s, (1 << (s // 2)) + c
