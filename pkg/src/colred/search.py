"""Brute-force search over small palettes, independent of the constructions.

The size of the largest colourful collection over [c] is exactly the
largest input palette a one-round reduction to [c] can handle, so a
search over collections doubles as an existence oracle for algorithms.
Collections are cliques in the compatibility relation "this pair of
intersecting families has a disjoint cross pair", and the search is a
depth-first clique extension over the canonically ordered family list.

Exhaustive mode is the authority at desk scale: it settles c <= 3 in
milliseconds (the maximum at c = 3 is 4). c = 4 may be attempted but its
1375 families put exact completion out of reach here; budget mode caps the
number of expanded partial collections and reports the best found, seeded
with the halved-pair construction where one applies, as a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Collection,
    ExplicitCollection,
    Family,
    collection_sizes,
    construct,
    is_colourful,
    sample_colourful,
)

#: Partial collections expanded before a budgeted search stops.
#: Roughly ten seconds of work at c = 4.
DEFAULT_BUDGET = 10**5

#: Family enumeration is refused above this palette size (the count
#: explodes: 1, 5, 39, 1375, 1314815 for c = 1..5).
ENUMERATION_LIMIT = 5


def _mask_families(c: int) -> list[tuple[int, ...]]:
    """All intersecting families over [c] as sorted mask tuples,
    canonically ordered by (number of subsets, mask tuple)."""
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def grow(start: int) -> None:
        for m in range(start, 1 << c):
            ok = True
            for p in chosen:
                if not m & p:
                    ok = False
                    break
            if ok:
                chosen.append(m)
                out.append(tuple(chosen))
                grow(m + 1)
                chosen.pop()

    grow(1)
    out.sort(key=lambda f: (len(f), f))
    return out


def enumerate_intersecting_families(c: int) -> list[Family]:
    """Every family over [c] whose subsets pairwise intersect.

    Canonical order: fewer subsets first, then by the sorted mask tuple.
    Refused above palette size 5; the c = 5 list already has 1.3 million
    entries.
    """
    if c < 1:
        raise ValueError(f"palette size must be positive, got {c}")
    if c > ENUMERATION_LIMIT:
        raise ValueError(
            f"enumeration over [{c}] is out of search scale (limit "
            f"{ENUMERATION_LIMIT})"
        )
    return [Family(masks) for masks in _mask_families(c)]


@dataclass(frozen=True)
class SearchResult:
    """Best colourful collection size found over [c].

    `exhaustive` is True when the search space was fully explored, making
    `best_size` the exact maximum; otherwise it is a lower bound. The
    witness attains best_size (it may be a collection over a smaller
    palette, which is also one over [c]).
    """

    c: int
    best_size: int
    witness: Collection | None
    exhaustive: bool
    nodes_expanded: int


def _cross_compatible(f: tuple[int, ...], g: tuple[int, ...]) -> bool:
    for p in f:
        for q in g:
            if not p & q:
                return True
    return False


def _clique_search(fams, budget, seed_size):
    """Depth-first clique extension in canonical order.

    Returns (best_size, best mask-tuples or None, nodes, completed).
    Branches that cannot beat the current best are cut, so a seed lower
    bound both prunes and survives unless strictly beaten.
    """
    n = len(fams)
    state = {"nodes": 0, "best_size": seed_size, "best": None, "stopped": False}
    chosen: list[tuple[int, ...]] = []

    def extend(start: int) -> bool:
        state["nodes"] += 1
        if budget is not None and state["nodes"] > budget:
            state["stopped"] = True
            return True
        if len(chosen) > state["best_size"]:
            state["best_size"] = len(chosen)
            state["best"] = list(chosen)
        for i in range(start, n):
            if len(chosen) + (n - i) <= state["best_size"]:
                break
            cand = fams[i]
            ok = True
            for f in chosen:
                if not _cross_compatible(cand, f):
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    extend(0)
    return state["best_size"], state["best"], state["nodes"], not state["stopped"]


def _construction_seed(c: int) -> Collection | None:
    """Best constructed collection fitting inside [c], if any."""
    even = c if c % 2 == 0 else c - 1
    if even < 4:
        return None
    return construct(even)


def _verify_witness(witness: Collection) -> None:
    if witness.families is not None:
        report = is_colourful(witness)
    else:
        report = sample_colourful(witness)
    if not report.ok:
        raise RuntimeError(
            f"search produced a non-colourful witness: {report.detail}"
        )


def max_colourful(c: int, budget: int | None = None) -> SearchResult:
    """Size of the largest colourful collection over [c].

    budget=None runs exhaustively (guarded to c <= 4, and practical only
    for c <= 3); otherwise the search stops after `budget` expanded
    partial collections and reports a lower bound, still marked exhaustive
    if the space was in fact exhausted first. Above the enumeration limit
    only the construction seed is reported. Every witness is re-verified
    by the core checks before being returned.
    """
    if c < 1:
        raise ValueError(f"palette size must be positive, got {c}")
    if budget is None and c > 4:
        raise ValueError(
            f"exhaustive search over [{c}] is out of scale; pass a budget"
        )
    if budget is not None and budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")

    seed = _construction_seed(c)
    if c > ENUMERATION_LIMIT:
        assert seed is not None  # c >= 6 here, so an even seed exists
        _verify_witness(seed)
        return SearchResult(
            c=c,
            best_size=seed.size,
            witness=seed,
            exhaustive=False,
            nodes_expanded=0,
        )

    fams = _mask_families(c)
    seed_size = seed.size if seed is not None else 0
    best_size, best, nodes, completed = _clique_search(fams, budget, seed_size)
    if best is not None:
        witness = ExplicitCollection(
            c, [Family(masks) for masks in best], label=f"search(c={c})"
        )
    else:
        witness = seed
    if witness is not None:
        _verify_witness(witness)
    return SearchResult(
        c=c,
        best_size=best_size,
        witness=witness,
        exhaustive=completed,
        nodes_expanded=nodes,
    )


def construction_lower_bound(c: int) -> int:
    """Largest colourful collection size available without searching."""
    if c < 1:
        raise ValueError(f"palette size must be positive, got {c}")
    if c <= 2:
        return c
    if c == 3:
        return 4
    even = c if c % 2 == 0 else c - 1
    return collection_sizes(even)[1]


def exists_algorithm(k: int, c: int, budget: int | None = None):
    """Is there a one-round reduction from [k] to [c]? True, False, or None.

    Equivalent to asking for a colourful collection of size k over [c].
    Cheap certificates first: k <= c (keep your colour) and k within the
    construction bound. A definite False needs an exhaustive search, so
    budget-limited runs that find nothing return None (undecided).
    """
    if k < 1 or c < 1:
        raise ValueError(f"palette sizes must be positive, got k={k}, c={c}")
    if k <= c:
        return True
    if k <= construction_lower_bound(c):
        return True
    result = max_colourful(c, budget)
    if result.best_size >= k:
        return True
    if result.exhaustive:
        return False
    return None
