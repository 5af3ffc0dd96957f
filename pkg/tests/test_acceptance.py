"""Acceptance gate: one test per shipped guarantee, one printed line each.

Every test prints a [PASS]/[FAIL] line with the measured runtime against
the stated budget (lines bypass pytest capture so the gate is readable in
any mode). Expected values are frozen literals, written out in full here
rather than recomputed, so these tests are an independent check of the
library and not a mirror of it.
"""

import math
import random
import time

import pytest

from colred.compiler import (
    check_properness,
    check_symmetry,
    example_4to3,
    extract,
    new_colour,
    tabulate,
    _edge_pair_masks,
)
from colred.core import (
    ExplicitCollection,
    Family,
    base_collection_c3,
    collection_sizes,
    construct,
    is_colourful,
    _first_disjoint_cross_masks,
)
from colred.search import exists_algorithm, max_colourful
from colred.simulator import (
    ColouredGraph,
    cole_vishkin_step,
    default_chain,
    naive_step,
    random_proper,
    run_chain,
    step,
    validate,
)


@pytest.fixture
def report(capsys):
    """Print one [PASS]/[FAIL] line per criterion, bypassing capture."""

    def _report(name: str, ok: bool, elapsed: float, budget: float, detail: str = ""):
        verdict = "PASS" if ok else "FAIL"
        extra = f" {detail}" if detail else ""
        with capsys.disabled():
            print(
                f"[{verdict}] {name}: {elapsed * 1000:.1f} ms"
                f" (budget {budget * 1000:.0f} ms){extra}",
                flush=True,
            )
        assert ok, f"{name}{extra}"

    return _report


def test_criterion_1_textbook_path_exact(report):
    table = example_4to3()
    g = ColouredGraph("path", (1, 2, 1, 4, 3, 4, 3), 4)
    step(g, table)  # warm-up
    best = float("inf")
    out = None
    for _ in range(5):
        t0 = time.perf_counter()
        out = step(g, table)
        best = min(best, time.perf_counter() - t0)
    ok = out.colours == (1, 2, 1, 2, 3, 1, 3) and best < 0.001
    report("criterion 1 (7-node path, exact output)", ok, best, 0.001,
           f"output {out.colours}")


# the twelve families over [4]: four singletons plus eight half-picking
# families (three halves, one per complement pair, plus all 3-subsets)
AUGS = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
EXPECTED_C4 = [
    [(1,)], [(2,)], [(3,)], [(4,)],
    [(1, 2), (1, 3), (1, 4), *AUGS],
    [(3, 4), (1, 3), (1, 4), *AUGS],
    [(1, 2), (2, 4), (1, 4), *AUGS],
    [(3, 4), (2, 4), (1, 4), *AUGS],
    [(1, 2), (1, 3), (2, 3), *AUGS],
    [(3, 4), (1, 3), (2, 3), *AUGS],
    [(1, 2), (2, 4), (2, 3), *AUGS],
    [(3, 4), (2, 4), (2, 3), *AUGS],
]


def test_criterion_2_construction_c4(report):
    t0 = time.perf_counter()
    coll = construct(4)
    expected = {Family.of(*subsets) for subsets in EXPECTED_C4}
    listing_ok = coll.size == 12 and set(coll.families) == expected
    check = is_colourful(coll)
    elapsed = time.perf_counter() - t0
    ok = listing_ok and check.ok and check.checked_pairs == 66 and elapsed < 0.010
    report("criterion 2 (construct(4): 12 frozen families, 66 pairs)", ok,
           elapsed, 0.010)


def test_criterion_3_size_formula(report):
    t0 = time.perf_counter()
    s, size = collection_sizes(12)
    coll = construct(12)
    elapsed = time.perf_counter() - t0
    ok = (
        s == math.comb(12, 6) == 924
        and size == 2**462 + 12
        and coll.size == 2**462 + 12
    )
    report("criterion 3 (|construct(12)| = 2^462 + 12, s = 924)", ok, elapsed, 1.0)


def _distinct_colouring(n: int, k: int, seed: int) -> tuple[int, ...]:
    rng = random.Random(seed)
    seen = set()
    cols = []
    while len(cols) < n:
        v = rng.randrange(1, k + 1)
        if v not in seen:
            seen.add(v)
            cols.append(v)
    return tuple(cols)


def test_criterion_4_headline_chain_full_scale(report):
    n, k = 10**5, 10**100
    t0 = time.perf_counter()
    results = []
    for topology, seed in (("path", 41), ("cycle", 42)):
        g = ColouredGraph(topology, _distinct_colouring(n, k, seed), k)
        final, trace = run_chain(g, default_chain())
        results.append(
            len(trace) == 3
            and trace.palettes(k) == (k, 12, 4, 3)
            and final.k == 3
            and validate(final) == []
        )
    elapsed = time.perf_counter() - t0
    ok = all(results) and elapsed < 60.0
    report("criterion 4 (n=10^5 path+cycle, 10^100 colours, 3 rounds to 3)",
           ok, elapsed, 60.0)


def _proper_colourings(k: int, n: int):
    if n == 0:
        yield ()
        return
    stack = [(colour,) for colour in range(k, 0, -1)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            yield prefix
            continue
        last = prefix[-1]
        for colour in range(k, 0, -1):
            if colour != last:
                stack.append(prefix + (colour,))


def test_criterion_5_compile_soundness_exhaustive(report):
    t0 = time.perf_counter()
    table = tabulate(construct(4), 12)
    checks_ok = bool(check_symmetry(table)) and bool(check_properness(table))
    instances = 0
    step_ok = True
    for n in range(1, 7):
        for cols in _proper_colourings(12, n):
            g = ColouredGraph("path", cols, 12)
            out = step(g, table)
            instances += 1
            if validate(out):
                step_ok = False
                break
    elapsed = time.perf_counter() - t0
    ok = checks_ok and step_ok and instances == 2125872 and elapsed < 300.0
    report("criterion 5 (table checks + 2,125,872 exhaustive path rounds)",
           ok, elapsed, 300.0, f"{instances} instances")


def test_criterion_6_extraction_equivalence(report):
    t0 = time.perf_counter()
    recovered = extract(example_4to3())
    base_ok = set(recovered.families) == set(base_collection_c3().families)
    sizes_ok = True
    for coll, ks in ((base_collection_c3(), (2, 3, 4)), (construct(4), (2, 7, 12))):
        for k in ks:
            back = extract(tabulate(coll, k))
            if back.size != k or not is_colourful(back).ok:
                sizes_ok = False
    elapsed = time.perf_counter() - t0
    ok = base_ok and sizes_ok
    report("criterion 6 (extraction inverts compilation, sizes preserved)",
           ok, elapsed, 10.0)


def test_criterion_7_search_oracle(report):
    t0 = time.perf_counter()
    three = max_colourful(3)
    two = max_colourful(2)
    ok = (
        three.best_size == 4
        and three.exhaustive
        and exists_algorithm(5, 3) is False
        and exists_algorithm(4, 3) is True
        and two.best_size == 2
        and two.exhaustive
    )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    report("criterion 7 (max at c=3 is 4: no 5-to-3 rule, 4-to-3 exists)",
           ok, elapsed, 10.0)


def test_criterion_8_baselines_hundred_seeds(report):
    t0 = time.perf_counter()
    n = 10**4
    naive_ok = True
    for seed in range(100):
        g = random_proper("path", n, 6, seed=seed)
        for expected_k in (5, 4, 3):
            g = naive_step(g)
            if g.k != expected_k or validate(g):
                naive_ok = False
    cv_ok = True
    b = 16
    for seed in range(100):
        g = random_proper("path", n, 2**b, seed=seed, oriented=True)
        out = cole_vishkin_step(g, b)
        if validate(out) or not all(colour - 1 < 32 for colour in out.colours):
            cv_ok = False
    elapsed = time.perf_counter() - t0
    ok = naive_ok and cv_ok and elapsed < 120.0
    report("criterion 8 (100-seed baselines: 6-5-4-3 naive, 16-bit to <32)",
           ok, elapsed, 120.0)


def test_criterion_9_property_suite(report):
    t0 = time.perf_counter()
    rng = random.Random(2024)

    fixed_ok = True
    for coll in (base_collection_c3(), construct(4), construct(6), construct(12)):
        c, k = coll.c, coll.size
        for _ in range(10**4):
            y = rng.randrange(1, c + 1)
            x = rng.randrange(1, k + 1)
            z = rng.randrange(1, k + 1)
            if x == y or z == y:
                continue
            if new_colour(x, y, z, coll) != y:
                fixed_ok = False

    sym_ok = True
    c12 = construct(12)
    for _ in range(10**4):
        x = rng.randrange(1, c12.size + 1)
        y = rng.randrange(1, c12.size + 1)
        z = rng.randrange(1, c12.size + 1)
        if x == y or z == y:
            continue
        if new_colour(x, y, z, c12) != new_colour(z, y, x, c12):
            sym_ok = False

    fast = construct(4)
    generic = ExplicitCollection(4, fast.families)
    fast_ok = True
    for x in range(1, 13):
        for y in range(x + 1, 13):
            expected = _first_disjoint_cross_masks(
                generic.family(x).masks, generic.family(y).masks
            )
            if _edge_pair_masks(fast, x, y) != expected:
                fast_ok = False

    elapsed = time.perf_counter() - t0
    ok = fixed_ok and sym_ok and fast_ok and elapsed < 120.0
    report("criterion 9 (fixed colours, argument symmetry, fast path = scan)",
           ok, elapsed, 120.0)
