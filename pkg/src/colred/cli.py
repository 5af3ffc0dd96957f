"""Command-line front end: construct, verify, compile, extract, check,
simulate, search, demo.

Every run is a pure function of its arguments: seeds are explicit, output
carries no timestamps, and the same invocation always prints the same
bytes. Exit codes: 0 success, 1 a validation or table check failed (the
counterexample is printed), 2 usage errors, unreadable or malformed files,
and palette mismatches.

Palette sizes on the command line accept plain decimals plus the forms
A^B and A^B+C (so 10^100 and 2^462+12 are typable); a trailing "-cap"
clamps the value to the chain's input palette.
"""

from __future__ import annotations

import argparse
import re
import sys

from .compiler import (
    AlgorithmCheckError,
    check_properness,
    check_symmetry,
    example_4to3,
    extract,
    tabulate,
)
from .core import NotColourfulError, construct, is_colourful, sample_colourful
from .files import (
    FileFormatError,
    format_collection_compact,
    load_chain_stage,
    load_collection,
    load_table,
    save_collection,
    save_search_result,
    save_table,
)
from .search import DEFAULT_BUDGET, max_colourful
from .simulator import (
    ColouredGraph,
    ImproperColouringError,
    PaletteMismatchError,
    default_chain,
    random_proper,
    run_chain,
    step,
    validate,
)

ARROW = " ▷ "


def _size_text(value: int) -> str:
    """Decimal, annotated with the power form for round 2**n + c sizes."""
    if value >= 1 << 32:
        n = (value - 1).bit_length() - 1
        rest = value - (1 << n)
        if 0 <= rest < 1 << 16:
            form = f"2^{n}" + (f"+{rest}" if rest else "")
            return f"{value} ({form})"
    return str(value)


def parse_palette(token: str) -> tuple[int, bool]:
    """Parse "12", "10^100", "2^462+12", optionally suffixed "-cap"."""
    cap = token.endswith("-cap")
    if cap:
        token = token[: -len("-cap")]
    match = re.fullmatch(r"(\d+)(?:\^(\d+))?(?:\+(\d+))?", token)
    if not match:
        raise ValueError(
            f"cannot parse palette size {token!r} (expected N, A^B or A^B+C)"
        )
    base, exp, add = match.groups()
    value = int(base) ** int(exp) if exp else int(base)
    value += int(add) if add else 0
    if value < 1:
        raise ValueError(f"palette size must be positive, got {value}")
    return value, cap


def _print_collection_summary(coll) -> None:
    print(f"collection {coll.label}: c={coll.c}, k={_size_text(coll.size)}")


def cmd_construct(args) -> int:
    coll = construct(args.c)
    _print_collection_summary(coll)
    if args.compact:
        print(format_collection_compact(coll))
    if args.output:
        save_collection(coll, args.output)
        print(f"saved to {args.output}")
    return 0


def cmd_verify(args) -> int:
    coll = load_collection(args.file)
    _print_collection_summary(coll)
    if coll.size > args.limit:
        report = sample_colourful(coll, samples=args.samples, seed=args.seed)
        scope = f"sampled: {report.checked_families} families, {report.checked_pairs} pairs"
    else:
        report = is_colourful(coll, bound=args.limit)
        scope = f"exhaustive: {report.checked_families} families, {report.checked_pairs} pairs"
    if report.ok:
        print(f"colourful: yes ({scope})")
        return 0
    print(f"colourful: NO ({report.detail})")
    return 1


def cmd_compile(args) -> int:
    coll = load_collection(args.file)
    table = tabulate(coll, args.k)
    save_table(table, args.output)
    print(
        f"table k={table.k} c={table.c} ({len(table.entries)} entries) "
        f"saved to {args.output}"
    )
    return 0


def cmd_extract(args) -> int:
    table = load_table(args.file)
    coll = extract(table)
    save_collection(coll, args.output)
    print(f"collection c={coll.c}, k={coll.size} saved to {args.output}")
    return 0


def cmd_check(args) -> int:
    table = load_table(args.file)
    print(f"table k={table.k} c={table.c} ({len(table.entries)} entries)")
    failed = False
    sym = check_symmetry(table)
    if sym:
        print("symmetry: ok")
    else:
        print(f"symmetry: FAIL at {sym.counterexample} ({sym.detail})")
        failed = True
    prop = check_properness(table)
    if prop:
        print("properness: ok")
    else:
        print(f"properness: FAIL at {prop.counterexample} ({prop.detail})")
        failed = True
    return 1 if failed else 0


def _resolve_chain(arg: str):
    if arg == "default":
        return default_chain()
    return [load_chain_stage(path) for path in arg.split(",")]


def _stage_label(stage) -> str:
    return stage.label or f"table(k={stage.k})"


def cmd_simulate(args) -> int:
    chain = _resolve_chain(args.chain)
    k, cap = parse_palette(args.k)
    if cap and chain:
        k = min(k, chain[0].k)
    g = random_proper(args.topology, args.n, k, args.seed)
    print(f"topology {g.topology}, n={g.n}, k={g.k} (seed {args.seed})")
    while chain and chain[0].c >= g.k:
        print(f"skipping {_stage_label(chain[0])}: palette already within [{chain[0].c}]")
        chain = chain[1:]
    final, trace = run_chain(g, chain, snapshots=args.snapshots)
    for i, record in enumerate(trace.rounds, 1):
        print(
            f"round {i}: {record.stage}: k {record.k_in} -> {record.k_out}, "
            f"digest {record.digest[:12]}"
        )
        if args.snapshots:
            print("  colours (" + ",".join(map(str, record.colours)) + ")")
    print("palettes: " + trace.palette_line(g.k))
    ok = not validate(final)
    print(f"final colouring proper over [{final.k}]: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def cmd_search(args) -> int:
    budget = args.budget
    if budget is None and args.c > 3:
        budget = DEFAULT_BUDGET  # exhaustive search above c=3 is out of scale
        print(f"budget {budget} nodes (default)")
    result = max_colourful(args.c, budget)
    relation = "=" if result.exhaustive else ">="
    suffix = "exhaustive" if result.exhaustive else "lower bound, budget limited"
    print(f"max{relation}{result.best_size} ({suffix})")
    print(f"nodes expanded: {result.nodes_expanded}")
    if result.witness is not None:
        witness = result.witness
        print(f"witness: {witness.label}, size {_size_text(witness.size)}")
        if witness.size <= 40:
            for line in format_collection_compact(witness).splitlines():
                print("  " + line)
    if args.output:
        save_search_result(result, args.output)
        print(f"saved to {args.output}")
    return 0


def cmd_demo(args) -> int:
    table = example_4to3()
    g = ColouredGraph("path", (1, 2, 1, 4, 3, 4, 3), 4)
    out = step(g, table)
    print("one-round colour reduction on a path, 4 colours to 3")
    print("rule: colours 1-3 stay; a 4 takes the smallest colour free of both neighbours")
    print("input  (" + ",".join(map(str, g.colours)) + ")  proper over [4]")
    print("output (" + ",".join(map(str, out.colours)) + ")  proper over [3]")
    print("palettes: 4" + ARROW + "3")
    coll = extract(table)
    print("collection recovered from the rule, one family per input colour:")
    for line in format_collection_compact(coll).splitlines():
        print("  " + line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colred",
        description="one-round colour reduction on paths and cycles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a halved-pair collection")
    p.add_argument("-c", type=int, required=True, help="target palette size (even, >= 4)")
    p.add_argument("-o", "--output", help="save the collection as JSON")
    p.add_argument("--compact", action="store_true", help="print families, one per line")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a collection file for colourfulness")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=1000, help="samples for lazy collections")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=1 << 20, help="exhaustive check size limit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compile", help="tabulate a collection into a rule table")
    p.add_argument("file", help="collection JSON")
    p.add_argument("-k", type=int, required=True, help="input palette size")
    p.add_argument("-o", "--output", required=True, help="table JSON destination")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("extract", help="recover a collection from a rule table")
    p.add_argument("file", help="table JSON")
    p.add_argument("-o", "--output", required=True, help="collection JSON destination")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("check", help="test a table for symmetry and properness")
    p.add_argument("file", help="table JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simulate", help="run a reduction chain on a random proper colouring")
    p.add_argument("--topology", choices=("path", "cycle"), required=True)
    p.add_argument("-n", type=int, required=True, help="number of nodes")
    p.add_argument("-k", required=True, help="palette size (N, A^B, A^B+C; '-cap' clamps to the chain)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chain", default="default", help="'default' or comma-separated stage files")
    p.add_argument("--snapshots", action="store_true", help="print full colourings per round")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search", help="brute-force the largest colourful collection")
    p.add_argument("-c", type=int, required=True, help="target palette size")
    p.add_argument("--budget", type=int, help="node budget (default: exhaustive for c <= 3)")
    p.add_argument("-o", "--output", help="save the result as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("demo", help="the worked 7-node example, end to end")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except AlgorithmCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ImproperColouringError, NotColourfulError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PaletteMismatchError as exc:
        print(f"error: palette mismatch: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
