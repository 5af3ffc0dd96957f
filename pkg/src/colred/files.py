"""JSON file formats for collections, tables, graphs, and search results.

One object per file, tagged with a "kind" field so a file handed to the
wrong command fails with a clear message instead of a confusing one.
Palette bounds and node colours can be hundreds of digits, so every
possibly-huge integer travels as a decimal string; small structural
integers (target palettes, table entries) stay JSON numbers. Saving is
deterministic: same value, same bytes.

Loaders are strict. Anything malformed raises `FileFormatError` naming the
offending field; semantic rules (empty subsets, duplicate colours, palette
mismatches) are rejected here rather than deferred to later crashes.
"""

from __future__ import annotations

import json
from typing import Any

from .compiler import AlgorithmTable, ImplicitAlgorithm
from .core import (
    Collection,
    ConstructCollection,
    ExplicitCollection,
    Family,
    construct,
)
from .search import SearchResult
from .simulator import ColouredGraph

#: Refuse compact text rendering above this many families.
COMPACT_DISPLAY_LIMIT = 4096


class FileFormatError(ValueError):
    """A file failed structural or semantic validation."""


def _fail(where: str, message: str) -> None:
    raise FileFormatError(f"{where}: {message}")


def _need(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        _fail(where, f"missing field {key!r}")
    return obj[key]


def _as_int(value: Any, where: str) -> int:
    """Accept a JSON number or a decimal string (the on-disk form)."""
    if isinstance(value, bool):
        _fail(where, f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        if text.isdigit() or (text.startswith("-") and text[1:].isdigit()):
            return int(text)
    _fail(where, f"expected an integer or decimal string, got {value!r}")


def _check_kind(obj: Any, kind: str, where: str) -> dict:
    if not isinstance(obj, dict):
        _fail(where, f"expected a JSON object, got {type(obj).__name__}")
    found = obj.get("kind")
    if found != kind:
        _fail(where, f"expected kind {kind!r}, found {found!r}")
    return obj


def _read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: not valid JSON ({exc})") from None


def _write_json(obj: Any, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


# ------------------------------------------------------------ collections


def collection_to_obj(coll: Collection) -> dict:
    if isinstance(coll, ConstructCollection):
        return {
            "kind": "collection",
            "c": coll.c,
            "k": str(coll.size),
            "rule": "construct",
        }
    if coll.families is None:
        raise FileFormatError(
            f"collection {coll.label} is lazy with no file representation"
        )
    return {
        "kind": "collection",
        "c": coll.c,
        "k": str(coll.size),
        "families": [
            [list(subset.colours) for subset in family] for family in coll.families
        ],
    }


def collection_from_obj(obj: Any, where: str = "collection") -> Collection:
    obj = _check_kind(obj, "collection", where)
    c = _as_int(_need(obj, "c", where), f"{where}.c")
    if c < 1:
        _fail(f"{where}.c", f"target palette must be positive, got {c}")
    declared_k = _as_int(obj["k"], f"{where}.k") if "k" in obj else None

    if obj.get("rule") == "construct":
        try:
            coll = construct(c)
        except ValueError as exc:
            _fail(f"{where}.rule", str(exc))
        if declared_k is not None and declared_k != coll.size:
            _fail(f"{where}.k", f"declares {declared_k}, rule gives {coll.size}")
        return coll
    if "rule" in obj:
        _fail(f"{where}.rule", f"unknown rule {obj['rule']!r}")

    raw_families = _need(obj, "families", where)
    if not isinstance(raw_families, list) or not raw_families:
        _fail(f"{where}.families", "expected a non-empty list")
    families = []
    for fi, raw_family in enumerate(raw_families):
        fwhere = f"{where}.families[{fi}]"
        if not isinstance(raw_family, list) or not raw_family:
            _fail(fwhere, "expected a non-empty list of subsets")
        masks = []
        for si, raw_subset in enumerate(raw_family):
            swhere = f"{fwhere}[{si}]"
            if not isinstance(raw_subset, list):
                _fail(swhere, "expected a list of colours")
            if not raw_subset:
                _fail(swhere, "empty subset")
            mask = 0
            for colour in raw_subset:
                colour = _as_int(colour, swhere)
                if not 1 <= colour <= c:
                    _fail(swhere, f"colour {colour} outside [{c}]")
                bit = 1 << (colour - 1)
                if mask & bit:
                    _fail(swhere, f"duplicate colour {colour}")
                mask |= bit
            if mask in masks:
                _fail(swhere, "duplicate subset in family")
            masks.append(mask)
        families.append(Family(masks))
    if declared_k is not None and declared_k != len(families):
        _fail(f"{where}.k", f"declares {declared_k}, found {len(families)} families")
    return ExplicitCollection(c, families)


def save_collection(coll: Collection, path: str) -> None:
    _write_json(collection_to_obj(coll), path)


def load_collection(path: str) -> Collection:
    return collection_from_obj(_read_json(path), path)


def format_collection_compact(coll: Collection) -> str:
    """One family per line, subsets space-separated, e.g. "12 13 23"."""
    if coll.size > COMPACT_DISPLAY_LIMIT:
        raise FileFormatError(
            f"collection of size {coll.size} is too large to display "
            f"(limit {COMPACT_DISPLAY_LIMIT})"
        )
    return "\n".join(family.compact() for family in coll.iter_families())


# ----------------------------------------------------------------- tables


def table_to_obj(table: AlgorithmTable) -> dict:
    entries = [
        [x, y, z, table.entries[(x, y, z)]] for (x, y, z) in table.triples()
    ]
    return {"kind": "table", "k": table.k, "c": table.c, "entries": entries}


def table_from_obj(obj: Any, where: str = "table") -> AlgorithmTable:
    obj = _check_kind(obj, "table", where)
    k = _as_int(_need(obj, "k", where), f"{where}.k")
    c = _as_int(_need(obj, "c", where), f"{where}.c")
    raw_entries = _need(obj, "entries", where)
    if not isinstance(raw_entries, list):
        _fail(f"{where}.entries", "expected a list")
    entries = {}
    for ei, raw in enumerate(raw_entries):
        ewhere = f"{where}.entries[{ei}]"
        if not isinstance(raw, list) or len(raw) != 4:
            _fail(ewhere, f"expected [x, y, z, colour], got {raw!r}")
        x, y, z, v = (_as_int(value, ewhere) for value in raw)
        if (x, y, z) in entries:
            _fail(ewhere, f"duplicate triple {(x, y, z)}")
        entries[(x, y, z)] = v
    try:
        return AlgorithmTable(k=k, c=c, entries=entries)
    except ValueError as exc:
        _fail(where, str(exc))


def save_table(table: AlgorithmTable, path: str) -> None:
    _write_json(table_to_obj(table), path)


def load_table(path: str) -> AlgorithmTable:
    return table_from_obj(_read_json(path), path)


# ----------------------------------------------------------------- graphs


def graph_to_obj(g: ColouredGraph) -> dict:
    return {
        "kind": "graph",
        "topology": g.topology,
        "k": str(g.k),
        "colours": [str(colour) for colour in g.colours],
        "oriented": g.oriented,
    }


def graph_from_obj(obj: Any, where: str = "graph") -> ColouredGraph:
    obj = _check_kind(obj, "graph", where)
    topology = _need(obj, "topology", where)
    k = _as_int(_need(obj, "k", where), f"{where}.k")
    raw_colours = _need(obj, "colours", where)
    if not isinstance(raw_colours, list):
        _fail(f"{where}.colours", "expected a list")
    colours = tuple(
        _as_int(value, f"{where}.colours[{pos}]")
        for pos, value in enumerate(raw_colours)
    )
    oriented = obj.get("oriented", False)
    if not isinstance(oriented, bool):
        _fail(f"{where}.oriented", f"expected true/false, got {oriented!r}")
    try:
        return ColouredGraph(topology, colours, k, oriented)
    except ValueError as exc:
        _fail(where, str(exc))


def save_graph(g: ColouredGraph, path: str) -> None:
    _write_json(graph_to_obj(g), path)


def load_graph(path: str) -> ColouredGraph:
    return graph_from_obj(_read_json(path), path)


# ---------------------------------------------------------- search results


def search_result_to_obj(result: SearchResult) -> dict:
    return {
        "kind": "search",
        "c": result.c,
        "best_size": str(result.best_size),
        "exhaustive": result.exhaustive,
        "nodes_expanded": result.nodes_expanded,
        "witness": (
            collection_to_obj(result.witness) if result.witness is not None else None
        ),
    }


def search_result_from_obj(obj: Any, where: str = "search") -> SearchResult:
    obj = _check_kind(obj, "search", where)
    c = _as_int(_need(obj, "c", where), f"{where}.c")
    best_size = _as_int(_need(obj, "best_size", where), f"{where}.best_size")
    exhaustive = _need(obj, "exhaustive", where)
    if not isinstance(exhaustive, bool):
        _fail(f"{where}.exhaustive", f"expected true/false, got {exhaustive!r}")
    nodes = _as_int(_need(obj, "nodes_expanded", where), f"{where}.nodes_expanded")
    raw_witness = obj.get("witness")
    witness = (
        collection_from_obj(raw_witness, f"{where}.witness")
        if raw_witness is not None
        else None
    )
    return SearchResult(
        c=c,
        best_size=best_size,
        witness=witness,
        exhaustive=exhaustive,
        nodes_expanded=nodes,
    )


def save_search_result(result: SearchResult, path: str) -> None:
    _write_json(search_result_to_obj(result), path)


def load_search_result(path: str) -> SearchResult:
    return search_result_from_obj(_read_json(path), path)


# ------------------------------------------------------------ chain stages


def load_chain_stage(path: str):
    """A chain stage file: either a collection (compiled on the fly) or a
    ready table."""
    obj = _read_json(path)
    if isinstance(obj, dict) and obj.get("kind") == "table":
        return table_from_obj(obj, path)
    if isinstance(obj, dict) and obj.get("kind") == "collection":
        return ImplicitAlgorithm(collection_from_obj(obj, path))
    found = obj.get("kind") if isinstance(obj, dict) else type(obj).__name__
    raise FileFormatError(
        f"{path}: expected kind 'collection' or 'table', found {found!r}"
    )
