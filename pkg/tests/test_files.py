import json

import pytest

from colred.compiler import AlgorithmTable, ImplicitAlgorithm, example_4to3, tabulate
from colred.core import ConstructCollection, ExplicitCollection, Family, base_collection_c3, construct
from colred.files import (
    FileFormatError,
    format_collection_compact,
    load_chain_stage,
    load_collection,
    load_graph,
    load_search_result,
    load_table,
    save_collection,
    save_graph,
    save_search_result,
    save_table,
)
from colred.search import max_colourful
from colred.simulator import ColouredGraph


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


# ------------------------------------------------------------ collections


def test_collection_round_trip_explicit(tmp_path):
    path = str(tmp_path / "base.json")
    save_collection(base_collection_c3(), path)
    assert load_collection(path) == base_collection_c3()


def test_collection_round_trip_construct_rule(tmp_path):
    for c in (4, 12):
        path = str(tmp_path / f"c{c}.json")
        save_collection(construct(c), path)
        loaded = load_collection(path)
        assert isinstance(loaded, ConstructCollection)
        assert loaded == construct(c)
    blob = json.loads((tmp_path / "c12.json").read_text())
    assert blob["k"] == str(2**462 + 12)


def test_collection_round_trip_explicit_copy_of_construct(tmp_path):
    copy = ExplicitCollection(4, construct(4).families)
    path = str(tmp_path / "copy.json")
    save_collection(copy, path)
    assert load_collection(path) == construct(4)


def test_collection_rejects_empty_subset(tmp_path):
    path = write_json(
        tmp_path / "bad.json",
        {"kind": "collection", "c": 2, "families": [[[1]], [[]]]},
    )
    with pytest.raises(FileFormatError, match="empty subset"):
        load_collection(path)


def test_collection_rejects_duplicates_and_range(tmp_path):
    dup_colour = {"kind": "collection", "c": 2, "families": [[[1, 1]]]}
    with pytest.raises(FileFormatError, match="duplicate colour"):
        load_collection(write_json(tmp_path / "a.json", dup_colour))
    dup_subset = {"kind": "collection", "c": 2, "families": [[[1], [1]]]}
    with pytest.raises(FileFormatError, match="duplicate subset"):
        load_collection(write_json(tmp_path / "b.json", dup_subset))
    out_of_range = {"kind": "collection", "c": 2, "families": [[[3]]]}
    with pytest.raises(FileFormatError, match="outside"):
        load_collection(write_json(tmp_path / "c.json", out_of_range))


def test_collection_rejects_k_mismatch_and_bad_rule(tmp_path):
    mismatch = {"kind": "collection", "c": 2, "k": "3", "families": [[[1]], [[2]]]}
    with pytest.raises(FileFormatError, match="declares 3"):
        load_collection(write_json(tmp_path / "a.json", mismatch))
    bad_rule = {"kind": "collection", "c": 4, "rule": "magic"}
    with pytest.raises(FileFormatError, match="unknown rule"):
        load_collection(write_json(tmp_path / "b.json", bad_rule))
    odd_rule = {"kind": "collection", "c": 5, "rule": "construct"}
    with pytest.raises(FileFormatError, match="even"):
        load_collection(write_json(tmp_path / "c.json", odd_rule))


def test_wrong_kind_and_malformed_json(tmp_path):
    path = write_json(tmp_path / "t.json", {"kind": "table", "k": 2, "c": 2, "entries": []})
    with pytest.raises(FileFormatError, match="expected kind 'collection'"):
        load_collection(path)
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(FileFormatError, match="not valid JSON"):
        load_collection(str(bad))
    with pytest.raises(FileNotFoundError):
        load_collection(str(tmp_path / "missing.json"))


def test_compact_display():
    assert format_collection_compact(base_collection_c3()) == "1\n2\n3\n12 13 23"
    with pytest.raises(FileFormatError, match="too large"):
        format_collection_compact(construct(12))


# ----------------------------------------------------------------- tables


def test_table_round_trip(tmp_path):
    path = str(tmp_path / "t.json")
    save_table(example_4to3(), path)
    assert load_table(path) == example_4to3()


def test_table_file_is_canonically_ordered(tmp_path):
    path = tmp_path / "t.json"
    save_table(tabulate(construct(4), 5), str(path))
    blob = json.loads(path.read_text())
    triples = [tuple(entry[:3]) for entry in blob["entries"]]
    assert triples == sorted(triples)


def test_table_rejects_malformed_entries(tmp_path):
    base = {"kind": "table", "k": 2, "c": 1, "entries": [[1, 2, 1, 1], [2, 1, 2, 1]]}
    assert load_table(write_json(tmp_path / "ok.json", base))(1, 2, 1) == 1

    bad_shape = dict(base, entries=[[1, 2, 1], [2, 1, 2, 1]])
    with pytest.raises(FileFormatError, match="expected .x, y, z, colour."):
        load_table(write_json(tmp_path / "a.json", bad_shape))

    dup = dict(base, entries=base["entries"] + [[1, 2, 1, 1]])
    with pytest.raises(FileFormatError, match="duplicate triple"):
        load_table(write_json(tmp_path / "b.json", dup))

    incomplete = dict(base, entries=base["entries"][:1])
    with pytest.raises(FileFormatError, match="expected 2"):
        load_table(write_json(tmp_path / "c.json", incomplete))

    out_of_range = dict(base, entries=[[1, 2, 1, 2], [2, 1, 2, 1]])
    with pytest.raises(FileFormatError, match="outside"):
        load_table(write_json(tmp_path / "d.json", out_of_range))


# ----------------------------------------------------------------- graphs


def test_graph_round_trip_huge_colours(tmp_path):
    g = ColouredGraph("path", (10**100, 1, 10**100 - 7), 10**100, oriented=True)
    path = str(tmp_path / "g.json")
    save_graph(g, path)
    loaded = load_graph(path)
    assert loaded == g
    blob = json.loads((tmp_path / "g.json").read_text())
    assert blob["k"] == str(10**100)
    assert blob["colours"][0] == str(10**100)


def test_graph_round_trip_cycle(tmp_path):
    g = ColouredGraph("cycle", (1, 2, 3), 3)
    path = str(tmp_path / "g.json")
    save_graph(g, path)
    assert load_graph(path) == g


def test_graph_accepts_plain_ints_on_load(tmp_path):
    path = write_json(
        tmp_path / "g.json",
        {"kind": "graph", "topology": "path", "k": 4, "colours": [1, 2, 4]},
    )
    g = load_graph(path)
    assert g.colours == (1, 2, 4) and g.k == 4 and not g.oriented


def test_graph_rejects_malformed(tmp_path):
    bad_topology = {"kind": "graph", "topology": "star", "k": "2", "colours": ["1"]}
    with pytest.raises(FileFormatError, match="topology"):
        load_graph(write_json(tmp_path / "a.json", bad_topology))
    bad_colour = {"kind": "graph", "topology": "path", "k": "2", "colours": ["0"]}
    with pytest.raises(FileFormatError, match="malformed"):
        load_graph(write_json(tmp_path / "b.json", bad_colour))
    bad_oriented = {
        "kind": "graph",
        "topology": "path",
        "k": "2",
        "colours": ["1"],
        "oriented": "yes",
    }
    with pytest.raises(FileFormatError, match="oriented"):
        load_graph(write_json(tmp_path / "c.json", bad_oriented))
    not_digits = {"kind": "graph", "topology": "path", "k": "2", "colours": ["1x"]}
    with pytest.raises(FileFormatError, match="decimal"):
        load_graph(write_json(tmp_path / "d.json", not_digits))


# --------------------------------------------------------- search results


def test_search_result_round_trip(tmp_path):
    result = max_colourful(3)
    path = str(tmp_path / "r.json")
    save_search_result(result, path)
    assert load_search_result(path) == result


def test_search_result_round_trip_lazy_witness(tmp_path):
    result = max_colourful(8, budget=1)
    path = str(tmp_path / "r.json")
    save_search_result(result, path)
    loaded = load_search_result(path)
    assert loaded.best_size == 2**35 + 8
    assert loaded.witness == construct(8)
    blob = json.loads((tmp_path / "r.json").read_text())
    assert blob["best_size"] == str(2**35 + 8)


def test_search_result_without_witness(tmp_path):
    from colred.search import SearchResult

    result = SearchResult(c=9, best_size=0, witness=None, exhaustive=False, nodes_expanded=1)
    path = str(tmp_path / "r.json")
    save_search_result(result, path)
    assert load_search_result(path) == result


# ------------------------------------------------------------ chain stages


def test_load_chain_stage(tmp_path):
    cpath = str(tmp_path / "c.json")
    save_collection(construct(4), cpath)
    stage = load_chain_stage(cpath)
    assert isinstance(stage, ImplicitAlgorithm)
    assert stage.k == 12

    tpath = str(tmp_path / "t.json")
    save_table(example_4to3(), tpath)
    stage = load_chain_stage(tpath)
    assert isinstance(stage, AlgorithmTable)

    gpath = str(tmp_path / "g.json")
    save_graph(ColouredGraph("path", (1,), 1), gpath)
    with pytest.raises(FileFormatError, match="expected kind"):
        load_chain_stage(gpath)


def test_save_is_deterministic(tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    save_collection(base_collection_c3(), a)
    save_collection(base_collection_c3(), b)
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
