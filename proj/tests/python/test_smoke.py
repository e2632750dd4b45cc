"""Smoke tests for the compiled python module."""

import json

import pytest

import groupgraphs as gg


def test_group_construction():
    q8 = gg.group("Q8")
    assert q8.order == 8
    assert q8.name == "Q8"
    assert q8.elem_order(q8.generator("a")) == 4
    assert q8.is_dedekind()
    assert not q8.is_abelian()


def test_graph_landmarks():
    q8 = gg.group("Q8")
    snorm = gg.build_graph(q8, "snorm")
    com = gg.build_graph(q8, "com")
    assert snorm.edge_count() == 28
    assert snorm.is_complete()
    assert com.edge_count() == 16
    assert gg.is_spanning_subgraph(com, snorm)
    assert not gg.graphs_equal(com, snorm)
    assert len(gg.witness_pairs(q8)) == 12


def test_s3_chain():
    s3 = gg.group("S3")
    counts = {k: gg.build_graph(s3, k).edge_count()
              for k in ("pow", "epow", "com", "snorm", "nilp", "engel")}
    assert counts == {"pow": 6, "epow": 6, "com": 6, "snorm": 6, "nilp": 6, "engel": 12}


def test_exports_parse():
    g = gg.build_graph(gg.group("S3"), "engel")
    data = json.loads(g.to_json())
    assert data["kind"] == "engel"
    assert len(data["edges"]) == 12
    assert g.to_dot().startswith('graph "engel(S3)"')


def test_structural_queries():
    sl23 = gg.group("SL(2,3)")
    assert sl23.sylow(2).order == 8
    assert gg.has_snnc_subgroup(sl23) is not None
    assert gg.has_snnc_subgroup(gg.group("S4")) is None
    assert gg.classify_type_b(gg.group("D4"))["case"] == "B3b"
    assert gg.find_generating_adjacent_pair(gg.group("Heis(3)")) is None
    assert gg.find_generating_adjacent_pair(gg.group("Q8")) is not None


def test_directed_graph():
    dg = gg.directed_normalising(gg.group("C6"))
    assert dg.arc_count() == 30


def test_run_suite():
    report = gg.run_suite(["S3", "Q8", "SL(2,3)"], ["thm2", "hierarchy"])
    assert report["pass"] is True
    assert report["suite_version"]
    assert len(report["results"]) == 6
    groups = {r["group"] for r in report["results"]}
    assert groups == {"S3", "Q8", "SL(2,3)"}


def test_catalog():
    specs = gg.catalog()
    assert "Q8" in specs and "SNNC(3,2,1)" in specs
    assert len(specs) >= 40


def test_errors():
    with pytest.raises(ValueError):
        gg.group("SNNC(2,1,1)")
    with pytest.raises(ValueError):
        gg.group("NotAFamily(3)")
    with pytest.raises(RuntimeError):
        gg.build_graph(gg.group("C513"), "nilp")
