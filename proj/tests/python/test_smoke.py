import json
import os
import subprocess
from fractions import Fraction

import pytest

import convexcycles as cc


def test_petersen_is_extremal():
    g = cc.generate("petersen")
    assert (g.order, g.size) == (10, 15)
    assert cc.girth(g) == 5 and cc.diameter(g) == 2
    census = cc.convex_cycles(g)
    assert census["rho"] == 12 and census["histogram"] == {5: 12}
    report = cc.check_extremal(g)
    assert report["bound"] == Fraction(12)
    assert report["classification"] == "MooreGraph"
    assert cc.is_moore(g)["is_moore"]
    assert cc.theorem2_check(g)["count"] == 12


def test_graph_construction_and_graph6():
    g = cc.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert cc.parse_graph6(cc.write_graph6(g)) == g
    assert cc.convex_cycles(g)["cycles"] == [[0, 1, 2, 3]]
    assert cc.brute_force_convex_cycles(g)["rho"] == 1
    assert cc.is_convex_cycle(g, [3, 2, 1, 0])
    with pytest.raises(cc.DuplicateEdge):
        cc.Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(cc.ParseError):
        cc.parse_graph6("C~~")


def test_bound_and_errors():
    assert cc.convex_cycle_bound(4, 5, 3) == Fraction(8, 3)
    assert cc.convex_cycle_bound(3250, 92625, 5) == 58094400
    with pytest.raises(cc.NotApplicable):
        cc.check_extremal(cc.generate("path", ["5"]))
    with pytest.raises(cc.Error):
        cc.theorem2_check(cc.generate("cycle", ["6"]))
    assert cc.is_moore(cc.generate("path", ["3"]))["girth"] is None


def test_spectral():
    k3 = cc.char_poly(cc.generate("complete", ["3"]))
    assert k3 == [-2, -3, 0, 1]
    hs = cc.generate("hoffman_singleton")
    p = cc.char_poly(hs)
    assert p == cc.expand_factored([(7, 1), (2, 28), (-3, 21)])
    assert p[45] == -2520
    assert cc.girth_cycle_count_spectral(p, 50, 5) == 1260


def test_big_moore_polynomial():
    p = cc.expand_factored([(57, 1), (-8, 1520), (7, 1729)])
    assert len(p) == 3251
    assert p[3245] == -116188800
    assert cc.girth_cycle_count_spectral(p, 3250, 5) == 58094400


def test_analyze_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = os.environ.get("CONVEXCYCLES_SCHEMA")
    if not schema_path:
        pytest.skip("CONVEXCYCLES_SCHEMA not set")
    with open(schema_path) as f:
        schema = json.load(f)
    for family, params in [("petersen", []), ("complete_bipartite", ["2", "3"]), ("path", ["4"])]:
        report = cc.analyze(cc.generate(family, params), include_polynomial=True)
        jsonschema.validate(report, schema)


def test_cli_json_output():
    cli = os.environ.get("CONVEXCYCLES_CLI")
    if not cli:
        pytest.skip("CONVEXCYCLES_CLI not set")
    g6 = subprocess.run([cli, "generate", "petersen"], capture_output=True, text=True, check=True).stdout
    out = subprocess.run([cli, "analyze", "-"], input=g6, capture_output=True, text=True, check=True).stdout
    report = json.loads(out)
    assert report["census"]["rho"] == 12
    assert report["extremal"]["bound"] == "12"
    assert report["spectral"]["girth_cycles"] == 12
    schema_path = os.environ.get("CONVEXCYCLES_SCHEMA")
    if schema_path:
        jsonschema = pytest.importorskip("jsonschema")
        with open(schema_path) as f:
            jsonschema.validate(report, json.load(f))
