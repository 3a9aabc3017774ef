import json

import pytest

from scx import Contract, Expand, Graph, psi, trace_from_moves
from scx.catalog import complete_graph, cycle_graph, figure8_complex, triangle_boundary
from scx.errors import CertificateFailure, InvalidInput
from scx.io import (
    complex_from_json,
    complex_to_json,
    format_edg,
    format_scx,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    move_from_json,
    move_to_json,
    parse_edg,
    parse_scx,
    trace_from_json,
    trace_to_json,
)


def test_scx_roundtrip_with_comments():
    text = "# a triangle boundary\n1,2\n2,3\n3,1\n"
    G = parse_scx(text, facets=True)
    assert G == triangle_boundary()
    assert parse_scx(format_scx(G)) == G


def test_scx_rejects_junk():
    with pytest.raises(InvalidInput):
        parse_scx("1,banana\n")
    with pytest.raises(InvalidInput):
        parse_scx("# only comments\n")


def test_complex_json_both_keys():
    G = triangle_boundary()
    assert complex_from_json(complex_to_json(G)) == G
    assert complex_from_json({"facets": [[1, 2], [2, 3], [3, 1]]}) == G
    with pytest.raises(InvalidInput):
        complex_from_json({})


def test_edg_roundtrip():
    g = cycle_graph(5)
    assert parse_edg(format_edg(g)).adj == g.adj
    with pytest.raises(InvalidInput):
        parse_edg("5\n0 1\n")


def test_graph_json_with_labels():
    A = psi(figure8_complex())
    back = graph_from_json(graph_to_json(A))
    assert back.adj == A.adj
    assert back.labels == A.labels


def test_dot_output_contains_edges():
    text = graph_to_dot(cycle_graph(3))
    assert "0 -- 1" in text and "graph G {" in text


def test_move_json_roundtrip():
    for move in (Contract(3), Expand((1, 2)),):
        assert move_from_json(move_to_json(move)) == move
    with pytest.raises(InvalidInput):
        move_from_json({"kind": "Teleport"})


def test_trace_json_roundtrip_and_forgery():
    tr = trace_from_moves(complete_graph(3), [Contract(2), Contract(1)])
    blob = trace_to_json(tr)
    assert blob["moves"][0]["kind"] == "Contract"
    assert blob["moves"][0]["certificate"] == {"sphere": [0, 1]}
    back = trace_from_json(json.loads(json.dumps(blob)))
    assert back.end.adj == tr.end.adj
    blob["moves"][0]["certificate"]["sphere"] = [0]
    with pytest.raises(CertificateFailure):
        trace_from_json(blob)
