from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from webfloer import tait, webs
from webfloer.webmodel import (
    CIRCLE,
    Edge,
    FoamSkeleton,
    Seam,
    WebGraph,
    WebParseError,
    cut_edges,
    parse_foam,
    parse_web,
    serialize_foam,
    serialize_web,
    validate,
    validate_foam,
)

THETA_DOC = {
    "vertices": [{"id": "v1"}, {"id": "v2"}],
    "edges": [
        {"id": "e1", "ends": [["v1", 0], ["v2", 0]]},
        {"id": "e2", "ends": [["v1", 1], ["v2", 1]]},
        {"id": "e3", "ends": [["v1", 2], ["v2", 2]]},
    ],
}


def test_parse_theta():
    web = parse_web(json.dumps(THETA_DOC))
    assert len(web.vertices) == 2 and len(web.edges) == 3


def test_parse_unlink_has_no_vertices():
    doc = {"vertices": [], "edges": [{"id": f"c{k}", "ends": []} for k in range(4)]}
    web = parse_web(json.dumps(doc))
    assert web.vertices == () and len(web.circle_edges) == 4


def test_four_slot_vertex_is_arity_error():
    doc = json.loads(json.dumps(THETA_DOC))
    doc["vertices"][0]["slots"] = 4
    with pytest.raises(WebParseError) as ei:
        parse_web(json.dumps(doc))
    assert ei.value.kind == "vertex arity"
    assert ei.value.ident == "v1"


def test_dangling_end_names_edge_and_offset():
    doc = json.loads(json.dumps(THETA_DOC))
    doc["edges"][2]["ends"] = [["v1", 2]]
    text = json.dumps(doc)
    with pytest.raises(WebParseError) as ei:
        parse_web(text)
    assert ei.value.ident == "e3"
    assert text.encode()[ei.value.offset :].startswith(b'"id": "e3"')


def test_duplicate_id():
    doc = json.loads(json.dumps(THETA_DOC))
    doc["edges"][1]["id"] = "e1"
    with pytest.raises(WebParseError) as ei:
        parse_web(json.dumps(doc))
    assert ei.value.kind == "duplicate id"


def test_malformed_json_offset():
    with pytest.raises(WebParseError) as ei:
        parse_web('{"vertices": [')
    assert ei.value.kind == "malformed" and ei.value.offset is not None


def test_validate_tetrahedron_clean():
    assert validate(webs.tetrahedron()) == []


def test_validate_one_ended_segment():
    web = webs.theta()
    edges = tuple(Edge(e.id, e.kind, e.ends[:1]) if e.id == "e3" else e for e in web.edges)
    diags = validate(WebGraph(web.vertices, edges))
    assert "edge e3: 1 end" in diags


def test_validate_circle_with_attachment():
    web = WebGraph((), (Edge("e1", CIRCLE, (("v1", 0),)),))
    assert "circle e1: has attachment" in validate(web)


ALL_NAMED = [
    webs.unknot(),
    webs.unlink(3),
    webs.theta(),
    webs.tetrahedron(),
    webs.prism(1),
    webs.prism(4),
    webs.petersen(),
    webs.twisted_handcuff(),
    webs.theta_plus_unknot(),
]


@pytest.mark.parametrize("web", ALL_NAMED, ids=lambda w: w.spatial.family if w.spatial else "?")
def test_round_trip_named(web):
    text = serialize_web(web)
    again = parse_web(text)
    assert again == web
    assert serialize_web(again) == text


@given(st.integers(0, 10_000))
def test_round_trip_random(seed):
    for web in tait.random_cubic_multigraphs(8, seed, 2):
        assert serialize_web(parse_web(serialize_web(web))) == serialize_web(web)


@given(st.integers(0, 10_000))
def test_handshake(seed):
    for web in tait.random_cubic_multigraphs(10, seed, 2):
        assert sum(len(e.ends) for e in web.edges) == 3 * len(web.vertices)


def test_cut_edges():
    assert cut_edges(webs.handcuff()) == ["r0"]
    assert cut_edges(webs.theta()) == []


def test_foam_examples():
    product = FoamSkeleton(("f1", "f2", "f3"), (Seam("s", ("f1", "f2", "f3")),))
    assert validate_foam(product) == []
    assert parse_foam(serialize_foam(product)) == product


def test_foam_seam_with_two_facets_rejected():
    doc = {"facets": [{"id": "f1"}, {"id": "f2"}], "seams": [{"id": "s", "facets": ["f1", "f2"]}]}
    with pytest.raises(WebParseError):
        parse_foam(json.dumps(doc))


def test_spatial_tags_survive_round_trip():
    web = webs.petersen()
    again = parse_web(serialize_web(web))
    assert again.spatial == web.spatial and not again.planar
