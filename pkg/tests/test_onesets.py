from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from webfloer import onesets, tait, webs
from webfloer.onesets import OneSet, c_components, cover_shadow, enumerate_onesets, is_even, is_oneset, r_cycles
from webfloer.webmodel import Edge, FoamSkeleton, Seam, SpatialTags, TetraPoint, WebGraph


def brute_force_onesets(web):
    ids = web.edge_ids
    found = []
    for k in range(len(ids) + 1):
        for sub in combinations(ids, k):
            # c-loops are forbidden, everything else is the vertex count check
            if any(web.edge(e).is_loop for e in sub):
                continue
            hits = Counter(v for e in sub for v, _ in web.edge(e).ends)
            if all(hits[v] == 1 for v in web.vertices):
                found.append(tuple(sorted(sub)))
    return sorted(found)


SMALL = {
    "theta": webs.theta(),
    "K4": webs.tetrahedron(),
    "L1": webs.prism(1),
    "L2": webs.prism(2),
    "L3": webs.prism(3),
    "L4": webs.prism(4),
    "U3": webs.unlink(3),
    "theta+U1": webs.theta_plus_unknot(),
    "twisted": webs.twisted_handcuff(),
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_enumeration_matches_brute_force(name):
    web = SMALL[name]
    assert [s.key for s in enumerate_onesets(web)] == brute_force_onesets(web)


@given(st.integers(0, 5000))
def test_enumeration_matches_brute_force_random(seed):
    for web in tait.random_cubic_multigraphs(8, seed, 3):
        assert [s.key for s in enumerate_onesets(web)] == brute_force_onesets(web)


def test_counts_from_examples():
    assert len(enumerate_onesets(webs.theta())) == 3
    assert len(enumerate_onesets(webs.unlink(5))) == 32
    assert len(enumerate_onesets(webs.prism(2))) == 5


def test_is_oneset_examples():
    theta = webs.theta()
    assert is_oneset(theta, {"e1"})
    assert not is_oneset(theta, {"e1", "e2"})
    with pytest.raises(KeyError):
        is_oneset(theta, {"nope"})


def test_tetrahedron_onesets_are_perfect_matchings():
    k4 = webs.tetrahedron()
    keys = [s.key for s in enumerate_onesets(k4)]
    assert keys == [("e12", "e34"), ("e13", "e24"), ("e14", "e23")]


def test_c_loop_forbidden():
    # two vertices, each with a loop, joined by one edge
    web = WebGraph(
        ("v1", "v2"),
        (
            Edge("l1", "segment", (("v1", 0), ("v1", 1))),
            Edge("l2", "segment", (("v2", 0), ("v2", 1))),
            Edge("m", "segment", (("v1", 2), ("v2", 2))),
        ),
    )
    assert [s.key for s in enumerate_onesets(web)] == [("m",)]
    assert not is_oneset(web, {"l1", "l2"})
    dec = r_cycles(web, OneSet(web, frozenset({"m"})))
    assert dec.n == 2 and dec.c_endpoint_count == [1, 1]


def test_r_cycles_examples():
    theta = webs.theta()
    for s in enumerate_onesets(theta):
        dec = r_cycles(theta, s)
        assert dec.n == 1 and dec.c_endpoint_count == [2]
    l2 = webs.prism(2)
    rungs = OneSet(l2, frozenset({"r0", "r1"}))
    dec = r_cycles(l2, rungs)
    assert dec.n == 2 and dec.c_endpoint_count == [2, 2]
    k4 = webs.tetrahedron()
    for s in enumerate_onesets(k4):
        assert r_cycles(k4, s).c_endpoint_count == [4]


def _partition_ok(web, s):
    dec = r_cycles(web, s)
    edges = Counter(e for cy in dec.cycles for e in cy.edges)
    assert sorted(edges) == sorted(s.r_edges) and set(edges.values()) <= {1}
    verts = Counter(v for cy in dec.cycles for v in cy.vertices if v is not None)
    assert sorted(verts) == sorted(web.vertices) and set(verts.values()) <= {1}
    n_c_segments = sum(1 for e in s.c_edges if web.edge(e).kind == "segment")
    assert sum(dec.c_endpoint_count) == 2 * n_c_segments
    assert sum(dec.c_endpoint_count) % 2 == 0


@given(st.integers(0, 5000))
def test_r_cycles_partition_random(seed):
    for web in tait.random_cubic_multigraphs(10, seed, 2):
        for s in enumerate_onesets(web):
            _partition_ok(web, s)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_r_cycles_partition_named(name):
    web = SMALL[name]
    for s in enumerate_onesets(web):
        _partition_ok(web, s)


def test_r_cycle_steps_are_consecutive_half_edges():
    web = webs.prism(3)
    for s in enumerate_onesets(web):
        for cy in r_cycles(web, s).cycles:
            # each step's vertex is an end of its edge and of the following edge
            steps = cy.steps
            for k, (v, e) in enumerate(steps):
                nxt = steps[(k + 1) % len(steps)][1]
                assert v in {x for x, _ in web.edge(e).ends}
                assert v in {x for x, _ in web.edge(nxt).ends}


def test_evenness_examples():
    l3 = webs.prism(3)
    s3 = OneSet(l3, frozenset({"r0", "r1", "r2"}))
    assert not is_even(l3, s3)
    assert all(is_even(webs.theta(), s) for s in enumerate_onesets(webs.theta()))
    assert all(is_even(webs.unlink(4), s) for s in enumerate_onesets(webs.unlink(4)))


def test_petersen_matchings_all_odd():
    p = webs.petersen()
    sets = enumerate_onesets(p)
    assert len(sets) == 6
    for s in sets:
        assert sorted(r_cycles(p, s).c_endpoint_count) == [5, 5]
        assert not is_even(p, s)


def test_c_components():
    assert [c.kind for c in c_components(webs.theta(), enumerate_onesets(webs.theta())[0])] == ["arc"]
    u4 = webs.unlink(4)
    s = OneSet(u4, frozenset({"c1", "c3", "c4"}))
    assert [c.kind for c in c_components(u4, s)] == ["circle"] * 3
    k4 = webs.tetrahedron()
    assert len(c_components(k4, enumerate_onesets(k4)[0])) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cover_shadow_unlink(n):
    web = webs.unlink(n)
    for s in enumerate_onesets(web):
        k = n - len(s.c_edges)
        sh = cover_shadow(web, s)
        assert sh.b1 == max(k - 1, 0)
        assert [x.lift_kind for x in sh.lifted_c] == ["swapped_pair"] * (n - k)
        assert sh.naive_spinc_count == 2 ** (n - k)
        assert sh.even


def test_cover_shadow_theta_and_tetrahedron():
    sh = cover_shadow(webs.theta(), enumerate_onesets(webs.theta())[0])
    assert (sh.b1, sh.naive_spinc_count, [x.lift_kind for x in sh.lifted_c]) == (0, 2, ["invariant_circle"])
    k4 = webs.tetrahedron()
    sh = cover_shadow(k4, enumerate_onesets(k4)[0])
    assert (sh.b1, sh.naive_spinc_count) == (0, 4)


def test_cover_shadow_needs_parity_off_the_plane():
    web = webs.unlink(2).with_spatial(SpatialTags(planar=False))
    s = OneSet(web, frozenset({"c1"}))
    with pytest.raises(ValueError):
        cover_shadow(web, s)
    tagged = web.with_spatial(SpatialTags(planar=False, linking_parity=(("c1", 0, 1),)))
    assert cover_shadow(tagged, s).lifted_c[0].lift_kind == "single_wrapping_circle"


def _cone_foam():
    pairs = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    facets = tuple(f"f{a}{b}" for a, b in pairs)
    seams = tuple(Seam(f"s{v}", tuple(f"f{a}{b}" for a, b in pairs if v in (a, b))) for v in range(4))
    return FoamSkeleton(facets, seams, (TetraPoint("t", tuple(s.id for s in seams), facets),))


def test_foam_onesets():
    product = FoamSkeleton(("f1", "f2", "f3"), (Seam("s", ("f1", "f2", "f3")),))
    assert [fs.key for fs in onesets.enumerate_foam_onesets(product)] == [("f1",), ("f2",), ("f3",)]
    cone = onesets.enumerate_foam_onesets(_cone_foam())
    assert [fs.key for fs in cone] == [("f01", "f23"), ("f02", "f13"), ("f03", "f12")]
    # the seam s forces exactly one of f1, f2 but the seam t forces f1 twice
    stuck = FoamSkeleton(("f1", "f2"), (Seam("s", ("f1", "f2", "f2")), Seam("t", ("f1", "f1", "f2"))))
    assert onesets.enumerate_foam_onesets(stuck) == []


def test_tetra_assertion_fires_on_bad_set():
    foam = _cone_foam()
    with pytest.raises(onesets.TetraAssertionError):
        onesets.check_tetra_points(onesets.FoamOneSet(foam, frozenset({"f01", "f02"})))
