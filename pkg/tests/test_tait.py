from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from webfloer import tait, webs
from webfloer.onesets import enumerate_onesets, is_even, r_cycles


def naive_tait(web) -> int:
    """Every assignment of three colours to the segment edges, filtered."""
    segs = web.segment_edges
    table = web.slot_table()
    index = {e.id: k for k, e in enumerate(segs)}
    count = 0
    for cols in itertools.product(range(3), repeat=len(segs)):
        ok = all(
            len({cols[index[e]] for e in table[v]}) == 3 and len(table[v]) == len(set(table[v]))
            for v in web.vertices
        )
        count += ok
    return count * 3 ** len(web.circle_edges)


@pytest.mark.parametrize(
    "web,want",
    [(webs.theta(), 6), (webs.prism(3), 6), (webs.petersen(), 0)] + [(webs.unlink(n), 3**n) for n in range(1, 7)],
    ids=["theta", "L3", "petersen"] + [f"U{n}" for n in range(1, 7)],
)
def test_known_counts(web, want):
    assert tait.count_tait(web) == want


def test_loop_gives_zero():
    assert tait.count_tait(webs.prism(1)) == 0
    assert tait.count_tait(webs.twisted_handcuff()) == 0


@pytest.mark.parametrize("web", [webs.theta(), webs.tetrahedron(), webs.prism(2), webs.prism(3), webs.theta_plus_unknot()])
def test_backtracking_matches_naive(web):
    assert tait.count_tait(web) == naive_tait(web) == tait.count_tait_exhaustive(web)


@given(st.integers(0, 10_000))
@settings(max_examples=25)
def test_backtracking_matches_exhaustive_random(seed):
    for web in tait.random_cubic_multigraphs(8, seed, 3):
        assert tait.count_tait(web) == tait.count_tait_exhaustive(web)


@given(st.integers(0, 10_000))
@settings(max_examples=25)
def test_identity_random(seed):
    for web in tait.random_cubic_multigraphs(8, seed, 3):
        rep = tait.verify_identity(web, exhaustive=True)
        assert rep.ok, rep


@given(st.integers(0, 10_000))
def test_divisible_by_six(seed):
    for web in tait.random_cubic_multigraphs(10, seed, 2):
        c = tait.count_tait(web)
        assert c % 6 == 0


def test_identity_examples():
    rep = tait.verify_identity(webs.theta())
    assert (rep.tait_count, rep.identity_rhs, rep.ok) == (6, 6, True)
    assert [n for _, n in rep.even_onesets] == [1, 1, 1]
    rep = tait.verify_identity(webs.prism(2))
    assert (rep.tait_count, rep.identity_rhs) == (12, 12)
    for n in range(1, 9):
        assert tait.verify_identity(webs.unlink(n)).identity_rhs == 3**n


def test_report_fields_consistent():
    rep = tait.verify_identity(webs.prism(4))
    assert rep.identity_rhs == sum(2**n for _, n in rep.even_onesets)
    assert rep.ok == (rep.tait_count == rep.identity_rhs)
    d = rep.as_dict()
    assert d["tait_count"] == rep.tait_count and d["ok"] is rep.ok


def test_petersen_has_no_even_onesets():
    p = webs.petersen()
    assert tait.count_tait(p) == 0
    assert not any(is_even(p, s) for s in enumerate_onesets(p))
    assert all(sorted(r_cycles(p, s).c_endpoint_count) == [5, 5] for s in enumerate_onesets(p))


def test_random_generator_contract():
    graphs = tait.random_cubic_multigraphs(4, 1, 5)
    assert len(graphs) == 5 and all(len(g.vertices) <= 4 for g in graphs)
    assert len(tait.random_cubic_multigraphs(8, 7, 100)) == 100
    with pytest.raises(ValueError):
        tait.random_cubic_multigraphs(3, 1, 1)
    with pytest.raises(ValueError):
        tait.random_cubic_multigraphs(14, 1, 1)


def test_random_generator_deterministic():
    a = tait.random_cubic_multigraphs(8, 99, 20)
    b = tait.random_cubic_multigraphs(8, 99, 20)
    assert a == b
