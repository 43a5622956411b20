from __future__ import annotations

import pytest

from webfloer import catalogue as cat
from webfloer import tait, webs
from webfloer.floerblocks import upsilon_cone_rank
from webfloer.graded import GradedModule
from webfloer.onesets import OneSet, cover_shadow, enumerate_onesets, is_even
from webfloer.webmodel import SpatialTags

CORPUS = {
    "U1": webs.unlink(1),
    "U3": webs.unlink(3),
    "theta": webs.theta(),
    "K4": webs.tetrahedron(),
    "L1": webs.prism(1),
    "L2": webs.prism(2),
    "L3": webs.prism(3),
    "L4": webs.prism(4),
    "L5": webs.prism(5),
    "petersen": webs.petersen(),
    "twisted": webs.twisted_handcuff(),
    "hopf": webs.hopf_handcuff(),
    "theta+U1": webs.theta_plus_unknot(),
    "L3+U1": webs.with_circle(webs.prism(3)),
}


def test_recognize_examples():
    assert str(cat.recognize(webs.theta())) == "theta"
    untagged = webs.prism(5).with_spatial(SpatialTags(planar=True))
    assert str(cat.recognize(untagged)) == "prism(5)"
    assert cat.recognize(webs.petersen()).name == "petersen_embedding"
    assert str(cat.recognize(webs.unlink(4))) == "unlink(4)"
    assert str(cat.recognize(webs.theta_plus_unknot())) == "theta_plus_unknot"


def test_recognize_refuses_contradicting_tag():
    bad = webs.theta().with_spatial(SpatialTags(planar=True, family="tetrahedron"))
    with pytest.raises(cat.RecognitionError):
        cat.recognize(bad)
    with pytest.raises(cat.RecognitionError):
        cat.recognize(webs.prism(4).with_spatial(SpatialTags(planar=True, family="prism(5)")))


def test_recognize_never_guesses():
    # a random cubic graph without tags is unknown, and homology refuses it
    for web in tait.random_cubic_multigraphs(10, 3, 10):
        fam = cat.recognize(web)
        if fam.name == "unknown":
            with pytest.raises(cat.UnknownFamilyError):
                cat.homology(web, enumerate_onesets(web)[0] if enumerate_onesets(web) else OneSet(web, frozenset()), "hat")
            return
    pytest.fail("expected at least one unrecognized graph")


def test_dihedral_equivalence():
    assert cat.dihedral_equivalent((0, 1, 2, 3, 4), (1, 2, 3, 4, 0))
    assert cat.dihedral_equivalent((0, 1, 2, 3, 4), (4, 3, 2, 1, 0))
    assert not cat.dihedral_equivalent((0, 1, 2, 3, 4), (0, 2, 4, 1, 3))


def _desc(ans):
    return {e.module.describe() for e in ans.entries}


def test_theta_hat_two_towers():
    web = webs.theta()
    for s in enumerate_onesets(web):
        ans = cat.homology(web, s, "hat")
        assert _desc(ans) == {"F2[v]"} and len(ans.entries) == 2 and not ans.discrepancy
        assert ans.total_rank == "infinite (tower)"


def test_unlink_k2_exterior_times_tower():
    web = webs.unlink(3)
    s = OneSet(web, frozenset({"c3"}))
    ans = cat.homology(web, s, "hat")
    assert len(ans.entries) == 2
    assert ans.entries[0].module == GradedModule.of(("TowerDown", 0), ("TowerDown", -1))


def test_unlink_all_c_unknown():
    web = webs.unlink(3)
    ans = cat.homology(web, OneSet(web, frozenset({"c1", "c2", "c3"})), "hat")
    assert ans.status == "unknown" and ans.entries == ()


def test_prism5_rung_reduced_two_generators():
    web = webs.prism(5)
    s = next(s for s in enumerate_onesets(web) if cat.oneset_type(web, s) == "rung")
    ans = cat.homology(web, s, "reduced")
    assert _desc(ans) == {"F2 + F2"} and ans.total_rank == 2


def test_prism5_other_oneset_unknown():
    web = webs.prism(5)
    s = next(s for s in enumerate_onesets(web) if cat.oneset_type(web, s) == "other")
    assert cat.homology(web, s, "hat").status == "unknown"


def test_tetrahedron_discrepancy_recorded():
    web = webs.tetrahedron()
    ans = cat.homology(web, enumerate_onesets(web)[0], "hat")
    assert ans.naive_spinc_count == 4 and ans.stated_spinc_count == 2 and ans.discrepancy


def test_flavour_validated():
    web = webs.theta()
    with pytest.raises(ValueError):
        cat.homology(web, enumerate_onesets(web)[0], "sideways")
    with pytest.raises(ValueError):
        cat.homology(web, OneSet(web, frozenset({"e1", "e2"})), "hat")
    with pytest.raises(IndexError):
        cat.homology_by_index(web, 3, "hat")


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_every_known_entry_has_provenance(name):
    web = CORPUS[name]
    for s in enumerate_onesets(web):
        for fl in cat.HOMOLOGY_FLAVOURS:
            ans = cat.homology(web, s, fl)
            if ans.status == "known":
                assert ans.entries
                assert all(e.provenance for e in ans.entries)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_zero_answers_and_vanishing_rules_agree(name):
    web = CORPUS[name]
    for s in enumerate_onesets(web):
        verdict = cat.vanishing_check(web, s)
        ans = cat.homology(web, s, "reduced")
        if ans.status == "known" and ans.is_zero:
            assert verdict.verdict != "nonzero"
        if verdict.verdict == "zero":
            assert ans.status == "known" and ans.is_zero
        if verdict.verdict == "nonzero":
            assert ans.status == "known" and not ans.is_zero


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_three_point_zeros_are_odd(name):
    web = CORPUS[name]
    for s in enumerate_onesets(web):
        if cat.vanishing_check(web, s).rule == "three_point":
            assert not is_even(web, s)


def test_vanishing_examples():
    l1 = webs.prism(1)
    assert cat.vanishing_check(l1, enumerate_onesets(l1)[0]).as_dict() == {"verdict": "zero", "rule": "bridge", "total_rank": 0}
    l3 = webs.prism(3)
    s3 = OneSet(l3, frozenset({"r0", "r1", "r2"}))
    assert cat.vanishing_check(l3, s3).rule == "three_point"
    p = webs.petersen()
    for s in enumerate_onesets(p):
        v = cat.vanishing_check(p, s)
        assert (v.verdict, v.rule, v.total_rank) == ("nonzero", "excision", 2)


def test_braid_closure_seven_strands():
    word = webs.sorting_word([0, 2, 4, 6, 1, 3, 5])
    web = webs.braid_closure(word, 7)
    assert cat.recognize(web).name == "braid_closure"
    rung = [s for s in enumerate_onesets(web) if cat.rung_structure(web, s) is not None]
    assert rung and all(cat.vanishing_check(web, s).verdict == "nonzero" for s in rung)


def _framed_by_hand(web, edge, restrict=False):
    # one cone of v per class, the class count coming from cover_shadow
    total = 0
    for s in enumerate_onesets(web):
        if not s.is_r(edge):
            continue
        ans = cat.homology(web, s, "hat")
        per = upsilon_cone_rank(ans.entries[0].module)
        total += per * (1 if restrict else cover_shadow(web, s).naive_spinc_count)
    return total


@pytest.mark.parametrize("n", range(1, 7))
def test_framed_rank_unlink(n):
    web = webs.unlink(n)
    closed = 4 ** (n - 1)
    assert cat.framed_rank(web, "c1").rank == closed == _framed_by_hand(web, "c1")
    restricted = 3 ** (n - 1)
    assert cat.framed_rank(web, "c1", True).rank == restricted == _framed_by_hand(web, "c1", True)


def test_framed_rank_examples():
    assert cat.framed_rank(webs.theta_plus_unknot(), "p").rank == 12
    assert cat.framed_rank(webs.with_circle(webs.prism(3)), "p").rank == 12
    with pytest.raises(KeyError):
        cat.framed_rank(webs.theta(), "zz")


def test_framed_rank_no_based_oneset():
    # the rung of L1 is c in its only 1-set
    res = cat.framed_rank(webs.prism(1), "r0")
    assert res.rank == 0 and res.notes == ("no based 1-set",)


@pytest.mark.parametrize("perm", [(0, 2, 4, 6, 1, 3, 5), (0, 3, 6, 2, 5, 1, 4), (0, 2, 4, 1, 3)])
def test_rung_permutation_recognized_either_ring_first(perm):
    web = webs.braid_closure(webs.sorting_word(list(perm)), len(perm))
    assert cat.recognize(web).n == len(perm)


def test_same_rungs_uses_inverse():
    p = (0, 2, 4, 6, 1, 3, 5)
    inv = (0, 4, 1, 5, 2, 6, 3)
    assert not cat.dihedral_equivalent(p, inv)
    assert cat.same_rungs(p, inv)
