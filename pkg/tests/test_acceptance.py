"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import sys
import time

import pytest

from webfloer import catalogue, corpus, dotalgebra, floerblocks, foamcalc, onesets, tait, webs
from webfloer.graded import GradedModule
from webfloer.oracles import check_all_pairs
from webfloer.webmodel import canonical_json

LINES: dict[int, str] = {}


def _record(n: int, title: str, ok: bool, seconds: float, limit: float | None, detail: str = "") -> bool:
    in_time = limit is None or seconds < limit
    verdict = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    extra = f" {detail}" if detail else ""
    LINES[n] = f"criterion {n}: {verdict}  {title}  {seconds:.2f}s{budget}{extra}"
    print(LINES[n])
    return ok and in_time


def _first(web, pred):
    return next(s for s in onesets.enumerate_onesets(web) if pred(s))


def criterion_1() -> bool:
    cases = [(webs.theta(), 6), (webs.prism(3), 6), (webs.petersen(), 0)]
    cases += [(webs.unlink(n), 3**n) for n in range(1, 7)]
    ok, worst = True, 0.0
    for web, want in cases:
        t = time.perf_counter()
        got = tait.count_tait(web)
        dt = time.perf_counter() - t
        worst = max(worst, dt)
        ok &= got == want and dt < 1.0
    return _record(1, "Tait counts", ok, worst, 1.0, "(slowest single count)")


def criterion_2() -> bool:
    t = time.perf_counter()
    named = [webs.theta(), webs.tetrahedron(), webs.prism(2), webs.prism(3), webs.petersen()]
    named += [webs.unlink(n) for n in range(1, 7)]
    ok = all(tait.verify_identity(w).ok for w in named)
    l2 = tait.verify_identity(webs.prism(2))
    ok &= l2.tait_count == l2.identity_rhs == 12
    graphs = tait.random_cubic_multigraphs(8, 2024, 200)
    ok &= len(graphs) == 200
    for g in graphs:
        ok &= tait.count_tait_exhaustive(g) == tait.identity_rhs(g)[0]
    return _record(2, "Tait identity", ok, time.perf_counter() - t, 60.0)


def criterion_3() -> bool:
    t = time.perf_counter()
    ok = True
    for n in range(1, 7):
        web = webs.unlink(n)
        full = catalogue.framed_rank(web, "c1")
        restricted = catalogue.framed_rank(web, "c1", True)
        # independent summation: based 1-sets x class count x cone rank of the hat module
        total = total_r = 0
        for s in onesets.enumerate_onesets(web):
            if not s.is_r("c1"):
                continue
            hat = catalogue.homology(web, s, "hat").entries[0].module
            cone = floerblocks.upsilon_cone_rank(hat)
            total += cone * onesets.cover_shadow(web, s).naive_spinc_count
            total_r += cone
        ok &= full.rank == total == 4 ** (n - 1) and full.complete
        ok &= restricted.rank == total_r == 3 ** (n - 1)
    return _record(3, "framed ranks", ok, time.perf_counter() - t, 5.0)


def criterion_4() -> bool:
    t = time.perf_counter()
    got = {
        "L1": catalogue.vanishing_check(webs.prism(1), _first(webs.prism(1), lambda s: True)),
        "twisted": catalogue.vanishing_check(webs.twisted_handcuff(), _first(webs.twisted_handcuff(), lambda s: True)),
    }
    for name, web in (("L3", webs.prism(3)), ("L5", webs.prism(5)), ("P", webs.petersen())):
        got[name] = catalogue.vanishing_check(web, _first(web, lambda s, w=web: catalogue.oneset_type(w, s) == "rung"))
    want = {
        "L1": ("zero", "bridge", 0),
        "twisted": ("zero", "three_point", 0),
        "L3": ("zero", "three_point", 0),
        "L5": ("nonzero", "excision", 2),
        "P": ("nonzero", "excision", 2),
    }
    ok = all((v.verdict, v.rule, v.total_rank) == want[k] for k, v in got.items())
    return _record(4, "vanishing rules", ok, time.perf_counter() - t, None)


def criterion_5() -> bool:
    t = time.perf_counter()
    ok = foamcalc.dirac_index_bifold(4, 1, 4, 4) == 2
    ok &= foamcalc.dirac_index_bifold(1, 1, 4, 16) == 2
    ok &= all(foamcalc.b_plus(2 * g, 0) == g for g in range(11))
    # b+ = 1 is not admissible, the next quarter step is
    ok &= not foamcalc.admissible_foam(2, 0) and foamcalc.admissible_foam(2, -1)
    ok &= not foamcalc.admissible_foam(0, -4) and foamcalc.admissible_foam(0, "-17/4")
    return _record(5, "foam index calibration", ok, time.perf_counter() - t, None)


def criterion_6() -> bool:
    t = time.perf_counter()
    bc = floerblocks.unknot_pattern(30)
    ok = True
    for fl, shape in (("check", "TowerUp"), ("hat", "TowerDown"), ("bar", "BiTower")):
        ok &= floerblocks.build_flavour(bc, fl).homology(-10, 9) == GradedModule.of(shape).dims(-10, 9)
    rng = random.Random(6)
    for _ in range(50):
        c = floerblocks.random_valid_complex(rng, 40)
        ok &= c.n_generators <= 40
        ok &= all(floerblocks.build_flavour(c, f).square_zero() for f in floerblocks.FLAVOURS)
        rep = floerblocks.long_exact_sequence(c)
        ok &= all(rep.chain_maps.values()) and not rep.failures
    ok &= floerblocks.upsilon_cone_rank(GradedModule.of("TowerUp")) == 1
    return _record(6, "Floer block suite", ok, time.perf_counter() - t, 30.0)


def criterion_7() -> bool:
    t = time.perf_counter()
    failures = 0
    for name in corpus.CORPUS_WEBS:
        web = corpus._named(name)
        for s in onesets.enumerate_onesets(web):
            failures += len(dotalgebra.verify_vertex_relations(web, s))
    oracle = check_all_pairs(max_generators=4, max_degree=6)
    ok = failures == 0 and oracle["mismatches"] == 0 and oracle["pairs"] > 0
    return _record(7, "dot algebra", ok, time.perf_counter() - t, 30.0, f"({oracle['pairs']} pairs)")


def criterion_8() -> bool:
    t = time.perf_counter()
    a = canonical_json(corpus.run_corpus(threads=1))
    b = canonical_json(corpus.run_corpus(threads=1))
    c = canonical_json(corpus.run_corpus(threads=4))
    dt = (time.perf_counter() - t) / 3
    res = json.loads(a)
    ok = a == b == c and not res["failed"]
    return _record(8, "corpus determinism", ok, dt, 180.0, f"({res['passed']}/{res['total']}, mean per run)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(check):
    assert check()


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    sys.exit(0 if all(results) else 1)
