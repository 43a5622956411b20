"""Golden suite: every entry is computed by the library and compared with a frozen value.

The expected values live in ``data/corpus_golden.json`` and were written by
hand from the worked examples and closed forms, not generated by this code.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from . import catalogue, dotalgebra, floerblocks, foamcalc, onesets, tait, webs
from .graded import GradedModule
from .webmodel import WebGraph


def load_golden(path: str | None = None) -> dict[str, Any]:
    if path is None:
        text = resources.files("webfloer").joinpath("data/corpus_golden.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


# --------------------------------------------------------------------------
# helpers producing compact, comparable values


def _answer(web: WebGraph, s: onesets.OneSet, flavour: str) -> dict:
    ans = catalogue.homology(web, s, flavour)
    if ans.status != "known":
        return {"status": "unknown"}
    mods = {e.module.describe() for e in ans.entries}
    assert len(mods) == 1
    out = {"status": "known", "classes": len(ans.entries), "module": mods.pop()}
    if ans.discrepancy:
        out["naive_classes"] = ans.naive_spinc_count
    return out


def _first(web: WebGraph, kind: str) -> onesets.OneSet:
    for s in onesets.enumerate_onesets(web):
        if kind == "all_r" and not s.c_edges:
            return s
        if kind == "all_c" and len(s.c_edges) == len(web.edge_ids):
            return s
        if kind in ("rung", "ring", "other") and catalogue.oneset_type(web, s) == kind:
            return s
        if kind.startswith("k=") and onesets.r_cycles(web, s).n == int(kind[2:]):
            return s
        if kind == "any":
            return s
    raise LookupError(kind)


def _tower_total(web: WebGraph, flavour: str) -> int:
    total = 0
    for s in onesets.enumerate_onesets(web):
        ans = catalogue.homology(web, s, flavour)
        if ans.status != "known":
            return -1
        total += sum(len(e.module.summands) for e in ans.entries)
    return total


def _named(name: str) -> WebGraph:
    if name.startswith("U"):
        return webs.unlink(int(name[1:]))
    if name.startswith("L"):
        return webs.prism(int(name[1:]))
    return {
        "theta": webs.theta,
        "K4": webs.tetrahedron,
        "petersen": webs.petersen,
        "handcuff": webs.handcuff,
        "twisted_handcuff": webs.twisted_handcuff,
        "hopf_handcuff": webs.hopf_handcuff,
        "theta+U1": webs.theta_plus_unknot,
    }[name]()


CORPUS_WEBS = (
    "U1", "U2", "U3", "theta", "K4", "L1", "L2", "L3", "L4", "L5", "petersen",
    "handcuff", "twisted_handcuff", "hopf_handcuff", "theta+U1",
)


# --------------------------------------------------------------------------
# entries


def _homology_entries() -> dict[str, Callable[[], Any]]:
    H = _answer
    e: dict[str, Callable[[], Any]] = {}
    for fl in ("check", "hat", "bar", "tilde"):
        e[f"unknot/{fl}"] = lambda fl=fl: H(webs.unknot(), _first(webs.unknot(), "all_r"), fl)
    for fl in ("check", "hat", "bar"):
        e[f"unknot-c/{fl}"] = lambda fl=fl: H(webs.unknot(), _first(webs.unknot(), "all_c"), fl)
    for k in (1, 2, 3):
        e[f"unlink3-k{k}/hat"] = lambda k=k: H(webs.unlink(3), _first(webs.unlink(3), f"k={k}"), "hat")
    e["unlink3-k0/hat"] = lambda: H(webs.unlink(3), _first(webs.unlink(3), "all_c"), "hat")
    for fl in ("check", "hat", "bar", "tilde"):
        e[f"theta/{fl}"] = lambda fl=fl: H(webs.theta(), _first(webs.theta(), "any"), fl)
    e["theta+U1/check"] = lambda: H(webs.theta_plus_unknot(), _first(webs.theta_plus_unknot(), "k=2"), "check")
    e["tetrahedron/hat"] = lambda: H(webs.tetrahedron(), _first(webs.tetrahedron(), "any"), "hat")
    for n in (2, 4):
        e[f"prism{n}-rung/hat"] = lambda n=n: H(webs.prism(n), _first(webs.prism(n), "rung"), "hat")
        e[f"prism{n}-ring/hat"] = lambda n=n: H(webs.prism(n), _first(webs.prism(n), "ring"), "hat")
    e["prism3-rung/reduced"] = lambda: H(webs.prism(3), _first(webs.prism(3), "rung"), "reduced")
    e["prism3-ring/hat"] = lambda: H(webs.prism(3), _first(webs.prism(3), "ring"), "hat")
    e["prism3/hat-towers"] = lambda: _tower_total(webs.prism(3), "hat")
    e["prism5-rung/reduced"] = lambda: H(webs.prism(5), _first(webs.prism(5), "rung"), "reduced")
    e["prism5-ring/hat"] = lambda: H(webs.prism(5), _first(webs.prism(5), "ring"), "hat")
    e["prism5-other/hat"] = lambda: H(webs.prism(5), _first(webs.prism(5), "other"), "hat")
    for name in ("handcuff", "twisted_handcuff"):
        e[f"{name}/reduced"] = lambda name=name: H(_named(name), _first(_named(name), "any"), "reduced")
    e["hopf_handcuff/hat"] = lambda: H(webs.hopf_handcuff(), _first(webs.hopf_handcuff(), "any"), "hat")
    e["petersen/reduced"] = lambda: H(webs.petersen(), _first(webs.petersen(), "rung"), "reduced")
    return e


def _criterion_entries() -> dict[str, Callable[[], Any]]:
    e: dict[str, Callable[[], Any]] = {}
    # 1: Tait counts
    for name in ("theta", "L3", "petersen") + tuple(f"U{n}" for n in range(1, 7)):
        e[f"tait/{name}"] = lambda name=name: tait.count_tait(_named(name))
    # 2: Tait identity
    for name in ("theta", "K4", "L2", "L3", "petersen") + tuple(f"U{n}" for n in range(1, 7)):
        e[f"tait-identity/{name}"] = lambda name=name: _identity(_named(name))
    e["tait-identity/random200"] = _random_identity
    # 3: framed ranks
    for n in range(1, 7):
        e[f"framed/U{n}"] = lambda n=n: catalogue.framed_rank(webs.unlink(n), "c1").rank
        e[f"framed-restricted/U{n}"] = lambda n=n: catalogue.framed_rank(webs.unlink(n), "c1", True).rank
    e["framed/theta+U1"] = lambda: catalogue.framed_rank(webs.theta_plus_unknot(), "p").rank
    e["framed/L3+U1"] = lambda: catalogue.framed_rank(webs.with_circle(webs.prism(3)), "p").rank
    # 4: vanishing
    e["vanishing/L1"] = lambda: catalogue.vanishing_check(webs.prism(1), _first(webs.prism(1), "any")).as_dict()
    e["vanishing/twisted_handcuff"] = lambda: catalogue.vanishing_check(
        webs.twisted_handcuff(), _first(webs.twisted_handcuff(), "any")
    ).as_dict()
    for n in (3, 5):
        e[f"vanishing/L{n}-rung"] = lambda n=n: catalogue.vanishing_check(webs.prism(n), _first(webs.prism(n), "rung")).as_dict()
    e["vanishing/petersen-rung"] = lambda: catalogue.vanishing_check(webs.petersen(), _first(webs.petersen(), "rung")).as_dict()
    # 5: foam numerics
    e["foam/cp2-deg2"] = lambda: str(foamcalc.dirac_index_bifold(4, 1, 4, 4))
    e["foam/cp2-deg4"] = lambda: str(foamcalc.dirac_index_bifold(1, 1, 4, 16))
    e["foam/bplus-genus"] = lambda: [str(foamcalc.b_plus(2 * g, 0)) for g in range(11)]
    e["foam/admissible-threshold"] = lambda: [foamcalc.admissible_foam(b, 0) for b in (0, 2, 3, 4, 6)]
    # 6: block complexes
    e["floer/unknot-window"] = _unknot_window
    e["floer/synth50"] = _synth_suite
    e["floer/cone-unknot"] = lambda: floerblocks.upsilon_cone_rank(GradedModule.of("TowerUp"))
    # 7: dot algebra
    e["algebra/vertex-relations"] = _relations_everywhere
    e["algebra/oracle"] = _algebra_oracle
    # structural counts
    for name in ("theta", "K4", "L2", "L3", "L4", "L5", "petersen", "U3"):
        e[f"onesets/{name}"] = lambda name=name: len(onesets.enumerate_onesets(_named(name)))
    return e


def _identity(web: WebGraph) -> list:
    rep = tait.verify_identity(web)
    return [rep.tait_count, rep.identity_rhs, rep.ok]


def _random_identity() -> dict:
    graphs = tait.random_cubic_multigraphs(8, 2024, 200)
    bad = 0
    for g in graphs:
        lhs = tait.count_tait_exhaustive(g)
        rhs, _ = tait.identity_rhs(g)
        bad += lhs != rhs
    return {"graphs": len(graphs), "failures": bad}


def _unknot_window() -> dict:
    bc = floerblocks.unknot_pattern(30)
    out = {}
    for fl, shape in (("check", "TowerUp"), ("hat", "TowerDown"), ("bar", "BiTower")):
        got = floerblocks.build_flavour(bc, fl).homology(-10, 9)
        out[fl] = got == GradedModule.of(shape).dims(-10, 9)
    return out


def _synth_suite() -> dict:
    rng = random.Random(6)
    counts = {"complexes": 0, "square_zero": 0, "chain_maps": 0, "exact": 0}
    for _ in range(50):
        bc = floerblocks.random_valid_complex(rng, 40)
        counts["complexes"] += 1
        counts["square_zero"] += all(floerblocks.build_flavour(bc, f).square_zero() for f in floerblocks.FLAVOURS)
        rep = floerblocks.long_exact_sequence(bc)
        counts["chain_maps"] += all(rep.chain_maps.values())
        counts["exact"] += not rep.failures
    return counts


def _relations_everywhere() -> dict:
    checked = failures = 0
    for name in CORPUS_WEBS:
        w = _named(name)
        for s in onesets.enumerate_onesets(w):
            checked += 1
            failures += len(dotalgebra.verify_vertex_relations(w, s))
    return {"failures": failures, "pairs": checked}


def _algebra_oracle() -> dict:
    from .oracles import check_all_pairs

    return check_all_pairs(max_generators=4, max_degree=6)


def entries() -> dict[str, Callable[[], Any]]:
    e = _homology_entries()
    e.update(_criterion_entries())
    return e


def _canon(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _canon(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_canon(v) for v in x]
    return x


def run_corpus(golden: dict[str, Any] | None = None, threads: int = 1) -> dict:
    golden = load_golden() if golden is None else golden
    table = entries()
    names = sorted(set(table) | set(golden))

    def one(name: str) -> dict:
        if name not in table:
            return {"name": name, "pass": False, "error": "no such entry"}
        try:
            got = _canon(table[name]())
        except Exception as exc:  # an entry that crashes is a failure, not a crash of the run
            return {"name": name, "pass": False, "error": f"{type(exc).__name__}: {exc}"}
        if name not in golden:
            return {"name": name, "pass": False, "got": got, "error": "no golden value"}
        row = {"name": name, "pass": got == golden[name]}
        if not row["pass"]:
            row.update(expected=golden[name], got=got)
        return row

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(one, names))
    else:
        rows = [one(n) for n in names]
    failed = [r["name"] for r in rows if not r["pass"]]
    return {"entries": rows, "failed": failed, "passed": len(rows) - len(failed), "total": len(rows)}
