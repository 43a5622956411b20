"""Recognition of the worked example families and their recorded Floer groups.

Answers are golden data keyed by family and by the structural type of the
1-set.  Spin-c counts are kept twice: the naive isotropy count from
:func:`onesets.cover_shadow` and the count the worked examples use; entries
where the two differ carry ``discrepancy=True``.  Anything not covered by a
worked example comes back with ``status="unknown"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .floerblocks import upsilon_cone_rank
from .graded import GradedModule, Summand
from .onesets import OneSet, cover_shadow, enumerate_onesets, is_oneset, r_cycles
from .webmodel import WebGraph, cut_edges, validate, vertex_components
from .webs import PETERSEN_PERM, braid_permutation

HOMOLOGY_FLAVOURS = ("check", "hat", "bar", "tilde", "reduced")


class RecognitionError(ValueError):
    """Spatial tags contradict the combinatorial structure."""


class UnknownFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    name: str
    n: int | None = None
    perm: tuple[int, ...] | None = None
    base: "FamilyId | None" = None

    def __str__(self) -> str:
        if self.name == "plus_unknot" and self.base is not None:
            return f"{self.base}+unknot"
        if self.name in ("prism", "unlink", "braid_closure"):
            return f"{self.name}({self.n})"
        return self.name


UNKNOWN = FamilyId("unknown")


# --------------------------------------------------------------------------
# structure helpers


def _dihedral(n: int) -> list[list[int]]:
    out = []
    for r in range(n):
        out.append([(i + r) % n for i in range(n)])
        out.append([(r - i) % n for i in range(n)])
    return out


def dihedral_equivalent(p: tuple[int, ...] | list[int], q: tuple[int, ...] | list[int]) -> bool:
    """Whether q = sigma o p o rho for dihedral relabellings rho, sigma of the two rings."""
    n = len(p)
    if len(q) != n:
        return False
    if n <= 2:
        return True
    dih = {tuple(d) for d in _dihedral(n)}
    for rho in _dihedral(n):
        # sigma = q o rho^-1 o p^-1 must be dihedral; equivalently sigma(p(rho(i))) = q(i)
        sigma = [0] * n
        for i in range(n):
            sigma[p[rho[i]]] = q[i]
        if tuple(sigma) in dih:
            return True
    return False


def same_rungs(p: tuple[int, ...] | list[int], q: tuple[int, ...] | list[int]) -> bool:
    """Dihedral equivalence allowing the two rings to trade places (p against p^-1)."""
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return dihedral_equivalent(p, q) or dihedral_equivalent(inv, q)


def rung_structure(web: WebGraph, s: OneSet) -> tuple[int, ...] | None:
    """If s is rung-type (two r-cycles of equal length, every c-edge joining them) return its permutation."""
    if web.circle_edges:
        return None
    dec = r_cycles(web, s)
    if dec.n != 2:
        return None
    A, B = dec.cycles
    if len(A.vertices) != len(B.vertices):
        return None
    pos_a = {v: i for i, v in enumerate(A.vertices)}
    pos_b = {v: i for i, v in enumerate(B.vertices)}
    n = len(pos_a)
    if len(set(A.vertices)) != n or len(set(B.vertices)) != n:
        return None
    perm = [None] * n
    for eid in s.c_edges:
        (x, _), (y, _) = web.edge(eid).ends
        if x in pos_a and y in pos_b:
            perm[pos_a[x]] = pos_b[y]
        elif y in pos_a and x in pos_b:
            perm[pos_a[y]] = pos_b[x]
        else:
            return None
    if None in perm:
        return None
    return tuple(perm)  # type: ignore[arg-type]


def oneset_type(web: WebGraph, s: OneSet) -> str:
    """``rung`` / ``ring`` / ``other`` for ring-with-rungs webs."""
    if rung_structure(web, s) is not None:
        return "rung"
    if r_cycles(web, s).n == 1:
        return "ring"
    return "other"


def _is_handcuff_graph(web: WebGraph) -> bool:
    segs = web.segment_edges
    return len(web.vertices) == 2 and len(segs) == 3 and sum(e.is_loop for e in segs) == 2


def _is_theta_graph(web: WebGraph) -> bool:
    segs = web.segment_edges
    return len(web.vertices) == 2 and len(segs) == 3 and not any(e.is_loop for e in segs)


def _is_k4(web: WebGraph) -> bool:
    if len(web.vertices) != 4 or len(web.segment_edges) != 6:
        return False
    pairs = set()
    for e in web.segment_edges:
        if e.is_loop:
            return False
        pairs.add(frozenset(v for v, _ in e.ends))
    return len(pairs) == 6


def _ring_rung_perms(web: WebGraph) -> list[tuple[OneSet, tuple[int, ...]]]:
    out = []
    for s in enumerate_onesets(web):
        p = rung_structure(web, s)
        if p is not None:
            out.append((s, p))
    return out


# --------------------------------------------------------------------------
# recognition


def _recognize_connected(web: WebGraph) -> FamilyId:
    sp = web.spatial
    tag = sp.family_name() if sp else None
    args = sp.family_args() if sp else ()
    planar = web.planar

    def contradiction(found: str):
        raise RecognitionError(f"family tag {sp.family!r} contradicts structure ({found})")

    if _is_handcuff_graph(web):
        if tag in ("handcuff", "twisted_handcuff", "hopf_handcuff"):
            return FamilyId(tag)
        if tag == "prism":
            if int(args[0]) != 1:
                contradiction("handcuff graph")
            return FamilyId("prism", 1, (0,))
        if tag is not None:
            contradiction("handcuff graph")
        return FamilyId("handcuff") if planar else UNKNOWN
    if _is_theta_graph(web):
        if tag not in (None, "theta"):
            contradiction("theta graph")
        return FamilyId("theta") if planar or tag == "theta" else UNKNOWN
    if _is_k4(web):
        if tag not in (None, "tetrahedron"):
            contradiction("tetrahedron graph")
        return FamilyId("tetrahedron") if planar or tag == "tetrahedron" else UNKNOWN

    if tag in ("theta", "tetrahedron", "handcuff", "twisted_handcuff", "hopf_handcuff", "unknot", "unlink"):
        contradiction("graph does not match")
    if len(web.vertices) % 2:
        if tag is not None:
            contradiction("odd vertex count")
        return UNKNOWN
    n = len(web.vertices) // 2
    candidates = _ring_rung_perms(web)
    if tag == "prism":
        if int(args[0]) != n or not any(dihedral_equivalent(p, tuple(range(n))) for _, p in candidates):
            contradiction(f"not a prism on {2 * n} vertices")
        return FamilyId("prism", n, tuple(range(n)))
    if tag == "braid_closure":
        word = [int(x) for x in args[0].split()]
        strands = int(args[1])
        if strands != n:
            contradiction(f"{strands} strands but {2 * n} vertices")
        try:
            target = tuple(braid_permutation(word, strands))
        except ValueError as exc:
            raise RecognitionError(str(exc)) from exc
        if not any(same_rungs(p, target) for _, p in candidates):
            contradiction("no rung 1-set realizes the braid permutation")
        if n == 5 and same_rungs(target, PETERSEN_PERM):
            return FamilyId("petersen_embedding", 5, PETERSEN_PERM)
        return FamilyId("braid_closure", n, target)
    if tag is not None:
        contradiction("unrecognized structure")
    if planar and any(dihedral_equivalent(p, tuple(range(n))) for _, p in candidates):
        return FamilyId("prism", n, tuple(range(n)))
    return UNKNOWN


def recognize(web: WebGraph) -> FamilyId:
    """Structural family of a web; spatial tags are confirmed, never trusted alone."""
    diags = validate(web)
    if diags:
        raise ValueError("invalid web: " + "; ".join(diags))
    sp = web.spatial
    tag = sp.family_name() if sp else None
    args = sp.family_args() if sp else ()
    circles = web.circle_edges
    if not web.vertices:
        k = len(circles)
        if tag == "unknot" and k != 1:
            raise RecognitionError(f"unknot tag on {k} circles")
        if tag == "unlink" and int(args[0]) != k:
            raise RecognitionError(f"unlink({args[0]}) tag on {k} circles")
        if tag not in (None, "unknot", "unlink"):
            raise RecognitionError(f"family tag {sp.family!r} on a vertex-free web")
        if k == 0:
            return UNKNOWN
        if not (web.planar or tag is not None):
            return UNKNOWN
        return FamilyId("unknot") if k == 1 else FamilyId("unlink", k)
    if len(vertex_components(web)) != 1:
        return UNKNOWN
    if circles:
        if len(circles) != 1 or not web.planar:
            return UNKNOWN
        base_web = WebGraph(web.vertices, web.segment_edges, web.spatial)
        base = _recognize_connected(base_web)
        if base.name == "theta":
            return FamilyId("theta_plus_unknot", base=base)
        if base.name == "prism" and base.n == 3:
            return FamilyId("plus_unknot", base=base)
        return UNKNOWN
    return _recognize_connected(web)


# --------------------------------------------------------------------------
# answers


@dataclass(frozen=True)
class HomologyEntry:
    spinc: int
    module: GradedModule
    provenance: str

    def as_dict(self) -> dict:
        return {"spinc": self.spinc, "module": self.module.as_dict(), "provenance": self.provenance}


@dataclass(frozen=True)
class HomologyAnswer:
    family: str
    flavour: str
    oneset: tuple[str, ...]
    status: str  # known | unknown
    entries: tuple[HomologyEntry, ...] = ()
    naive_spinc_count: int | None = None
    stated_spinc_count: int | None = None
    note: str = ""

    @property
    def discrepancy(self) -> bool:
        return (
            self.naive_spinc_count is not None
            and self.stated_spinc_count is not None
            and self.naive_spinc_count != self.stated_spinc_count
        )

    @property
    def is_zero(self) -> bool:
        return self.status == "known" and all(e.module.is_zero() for e in self.entries)

    @property
    def total_rank(self) -> int | str | None:
        if self.status != "known":
            return None
        if any(e.module.has_tower for e in self.entries):
            return "infinite (tower)"
        return sum(len(e.module.summands) for e in self.entries)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "flavour": self.flavour,
            "oneset": list(self.oneset),
            "status": self.status,
            "entries": [e.as_dict() for e in self.entries],
            "total_rank": self.total_rank,
            "naive_spinc_count": self.naive_spinc_count,
            "stated_spinc_count": self.stated_spinc_count,
            "discrepancy": self.discrepancy,
            "note": self.note,
        }


M = GradedModule.of
ZERO = GradedModule()
TOWER_TRIPLE = {"check": M("TowerUp"), "hat": M("TowerDown"), "bar": M("BiTower")}
TWO_TOWERS_SHIFTED = M(("TowerDown", 0), ("TowerDown", -1))


@dataclass
class _Golden:
    """Per-class modules for one (family, 1-set type); missing flavours are unknown."""

    modules: dict[str, GradedModule]
    classes: int
    provenance: str
    note: str = ""
    tilde_stated: bool = False
    zero_rule: str | None = None
    count_stated: bool = True


def _golden(fam: FamilyId, web: WebGraph, s: OneSet) -> _Golden | None:
    dec = r_cycles(web, s)
    name = fam.name
    if name == "unknot":
        if s.c_edges:
            return _Golden(
                {"check": M("TowerUpU"), "hat": M("TowerDownU"), "bar": M("BiTowerU")},
                2,
                "example/unknot c-coloured: U-towers, deg U = -2",
            )
        return _Golden(dict(TOWER_TRIPLE), 1, "example/unknot r-coloured", tilde_stated=True)
    if name == "unlink":
        k = dec.n
        if k == 0:
            return None
        mods = {f: m.tensor_exterior(k - 1) for f, m in TOWER_TRIPLE.items()}
        return _Golden(
            mods,
            2 ** (fam.n - k),
            f"example/unlink: exterior algebra on {k - 1} generators tensor tower, per torsion class",
            tilde_stated=True,
        )
    if name == "theta":
        return _Golden(dict(TOWER_TRIPLE), 2, "example/theta: one tower per bifold spin-c structure", tilde_stated=True)
    if name == "theta_plus_unknot":
        circle = web.circle_edges[0].id
        if circle in s.c_edges:
            return None
        return _Golden(
            {"check": M("TowerUp").tensor_exterior(1)},
            2,
            "example/theta plus based unknot: F2[x]/x^2 tensor tower",
            tilde_stated=True,
        )
    if name == "plus_unknot" and fam.base is not None and fam.base.name == "prism" and fam.base.n == 3:
        circle = web.circle_edges[0].id
        if circle in s.c_edges:
            return None
        base_web = WebGraph(web.vertices, web.segment_edges, web.spatial)
        base_s = OneSet(base_web, s.c_edges)
        t = oneset_type(base_web, base_s)
        if t == "rung":
            return _Golden(_zero_all(), 1, "example/prism-3 plus unknot: rung 1-set vanishes", tilde_stated=True, zero_rule="three_point")
        if t == "ring":
            return _Golden(
                {"hat": M("TowerDown").tensor_exterior(1)},
                2,
                "example/prism-3 plus based unknot: F2[x]/x^2 tensor two towers",
                tilde_stated=True,
            )
        return None
    if name == "tetrahedron":
        return _Golden({"hat": M("TowerDown")}, 2, "example/tetrahedron: one tower per bifold isotropy type")
    if name in ("handcuff", "twisted_handcuff") or (name == "prism" and fam.n == 1):
        rule = "three_point" if name == "twisted_handcuff" else "bridge"
        return _Golden(_zero_all(), 1, f"example/{name}: vanishes", tilde_stated=True, zero_rule=rule)
    if name == "hopf_handcuff":
        return _Golden({"hat": M("TowerDown")}, 4, "example/hopf handcuff: four torsion classes, one reducible each")
    if name == "prism":
        t = oneset_type(web, s)
        n = fam.n
        if n in (2, 4):
            if t == "rung":
                return _Golden(
                    {"hat": TWO_TOWERS_SHIFTED}, 1, f"example/prism-{n}: rung 1-set, unique torsion class, circle of flat connections"
                )
            if t == "ring":
                note = "labelled ring 1-sets outnumber the example's count" if n == 4 else ""
                return _Golden({"hat": M("TowerDown")}, 2, f"example/prism-{n}: ring 1-set, one tower per isotropy", note)
            return None
        if n == 3:
            if t == "rung":
                return _Golden(_zero_all(), 1, "example/prism-3: rung 1-set vanishes (three-point rule)", tilde_stated=True, zero_rule="three_point")
            if t == "ring":
                return _Golden({"hat": M("TowerDown")}, 2, "example/prism-3: ring 1-set, two towers")
            return None
        if n % 2 == 1 and n >= 5 and t == "rung":
            return _excision_golden(n)
        return None
    if name in ("braid_closure", "petersen_embedding"):
        if fam.n is not None and fam.n % 2 == 1 and fam.n >= 5 and rung_structure(web, s) is not None:
            g = _excision_golden(fam.n)
            if name == "petersen_embedding":
                g.note = "embedding data is not modelled: every rung 1-set of the Petersen graph is treated as the braid 1-set"
            return g
        return None
    return None


def _zero_all() -> dict[str, GradedModule]:
    return {f: ZERO for f in ("check", "hat", "bar", "reduced")}


def _excision_golden(n: int) -> _Golden:
    return _Golden(
        {"reduced": M("Finite", "Finite")},
        1,
        f"rule/excision: braid closure on {n} strands, two irreducible generators",
        count_stated=False,
    )


def homology(web: WebGraph, s: OneSet | None, flavour: str, family: FamilyId | None = None) -> HomologyAnswer:
    if flavour not in HOMOLOGY_FLAVOURS:
        raise ValueError(f"unknown flavour {flavour!r}")
    fam = recognize(web) if family is None else family
    if fam.name == "unknown":
        raise UnknownFamilyError("web is not a recognized example family")
    if s is None or not is_oneset(web, s.c_edges):
        raise ValueError("not a 1-set of this web")
    naive = cover_shadow(web, s).naive_spinc_count
    g = _golden(fam, web, s)
    key = s.key
    if g is None:
        return HomologyAnswer(str(fam), flavour, key, "unknown", naive_spinc_count=naive, note="1-set not covered by a worked example")
    if flavour == "tilde":
        if not g.tilde_stated:
            return HomologyAnswer(str(fam), flavour, key, "unknown", naive_spinc_count=naive, stated_spinc_count=g.classes)
        src = g.modules.get("check", g.modules.get("hat"))
        if src is None:
            return HomologyAnswer(str(fam), flavour, key, "unknown", naive_spinc_count=naive, stated_spinc_count=g.classes)
        rank = upsilon_cone_rank(src)
        module = GradedModule(tuple(Summand("Finite", 0) for _ in range(rank)))
        prov = g.provenance + "; cone of v computed on the chain model"
    else:
        module = g.modules.get(flavour)
        if module is None:
            return HomologyAnswer(
                str(fam), flavour, key, "unknown", naive_spinc_count=naive, stated_spinc_count=g.classes,
                note="flavour not stated for this 1-set",
            )
        prov = g.provenance
    entries = tuple(HomologyEntry(k, module, prov) for k in range(g.classes))
    # vanishing and excision answers do not come with a class count
    stated = g.classes if g.count_stated and g.zero_rule is None else None
    return HomologyAnswer(str(fam), flavour, key, "known", entries, naive, stated, g.note)


def homology_by_index(web: WebGraph, index: int, flavour: str) -> HomologyAnswer:
    sets = enumerate_onesets(web)
    if not 0 <= index < len(sets):
        raise IndexError(f"1-set index {index} out of range ({len(sets)} 1-sets)")
    return homology(web, sets[index], flavour)


# --------------------------------------------------------------------------
# framed ranks and vanishing


@dataclass(frozen=True)
class FramedRank:
    rank: int
    based_onesets: int
    complete: bool
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"rank": self.rank, "based_onesets": self.based_onesets, "complete": self.complete, "notes": list(self.notes)}


def framed_rank(web: WebGraph, basepoint_edge: str, restrict_spinc: bool = False) -> FramedRank:
    """Sum of cone ranks of v over based 1-sets and their spin-c classes.

    The class count per 1-set comes from :func:`cover_shadow`; where the
    worked examples record a different count that one is used and noted.
    """
    if basepoint_edge not in web.edge_ids:
        raise KeyError(f"unknown edge {basepoint_edge!r}")
    fam = recognize(web)
    based = [s for s in enumerate_onesets(web) if s.is_r(basepoint_edge)]
    if not based:
        return FramedRank(0, 0, True, ("no based 1-set",))
    total, complete, notes = 0, True, []
    for s in based:
        ans = homology(web, s, "tilde", fam)
        if ans.status != "known":
            complete = False
            notes.append(f"1-set {list(s.key)}: unknown")
            continue
        per_class = len(ans.entries[0].module.summands)
        count = cover_shadow(web, s).naive_spinc_count
        if ans.discrepancy:
            notes.append(f"1-set {list(s.key)}: naive class count {count} replaced by {ans.stated_spinc_count}")
            count = ans.stated_spinc_count or 0
        total += per_class * (1 if restrict_spinc else count)
    return FramedRank(total, len(based), complete, tuple(notes))


@dataclass(frozen=True)
class VanishingVerdict:
    verdict: str  # zero | nonzero | unknown
    rule: str  # bridge | three_point | psc_odd | excision | none
    total_rank: int | None = None

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "rule": self.rule, "total_rank": self.total_rank}


def vanishing_check(web: WebGraph, s: OneSet) -> VanishingVerdict:
    if not is_oneset(web, s.c_edges):
        raise ValueError("not a 1-set of this web")
    if web.planar and cut_edges(web):
        return VanishingVerdict("zero", "bridge", 0)
    try:
        fam = recognize(web)
    except RecognitionError:
        return VanishingVerdict("unknown", "none")
    if fam.name == "twisted_handcuff":
        return VanishingVerdict("zero", "three_point", 0)
    if fam.name == "prism" and fam.n == 3 and rung_structure(web, s) is not None:
        return VanishingVerdict("zero", "three_point", 0)
    if fam.name in ("prism", "braid_closure", "petersen_embedding") and fam.n and fam.n % 2 == 1 and fam.n >= 5:
        if rung_structure(web, s) is not None:
            return VanishingVerdict("nonzero", "excision", 2)
    return VanishingVerdict("unknown", "none")
