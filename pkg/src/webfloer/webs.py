"""Builders for the named web families used throughout the package.

Prism-like webs share one layout: outer vertices ``a<i>`` joined cyclically by
edges ``o<i>`` (a_i to a_{i+1}), inner vertices ``b<i>`` joined by ``i<i>`` and
rungs ``r<i>`` from ``a<i>`` to ``b<pi(i)>``.  Slot 0 and 1 of each vertex hold
its two ring edges and slot 2 its rung.
"""

from __future__ import annotations

from typing import Sequence

from .webmodel import CIRCLE, SEGMENT, Edge, SpatialTags, WebGraph, make_web


def _name(prefix: str, i: int, n: int) -> str:
    width = len(str(n - 1)) if n > 1 else 1
    return f"{prefix}{i:0{width}d}"


def unknot(edge_id: str = "c1") -> WebGraph:
    return make_web([], {}, [edge_id], SpatialTags(planar=True, family="unknot"))


def unlink(n: int) -> WebGraph:
    if n < 1:
        raise ValueError("unlink needs at least one component")
    ids = [f"c{i + 1}" for i in range(n)]
    return make_web([], {}, ids, SpatialTags(planar=True, family=f"unlink({n})" if n > 1 else "unknot"))


def theta() -> WebGraph:
    segs = {f"e{k + 1}": (("v1", k), ("v2", k)) for k in range(3)}
    return make_web(["v1", "v2"], segs, spatial=SpatialTags(planar=True, family="theta"))


def tetrahedron() -> WebGraph:
    verts = ["v1", "v2", "v3", "v4"]
    next_slot = {v: 0 for v in verts}
    segs = {}
    for x in range(4):
        for y in range(x + 1, 4):
            a, b = verts[x], verts[y]
            segs[f"e{x + 1}{y + 1}"] = ((a, next_slot[a]), (b, next_slot[b]))
            next_slot[a] += 1
            next_slot[b] += 1
    return make_web(verts, segs, spatial=SpatialTags(planar=True, family="tetrahedron"))


def ring_with_rungs(perm: Sequence[int], spatial: SpatialTags | None = None) -> WebGraph:
    """Two n-cycles plus rungs ``a_i -- b_perm[i]``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {perm!r}")
    a = [_name("a", i, n) for i in range(n)]
    b = [_name("b", i, n) for i in range(n)]
    segs = {}
    for i in range(n):
        j = (i + 1) % n
        segs[_name("o", i, n)] = ((a[i], 1), (a[j], 0))
        segs[_name("i", i, n)] = ((b[i], 1), (b[j], 0))
        segs[_name("r", i, n)] = ((a[i], 2), (b[perm[i]], 2))
    return make_web(a + b, segs, spatial=spatial)


def prism(n: int) -> WebGraph:
    """The prism L_n (n = 1 is the handcuff graph, n = 2 has digon rings)."""
    if n < 1:
        raise ValueError("prism needs n >= 1")
    return ring_with_rungs(list(range(n)), SpatialTags(planar=True, family=f"prism({n})"))


def braid_permutation(word: Sequence[int], n: int) -> list[int]:
    """Permutation of strand positions induced by a braid word.

    Generator ``+-k`` (1 <= k < n) crosses positions ``k-1`` and ``k``; the
    sign only records the crossing and does not affect the permutation.
    Returns ``perm`` with strand starting at position ``i`` ending at ``perm[i]``.
    """
    pos = list(range(n))  # pos[p] = strand currently at position p
    for g in word:
        k = abs(g)
        if not 1 <= k < n:
            raise ValueError(f"generator {g} out of range for {n} strands")
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
    perm = [0] * n
    for p, strand in enumerate(pos):
        perm[strand] = p
    return perm


def format_braid_tag(word: Sequence[int], n: int) -> str:
    return f"braid_closure({' '.join(str(g) for g in word)}, {n})"


def braid_closure(word: Sequence[int], n: int) -> WebGraph:
    perm = braid_permutation(word, n)
    return ring_with_rungs(perm, SpatialTags(planar=False, family=format_braid_tag(word, n)))


def sorting_word(perm: Sequence[int]) -> list[int]:
    """A positive braid word whose permutation is ``perm`` (bubble sort)."""
    n = len(perm)
    # target[p] = strand that must end at position p
    target = [0] * n
    for strand, p in enumerate(perm):
        target[p] = strand
    cur = list(range(n))
    word = []
    for p in range(n):
        q = cur.index(target[p])
        while q > p:
            cur[q - 1], cur[q] = cur[q], cur[q - 1]
            word.append(q)
            q -= 1
    return word


PETERSEN_PERM = (0, 2, 4, 1, 3)


def petersen() -> WebGraph:
    """Petersen graph as a 5-strand braid closure (outer pentagon, inner pentagram)."""
    word = sorting_word(PETERSEN_PERM)
    assert braid_permutation(word, 5) == list(PETERSEN_PERM)
    return ring_with_rungs(PETERSEN_PERM, SpatialTags(planar=False, family=format_braid_tag(word, 5)))


def handcuff() -> WebGraph:
    return prism(1).with_spatial(SpatialTags(planar=True, family="handcuff"))


def twisted_handcuff() -> WebGraph:
    return prism(1).with_spatial(SpatialTags(planar=False, family="twisted_handcuff"))


def hopf_handcuff() -> WebGraph:
    return prism(1).with_spatial(SpatialTags(planar=False, family="hopf_handcuff"))


def disjoint_union(first: WebGraph, second: WebGraph, prefix: str = "u_") -> WebGraph:
    """Union with the second web's ids prefixed; spatial tags of ``first`` kept, planarity and-ed."""
    ren = {v: prefix + v for v in second.vertices}
    edges = list(first.edges)
    for e in second.edges:
        edges.append(Edge(prefix + e.id, e.kind, tuple((ren[v], s) for v, s in e.ends)))
    planar = first.planar and second.planar
    sp = None
    if first.spatial is not None or second.spatial is not None:
        sp = SpatialTags(planar=planar)
    return WebGraph(first.vertices + tuple(ren.values()), tuple(edges), sp)


def theta_plus_unknot() -> WebGraph:
    return disjoint_union(theta(), unknot("p"), prefix="")


def with_circle(web: WebGraph, circle_id: str = "p") -> WebGraph:
    """Add one unlinked circle component (planar webs stay planar)."""
    if circle_id in set(web.vertices) | set(web.edge_ids):
        raise ValueError(f"id {circle_id!r} already used")
    sp = SpatialTags(planar=web.planar) if web.spatial is not None else None
    return WebGraph(web.vertices, web.edges + (Edge(circle_id, CIRCLE),), sp)


NAMED = {
    "unknot": unknot,
    "theta": theta,
    "tetrahedron": tetrahedron,
    "handcuff": handcuff,
    "twisted_handcuff": twisted_handcuff,
    "hopf_handcuff": hopf_handcuff,
    "petersen": petersen,
    "theta_plus_unknot": theta_plus_unknot,
}

__all__ = [
    "SEGMENT",
    "braid_closure",
    "braid_permutation",
    "disjoint_union",
    "handcuff",
    "hopf_handcuff",
    "petersen",
    "prism",
    "ring_with_rungs",
    "sorting_word",
    "tetrahedron",
    "theta",
    "theta_plus_unknot",
    "twisted_handcuff",
    "unknot",
    "unlink",
    "with_circle",
]
