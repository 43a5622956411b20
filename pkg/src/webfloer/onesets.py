"""1-sets of webs and foams, r-cycle decompositions and cover bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .webmodel import (
    CIRCLE,
    TETRA_SLOT_SEAMS,
    FoamSkeleton,
    WebGraph,
)


@dataclass(frozen=True)
class OneSet:
    """An r/c colouring given by its c-coloured edges; everything else is r."""

    web: WebGraph
    c_edges: frozenset[str]

    @property
    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.c_edges))

    @property
    def r_edges(self) -> list[str]:
        return [e for e in self.web.edge_ids if e not in self.c_edges]

    def is_r(self, edge_id: str) -> bool:
        return edge_id not in self.c_edges


@dataclass(frozen=True)
class RCycle:
    # (vertex, edge) steps; a lone r-circle is ((None, circle_id),)
    steps: tuple[tuple[str | None, str], ...]
    c_endpoint_count: int

    @property
    def edges(self) -> tuple[str, ...]:
        return tuple(e for _, e in self.steps)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.steps if v is not None)

    @property
    def is_circle(self) -> bool:
        return self.steps[0][0] is None


@dataclass(frozen=True)
class RCycleDecomposition:
    cycles: tuple[RCycle, ...]

    @property
    def n(self) -> int:
        return len(self.cycles)

    @property
    def c_endpoint_count(self) -> list[int]:
        return [c.c_endpoint_count for c in self.cycles]

    def cycle_of_edge(self, edge_id: str) -> int | None:
        for k, c in enumerate(self.cycles):
            if edge_id in c.edges:
                return k
        return None


@dataclass(frozen=True)
class CComponent:
    edge: str
    kind: str  # "arc" | "circle"
    endpoints: tuple[str, str] | None


@dataclass(frozen=True)
class LiftedC:
    source: str
    lift_kind: str  # invariant_circle | swapped_pair | single_wrapping_circle


@dataclass(frozen=True)
class CoverShadow:
    b1: int
    lifted_c: tuple[LiftedC, ...]
    naive_spinc_count: int
    even: bool
    b1_rule: str = "planar: n(s) - 1"


@dataclass(frozen=True)
class FoamOneSet:
    foam: FoamSkeleton
    c_facets: frozenset[str]

    @property
    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.c_facets))


class TetraAssertionError(AssertionError):
    pass


# --------------------------------------------------------------------------
# webs


def is_oneset(web: WebGraph, c_edges: Iterable[str]) -> bool:
    c = set(c_edges)
    unknown = c - set(web.edge_ids)
    if unknown:
        raise KeyError(f"unknown edge id(s): {', '.join(sorted(unknown))}")
    per_vertex = {v: 0 for v in web.vertices}
    for e in web.segment_edges:
        if e.id not in c:
            continue
        if e.is_loop:
            return False
        for v, _ in e.ends:
            per_vertex[v] += 1
    return all(k == 1 for k in per_vertex.values())


def _perfect_matchings(web: WebGraph) -> list[frozenset[str]]:
    edges_at: dict[str, list[tuple[str, str]]] = {v: [] for v in web.vertices}
    for e in web.segment_edges:
        if e.is_loop:
            continue
        (a, _), (b, _) = e.ends
        edges_at[a].append((e.id, b))
        edges_at[b].append((e.id, a))
    out: list[frozenset[str]] = []
    covered: set[str] = set()
    chosen: list[str] = []
    order = list(web.vertices)

    def rec(idx: int):
        while idx < len(order) and order[idx] in covered:
            idx += 1
        if idx == len(order):
            out.append(frozenset(chosen))
            return
        v = order[idx]
        covered.add(v)
        for eid, w in edges_at[v]:
            if w in covered:
                continue
            covered.add(w)
            chosen.append(eid)
            rec(idx + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    rec(0)
    return out


def enumerate_onesets(web: WebGraph) -> list[OneSet]:
    """All labelled 1-sets, sorted by their sorted tuple of c-edge ids."""
    circles = [e.id for e in web.circle_edges]
    out = []
    for m in _perfect_matchings(web):
        for mask in range(1 << len(circles)):
            extra = {circles[i] for i in range(len(circles)) if mask >> i & 1}
            out.append(OneSet(web, frozenset(m | extra)))
    out.sort(key=lambda s: s.key)
    return out


def r_cycles(web: WebGraph, s: OneSet) -> RCycleDecomposition:
    c = s.c_edges
    # r half-edges at each vertex: list of (edge id, slot)
    r_at: dict[str, list[tuple[str, int]]] = {v: [] for v in web.vertices}
    ends: dict[str, tuple[tuple[str, int], ...]] = {}
    for e in web.segment_edges:
        if e.id in c:
            continue
        ends[e.id] = e.ends
        for v, slot in e.ends:
            r_at[v].append((e.id, slot))

    seen: set[str] = set()
    cycles: list[RCycle] = []
    for eid in sorted(ends):
        if eid in seen:
            continue
        steps: list[tuple[str, str]] = []
        # enter eid at its first end and walk away from it
        start = ends[eid][0]
        here = start
        cur = eid
        while True:
            seen.add(cur)
            a, b = ends[cur]
            far = b if here == a else a
            v, slot = far
            steps.append((v, cur))
            other = [(x, t) for x, t in r_at[v] if (x, t) != (cur, slot)]
            if len(other) != 1:
                raise ValueError(f"vertex {v} does not have two r half-edges")
            nxt, nslot = other[0]
            here = (v, nslot)
            if (nxt, nslot) == (eid, start[1]) and v == start[0]:
                break
            cur = nxt
        cycles.append(RCycle(tuple(steps), len(steps)))
    for e in web.circle_edges:
        if e.id not in c:
            cycles.append(RCycle(((None, e.id),), 0))
    cycles.sort(key=lambda cy: min(cy.edges))
    return RCycleDecomposition(tuple(cycles))


def n_of(web: WebGraph, s: OneSet) -> int:
    return r_cycles(web, s).n


def is_even(web: WebGraph, s: OneSet) -> bool:
    return all(k % 2 == 0 for k in r_cycles(web, s).c_endpoint_count)


def c_components(web: WebGraph, s: OneSet) -> list[CComponent]:
    out = []
    for eid in sorted(s.c_edges):
        e = web.edge(eid)
        if e.kind == CIRCLE:
            out.append(CComponent(eid, "circle", None))
        else:
            (a, _), (b, _) = e.ends
            out.append(CComponent(eid, "arc", (a, b)))
    return out


def cover_shadow(web: WebGraph, s: OneSet) -> CoverShadow:
    """Counting shadow of the real double cover branched along the r-locus.

    ``naive_spinc_count`` gives one free isotropy bit per lifted c-component;
    the catalogue records where the computed examples disagree with this rule.
    """
    dec = r_cycles(web, s)
    lifted = []
    for comp in c_components(web, s):
        if comp.kind == "arc":
            lifted.append(LiftedC(comp.edge, "invariant_circle"))
            continue
        if web.planar:
            parity = 0
        else:
            parity = web.spatial.circle_parity(comp.edge) if web.spatial else None
            if parity is None:
                raise ValueError(f"non-planar web: no linking parity declared for c-circle {comp.edge}")
        lifted.append(LiftedC(comp.edge, "swapped_pair" if parity == 0 else "single_wrapping_circle"))
    even = all(k % 2 == 0 for k in dec.c_endpoint_count)
    return CoverShadow(max(dec.n - 1, 0), tuple(lifted), 2 ** len(lifted), even)


# --------------------------------------------------------------------------
# foams


def _seam_slots(foam: FoamSkeleton) -> list[tuple[str, ...]]:
    return [s.facets for s in foam.seams]


def enumerate_foam_onesets(foam: FoamSkeleton) -> list[FoamOneSet]:
    """Facet subsets with exactly one c-slot per seam, in canonical order.

    The tetrahedral-point property is checked on each result afterwards.
    """
    facets = list(foam.facets)
    index = {f: k for k, f in enumerate(facets)}
    seams = [[index[f] for f in fs] for fs in _seam_slots(foam)]
    # a seam can be checked once its last facet is decided
    closes_at: dict[int, list[int]] = {}
    for si, fs in enumerate(seams):
        closes_at.setdefault(max(fs) if fs else -1, []).append(si)
    if any(not fs for fs in seams):
        return []
    out: list[FoamOneSet] = []
    colour = [False] * len(facets)

    def rec(k: int):
        if k == len(facets):
            out.append(FoamOneSet(foam, frozenset(f for f, col in zip(facets, colour) if col)))
            return
        for val in (False, True):
            colour[k] = val
            if all(sum(colour[j] for j in seams[si]) == 1 for si in closes_at.get(k, ())):
                rec(k + 1)
        colour[k] = False

    rec(0)
    for fs in out:
        check_tetra_points(fs)
    out.sort(key=lambda f: f.key)
    return out


def check_tetra_points(fs: FoamOneSet) -> None:
    """Exactly two c facet slots at each tetrahedral point, meeting no common seam."""
    for t in fs.foam.tetra_points:
        c_slots = [k for k, f in enumerate(t.facets) if f in fs.c_facets]
        if len(c_slots) != 2:
            raise TetraAssertionError(f"tetra point {t.id}: {len(c_slots)} c facet slots")
        p, q = (set(TETRA_SLOT_SEAMS[k]) for k in c_slots)
        if p & q:
            raise TetraAssertionError(f"tetra point {t.id}: c facets share a seam")
