"""Tait colourings and the even-1-set identity."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .onesets import enumerate_onesets, r_cycles
from .webmodel import SEGMENT, Edge, WebGraph, validate, vertex_components


@dataclass(frozen=True)
class TaitReport:
    tait_count: int
    identity_rhs: int
    even_onesets: tuple[tuple[int, int], ...]  # (1-set index, n(s))
    ok: bool

    def as_dict(self) -> dict:
        return {
            "tait_count": self.tait_count,
            "identity_rhs": self.identity_rhs,
            "even_onesets": [list(t) for t in self.even_onesets],
            "ok": self.ok,
        }


def _edge_order(web: WebGraph) -> list[Edge]:
    """Segment edges in BFS order so constraints close early."""
    segs = list(web.segment_edges)
    at: dict[str, list[Edge]] = {v: [] for v in web.vertices}
    for e in segs:
        for v, _ in e.ends:
            at[v].append(e)
    order: list[Edge] = []
    placed: set[str] = set()
    for root in web.vertices:
        queue = [root]
        visited = {root}
        while queue:
            v = queue.pop(0)
            for e in at[v]:
                if e.id not in placed:
                    placed.add(e.id)
                    order.append(e)
                for w, _ in e.ends:
                    if w not in visited:
                        visited.add(w)
                        queue.append(w)
    return order


def count_tait(web: WebGraph) -> int:
    """Number of proper 3-edge-colourings (backtracking with forward checks)."""
    segs = web.segment_edges
    if any(e.is_loop for e in segs):
        return 0
    factor = 3 ** len(web.circle_edges)
    order = _edge_order(web)
    used: dict[str, int] = {v: 0 for v in web.vertices}  # colour bitmask per vertex
    ends = [tuple(v for v, _ in e.ends) for e in order]

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        a, b = ends[k]
        free = 7 & ~(used[a] | used[b])
        total = 0
        for col in (1, 2, 4):
            if free & col:
                used[a] |= col
                used[b] |= col
                total += rec(k + 1)
                used[a] &= ~col
                used[b] &= ~col
        return total

    return factor * rec(0)


def count_tait_exhaustive(web: WebGraph, max_edges: int = 16, chunk_bits: int = 12) -> int:
    """Oracle: test every assignment of 3 colours to the segment edges."""
    segs = list(web.segment_edges)
    m = len(segs)
    if m > max_edges:
        raise ValueError(f"{m} segment edges exceeds exhaustive limit {max_edges}")
    factor = 3 ** len(web.circle_edges)
    if m == 0:
        return factor
    col_of = {e.id: k for k, e in enumerate(segs)}
    table = web.slot_table()
    triples = np.array([[col_of[eid] for eid in table[v]] for v in web.vertices], dtype=np.int64).reshape(-1, 3)
    powers = 3 ** np.arange(m, dtype=np.int64)
    total = 0
    step = 3 ** min(m, chunk_bits)
    for lo in range(0, 3**m, step):
        idx = np.arange(lo, min(lo + step, 3**m), dtype=np.int64)
        colours = (idx[:, None] // powers[None, :]) % 3
        ok = np.ones(len(idx), dtype=bool)
        for x, y, z in triples:
            cx, cy, cz = colours[:, x], colours[:, y], colours[:, z]
            ok &= (cx != cy) & (cy != cz) & (cx != cz)
        total += int(ok.sum())
    return factor * total


def identity_rhs(web: WebGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    evens = []
    total = 0
    for k, s in enumerate(enumerate_onesets(web)):
        dec = r_cycles(web, s)
        if all(c % 2 == 0 for c in dec.c_endpoint_count):
            evens.append((k, dec.n))
            total += 2**dec.n
    return total, tuple(evens)


def verify_identity(web: WebGraph, exhaustive: bool = False) -> TaitReport:
    lhs = count_tait_exhaustive(web) if exhaustive else count_tait(web)
    rhs, evens = identity_rhs(web)
    return TaitReport(lhs, rhs, evens, lhs == rhs)


def random_cubic_multigraphs(max_vertices: int, seed: int, count: int) -> list[WebGraph]:
    """Connected cubic multigraphs (loops allowed) by the configuration model.

    Vertex counts are drawn uniformly from the even numbers in ``[2, max_vertices]``.
    """
    if isinstance(max_vertices, bool) or not isinstance(max_vertices, int):
        raise TypeError("max_vertices must be an int")
    if max_vertices % 2:
        raise ValueError("cubic graphs need an even number of vertices")
    if not 2 <= max_vertices <= 12:
        raise ValueError("max_vertices must lie in [2, 12]")
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = random.Random(seed)
    sizes = list(range(2, max_vertices + 1, 2))
    out: list[WebGraph] = []
    while len(out) < count:
        n = rng.choice(sizes)
        width = len(str(n - 1))
        verts = [f"v{i:0{width}d}" for i in range(n)]
        stubs = [(v, s) for v in verts for s in range(3)]
        rng.shuffle(stubs)
        ewidth = len(str(len(stubs) // 2 - 1))
        edges = tuple(
            Edge(f"e{k:0{ewidth}d}", SEGMENT, tuple(sorted((stubs[2 * k], stubs[2 * k + 1]))))
            for k in range(len(stubs) // 2)
        )
        web = WebGraph(tuple(verts), edges)
        if len(vertex_components(web)) != 1:
            continue
        assert not validate(web)
        out.append(web)
    return out
