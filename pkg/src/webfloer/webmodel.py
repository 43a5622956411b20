"""Webs (trivalent spatial graphs) and foam skeletons as half-edge structures.

A web document is JSON text of the form::

    {"vertices": [{"id": "v1"}, ...],
     "edges": [{"id": "e1", "ends": [["v1", 0], ["v2", 1]]},
               {"id": "c1", "ends": []}],
     "spatial": {"planar": true, "family": "theta"}}

Every vertex owns three ordered slots ``0, 1, 2``; each segment edge binds two
of them (both may belong to one vertex, which makes the edge a loop).  An edge
with no ends is a circle component.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

SEGMENT = "segment"
CIRCLE = "circle"
SLOTS_PER_VERTEX = 3

FAMILY_PATTERNS = {
    "handcuff": re.compile(r"^handcuff$"),
    "twisted_handcuff": re.compile(r"^twisted_handcuff$"),
    "hopf_handcuff": re.compile(r"^hopf_handcuff$"),
    "theta": re.compile(r"^theta$"),
    "tetrahedron": re.compile(r"^tetrahedron$"),
    "unknot": re.compile(r"^unknot$"),
    "prism": re.compile(r"^prism\((\d+)\)$"),
    "unlink": re.compile(r"^unlink\((\d+)\)$"),
    "braid_closure": re.compile(r"^braid_closure\(([-\d\s]*),\s*(\d+)\)$"),
}


class WebParseError(ValueError):
    """Raised for documents that cannot be turned into a valid web or foam.

    ``kind`` is a short machine-readable tag (``"malformed"``, ``"vertex arity"``,
    ``"dangling end"``, ``"duplicate id"``, ...), ``ident`` the offending id and
    ``offset`` a byte offset into the UTF-8 document.
    """

    def __init__(self, kind: str, message: str, ident: str | None = None, offset: int | None = None):
        self.kind = kind
        self.ident = ident
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{kind}: {message}{where}")


@dataclass(frozen=True)
class Edge:
    id: str
    kind: str
    ends: tuple[tuple[str, int], ...] = ()

    @property
    def is_loop(self) -> bool:
        return self.kind == SEGMENT and len(self.ends) == 2 and self.ends[0][0] == self.ends[1][0]


@dataclass(frozen=True)
class SpatialTags:
    planar: bool = False
    family: str | None = None
    # (c-circle id, r-cycle index) -> parity
    linking_parity: tuple[tuple[str, int, int], ...] = ()

    def family_name(self) -> str | None:
        if self.family is None:
            return None
        for name, pat in FAMILY_PATTERNS.items():
            if pat.match(self.family):
                return name
        return None

    def family_args(self) -> tuple:
        if self.family is None:
            return ()
        for pat in FAMILY_PATTERNS.values():
            m = pat.match(self.family)
            if m:
                return m.groups()
        return ()

    def circle_parity(self, circle_id: str) -> int | None:
        """Total mod-2 linking of a c-circle with the r-locus, or None if undeclared."""
        found = [p for c, _, p in self.linking_parity if c == circle_id]
        if not found:
            return None
        return sum(found) % 2


@dataclass(frozen=True)
class WebGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    spatial: SpatialTags | None = None
    # declared slot counts from the document, only kept when not 3
    declared_arity: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))

    # lookups are recomputed; webs are small
    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(f"unknown edge {edge_id!r}")

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    @property
    def segment_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == SEGMENT)

    @property
    def circle_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == CIRCLE)

    def slot_table(self) -> dict[str, list[str | None]]:
        """vertex -> [edge id bound at slot 0, 1, 2] (assumes a valid web)."""
        table: dict[str, list[str | None]] = {v: [None] * SLOTS_PER_VERTEX for v in self.vertices}
        for e in self.segment_edges:
            for v, s in e.ends:
                table[v][s] = e.id
        return table

    @property
    def planar(self) -> bool:
        return bool(self.spatial and self.spatial.planar)

    def with_spatial(self, spatial: SpatialTags | None) -> "WebGraph":
        return WebGraph(self.vertices, self.edges, spatial, self.declared_arity)


@dataclass(frozen=True)
class Seam:
    id: str
    facets: tuple[str, ...]


@dataclass(frozen=True)
class TetraPoint:
    """A tetrahedral point.

    Facet slot ``k`` lies between the seams at positions ``TETRA_SLOT_SEAMS[k]``
    of ``seams`` (the edges 01, 02, 03, 12, 13, 23 of the base K4).
    """

    id: str
    seams: tuple[str, ...]
    facets: tuple[str, ...]


TETRA_SLOT_SEAMS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class FoamSkeleton:
    facets: tuple[str, ...]
    seams: tuple[Seam, ...] = ()
    tetra_points: tuple[TetraPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(sorted(self.facets)))
        object.__setattr__(self, "seams", tuple(sorted(self.seams, key=lambda s: s.id)))
        object.__setattr__(self, "tetra_points", tuple(sorted(self.tetra_points, key=lambda t: t.id)))


# --------------------------------------------------------------------------
# validation


def validate(web: WebGraph) -> list[str]:
    """One diagnostic string per violated web invariant; empty iff valid."""
    diags: list[str] = []
    seen: set[str] = set()
    for v in web.vertices:
        if v in seen:
            diags.append(f"vertex {v}: duplicate id")
        seen.add(v)
    for e in web.edges:
        if e.id in seen:
            diags.append(f"edge {e.id}: duplicate id")
        seen.add(e.id)

    vertex_set = set(web.vertices)
    bound: dict[tuple[str, int], list[str]] = {}
    for e in web.edges:
        if e.kind == CIRCLE:
            if e.ends:
                diags.append(f"circle {e.id}: has attachment")
            continue
        if e.kind != SEGMENT:
            diags.append(f"edge {e.id}: unknown kind {e.kind!r}")
            continue
        if len(e.ends) != 2:
            diags.append(f"edge {e.id}: {len(e.ends)} end" + ("" if len(e.ends) == 1 else "s"))
        for v, s in e.ends:
            if v not in vertex_set:
                diags.append(f"edge {e.id}: dangling end at unknown vertex {v}")
            elif not (isinstance(s, int) and 0 <= s < SLOTS_PER_VERTEX):
                diags.append(f"vertex {v}: vertex arity (slot {s} out of range)")
            else:
                bound.setdefault((v, s), []).append(e.id)

    declared = dict(web.declared_arity)
    for v in web.vertices:
        if v in declared and declared[v] != SLOTS_PER_VERTEX:
            diags.append(f"vertex {v}: vertex arity {declared[v]}")
        for s in range(SLOTS_PER_VERTEX):
            owners = bound.get((v, s), [])
            if not owners:
                diags.append(f"vertex {v}: slot {s} unbound")
            elif len(owners) > 1:
                diags.append(f"vertex {v}: slot {s} bound {len(owners)} times ({', '.join(sorted(owners))})")
    if web.spatial is not None:
        sp = web.spatial
        if sp.family is not None and sp.family_name() is None:
            diags.append(f"spatial: unknown family tag {sp.family!r}")
        circle_ids = {e.id for e in web.circle_edges}
        for c, _, p in sp.linking_parity:
            if c not in circle_ids:
                diags.append(f"spatial: linking parity for non-circle {c}")
            if p not in (0, 1):
                diags.append(f"spatial: linking parity {p} for {c} not in {{0,1}}")
    return diags


def validate_foam(foam: FoamSkeleton) -> list[str]:
    diags: list[str] = []
    ids: set[str] = set()
    for f in foam.facets:
        if f in ids:
            diags.append(f"facet {f}: duplicate id")
        ids.add(f)
    facet_set = set(foam.facets)
    seam_by_id: dict[str, Seam] = {}
    for s in foam.seams:
        if s.id in ids:
            diags.append(f"seam {s.id}: duplicate id")
        ids.add(s.id)
        seam_by_id[s.id] = s
        if len(s.facets) != 3:
            diags.append(f"seam {s.id}: {len(s.facets)} facet slots")
        for f in s.facets:
            if f not in facet_set:
                diags.append(f"seam {s.id}: unknown facet {f}")
    for t in foam.tetra_points:
        if t.id in ids:
            diags.append(f"tetra point {t.id}: duplicate id")
        ids.add(t.id)
        if len(t.seams) != 4:
            diags.append(f"tetra point {t.id}: {len(t.seams)} seams")
        if len(t.facets) != 6:
            diags.append(f"tetra point {t.id}: {len(t.facets)} facet slots")
        for sid in t.seams:
            if sid not in seam_by_id:
                diags.append(f"tetra point {t.id}: unknown seam {sid}")
        for f in t.facets:
            if f not in facet_set:
                diags.append(f"tetra point {t.id}: unknown facet {f}")
        if len(t.seams) == 4 and len(t.facets) == 6 and all(s in seam_by_id for s in t.seams):
            for k, (a, b) in enumerate(TETRA_SLOT_SEAMS):
                f = t.facets[k]
                for idx in (a, b):
                    if f not in seam_by_id[t.seams[idx]].facets:
                        diags.append(
                            f"tetra point {t.id}: facet slot {k} ({f}) not incident to seam {t.seams[idx]}"
                        )
    return diags


# --------------------------------------------------------------------------
# parsing


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


def _locate_id(text: str, ident: str, occurrence: int = 0) -> int | None:
    pat = re.compile(r'"id"\s*:\s*' + re.escape(json.dumps(ident)))
    matches = list(pat.finditer(text))
    if not matches:
        idx = text.find(json.dumps(ident))
        return _byte_offset(text, idx) if idx >= 0 else None
    m = matches[min(occurrence, len(matches) - 1)]
    return _byte_offset(text, m.start())


def _load_json(text: str | bytes) -> tuple[str, Any]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise WebParseError("malformed", "document is not UTF-8", offset=exc.start) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebParseError("malformed", exc.msg, offset=_byte_offset(text, exc.pos)) from exc
    if not isinstance(doc, dict):
        raise WebParseError("malformed", "top level must be an object", offset=0)
    return text, doc


def _require(cond: bool, text: str, message: str, ident: str | None = None):
    if not cond:
        off = _locate_id(text, ident) if ident is not None else 0
        raise WebParseError("malformed", message, ident=ident, offset=off)


def _parse_spatial(text: str, raw: Any) -> SpatialTags | None:
    if raw is None:
        return None
    _require(isinstance(raw, dict), text, "spatial must be an object")
    lp = raw.get("linking_parity", [])
    _require(isinstance(lp, list), text, "linking_parity must be a list")
    triples = []
    for item in lp:
        _require(isinstance(item, list) and len(item) == 3, text, "linking_parity entries are [circle, cycle, parity]")
        c, i, p = item
        _require(isinstance(c, str) and isinstance(i, int) and isinstance(p, int), text, "bad linking_parity entry")
        triples.append((c, i, p))
    family = raw.get("family")
    _require(family is None or isinstance(family, str), text, "family must be a string")
    return SpatialTags(planar=bool(raw.get("planar", False)), family=family, linking_parity=tuple(sorted(triples)))


def load_web(text: str | bytes) -> WebGraph:
    """Parse a web document without checking web invariants (see :func:`validate`)."""
    text, doc = _load_json(text)
    verts_raw = doc.get("vertices", [])
    edges_raw = doc.get("edges", [])
    _require(isinstance(verts_raw, list), text, "vertices must be a list")
    _require(isinstance(edges_raw, list), text, "edges must be a list")
    vertices, arity = [], []
    for v in verts_raw:
        _require(isinstance(v, dict) and isinstance(v.get("id"), str), text, "vertex needs a string id")
        vertices.append(v["id"])
        if "slots" in v:
            slots = v["slots"]
            n = len(slots) if isinstance(slots, list) else slots
            _require(isinstance(n, int), text, "slots must be a count or a list", v["id"])
            if n != SLOTS_PER_VERTEX:
                arity.append((v["id"], n))
    edges = []
    for e in edges_raw:
        _require(isinstance(e, dict) and isinstance(e.get("id"), str), text, "edge needs a string id")
        ends_raw = e.get("ends", [])
        _require(isinstance(ends_raw, list), text, "ends must be a list", e["id"])
        ends = []
        for end in ends_raw:
            _require(
                isinstance(end, list) and len(end) == 2 and isinstance(end[0], str) and isinstance(end[1], int),
                text,
                "each end is [vertex, slot]",
                e["id"],
            )
            ends.append((end[0], end[1]))
        kind = e.get("kind", CIRCLE if not ends else SEGMENT)
        edges.append(Edge(e["id"], kind, tuple(sorted(ends))))
    return WebGraph(tuple(vertices), tuple(edges), _parse_spatial(text, doc.get("spatial")), tuple(sorted(arity)))


_DIAG_KIND = (
    ("duplicate id", "duplicate id"),
    ("vertex arity", "vertex arity"),
    ("unbound", "vertex arity"),
    ("bound ", "vertex arity"),
    ("dangling", "dangling end"),
    (" end", "dangling end"),
    ("has attachment", "circle attachment"),
)


def parse_web(text: str | bytes) -> WebGraph:
    """Parse and validate a web document; raises :class:`WebParseError`."""
    web = load_web(text)
    diags = validate(web)
    if diags:
        raw = text.decode("utf-8") if isinstance(text, bytes) else text
        first = diags[0]
        ident = first.split(":", 1)[0].split()[-1]
        kind = next((k for needle, k in _DIAG_KIND if needle in first), "invalid")
        occurrence = 1 if kind == "duplicate id" else 0
        raise WebParseError(kind, "; ".join(diags), ident=ident, offset=_locate_id(raw, ident, occurrence))
    return web


def web_to_doc(web: WebGraph) -> dict:
    doc: dict[str, Any] = {
        "vertices": [{"id": v} for v in web.vertices],
        "edges": [{"id": e.id, "ends": [[v, s] for v, s in e.ends]} for e in web.edges],
    }
    if web.spatial is not None:
        sp: dict[str, Any] = {"planar": web.spatial.planar}
        if web.spatial.family is not None:
            sp["family"] = web.spatial.family
        if web.spatial.linking_parity:
            sp["linking_parity"] = [list(t) for t in web.spatial.linking_parity]
        doc["spatial"] = sp
    return doc


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize_web(web: WebGraph) -> str:
    return canonical_json(web_to_doc(web))


def parse_foam(text: str | bytes) -> FoamSkeleton:
    text, doc = _load_json(text)
    facets = []
    for f in doc.get("facets", []):
        _require(isinstance(f, dict) and isinstance(f.get("id"), str), text, "facet needs a string id")
        facets.append(f["id"])
    seams = []
    for s in doc.get("seams", []):
        _require(isinstance(s, dict) and isinstance(s.get("id"), str), text, "seam needs a string id")
        inc = s.get("facets", [])
        _require(isinstance(inc, list) and all(isinstance(x, str) for x in inc), text, "seam facets", s["id"])
        seams.append(Seam(s["id"], tuple(inc)))
    tetras = []
    for t in doc.get("tetra_points", []):
        _require(isinstance(t, dict) and isinstance(t.get("id"), str), text, "tetra point needs a string id")
        tetras.append(TetraPoint(t["id"], tuple(t.get("seams", [])), tuple(t.get("facets", []))))
    foam = FoamSkeleton(tuple(facets), tuple(seams), tuple(tetras))
    diags = validate_foam(foam)
    if diags:
        first = diags[0]
        ident = first.split(":", 1)[0].split()[-1]
        kind = "duplicate id" if "duplicate" in first else "foam arity" if "slots" in first or "seams" in first else "invalid"
        raise WebParseError(kind, "; ".join(diags), ident=ident, offset=_locate_id(text, ident))
    return foam


def foam_to_doc(foam: FoamSkeleton) -> dict:
    return {
        "facets": [{"id": f} for f in foam.facets],
        "seams": [{"id": s.id, "facets": list(s.facets)} for s in foam.seams],
        "tetra_points": [{"id": t.id, "seams": list(t.seams), "facets": list(t.facets)} for t in foam.tetra_points],
    }


def serialize_foam(foam: FoamSkeleton) -> str:
    return canonical_json(foam_to_doc(foam))


# --------------------------------------------------------------------------
# graph helpers shared by onesets / tait / catalogue


def adjacency(web: WebGraph) -> dict[str, list[tuple[str, str]]]:
    """vertex -> [(edge id, other vertex)] over non-loop segment edges."""
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in web.vertices}
    for e in web.segment_edges:
        if e.is_loop:
            continue
        (a, _), (b, _) = e.ends
        adj[a].append((e.id, b))
        adj[b].append((e.id, a))
    return adj


def vertex_components(web: WebGraph) -> list[list[str]]:
    adj = adjacency(web)
    seen: set[str] = set()
    comps = []
    for v in web.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for _, y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def cut_edges(web: WebGraph) -> list[str]:
    """Segment edges whose removal disconnects their component (graph bridges)."""
    base = len(vertex_components(web))
    out = []
    for e in web.segment_edges:
        if e.is_loop:
            continue
        rest = WebGraph(web.vertices, tuple(x for x in web.edges if x.id != e.id))
        if len(vertex_components(rest)) > base:
            out.append(e.id)
    return out


def make_web(
    vertices: Iterable[str],
    segments: Mapping[str, tuple[tuple[str, int], tuple[str, int]]],
    circles: Iterable[str] = (),
    spatial: SpatialTags | None = None,
) -> WebGraph:
    edges = [Edge(eid, SEGMENT, tuple(sorted(ends))) for eid, ends in segments.items()]
    edges += [Edge(cid, CIRCLE) for cid in circles]
    return WebGraph(tuple(vertices), tuple(edges), spatial)
