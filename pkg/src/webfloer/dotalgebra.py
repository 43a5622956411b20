"""Dot operators attached to a 1-set.

With ``m = n(s)`` r-cycles the algebra is ``F2[u_1..u_m, U] / (u_i^2 = U)``.
A monomial is stored as ``(p, mask)`` meaning ``U^p * prod_{i in mask} u_i``;
since every ``u_i`` squares to ``U`` this form is unique.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .onesets import OneSet, RCycleDecomposition, r_cycles
from .webmodel import WebGraph

Monomial = tuple[int, int]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    (p, s), (q, t) = a, b
    return (p + q + _popcount(s & t), s ^ t)


def mono_degree(m: Monomial) -> int:
    return -(2 * m[0] + _popcount(m[1]))


@dataclass(frozen=True)
class DotContext:
    oneset: OneSet
    cycles: RCycleDecomposition

    @classmethod
    def of(cls, web: WebGraph, s: OneSet) -> "DotContext":
        return cls(s, r_cycles(web, s))

    @property
    def n(self) -> int:
        return self.cycles.n


@dataclass(frozen=True)
class AlgebraElement:
    context: DotContext
    terms: frozenset[Monomial]

    def _check(self, other: "AlgebraElement"):
        if self.context != other.context:
            raise ValueError("elements belong to different (web, 1-set) contexts")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.context, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self) -> str:
        return format_element(self)


def element(ctx: DotContext, terms=()) -> AlgebraElement:
    acc: set[Monomial] = set()
    for m in terms:
        acc ^= {m}
    return AlgebraElement(ctx, frozenset(acc))


def zero(ctx: DotContext) -> AlgebraElement:
    return AlgebraElement(ctx, frozenset())


def one(ctx: DotContext) -> AlgebraElement:
    return AlgebraElement(ctx, frozenset({(0, 0)}))


def U(ctx: DotContext) -> AlgebraElement:
    return AlgebraElement(ctx, frozenset({(1, 0)}))


def cycle_generator(ctx: DotContext, i: int) -> AlgebraElement:
    if not 0 <= i < ctx.n:
        raise IndexError(f"cycle index {i} out of range (n = {ctx.n})")
    return AlgebraElement(ctx, frozenset({(0, 1 << i)}))


def dot_generator(ctx: DotContext, edge_id: str) -> AlgebraElement:
    """The dot on an edge: zero on c-edges, the cycle generator on r-edges."""
    web = ctx.oneset.web
    if edge_id not in web.edge_ids:
        raise KeyError(f"unknown edge {edge_id!r}")
    if edge_id in ctx.oneset.c_edges:
        return zero(ctx)
    k = ctx.cycles.cycle_of_edge(edge_id)
    assert k is not None
    return cycle_generator(ctx, k)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    acc: set[Monomial] = set()
    for x in a.terms:
        for y in b.terms:
            acc ^= {mono_mul(x, y)}
    return AlgebraElement(a.context, frozenset(acc))


def format_monomial(m: Monomial) -> str:
    p, mask = m
    parts = []
    if p == 1:
        parts.append("U")
    elif p > 1:
        parts.append(f"U^{p}")
    i = 0
    while mask >> i:
        if mask >> i & 1:
            parts.append(f"u{i + 1}")
        i += 1
    return "*".join(parts) if parts else "1"


def format_element(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    # highest degree first, then by cycle mask
    ordered = sorted(a.terms, key=lambda m: (-mono_degree(m), m[1], m[0]))
    return " + ".join(format_monomial(m) for m in ordered)


_TOKEN = re.compile(r"^(?:U(?:\^(\d+))?|1|0|([A-Za-z_][\w.-]*?)(?:\^(\d+))?)$")


def parse_expression(ctx: DotContext, text: str) -> AlgebraElement:
    """Evaluate a sum of products of edge ids, ``U`` and ``1``, e.g. ``"e1*e1 + e2*U"``."""
    total = zero(ctx)
    if not text.strip():
        raise ValueError("empty expression")
    for summand in text.split("+"):
        prod = one(ctx)
        factors = [f.strip() for f in summand.split("*")]
        if any(not f for f in factors):
            raise ValueError(f"malformed product {summand.strip()!r}")
        for f in factors:
            m = _TOKEN.match(f)
            if not m:
                raise ValueError(f"bad factor {f!r}")
            if f == "1":
                factor = one(ctx)
            elif f == "0":
                factor = zero(ctx)
            elif f == "U" or f.startswith("U^"):
                factor = AlgebraElement(ctx, frozenset({(int(m.group(1) or 1), 0)}))
            else:
                base = one(ctx)
                gen = dot_generator(ctx, m.group(2))
                for _ in range(int(m.group(3) or 1)):
                    base = multiply(base, gen)
                factor = base
            prod = multiply(prod, factor)
        total = total + prod
    return total


@dataclass(frozen=True)
class RelationFailure:
    vertex: str
    relation: str
    value: str


def verify_vertex_relations(web: WebGraph, s: OneSet) -> list[RelationFailure]:
    """Check the three symmetric-function relations among the dots at each vertex."""
    ctx = DotContext.of(web, s)
    table = web.slot_table()
    failures = []
    for v in web.vertices:
        d1, d2, d3 = (dot_generator(ctx, eid) for eid in table[v])
        checks = {
            "sum": (d1 + d2 + d3, zero(ctx)),
            "pairs": (d1 * d2 + d2 * d3 + d3 * d1, U(ctx)),
            "product": (d1 * d2 * d3, zero(ctx)),
        }
        for name, (lhs, rhs) in checks.items():
            if lhs != rhs:
                failures.append(RelationFailure(v, name, format_element(lhs)))
    return failures


def rank_over_U(web: WebGraph, s: OneSet) -> int:
    return 2 ** r_cycles(web, s).n


def normal_forms_up_to(n_generators: int, max_degree: int) -> list[Monomial]:
    """Normal-form monomials with ``|degree| <= max_degree``."""
    out = []
    for k in range(n_generators + 1):
        for subset in combinations(range(n_generators), k):
            mask = sum(1 << i for i in subset)
            p = 0
            while 2 * p + k <= max_degree:
                out.append((p, mask))
                p += 1
    return sorted(out, key=lambda m: (-mono_degree(m), m))


def rank_over_U_by_enumeration(n_generators: int) -> int:
    """Free rank over ``F2[U]`` read off from graded dimensions.

    For a free module with generators in degrees ``0..-n`` and ``U`` of
    degree -2, two consecutive degrees below ``-n`` together hold one copy
    of every generator.
    """
    d = n_generators
    forms = normal_forms_up_to(n_generators, d + 1)
    return sum(1 for m in forms if mono_degree(m) in (-d, -d - 1))
