"""Brute-force reference computations used to cross-check the fast paths."""

from __future__ import annotations

from collections import Counter
from itertools import product

from . import dotalgebra, onesets, webs

Poly = dict  # exponent tuple (x_1..x_k, U) -> coefficient mod 2


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: 1 for e, c in out.items() if c % 2}


def poly_reduce(p: Poly) -> Poly:
    """Rewrite x_i^2 -> U one step at a time until no square remains."""
    out: Counter = Counter()
    for e, c in p.items():
        e = list(e)
        while True:
            i = next((k for k in range(len(e) - 1) if e[k] >= 2), None)
            if i is None:
                break
            e[i] -= 2
            e[-1] += 1
        out[tuple(e)] += c
    return {e: 1 for e, c in out.items() if c % 2}


def raw_monomials(k: int, max_degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors in x_1..x_k (no U) of total degree <= max_degree."""
    return [e for e in product(range(max_degree + 1), repeat=k) if sum(e) <= max_degree]


def _context(k: int) -> dotalgebra.DotContext:
    web = webs.unlink(k)
    s = onesets.OneSet(web, frozenset())
    return dotalgebra.DotContext.of(web, s)


def _library_monomial(ctx: dotalgebra.DotContext, e: tuple[int, ...]) -> dotalgebra.AlgebraElement:
    out = dotalgebra.one(ctx)
    for i, power in enumerate(e):
        g = dotalgebra.cycle_generator(ctx, i)
        for _ in range(power):
            out = dotalgebra.multiply(out, g)
    return out


def _to_poly(a: dotalgebra.AlgebraElement, k: int) -> Poly:
    out = {}
    for p, mask in a.terms:
        out[tuple((mask >> i) & 1 for i in range(k)) + (p,)] = 1
    return out


def check_all_pairs(max_generators: int = 4, max_degree: int = 6) -> dict:
    """Compare library products of all monomial pairs against the rewriting oracle."""
    pairs = mismatches = 0
    for k in range(1, max_generators + 1):
        ctx = _context(k)
        monos = raw_monomials(k, max_degree)
        lib = {e: _library_monomial(ctx, e) for e in monos}
        for ea in monos:
            for eb in monos:
                pairs += 1
                want = poly_reduce(poly_mul({ea + (0,): 1}, {eb + (0,): 1}))
                got = _to_poly(dotalgebra.multiply(lib[ea], lib[eb]), k)
                mismatches += want != got
    return {"pairs": pairs, "mismatches": mismatches}
