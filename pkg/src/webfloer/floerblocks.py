"""Block chain complexes over F2 and the three flavours built from them.

A :class:`BlockComplex` has generators of three types (``o`` irreducible,
``s`` boundary-stable, ``u`` boundary-unstable) and eight blocks.  Blocks are
:class:`GF2Matrix` instances of shape ``(target, source)``:

============  ========  ===========
block         map       degree
============  ========  ===========
``d_oo``      o -> o    -1
``d_os``      o -> s    -1
``d_uo``      u -> o    -1
``d_us``      u -> s    -1
``bar_ss``    s -> s    -1
``bar_su``    s -> u     0
``bar_us``    u -> s    -2
``bar_uu``    u -> u    -1
============  ========  ===========

The bar flavour grades ``u`` generators one lower than the other flavours,
which makes every bar block degree -1 there.  No signs appear anywhere since
everything is over F2.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .gf2 import GF2Matrix, rank_of_rows
from .graded import GradedModule

BLOCKS = {
    # name: (target type, source type, degree)
    "d_oo": ("o", "o", -1),
    "d_os": ("s", "o", -1),
    "d_uo": ("o", "u", -1),
    "d_us": ("s", "u", -1),
    "bar_ss": ("s", "s", -1),
    "bar_su": ("u", "s", 0),
    "bar_us": ("s", "u", -2),
    "bar_uu": ("u", "u", -1),
}

FLAVOURS = ("check", "hat", "bar")


class IdentityError(ValueError):
    pass


class ChainMapError(ValueError):
    pass


# --------------------------------------------------------------------------
# graded complexes and homology


def _expand(vec: int, idx: Sequence[int]) -> int:
    out = 0
    k = 0
    while vec:
        if vec & 1:
            out |= 1 << idx[k]
        vec >>= 1
        k += 1
    return out


@dataclass(frozen=True)
class ChainComplex:
    """A graded F2 complex whose differential lowers grading by one."""

    grades: tuple[int, ...]
    D: GF2Matrix

    def __post_init__(self):
        object.__setattr__(self, "grades", tuple(self.grades))
        n = len(self.grades)
        if self.D.shape != (n, n):
            raise ValueError(f"differential shape {self.D.shape} does not match {n} generators")

    @property
    def size(self) -> int:
        return len(self.grades)

    def indices(self, g: int) -> list[int]:
        return [k for k, h in enumerate(self.grades) if h == g]

    def square_zero(self) -> bool:
        return (self.D @ self.D).is_zero()

    def homogeneous(self, degree: int = -1) -> bool:
        return all(self.grades[r] == self.grades[c] + degree for r, c in self.D.entries())

    def check(self):
        if not self.homogeneous():
            raise ValueError("differential is not homogeneous of degree -1")
        if not self.square_zero():
            raise ValueError("differential does not square to zero")

    def grade_range(self) -> tuple[int, int]:
        if not self.grades:
            return (0, -1)
        return (min(self.grades), max(self.grades))

    def cycles(self, g: int) -> list[int]:
        """Basis of ker D in grading g, as full-length bitmasks."""
        src = self.indices(g)
        if not src:
            return []
        tgt = self.indices(g - 1)
        sub = self.D.submatrix(tgt, src)
        return [_expand(v, src) for v in sub.nullspace()]

    def boundaries(self, g: int) -> list[int]:
        """Spanning set of im D in grading g, as full-length bitmasks."""
        return [self.D.column(j) for j in self.indices(g + 1)]

    def homology_dim(self, g: int) -> int:
        return len(self.cycles(g)) - rank_of_rows(self.boundaries(g))

    def homology(self, lo: int | None = None, hi: int | None = None) -> dict[int, int]:
        """Homology dimension per grading in ``lo..hi`` (default: the support)."""
        self.check()
        a, b = self.grade_range()
        lo = a if lo is None else lo
        hi = b if hi is None else hi
        return {g: self.homology_dim(g) for g in range(lo, hi + 1)}


def homology(D: GF2Matrix, grades: Sequence[int], lo: int | None = None, hi: int | None = None) -> dict[int, int]:
    return ChainComplex(tuple(grades), D).homology(lo, hi)


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    f: GF2Matrix
    degree: int

    def __post_init__(self):
        if self.f.shape != (self.target.size, self.source.size):
            raise ValueError(f"map shape {self.f.shape} vs ({self.target.size}, {self.source.size})")

    def commutes(self) -> bool:
        return self.f @ self.source.D == self.target.D @ self.f

    def homogeneous(self) -> bool:
        sg, tg = self.source.grades, self.target.grades
        return all(tg[r] == sg[c] + self.degree for r, c in self.f.entries())

    def is_chain_map(self) -> bool:
        return self.commutes() and self.homogeneous()

    def induced_rank(self, g: int) -> int:
        """Rank of the induced map from H_g(source) to H_{g+degree}(target)."""
        images = [self.f.apply(z) for z in self.source.cycles(g)]
        bnd = self.target.boundaries(g + self.degree)
        return rank_of_rows(images + bnd) - rank_of_rows(bnd)


def composes_to_zero_on_homology(f: ChainMap, h: ChainMap, g: int) -> bool:
    """Whether ``h o f`` kills H_g(source of f)."""
    images = [h.f.apply(f.f.apply(z)) for z in f.source.cycles(g)]
    bnd = h.target.boundaries(g + f.degree + h.degree)
    return rank_of_rows(images + bnd) == rank_of_rows(bnd)


def exact_at(f: ChainMap, h: ChainMap, g: int) -> bool:
    """Exactness of H(A) -> H(B) -> H(C) at H_{g+deg f}(B), for A in grading g."""
    mid = g + f.degree
    return composes_to_zero_on_homology(f, h, g) and f.target.homology_dim(mid) == f.induced_rank(
        g
    ) + h.induced_rank(mid)


# --------------------------------------------------------------------------
# block complexes


def _zero_block(bc_sizes: Mapping[str, int], name: str) -> GF2Matrix:
    t, s, _ = BLOCKS[name]
    return GF2Matrix.zeros(bc_sizes[t], bc_sizes[s])


@dataclass(frozen=True)
class BlockComplex:
    o: tuple[int, ...] = ()
    s: tuple[int, ...] = ()
    u: tuple[int, ...] = ()
    blocks: Mapping[str, GF2Matrix] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "o", tuple(self.o))
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "u", tuple(self.u))
        sizes = self.sizes
        full = {}
        for name in BLOCKS:
            m = self.blocks.get(name)
            if m is None:
                m = _zero_block(sizes, name)
            t, src, _ = BLOCKS[name]
            if m.shape != (sizes[t], sizes[src]):
                raise ValueError(f"{name} has shape {m.shape}, expected ({sizes[t]}, {sizes[src]})")
            full[name] = m
        unknown = set(self.blocks) - set(BLOCKS)
        if unknown:
            raise ValueError(f"unknown block(s): {', '.join(sorted(unknown))}")
        object.__setattr__(self, "blocks", full)

    @property
    def sizes(self) -> dict[str, int]:
        return {"o": len(self.o), "s": len(self.s), "u": len(self.u)}

    @property
    def n_generators(self) -> int:
        return len(self.o) + len(self.s) + len(self.u)

    def grades_of(self, kind: str) -> tuple[int, ...]:
        return {"o": self.o, "s": self.s, "u": self.u}[kind]

    def __getattr__(self, name: str) -> GF2Matrix:
        if name in BLOCKS:
            return self.blocks[name]
        raise AttributeError(name)

    def with_blocks(self, **blocks: GF2Matrix) -> "BlockComplex":
        merged = dict(self.blocks)
        merged.update(blocks)
        return BlockComplex(self.o, self.s, self.u, merged)


def _label(kind: str, k: int) -> str:
    return f"{kind}{k}"


def identity_matrices(bc: BlockComplex) -> dict[str, tuple[GF2Matrix, str, str]]:
    """Name -> (matrix that must vanish, target type, source type)."""
    b = bc.blocks
    d_oo, d_os, d_uo, d_us = b["d_oo"], b["d_os"], b["d_uo"], b["d_us"]
    ss, su, us, uu = b["bar_ss"], b["bar_su"], b["bar_us"], b["bar_uu"]
    return {
        "identity 1": (d_oo @ d_oo + d_uo @ su @ d_os, "o", "o"),
        "identity 2": (d_os @ d_oo + ss @ d_os + d_us @ su @ d_os, "s", "o"),
        "identity 3": (d_oo @ d_uo + d_uo @ uu + d_uo @ su @ d_us, "o", "u"),
        "identity 4": (us + d_os @ d_uo + ss @ d_us + d_us @ uu + d_us @ su @ d_us, "s", "u"),
        "bar identity 1": (ss @ ss + us @ su, "s", "s"),
        "bar identity 2": (ss @ us + us @ uu, "s", "u"),
        "bar identity 3": (su @ ss + uu @ su, "u", "s"),
        "bar identity 4": (su @ us + uu @ uu, "u", "u"),
    }


@dataclass(frozen=True)
class IdentityResult:
    name: str
    holds: bool
    witness: tuple[str, str] | None  # (target generator, source generator)


@dataclass(frozen=True)
class IdentityReport:
    results: tuple[IdentityResult, ...]
    grading_violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results) and not self.grading_violations

    @property
    def failures(self) -> list[str]:
        return [f"{r.name} fails" for r in self.results if not r.holds] + list(self.grading_violations)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "identities": {
                r.name: {"holds": r.holds, "witness": list(r.witness) if r.witness else None} for r in self.results
            },
            "grading_violations": list(self.grading_violations),
        }


def grading_violations(bc: BlockComplex) -> list[str]:
    out = []
    for name, (t, s, deg) in BLOCKS.items():
        tg, sg = bc.grades_of(t), bc.grades_of(s)
        for r, c in bc.blocks[name].entries():
            if tg[r] != sg[c] + deg:
                out.append(f"{name} entry ({_label(t, r)}, {_label(s, c)}) has degree {tg[r] - sg[c]}, expected {deg}")
    return out


def validate_identities(bc: BlockComplex) -> IdentityReport:
    results = []
    for name, (m, t, s) in identity_matrices(bc).items():
        ents = m.entries()
        witness = (_label(t, ents[0][0]), _label(s, ents[0][1])) if ents else None
        results.append(IdentityResult(name, not ents, witness))
    return IdentityReport(tuple(results), tuple(grading_violations(bc)))


def _require_valid(bc: BlockComplex):
    rep = validate_identities(bc)
    if not rep.ok:
        raise IdentityError("; ".join(rep.failures))


def flavour_grades(bc: BlockComplex, flavour: str) -> tuple[int, ...]:
    if flavour == "check":
        return bc.o + bc.s
    if flavour == "hat":
        return bc.o + bc.u
    if flavour == "bar":
        return bc.s + tuple(g - 1 for g in bc.u)
    raise ValueError(f"unknown flavour {flavour!r}")


def build_flavour(bc: BlockComplex, flavour: str, require_valid: bool = True) -> ChainComplex:
    """Assemble the check (o+s), hat (o+u) or bar (s+u) differential."""
    if require_valid:
        _require_valid(bc)
    b = bc.blocks
    if flavour == "check":
        grid = [
            [b["d_oo"], b["d_uo"] @ b["bar_su"]],
            [b["d_os"], b["bar_ss"] + b["d_us"] @ b["bar_su"]],
        ]
    elif flavour == "hat":
        grid = [
            [b["d_oo"], b["d_uo"]],
            [b["bar_su"] @ b["d_os"], b["bar_uu"] + b["bar_su"] @ b["d_us"]],
        ]
    elif flavour == "bar":
        grid = [
            [b["bar_ss"], b["bar_us"]],
            [b["bar_su"], b["bar_uu"]],
        ]
    else:
        raise ValueError(f"unknown flavour {flavour!r}")
    return ChainComplex(flavour_grades(bc, flavour), _block_or_empty(grid, bc, flavour))


def _block_or_empty(grid, bc: BlockComplex, flavour: str) -> GF2Matrix:
    n = len(flavour_grades(bc, flavour))
    # GF2Matrix.block cannot infer widths from zero-height rows, so drop them
    rows = [line for line in grid if line[0].nrows > 0]
    if not rows:
        return GF2Matrix.zeros(n, n)
    return GF2Matrix.block(rows)


def build_ijp(bc: BlockComplex, require_valid: bool = True) -> dict[str, ChainMap]:
    """The maps i: bar -> check, j: check -> hat, p: hat -> bar."""
    if require_valid:
        _require_valid(bc)
    cc = {f: build_flavour(bc, f, require_valid=False) for f in FLAVOURS}
    b = bc.blocks
    no, ns, nu = len(bc.o), len(bc.s), len(bc.u)
    Z = GF2Matrix.zeros
    I = GF2Matrix.identity

    def assemble(grid, nrows, ncols):
        rows = [line for line in grid if line[0].nrows > 0]
        if not rows or ncols == 0:
            return Z(nrows, ncols)
        return GF2Matrix.block(rows)

    i = assemble([[Z(no, ns), b["d_uo"]], [I(ns), b["d_us"]]], no + ns, ns + nu)
    j = assemble([[I(no), Z(no, ns)], [Z(nu, no), b["bar_su"]]], no + nu, no + ns)
    p = assemble([[b["d_os"], b["d_us"]], [Z(nu, no), I(nu)]], ns + nu, no + nu)
    return {
        "i": ChainMap(cc["bar"], cc["check"], i, 0),
        "j": ChainMap(cc["check"], cc["hat"], j, 0),
        "p": ChainMap(cc["hat"], cc["bar"], p, -1),
    }


@dataclass(frozen=True)
class ExactnessReport:
    chain_maps: dict[str, bool]
    failures: tuple[tuple[str, int], ...]  # (position, grading)
    positions_checked: int

    @property
    def ok(self) -> bool:
        return all(self.chain_maps.values()) and not self.failures


def long_exact_sequence(bc: BlockComplex) -> ExactnessReport:
    """Check the homology sequence bar -> check -> hat -> bar at every grading."""
    maps = build_ijp(bc)
    chain = {k: m.is_chain_map() for k, m in maps.items()}
    i, j, p = maps["i"], maps["j"], maps["p"]
    gr = list(bc.o + bc.s + bc.u) or [0]
    lo, hi = min(gr) - 3, max(gr) + 3
    failures = []
    count = 0
    for g in range(lo, hi + 1):
        for pos, f, h, start in (("check", i, j, g), ("hat", j, p, g), ("bar", p, i, g + 1)):
            count += 1
            if not exact_at(f, h, start):
                failures.append((pos, g))
    return ExactnessReport(chain, tuple(failures), count)


def mapping_cone(
    source: ChainComplex,
    f: GF2Matrix,
    degree: int,
    target: ChainComplex | None = None,
) -> ChainComplex:
    """Cone of a chain map of the given degree: source shifted by ``degree + 1`` then target.

    Differential ``[[D_src, 0], [f, D_tgt]]``.
    """
    target = source if target is None else target
    cm = ChainMap(source, target, f, degree)
    if not cm.commutes():
        raise ChainMapError("map does not commute with the differentials")
    if not cm.homogeneous():
        raise ChainMapError(f"map is not homogeneous of degree {degree}")
    grades = tuple(g + degree + 1 for g in source.grades) + target.grades
    ns, nt = source.size, target.size
    if ns + nt == 0:
        return ChainComplex((), GF2Matrix.zeros(0, 0))
    rows = []
    if ns:
        rows.append([source.D, GF2Matrix.zeros(ns, nt)] if nt else [source.D])
    if nt:
        rows.append([f, target.D] if ns else [target.D])
    return ChainComplex(grades, GF2Matrix.block(rows))


def cone_homology(source: ChainComplex, f: GF2Matrix, degree: int, lo=None, hi=None, target=None) -> dict[int, int]:
    return mapping_cone(source, f, degree, target).homology(lo, hi)


# --------------------------------------------------------------------------
# cobordism block maps

COBORDISM_BLOCKS = {
    # name: (target type on Y+, source type on Y-)
    "m_oo": ("o", "o"),
    "m_os": ("s", "o"),
    "m_uo": ("o", "u"),
    "m_us": ("s", "u"),
    "bar_m_ss": ("s", "s"),
    "bar_m_su": ("u", "s"),
    "bar_m_us": ("s", "u"),
    "bar_m_uu": ("u", "u"),
}


def km_hat_formula(m: Mapping[str, GF2Matrix], src: BlockComplex, tgt: BlockComplex) -> list[list[GF2Matrix]]:
    """Hat map on (o, u) chosen to mirror the hat differential's lower row."""
    return [
        [m["m_oo"], m["m_uo"]],
        [m["bar_m_su"] @ src.d_os + tgt.bar_su @ m["m_os"], m["bar_m_uu"] + m["bar_m_su"] @ src.d_us + tgt.bar_su @ m["m_us"]],
    ]


@dataclass(frozen=True)
class CobordismResult:
    m_check: GF2Matrix
    m_hat: GF2Matrix | None
    m_bar: GF2Matrix
    report: dict[str, bool | None]


def build_cobordism_blocks(
    m: Mapping[str, GF2Matrix],
    src: BlockComplex,
    tgt: BlockComplex,
    hat_formula: Callable[..., list[list[GF2Matrix]]] | None = None,
) -> CobordismResult:
    """Assemble the check and bar block maps Y- -> Y+ and test them.

    ``report`` holds ``sample_identity`` (the o -> o relation with the two
    terms routed through bar_su), ``oo_identity`` (the full o -> o component
    of the chain-map equation, which also carries ``d_uo bar_m_su d_os``) and
    a chain-map flag per assembled flavour.  The hat map is assembled only
    when a formula is supplied.
    """
    blocks = {}
    for name, (t, s) in COBORDISM_BLOCKS.items():
        mat = m.get(name)
        shape = (tgt.sizes[t], src.sizes[s])
        if mat is None:
            mat = GF2Matrix.zeros(*shape)
        if mat.shape != shape:
            raise ValueError(f"{name} has shape {mat.shape}, expected {shape}")
        blocks[name] = mat
    unknown = set(m) - set(COBORDISM_BLOCKS)
    if unknown:
        raise ValueError(f"unknown cobordism block(s): {', '.join(sorted(unknown))}")

    def assemble(grid, nrows, ncols):
        rows = [line for line in grid if line[0].nrows > 0]
        if not rows or ncols == 0:
            return GF2Matrix.zeros(nrows, ncols)
        return GF2Matrix.block(rows)

    b = blocks
    m_check = assemble(
        [
            [b["m_oo"], b["m_uo"] @ src.bar_su + tgt.d_uo @ b["bar_m_su"]],
            [b["m_os"], b["bar_m_ss"] + b["m_us"] @ src.bar_su + tgt.d_us @ b["bar_m_su"]],
        ],
        len(tgt.o) + len(tgt.s),
        len(src.o) + len(src.s),
    )
    m_bar = assemble(
        [[b["bar_m_ss"], b["bar_m_us"]], [b["bar_m_su"], b["bar_m_uu"]]],
        len(tgt.s) + len(tgt.u),
        len(src.s) + len(src.u),
    )
    m_hat = None
    if hat_formula is not None:
        m_hat = assemble(hat_formula(b, src, tgt), len(tgt.o) + len(tgt.u), len(src.o) + len(src.u))

    sample = b["m_oo"] @ src.d_oo + tgt.d_oo @ b["m_oo"] + b["m_uo"] @ src.bar_su @ src.d_os + tgt.d_uo @ tgt.bar_su @ b["m_os"]
    full_oo = sample + tgt.d_uo @ b["bar_m_su"] @ src.d_os

    def commutes(f, flavour):
        d_src = build_flavour(src, flavour, require_valid=False).D
        d_tgt = build_flavour(tgt, flavour, require_valid=False).D
        return f @ d_src == d_tgt @ f

    report: dict[str, bool | None] = {
        "sample_identity": sample.is_zero(),
        "oo_identity": full_oo.is_zero(),
        "check_chain_map": commutes(m_check, "check"),
        "bar_chain_map": commutes(m_bar, "bar"),
        "hat_chain_map": None if m_hat is None else commutes(m_hat, "hat"),
    }
    return CobordismResult(m_check, m_hat, m_bar, report)


def identity_cobordism(bc: BlockComplex) -> dict[str, GF2Matrix]:
    I = GF2Matrix.identity
    return {"m_oo": I(len(bc.o)), "bar_m_ss": I(len(bc.s)), "bar_m_uu": I(len(bc.u))}


def grading_period(pairing: int) -> tuple[Fraction, bool]:
    """Grading shift of the loop attached to a class, and whether it is integral."""
    if isinstance(pairing, bool) or not isinstance(pairing, int):
        raise TypeError("pairing must be an integer")
    period = Fraction(pairing, 2)
    return period, period.denominator == 1


# --------------------------------------------------------------------------
# model complexes


def unknot_pattern(n_stable: int, n_unstable: int | None = None) -> BlockComplex:
    """Generators a_i: s for 0 <= i < n_stable (grading i), u for -n_unstable <= i < 0 (grading i+1)."""
    n_unstable = n_stable if n_unstable is None else n_unstable
    return BlockComplex((), tuple(range(n_stable)), tuple(i + 1 for i in range(-n_unstable, 0)))


def direct_sum(a: BlockComplex, b: BlockComplex) -> BlockComplex:
    blocks = {}
    for name, (t, s, _) in BLOCKS.items():
        A, B = a.blocks[name], b.blocks[name]
        rows = [r for r in A.rows] + [r << A.ncols for r in B.rows]
        blocks[name] = GF2Matrix(A.nrows + B.nrows, A.ncols + B.ncols, rows)
    return BlockComplex(a.o + b.o, a.s + b.s, a.u + b.u, blocks)


def dual(bc: BlockComplex) -> BlockComplex:
    """Transpose every block, swap s with u and negate gradings.

    Each identity of the dual is the transpose of an identity of ``bc``, so
    validity is preserved.  The check complex of the dual is the transposed
    hat complex of ``bc`` and vice versa.
    """
    b = bc.blocks
    blocks = {
        "d_oo": b["d_oo"].T,
        "d_os": b["d_uo"].T,
        "d_uo": b["d_os"].T,
        "d_us": b["d_us"].T,
        "bar_ss": b["bar_uu"].T,
        "bar_uu": b["bar_ss"].T,
        "bar_su": b["bar_su"].T,
        "bar_us": b["bar_us"].T,
    }
    neg = lambda gs: tuple(-g for g in gs)  # noqa: E731
    return BlockComplex(neg(bc.o), neg(bc.u), neg(bc.s), blocks)


def transvect(bc: BlockComplex, kind: str, i: int, j: int) -> BlockComplex:
    """Basis change e_j -> e_j + e_i inside one generator type (same grading required).

    The transvection T = I + E_ij is its own inverse, so every block becomes
    T_target X T_source.
    """
    grades = bc.grades_of(kind)
    if i == j or grades[i] != grades[j]:
        raise ValueError("transvection needs two distinct generators of equal grading")
    n = len(grades)
    T = GF2Matrix.identity(n) + GF2Matrix.from_entries(n, n, [(i, j)])
    blocks = {}
    for name, (t, s, _) in BLOCKS.items():
        X = bc.blocks[name]
        if t == kind:
            X = T @ X
        if s == kind:
            X = X @ T
        blocks[name] = X
    return BlockComplex(bc.o, bc.s, bc.u, blocks)


def _atom(kind: str, g: int) -> BlockComplex:
    """Small complexes satisfying all eight identities, based at grading g."""
    E = GF2Matrix.from_entries
    if kind == "o":
        return BlockComplex((g,))
    if kind == "s":
        return BlockComplex((), (g,))
    if kind == "u":
        return BlockComplex((), (), (g,))
    if kind == "pair_oo":
        return BlockComplex((g, g - 1), (), (), {"d_oo": E(2, 2, [(1, 0)])})
    if kind == "pair_ss":
        return BlockComplex((), (g, g - 1), (), {"bar_ss": E(2, 2, [(1, 0)])})
    if kind == "pair_uu":
        return BlockComplex((), (), (g, g - 1), {"bar_uu": E(2, 2, [(1, 0)])})
    if kind == "su":
        return BlockComplex((), (g,), (g,), {"bar_su": E(1, 1, [(0, 0)])})
    if kind == "us":
        return BlockComplex((), (g - 1,), (g,), {"d_us": E(1, 1, [(0, 0)])})
    if kind == "uo":
        return BlockComplex((g - 1,), (), (g,), {"d_uo": E(1, 1, [(0, 0)])})
    if kind == "os":
        return BlockComplex((g,), (g - 1,), (), {"d_os": E(1, 1, [(0, 0)])})
    if kind == "uos":
        # u -> o -> s balanced by bar_us
        return BlockComplex(
            (g - 1,),
            (g - 2,),
            (g,),
            {"d_uo": E(1, 1, [(0, 0)]), "d_os": E(1, 1, [(0, 0)]), "bar_us": E(1, 1, [(0, 0)])},
        )
    if kind == "osu":
        return BlockComplex((g,), (g - 1,), (g - 1,), {"d_os": E(1, 1, [(0, 0)]), "bar_su": E(1, 1, [(0, 0)])})
    raise ValueError(f"unknown atom {kind!r}")


ATOMS = ("o", "s", "u", "pair_oo", "pair_ss", "pair_uu", "su", "us", "uo", "os", "uos", "osu")


def random_valid_complex(rng: random.Random, max_generators: int = 40, mixes: int = 60) -> BlockComplex:
    """Direct sum of random atoms and their duals, then random grading-preserving basis changes."""
    bc = BlockComplex()
    target = rng.randint(min(4, max_generators), max_generators)
    while bc.n_generators < target:
        atom = _atom(rng.choice(ATOMS), rng.randint(-3, 3))
        if rng.random() < 0.5:
            atom = dual(atom)
        if bc.n_generators + atom.n_generators > max_generators:
            break
        bc = direct_sum(bc, atom)
    for _ in range(mixes):
        kind = rng.choice("osu")
        grades = bc.grades_of(kind)
        if len(grades) < 2:
            continue
        i = rng.randrange(len(grades))
        same = [j for j, g in enumerate(grades) if g == grades[i] and j != i]
        if same:
            bc = transvect(bc, kind, i, rng.choice(same))
    return bc


# --------------------------------------------------------------------------
# symbolic modules as chain-level models


def module_model(module: GradedModule, lo: int, hi: int) -> tuple[ChainComplex, GF2Matrix]:
    """Zero-differential complex spanning ``module`` in gradings lo..hi, and the v action.

    v lowers grading by one along each step-1 tower and acts by zero on
    U-towers and finite summands.  Towers are truncated at the window edges,
    so callers should pad the window and only read interior gradings.
    """
    gens: list[tuple[int, int]] = []  # (summand index, grading)
    for k, s in enumerate(module.summands):
        for g in range(lo, hi + 1):
            if s.supported(g):
                gens.append((k, g))
    index = {x: n for n, x in enumerate(gens)}
    ents = []
    for n, (k, g) in enumerate(gens):
        s = module.summands[k]
        if s.step == 1 and s.infinite and (k, g - 1) in index:
            ents.append((index[(k, g - 1)], n))
    size = len(gens)
    cc = ChainComplex(tuple(g for _, g in gens), GF2Matrix.zeros(size, size))
    return cc, GF2Matrix.from_entries(size, size, ents)


def upsilon_cone_rank(module: GradedModule, pad: int = 3) -> int:
    """Total dimension of the cone of v on ``module`` (finite when it is)."""
    if module.is_zero():
        return 0
    offs = [s.offset for s in module.summands]
    lo, hi = min(offs) - 2, max(offs) + 2
    cc, ups = module_model(module, lo - pad, hi + pad)
    dims = cone_homology(cc, ups, -1, lo, hi)
    return sum(dims.values())


# --------------------------------------------------------------------------
# JSON


def _entries_doc(m: GF2Matrix) -> list[list[int]]:
    return [[r, c] for r, c in m.entries()]


def complex_to_doc(bc: BlockComplex) -> dict:
    return {
        "o": list(bc.o),
        "s": list(bc.s),
        "u": list(bc.u),
        "blocks": {k: _entries_doc(v) for k, v in bc.blocks.items() if not v.is_zero()},
    }


def _grades_from(raw) -> tuple[int, ...]:
    out = []
    for x in raw:
        if isinstance(x, dict):
            x = x.get("gr")
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"generator grading must be an integer, got {x!r}")
        out.append(x)
    return tuple(out)


def complex_from_doc(doc: Mapping) -> BlockComplex:
    o, s, u = (_grades_from(doc.get(k, [])) for k in "osu")
    sizes = {"o": len(o), "s": len(s), "u": len(u)}
    blocks = {}
    for name, ents in (doc.get("blocks") or {}).items():
        if name not in BLOCKS:
            raise ValueError(f"unknown block {name!r}")
        t, src, _ = BLOCKS[name]
        blocks[name] = GF2Matrix.from_entries(sizes[t], sizes[src], [tuple(e) for e in ents])
    return BlockComplex(o, s, u, blocks)


def parse_complex(text: str) -> BlockComplex:
    return complex_from_doc(json.loads(text))
