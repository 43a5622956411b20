"""Closed-form numerics for foams: moduli dimension, Dirac index, b+, adjunction, vortices.

All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction, str]


def _q(x: Rational) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


@dataclass(frozen=True)
class FoamIndexInput:
    b1_r: int = 0
    self_int_r: Fraction = Fraction(0)
    c1_sq: Fraction = Fraction(0)
    sigma: Fraction = Fraction(0)
    c1_dot_c: Fraction = Fraction(0)
    c_self_int: Fraction = Fraction(0)

    def __post_init__(self):
        if isinstance(self.b1_r, bool) or not isinstance(self.b1_r, int) or self.b1_r < 0:
            raise ValueError("b1_r must be a non-negative integer")
        for name in ("self_int_r", "c1_sq", "sigma", "c1_dot_c", "c_self_int"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @property
    def warnings(self) -> list[str]:
        out = []
        if self.b1_r % 2:
            out.append("odd b1_r: real surface is nonorientable or input is inconsistent")
        return out


def dirac_index_bifold(c1_sq: Rational, sigma: Rational, c1_dot_c: Rational, c_self_int: Rational) -> Fraction:
    """Complex index of the bifold Dirac operator (the real index is half)."""
    return (_q(c1_sq) - _q(sigma)) / 4 + _q(c1_dot_c) / 4 + _q(c_self_int) / 16


def b_plus(b1_r: int, self_int_r: Rational) -> Fraction:
    return Fraction(b1_r, 2) - _q(self_int_r) / 4


def moduli_dimension(inp: FoamIndexInput) -> Fraction:
    return (
        Fraction(inp.b1_r, 2)
        - inp.self_int_r / 4
        + (inp.c1_sq - inp.sigma) / 8
        + inp.c1_dot_c / 8
        + inp.c_self_int / 32
    )


def moduli_dimension_split(inp: FoamIndexInput) -> tuple[Fraction, Fraction]:
    """(b+ part, half the Dirac index); their sum is :func:`moduli_dimension`."""
    return b_plus(inp.b1_r, inp.self_int_r), dirac_index_bifold(inp.c1_sq, inp.sigma, inp.c1_dot_c, inp.c_self_int) / 2


def admissible_foam(b1_r: int, self_int_r: Rational) -> bool:
    return b_plus(b1_r, self_int_r) > 1


def self_intersection(relative_euler: int) -> Fraction:
    return Fraction(relative_euler, 2)


def adjunction_degree(genus: int, n_sing: int) -> Fraction:
    if genus < 0 or n_sing < 0:
        raise ValueError("genus and n_sing must be non-negative")
    return 2 * genus - 2 + Fraction(n_sing, 2)


def spinc_passes_filter(pairing: Rational, genus: int, n_sing: int) -> bool:
    return _q(pairing) == adjunction_degree(genus, n_sing)


def surface_picard_member(c: Rational, betas: Iterable[int]) -> bool:
    """Whether ``c - sum(betas)/2`` is an integer; ``c`` must be a half-integer."""
    c = _q(c)
    if (2 * c).denominator != 1:
        raise ValueError(f"c = {c} is not a half-integer")
    betas = list(betas)
    if any(b not in (0, 1) or isinstance(b, bool) for b in betas):
        raise ValueError("isotropy weights must be 0 or 1")
    return (c - Fraction(sum(betas), 2)).denominator == 1


@dataclass(frozen=True)
class VortexModuli:
    kind: str  # Empty | SymmetricProduct | Borderline
    e: int | None = None

    def __str__(self) -> str:
        return f"SymmetricProduct({self.e})" if self.kind == "SymmetricProduct" else self.kind


def vortex_moduli(deg_L: Rational, deg_K: Rational, e: int) -> VortexModuli:
    if e < 0:
        raise ValueError("e must be non-negative")
    half = _q(deg_K) / 2
    dl = _q(deg_L)
    if dl > half:
        return VortexModuli("Empty")
    if dl < half:
        return VortexModuli("SymmetricProduct", e)
    return VortexModuli("Borderline")
