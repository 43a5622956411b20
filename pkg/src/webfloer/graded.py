"""Symbolic graded F2-modules built from towers and finite summands.

Conventions (``v`` has degree -1, ``U`` degree -2):

* ``TowerDown``  ``F2[v]``: one generator at ``offset, offset-1, offset-2, ...``
* ``TowerUp``    ``F2[v^-1, v] / F2[v]``: ``offset, offset+1, ...``
* ``BiTower``    ``F2[v^-1, v]``: every grading
* ``TowerDownU``, ``TowerUpU``, ``BiTowerU``: the same with step 2
* ``Finite``     one ``F2`` at ``offset``
"""

from __future__ import annotations

from dataclasses import dataclass, field

SHAPES = ("TowerDown", "TowerUp", "BiTower", "TowerDownU", "TowerUpU", "BiTowerU", "Finite")

_DISPLAY_NAMES = {
    "TowerDown": "F2[v]",
    "TowerUp": "F2[v^-1,v]/F2[v]",
    "BiTower": "F2[v^-1,v]",
    "TowerDownU": "F2[U]",
    "TowerUpU": "F2[U^-1,U]/F2[U]",
    "BiTowerU": "F2[U^-1,U]",
    "Finite": "F2",
}


@dataclass(frozen=True, order=True)
class Summand:
    shape: str
    offset: int = 0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown summand shape {self.shape!r}")

    @property
    def step(self) -> int:
        return 2 if self.shape.endswith("U") else 1

    @property
    def infinite(self) -> bool:
        return self.shape != "Finite"

    def supported(self, g: int) -> bool:
        d = g - self.offset
        if self.step == 2 and d % 2:
            return False
        if self.shape == "Finite":
            return d == 0
        if self.shape.startswith("TowerDown"):
            return d <= 0
        if self.shape.startswith("TowerUp"):
            return d >= 0
        return True

    def describe(self) -> str:
        name = _DISPLAY_NAMES[self.shape]
        return name if self.offset == 0 else f"{name}<{self.offset}>"


@dataclass(frozen=True)
class GradedModule:
    summands: tuple[Summand, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, *pairs: tuple[str, int] | str) -> "GradedModule":
        out = []
        for p in pairs:
            out.append(Summand(p) if isinstance(p, str) else Summand(*p))
        return cls(tuple(out))

    def is_zero(self) -> bool:
        return not self.summands

    def dim(self, g: int) -> int:
        return sum(1 for s in self.summands if s.supported(g))

    def dims(self, lo: int, hi: int) -> dict[int, int]:
        """Dimensions in gradings ``lo..hi`` inclusive."""
        return {g: self.dim(g) for g in range(lo, hi + 1)}

    @property
    def has_tower(self) -> bool:
        return any(s.infinite for s in self.summands)

    def total_rank(self) -> int | str:
        return "infinite (tower)" if self.has_tower else len(self.summands)

    def tensor_exterior(self, k: int) -> "GradedModule":
        """``Lambda[x_1..x_k] (x) M`` with each ``x_i`` of degree -1."""
        from math import comb

        out = []
        for s in self.summands:
            for j in range(k + 1):
                out += [Summand(s.shape, s.offset - j)] * comb(k, j)
        return GradedModule(tuple(out))

    def __add__(self, other: "GradedModule") -> "GradedModule":
        return GradedModule(self.summands + other.summands)

    def describe(self) -> str:
        if not self.summands:
            return "0"
        return " + ".join(s.describe() for s in self.summands)

    def as_dict(self) -> dict:
        return {
            "summands": [{"shape": s.shape, "offset": s.offset} for s in self.summands],
            "describe": self.describe(),
        }
