from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from webfloer.graded import SHAPES, GradedModule, Summand

summands = st.builds(Summand, st.sampled_from(sorted(SHAPES)), st.integers(-4, 4))
modules = st.lists(summands, max_size=5).map(lambda xs: GradedModule(tuple(xs)))


def test_tower_patterns():
    assert GradedModule.of("TowerDown").dims(-2, 2) == {-2: 1, -1: 1, 0: 1, 1: 0, 2: 0}
    assert GradedModule.of("TowerUp").dims(-2, 2) == {-2: 0, -1: 0, 0: 1, 1: 1, 2: 1}
    assert GradedModule.of("BiTower").dims(-2, 2) == {g: 1 for g in range(-2, 3)}
    assert GradedModule.of("TowerDownU").dims(-4, 0) == {-4: 1, -3: 0, -2: 1, -1: 0, 0: 1}
    assert GradedModule.of("Finite").dims(-1, 1) == {-1: 0, 0: 1, 1: 0}


def test_describe():
    assert GradedModule().describe() == "0"
    m = GradedModule.of(("TowerDown", 0), ("TowerDown", -1))
    assert m.describe() == "F2[v]<-1> + F2[v]"
    assert GradedModule.of("TowerUpU").describe() == "F2[U^-1,U]/F2[U]"


def test_unknown_shape():
    with pytest.raises(ValueError):
        Summand("Spiral")


def test_exterior_tensor_counts():
    m = GradedModule.of("TowerDown").tensor_exterior(3)
    offsets = sorted(s.offset for s in m.summands)
    assert offsets == [-3, -2, -2, -2, -1, -1, -1, 0]


@given(modules, modules, st.integers(-6, 6))
def test_dim_additive(a, b, g):
    assert (a + b).dim(g) == a.dim(g) + b.dim(g)


@given(modules)
def test_total_rank(m):
    if m.has_tower:
        assert m.total_rank() == "infinite (tower)"
    else:
        assert m.total_rank() == sum(m.dims(-10, 10).values())


@given(modules, st.integers(0, 3))
def test_exterior_rank(m, k):
    # each summand becomes 2^k summands
    assert len(m.tensor_exterior(k).summands) == len(m.summands) * 2**k
