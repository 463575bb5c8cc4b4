import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.core import (
    FiniteMetricSpace,
    System,
    circle_grid,
    dyn_distance,
    dyn_units,
    orbit,
    product_with_identity,
    restrict,
)
from orbitgrowth.errors import InputError

from conftest import random_system


def test_circle_grid_is_exact_arc_metric():
    s = circle_grid(8)
    s.validate()
    assert s.distance(0, 3) == Fraction(3, 8)
    assert s.distance(1, 7) == Fraction(1, 4)
    assert s.diameter() == Fraction(1, 2)


def test_validate_rejects_bad_matrices():
    with pytest.raises(InputError):
        FiniteMetricSpace.from_fractions("ab", [[0, 1], [2, 0]])
    with pytest.raises(InputError):
        FiniteMetricSpace.from_fractions("ab", [[0, 0], [0, 0]])
    with pytest.raises(InputError):
        FiniteMetricSpace.from_fractions("abc", [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    with pytest.raises(InputError):
        FiniteMetricSpace.from_fractions("a", [[1]])


def test_system_map_checks():
    s = circle_grid(4)
    with pytest.raises(InputError):
        System(s, [0, 1, 2, 4])
    with pytest.raises(InputError):
        System(s, [0, 1])
    with pytest.raises(InputError):
        System(s, [0, 0, 1, 2], injective=True)
    rot = System(s, [1, 2, 3, 0])
    assert rot.injective and rot.isometry
    assert list(rot.fixed_points()) == []


def test_orbit_and_dyn_distance():
    s = System(circle_grid(8), [(2 * i) % 8 for i in range(8)])
    assert orbit(s, 1, 4) == [1, 2, 4, 0]
    # orbits 1,2,4 and 2,4,0: distances 1/8, 2/8, 4/8
    assert dyn_distance(s, 1, 2, 3) == Fraction(1, 2)
    assert dyn_distance(s, 1, 2, 2) == Fraction(1, 4)
    with pytest.raises(InputError):
        orbit(s, 0, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(1, 6), st.integers(0, 10**6))
def test_dyn_units_matches_orbitwise_definition(n_pts, n, seed):
    sys = random_system(random.Random(seed), n_pts)
    D = dyn_units(sys, n)
    for x in range(n_pts):
        for y in range(n_pts):
            assert sys.space.value(D[x, y]) == dyn_distance(sys, x, y, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_dn_is_a_metric_nondecreasing_in_n(n_pts, seed):
    sys = random_system(random.Random(seed), n_pts)
    prev = None
    for n in range(1, 6):
        D = dyn_units(sys, n)
        FiniteMetricSpace(sys.space.labels, D.copy(), sys.space.scale).validate()
        if prev is not None:
            assert np.all(D >= prev)
        prev = D


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=1), st.integers(2, 20))
def test_cutoff_splits_exactly(eps, g):
    s = circle_grid(g)
    c = s.cutoff(eps)
    for u in range(0, g + 1):
        assert (Fraction(u, g) >= eps) == (u >= c)


def test_product_with_identity_max_metric():
    base = System(circle_grid(4), [1, 2, 3, 0])
    p = product_with_identity(base, 2)
    assert p.size == 12 and p.meta["levels"] == 3
    p.space.validate()
    # ((1/4, 0), (2/4, 1)) -> max(1/4, 1)
    assert p.space.distance(1 * 3 + 0, 2 * 3 + 2) == 1
    assert p.injective and p.isometry


def test_restrict_invariant_subset():
    s = System(circle_grid(8), [(2 * i) % 8 for i in range(8)])
    r = restrict(s, [0, 2, 4, 6])
    assert r.size == 4 and list(r.image) == [0, 2, 0, 2]
    assert r.meta["restricted_from"] == s.name
    with pytest.raises(InputError):
        restrict(s, [1, 3])
