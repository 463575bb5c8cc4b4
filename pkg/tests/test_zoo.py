from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.errors import ConstructionError, InputError
from orbitgrowth.separation import max_separated
from orbitgrowth.zoo import (
    DOUBLING,
    FULL_SHIFT,
    IDENTITY,
    MORSE_SMALE,
    ROTATION,
    SINGLE_ONE,
    ZooSpec,
    build,
    catalogue,
)


def test_catalogue_builds_valid_metrics():
    for spec in catalogue():
        sys = build(spec)
        sys.space.validate()
        assert ZooSpec.from_dict(spec.to_dict()) == spec


def test_identity_and_rotation_flags():
    assert build(ZooSpec(IDENTITY, 8)).isometry
    rot = build(ZooSpec(ROTATION, 12, alpha=Fraction(1, 3)))
    assert rot.injective and rot.isometry
    assert sorted(rot.image) == list(range(12))
    with pytest.raises(ConstructionError):
        build(ZooSpec(ROTATION, 10, alpha=Fraction(1, 4)))


def test_spec_validation():
    with pytest.raises(InputError):
        ZooSpec(IDENTITY, 3)
    with pytest.raises(InputError):
        ZooSpec("Tent", 8)
    with pytest.raises(InputError):
        ZooSpec.from_dict({"kind": IDENTITY, "resolution": 8, "colour": 1})


@pytest.mark.parametrize("g,k", [(12, 1), (16, 1), (64, 1), (24, 2), (48, 3)])
def test_morse_smale_fixed_points_alternate(g, k):
    sys = build(ZooSpec(MORSE_SMALE, g, pairs=k))
    fixed = sys.meta["fixed"]
    assert sorted(fixed) == [j * g // (2 * k) for j in range(2 * k)]
    kinds = [fixed[p] for p in sorted(fixed)]
    assert all(a != b for a, b in zip(kinds, kinds[1:] + kinds[:1]))
    assert kinds.count("attracting") == k
    # every grid orbit settles on a fixed point within |X| steps
    settled = sys.iterate(g)
    assert np.all(sys.image[settled] == settled)
    attract = {p for p, t in fixed.items() if t == "attracting"}
    moving = [x for x in range(g) if x not in fixed]
    assert all(int(settled[x]) in attract for x in moving)


def test_morse_smale_construction_errors():
    with pytest.raises(ConstructionError):
        build(ZooSpec(MORSE_SMALE, 10, pairs=3))
    with pytest.raises(ConstructionError):
        build(ZooSpec(MORSE_SMALE, 12, lam=1.5))


def test_doubling_grid():
    sys = build(ZooSpec(DOUBLING, 8))
    assert list(sys.image) == [0, 2, 4, 6, 0, 2, 4, 6]


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2))
def test_full_shift_sep_counts_words(n, k):
    spec = ZooSpec(FULL_SHIFT, 4, past=2)
    if not spec.feasible(n, k):
        return
    sys = build(spec)
    assert max_separated(sys, n, Fraction(1, 2 ** k))[0] == 2 ** (n + 2 * k)


def test_single_one_points():
    sys = build(ZooSpec(SINGLE_ONE, 6))
    assert sys.size == 13
    assert sys.space.distance(0, 0) == 0
    zero = sys.space.labels.index("0" * 12)
    assert sys.image[zero] == zero
