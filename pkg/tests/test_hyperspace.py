import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.errors import CapacityError, InputError
from orbitgrowth.hyperspace import (
    HyperSystem,
    _hyper_dn,
    dyn_hausdorff,
    from_mask,
    hausdorff_distance,
    hausdorff_units,
    hyper_generalized_entropy_formula,
    hyper_sep_lower_witness,
    hyper_span_upper_witness,
    hyperpoint,
    image_masks,
    induced_map,
    to_mask,
)
from orbitgrowth.separation import EXACT, SPANNING, GrowthSamples, min_spanning
from orbitgrowth.zoo import IDENTITY, ROTATION, ZooSpec, build

from conftest import random_space, random_system


def test_hyperpoint_normalization():
    assert hyperpoint([3, 1, 3]) == (1, 3)
    assert from_mask(to_mask((0, 2))) == (0, 2)
    with pytest.raises(InputError):
        hyperpoint([])


def test_hausdorff_reference_value():
    s = build(ZooSpec(IDENTITY, 8)).space
    # {0} vs {0, 4/8}: the far point is 1/2 away
    assert hausdorff_distance([0], [0, 4], s) == Fraction(1, 2)
    assert hausdorff_distance([1, 2], [2, 1], s) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_hausdorff_matrix_matches_pairwise_definition(n, seed):
    space = random_space(random.Random(seed), n)
    H = hausdorff_units(space)
    for a in range(1, 1 << n):
        for b in range(1, 1 << n):
            A, B = from_mask(a), from_mask(b)
            direct = max(max(min(space.units[x, y] for y in B) for x in A),
                         max(min(space.units[x, y] for x in A) for y in B))
            assert H[a - 1, b - 1] == direct


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_hausdorff_metric_axioms_exhaustive(n, seed):
    space = random_space(random.Random(seed), n)
    H = hausdorff_units(space).astype(np.int64)
    assert np.array_equal(H, H.T) and not np.diag(H).any()
    off = H + np.eye(len(H), dtype=np.int64)
    assert (off > 0).all()
    for j in range(len(H)):
        assert (H <= H[:, j][:, None] + H[j, :][None, :]).all()
    # singletons embed isometrically
    single = [(1 << i) - 1 for i in range(n)]
    assert np.array_equal(H[np.ix_(single, single)], space.units)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 10**6))
def test_induced_map_and_dn(n, steps, seed):
    sys = random_system(random.Random(seed), n)
    img = image_masks(sys)
    for m in range(1, 1 << n):
        assert from_mask(int(img[m])) == induced_map(sys, from_mask(m))
    hs = HyperSystem(sys)
    rows = list(range(hs.size))
    Dn = _hyper_dn(hs, steps, rows)
    rng = random.Random(seed)
    for _ in range(10):
        a, b = rng.randrange(hs.size), rng.randrange(hs.size)
        assert hs.system.space.value(Dn[a, b]) == dyn_hausdorff(sys, hs.point(a), hs.point(b), steps)


def test_hyper_system_cap():
    sys = build(ZooSpec(IDENTITY, 13))
    with pytest.raises(CapacityError) as exc:
        HyperSystem(sys).system
    assert exc.value.cap == 12


@pytest.mark.parametrize("spec", [ZooSpec(IDENTITY, 8), ZooSpec(ROTATION, 8, alpha=Fraction(1, 4))])
def test_witnesses_on_isometries(spec):
    sys = build(spec)
    for n in (1, 2, 3):
        for eps in (Fraction(1, 4), Fraction(1, 3)):
            up = hyper_span_upper_witness(sys, n, eps)
            assert up.certified and up.size == 2 ** min_spanning(sys, n, eps)[0] - 1
            lo = hyper_sep_lower_witness(sys, n, eps)
            assert lo.certified


def test_formula_needs_two_spanning_levels():
    s = GrowthSamples(Fraction(1, 2), tuple((n, n + 1) for n in range(1, 9)), SPANNING, EXACT)
    with pytest.raises(InputError):
        hyper_generalized_entropy_formula([s])
