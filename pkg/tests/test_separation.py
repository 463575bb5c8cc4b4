import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.core import dyn_units
from orbitgrowth.errors import CapacityError, InputError
from orbitgrowth.separation import (
    EXACT,
    GREEDY,
    SEPARATED,
    SPANNING,
    GrowthSamples,
    entropy_estimate,
    is_separated,
    is_spanning,
    max_separated,
    mdim_estimate,
    min_spanning,
    pol_entropy_estimate,
    sample_growth,
    sep_on_subset,
)
from orbitgrowth.subshift import span_formula
from orbitgrowth.zoo import FULL_SHIFT, IDENTITY, SINGLE_ONE, ZooSpec, build

from conftest import random_system, subsets


def brute_sep(sys, n, eps):
    D, c = dyn_units(sys, n), sys.space.cutoff(eps)
    best = 1
    for A in subsets(range(sys.size)):
        if len(A) > best and all(D[a, b] >= c for i, a in enumerate(A) for b in A[i + 1:]):
            best = len(A)
    return best


def brute_span(sys, n, eps):
    D, c = dyn_units(sys, n), sys.space.cutoff(eps)
    for A in subsets(range(sys.size)):
        if (D[list(A)] < c).any(axis=0).all():
            return len(A)


eps_st = st.sampled_from([Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2)])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(1, 4), eps_st, st.integers(0, 10**6))
def test_exact_counts_match_definitions(n_pts, n, eps, seed):
    sys = random_system(random.Random(seed), n_pts)
    s, ws = max_separated(sys, n, eps)
    p, wp = min_spanning(sys, n, eps)
    assert s == brute_sep(sys, n, eps) and p == brute_span(sys, n, eps)
    D, c = dyn_units(sys, n), sys.space.cutoff(eps)
    assert is_separated(D, c, ws.indices) and is_spanning(D, c, wp.indices)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.integers(1, 5), eps_st, st.integers(0, 10**6))
def test_standard_inequalities_and_greedy_bounds(n_pts, n, eps, seed):
    sys = random_system(random.Random(seed), n_pts)
    span = min_spanning(sys, n, eps)[0]
    sep = max_separated(sys, n, eps)[0]
    assert span <= sep <= min_spanning(sys, n, eps / 2)[0]
    assert max_separated(sys, n, eps, GREEDY)[0] <= sep
    assert min_spanning(sys, n, eps, GREEDY)[0] >= span
    assert max_separated(sys, n + 1, eps)[0] >= sep


def test_capacity_and_input_errors():
    sys = build(ZooSpec(IDENTITY, 72))
    with pytest.raises(CapacityError) as exc:
        max_separated(sys, 1, Fraction(1, 4))
    assert exc.value.cap == 64
    assert max_separated(sys, 1, Fraction(1, 4), GREEDY)[0] == 4
    with pytest.raises(InputError):
        min_spanning(sys, 1, 0, GREEDY)
    with pytest.raises(InputError):
        max_separated(sys, 1, Fraction(1, 4), "fast")
    with pytest.raises(InputError):
        sep_on_subset(sys, 1, Fraction(1, 4), [])


def test_sample_growth_identity_is_constant():
    sys = build(ZooSpec(IDENTITY, 16))
    s = sample_growth(sys, Fraction(1, 4), range(1, 9))
    assert s.counts == [4] * 8


def test_growth_samples_reject_decreasing_exact_counts():
    with pytest.raises(InputError):
        GrowthSamples(Fraction(1, 4), ((1, 3), (2, 2)), SEPARATED, EXACT)


def test_entropy_estimates_on_zoo():
    full = build(ZooSpec(FULL_SHIFT, 6, past=0))
    shift = [sample_growth(full, Fraction(1, 2 ** k), range(1, 7 - k), SPANNING) for k in (0, 1)]
    assert abs(entropy_estimate(shift) - math.log(2)) < 0.05
    ident = build(ZooSpec(IDENTITY, 16))
    levels = [sample_growth(ident, e, range(1, 9)) for e in (Fraction(1, 4), Fraction(1, 8))]
    assert entropy_estimate(levels) == 0
    assert pol_entropy_estimate(levels) == 0
    single = build(ZooSpec(SINGLE_ONE, 12))
    sl = [sample_growth(single, Fraction(1, 2 ** k), range(1, 13 - k), SPANNING) for k in (0, 1)]
    assert entropy_estimate(sl) < 0.15


def test_pol_entropy_single_one_linear_span():
    # long-range counts from the word formula (checked against set cover in test_subshift)
    spec = ZooSpec(SINGLE_ONE, 260)
    levels = [GrowthSamples(Fraction(1, 2 ** k), tuple((n, span_formula(spec, n, k)) for n in range(1, 257)),
                            SPANNING, EXACT) for k in (0, 1)]
    assert abs(pol_entropy_estimate(levels) - 1) <= 0.1


def test_mdim_estimate_needs_three_levels():
    ident = build(ZooSpec(IDENTITY, 16))
    two = [sample_growth(ident, e, range(1, 5), SPANNING) for e in (Fraction(1, 4), Fraction(1, 8))]
    with pytest.raises(InputError):
        mdim_estimate(two)
    three = two + [sample_growth(ident, Fraction(1, 2), range(1, 5), SPANNING)]
    assert [r for _, r in mdim_estimate(three)] == [0.0, 0.0, 0.0]
