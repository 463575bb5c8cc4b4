import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.errors import InputError
from orbitgrowth.growth import (
    BOUNDED,
    EQUIVALENT,
    EXP,
    GREATER_EQ,
    LESS_EQ,
    LOG,
    POLY,
    SUP,
    UNCLASSIFIED,
    GrowthClass,
    classify,
    compare_sequences,
    exp_projection,
    exponentiate,
    generalized_entropy,
    lattice_le,
    lattice_max,
    poly_projection,
    sup_of_family,
    sup_over_eps,
)
from orbitgrowth.separation import EXACT, SPANNING, GrowthSamples
from orbitgrowth.zoo import IDENTITY, SINGLE_ONE, ZooSpec, build

N = np.arange(1, 257)


def test_classify_reference_sequences():
    assert classify([7] * 20).family == BOUNDED
    for k in range(3):
        c = classify(N + 2 * k + 1)
        assert c.family == POLY and abs(c.param - 1) <= 0.1
    c = classify([2 ** n for n in range(1, 30)])
    assert c.family == EXP and abs(c.param - math.log(2)) <= 0.05
    c = classify(N ** 2)
    assert c.family == POLY and abs(c.param - 2) <= 0.05
    c = classify(5 * np.log(N) + 1)
    assert c.family == LOG and abs(c.param - 5) <= 0.05
    with pytest.raises(InputError):
        classify([1, 2, 3])


def test_near_tie_is_unclassified():
    c = classify(np.round(3 * np.log(N)) + 1)
    assert c.family == UNCLASSIFIED and "tie" in c.fit


@settings(max_examples=30, deadline=None)
@given(st.floats(0.3, 3.0))
def test_squaring_doubles_the_poly_exponent(t):
    a, b = classify(N ** t), classify(N ** (2 * t))
    assert a.family == b.family == POLY
    assert abs(b.param - 2 * a.param) <= 0.02


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 1.5))
def test_squaring_doubles_the_exp_rate(t):
    n = np.arange(1, 40)
    a, b = classify(np.exp(t * n)), classify(np.exp(2 * t * n))
    assert a.family == b.family == EXP
    assert abs(b.param - 2 * a.param) <= 0.02


def test_compare_reference_pairs():
    assert compare_sequences(N, N ** 2).verdict == LESS_EQ
    assert compare_sequences(N ** 2, N).verdict == GREATER_EQ
    assert compare_sequences(N + 5, N).verdict == EQUIVALENT
    with pytest.raises(InputError):
        compare_sequences(N, N[:-1])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 10**6), min_size=4, max_size=40), st.floats(0.01, 100))
def test_compare_reflexive_and_scale_invariant(xs, c):
    a = np.maximum.accumulate(np.array(xs, dtype=float))
    assert compare_sequences(a, a).verdict == EQUIVALENT
    assert compare_sequences(a, c * a).verdict == EQUIVALENT


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 10**6), min_size=4, max_size=40),
       st.lists(st.integers(1, 10**6), min_size=4, max_size=40))
def test_compare_antisymmetric(xs, ys):
    m = min(len(xs), len(ys))
    a = np.maximum.accumulate(np.array(xs[:m], dtype=float))
    b = np.maximum.accumulate(np.array(ys[:m], dtype=float))
    r1, r2 = compare_sequences(a, b), compare_sequences(b, a)
    assert r1.less_eq == r2.greater_eq and r1.greater_eq == r2.less_eq


GRID = [0.5, 1.0, 1.5, 2.0, 3.0]


def _expected(s, t):
    return EQUIVALENT if s == t else (LESS_EQ if s < t else GREATER_EQ)


@pytest.mark.parametrize("s", GRID)
@pytest.mark.parametrize("t", GRID)
def test_lattice_agrees_with_comparison_poly(s, t):
    cs, ct = classify(N ** s), classify(N ** t)
    assert compare_sequences(N ** s, N ** t).verdict == _expected(s, t)
    assert lattice_le(cs, ct) == (s <= t)


@pytest.mark.parametrize("s", [0.2, 0.5, 0.7])
@pytest.mark.parametrize("t", [0.2, 0.5, 0.7])
def test_lattice_agrees_with_comparison_exp(s, t):
    n = np.arange(1, 60)
    a, b = np.exp(s * n), np.exp(t * n)
    assert compare_sequences(a, b).verdict == _expected(s, t)
    assert lattice_le(classify(a), classify(b)) == (s <= t)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_log_below_every_power(t):
    a = 3 * np.log(N) + 1
    assert compare_sequences(a, N ** t).verdict == LESS_EQ
    assert lattice_le(classify(a), classify(N ** t))


def test_lattice_order_and_projections():
    b, lg = GrowthClass(BOUNDED), GrowthClass(LOG, 2.0)
    p1, p2, e = GrowthClass(POLY, 1.0), GrowthClass(POLY, 2.0), GrowthClass(EXP, 0.5)
    assert lattice_max([p1, b, e, lg, p2]) == e
    assert lattice_le(b, lg) and lattice_le(lg, p1) and lattice_le(p2, e)
    assert exp_projection(e) == 0.5 and exp_projection(p2) == 0
    assert poly_projection(p2) == 2 and poly_projection(e) == math.inf
    assert poly_projection(lg) == 0
    assert sup_of_family(POLY).family == SUP
    assert lattice_max([GrowthClass(UNCLASSIFIED)]).family == UNCLASSIFIED


def test_sup_over_eps_reports_levels():
    s1 = GrowthSamples(Fraction(1, 2), tuple((n, 3) for n in range(1, 9)), SPANNING, EXACT)
    s2 = GrowthSamples(Fraction(1, 4), tuple((n, n + 3) for n in range(1, 9)), SPANNING, EXACT)
    c = sup_over_eps([s1, s2])
    assert c.family == POLY
    assert [cl.family for _, cl in c.fit["per_eps"]] == [BOUNDED, POLY]
    e = exponentiate(s2)
    assert e.counts[0] == 2 ** 4


def test_generalized_entropy_levels():
    ident = build(ZooSpec(IDENTITY, 16))
    assert generalized_entropy(ident, [Fraction(1, 4), Fraction(1, 8)], range(1, 9)).family == BOUNDED
    single = build(ZooSpec(SINGLE_ONE, 12))
    c = generalized_entropy(single, [Fraction(1), Fraction(1, 2)], range(1, 11), level="hyper")
    assert c.family == EXP and abs(c.param - math.log(2)) <= 0.05
    m = generalized_entropy(build(ZooSpec(IDENTITY, 4)), [Fraction(1, 4), Fraction(1, 8)], range(1, 7),
                            level="measure", measure_L=2)
    assert m.family == BOUNDED
    with pytest.raises(InputError):
        generalized_entropy(ident, [], range(1, 4))
