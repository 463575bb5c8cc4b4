import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitgrowth.errors import InputError
from orbitgrowth.growth import BOUNDED, EXP
from orbitgrowth.separation import min_spanning
from orbitgrowth.subshift import count_words, example_pipeline, span_formula
from orbitgrowth.zoo import FULL_SHIFT, IDENTITY, SINGLE_ONE, ZooSpec, build


@pytest.mark.parametrize("w", [4, 8, 12])
def test_single_one_word_counts(w):
    spec = ZooSpec(SINGLE_ONE, w)
    for n in range(1, w + 1):
        assert count_words(spec, n).count == n + 1


def test_full_shift_word_counts():
    spec = ZooSpec(FULL_SHIFT, 5)
    assert [count_words(spec, n).count for n in range(1, 6)] == [2, 4, 8, 16, 32]


def test_word_count_preconditions():
    with pytest.raises(InputError):
        count_words(ZooSpec(SINGLE_ONE, 4), 9)
    with pytest.raises(InputError):
        count_words(ZooSpec(IDENTITY, 4), 1)
    with pytest.raises(InputError):
        span_formula(ZooSpec(SINGLE_ONE, 4), 3, 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 10), st.integers(1, 10), st.integers(0, 3))
def test_formula_matches_set_cover(w, n, k):
    spec = ZooSpec(SINGLE_ONE, w)
    if not spec.feasible(n, k):
        return
    exact, _ = min_spanning(build(spec), n, Fraction(1, 2 ** k))
    assert exact == span_formula(spec, n, k) == n + 2 * k + 1


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2))
def test_full_shift_formula_matches_set_cover(n, k):
    spec = ZooSpec(FULL_SHIFT, 4, past=2)
    if not spec.feasible(n, k):
        return
    exact, _ = min_spanning(build(spec), n, Fraction(1, 2 ** k))
    assert exact == span_formula(spec, n, k) == 2 ** (n + 2 * k)


def test_pipeline_single_one_and_identity():
    out = example_pipeline(10)
    assert out["all_match"]
    assert out["hyper_class"].family == EXP
    assert abs(out["h_hyper"] - math.log(2)) <= 0.05
    ident = example_pipeline(8, spec=ZooSpec(IDENTITY, 16))
    assert ident["hyper_class"].family == BOUNDED
    with pytest.raises(InputError):
        example_pipeline(6)
