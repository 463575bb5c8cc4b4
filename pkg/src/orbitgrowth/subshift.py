"""Word complexity of window subshifts and the worked Span example.

``count_words`` is purely combinatorial: it enumerates the length-n
factors of the window words.  ``span_formula`` turns it into the
predicted Span(sigma, n, 2^-k) = |B_{n+2k}|, which the pipeline compares
with the metric set-cover computation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .growth import EXP, GrowthClass
from .hyperspace import hyper_generalized_entropy_formula
from .separation import EXACT, SPANNING, GrowthSamples, min_spanning
from .zoo import FULL_SHIFT, SHIFT_KINDS, SINGLE_ONE, ZooSpec, build

LOG2 = math.log(2)


@dataclass(frozen=True)
class WordCount:
    n: int
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise InputError("a word count is at least 1")


def _window_words(spec: ZooSpec):
    L = len(spec.positions())
    if spec.kind == SINGLE_ONE:
        yield "0" * L
        for p in range(L):
            yield "0" * p + "1" + "0" * (L - p - 1)
    else:
        for m in range(1 << L):
            yield format(m, f"0{L}b")


def count_words(spec: ZooSpec, n: int) -> WordCount:
    """Number of distinct length-n factors of the window words."""
    if spec.kind not in SHIFT_KINDS:
        raise InputError(f"{spec.kind} is not a subshift window")
    L = len(spec.positions())
    if not 1 <= n <= L:
        raise InputError(f"word length {n} outside 1..{L}")
    if spec.kind == FULL_SHIFT and L > 20:
        raise InputError("full-shift windows above 20 symbols are not enumerated")
    factors = set()
    for w in _window_words(spec):
        for i in range(L - n + 1):
            factors.add(w[i:i + n])
    return WordCount(n, len(factors))


def span_formula(spec: ZooSpec, n: int, k: int) -> int:
    """Predicted Span(sigma, n, 2^-k) = |B_{n+2k}|."""
    if n < 1 or k < 0:
        raise InputError("need n >= 1 and k >= 0")
    L = len(spec.positions())
    if n + 2 * k > L:
        raise InputError(f"n + 2k = {n + 2 * k} exceeds the window length {L}")
    return count_words(spec, n + 2 * k).count


def example_pipeline(window: int = 12, ks=(0, 1, 2), spec: ZooSpec | None = None, exact_cap: int = 64) -> dict:
    """Formula vs exact Span on every feasible (n, k), then o(sigma_K).

    With ``spec`` given (any zoo kind) the same schedule eps = 2^-k is run;
    the formula column is filled only for shift windows.
    """
    if window < 8:
        raise InputError("the example pipeline needs window >= 8")
    spec = spec or ZooSpec(SINGLE_ONE, window, past=window)
    sys = build(spec)
    is_shift = spec.kind in SHIFT_KINDS
    rows, samples = [], []
    for k in ks:
        eps = Fraction(1, 2 ** k)
        ns = [n for n in range(1, window + 1) if not is_shift or spec.feasible(n, k)]
        counts = []
        for n in ns:
            exact, _ = min_spanning(sys, n, eps, EXACT, exact_cap)
            formula = span_formula(spec, n, k) if is_shift else None
            rows.append({"n": n, "k": k, "formula": formula, "exact": exact,
                         "match": formula == exact if is_shift else None})
            counts.append((n, exact))
        if len(counts) >= 2:
            samples.append(GrowthSamples(eps, tuple(counts), SPANNING, EXACT))
    cls: GrowthClass = hyper_generalized_entropy_formula(samples)
    rate = float(cls.param) if cls.family == EXP else 0.0
    return {
        "system": sys.name,
        "rows": rows,
        "all_match": all(r["match"] for r in rows) if is_shift else None,
        "hyper_class": cls,
        "h_hyper": rate,
        "target": LOG2 if spec.kind == SINGLE_ONE else None,
    }
