"""Separated and spanning sets, and the entropy-type estimates built on them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import System, as_fraction, dyn_units, dyn_units_series, warn_grid
from .errors import CapacityError, InputError
from .search import max_clique, min_cover_matrix, rows_to_masks

DEFAULT_EXACT_CAP = 64
DEFAULT_TAIL = 0.5

SEPARATED = "separated"
SPANNING = "spanning"
GREEDY = "greedy"
EXACT = "exact"


@dataclass(frozen=True)
class WitnessSet:
    indices: tuple
    n: int
    epsilon: Fraction | float
    kind: str


@dataclass(frozen=True)
class GrowthSamples:
    epsilon: Fraction | float
    samples: tuple
    kind: str = SEPARATED
    mode: str = EXACT

    def __post_init__(self):
        pairs = tuple((int(n), int(c)) for n, c in self.samples)
        object.__setattr__(self, "samples", pairs)
        if not pairs:
            raise InputError("GrowthSamples needs at least one sample")
        if any(c < 1 for _, c in pairs):
            raise InputError("counts must be positive")
        ns = [n for n, _ in pairs]
        if ns != sorted(ns) or len(set(ns)) != len(ns):
            raise InputError("n values must be strictly increasing")
        if self.mode == EXACT:
            cs = [c for _, c in pairs]
            if any(b < a for a, b in zip(cs, cs[1:])):
                raise InputError("exact counts must be nondecreasing in n")

    @property
    def ns(self) -> np.ndarray:
        return np.array([n for n, _ in self.samples], dtype=float)

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.samples]

    @property
    def log_counts(self) -> np.ndarray:
        # counts may be huge ints (2**Span); math.log handles them
        return np.array([math.log(c) for _, c in self.samples])


def _check_mode(mode: str) -> None:
    if mode not in (GREEDY, EXACT):
        raise InputError(f"mode must be 'greedy' or 'exact', got {mode!r}")


def _check_eps(eps) -> None:
    if as_fraction(eps) <= 0:
        raise InputError("epsilon must be positive")


# ---------------------------------------------------------------------------
# matrix-level solvers: D is a symmetric matrix of d_n values in space units


def greedy_separated(D: np.ndarray, cutoff, order: Iterable[int] | None = None) -> list[int]:
    """Scan in index order; keep a point iff it is >= eps from every kept point."""
    sep = D >= cutoff
    kept: list[int] = []
    for i in range(len(D)) if order is None else order:
        if all(sep[i, j] for j in kept):
            kept.append(i)
    return kept


def exact_separated(D: np.ndarray, cutoff) -> list[int]:
    sep = D >= cutoff
    np.fill_diagonal(sep, False)
    return max_clique(rows_to_masks(sep))


def greedy_spanning(D: np.ndarray, cutoff) -> list[int]:
    balls = rows_to_masks(D < cutoff)
    left = (1 << len(D)) - 1
    chosen = []
    while left:
        best, gain = -1, -1
        for c, b in enumerate(balls):
            g = bin(b & left).count("1")
            if g > gain:
                best, gain = c, g
        chosen.append(best)
        left &= ~balls[best]
    return chosen


def exact_spanning(D: np.ndarray, cutoff) -> list[int]:
    return min_cover_matrix(D < cutoff)


def separated_from_matrix(D, cutoff, mode=EXACT) -> list[int]:
    _check_mode(mode)
    return exact_separated(D, cutoff) if mode == EXACT else greedy_separated(D, cutoff)


def spanning_from_matrix(D, cutoff, mode=EXACT) -> list[int]:
    _check_mode(mode)
    return exact_spanning(D, cutoff) if mode == EXACT else greedy_spanning(D, cutoff)


def is_separated(D: np.ndarray, cutoff, idx: Sequence[int]) -> bool:
    idx = list(idx)
    sub = D[np.ix_(idx, idx)] >= cutoff
    np.fill_diagonal(sub, True)
    return bool(sub.all())


def is_spanning(D: np.ndarray, cutoff, idx: Sequence[int]) -> bool:
    idx = list(idx)
    if not idx:
        return False
    return bool((D[idx, :] < cutoff).any(axis=0).all())


# ---------------------------------------------------------------------------
# system-level API


def _cap(sys: System, mode: str, exact_cap: int) -> None:
    if mode == EXACT and sys.size > exact_cap:
        raise CapacityError(
            f"exact mode on {sys.size} points exceeds exact_cap={exact_cap}", cap=exact_cap
        )


def max_separated(sys: System, n: int, eps, mode=EXACT, exact_cap=DEFAULT_EXACT_CAP):
    """Sep(T, n, eps) with a witness; greedy gives a lower bound."""
    _check_mode(mode)
    _check_eps(eps)
    _cap(sys, mode, exact_cap)
    warn_grid(sys, eps)
    D = dyn_units(sys, n)
    idx = separated_from_matrix(D, sys.space.cutoff(eps), mode)
    return len(idx), WitnessSet(tuple(int(i) for i in idx), n, eps, SEPARATED)


def min_spanning(sys: System, n: int, eps, mode=EXACT, exact_cap=DEFAULT_EXACT_CAP):
    """Span(T, n, eps) with a witness; greedy gives an upper bound."""
    _check_mode(mode)
    _check_eps(eps)
    _cap(sys, mode, exact_cap)
    warn_grid(sys, eps)
    D = dyn_units(sys, n)
    idx = spanning_from_matrix(D, sys.space.cutoff(eps), mode)
    return len(idx), WitnessSet(tuple(int(i) for i in idx), n, eps, SPANNING)


def sep_on_subset(sys: System, n: int, eps, K: Sequence[int], mode=EXACT,
                  exact_cap=DEFAULT_EXACT_CAP) -> int:
    """Largest A0 in K whose d_n-eps balls meet A0 only at their centres."""
    K = sorted({int(k) for k in K})
    if not K:
        raise InputError("K must be nonempty")
    for k in K:
        sys.space.check_index(k)
    _check_mode(mode)
    _check_eps(eps)
    if mode == EXACT and len(K) > exact_cap:
        raise CapacityError(f"exact mode on |K|={len(K)} exceeds exact_cap={exact_cap}", cap=exact_cap)
    D = dyn_units(sys, n, K)
    return len(separated_from_matrix(D, sys.space.cutoff(eps), mode))


def sample_growth(sys: System, eps, ns: Sequence[int], kind=SEPARATED, mode=EXACT,
                  exact_cap=DEFAULT_EXACT_CAP, idx=None) -> GrowthSamples:
    """Counts n -> Sep or Span at a fixed eps, sharing the d_n recursion."""
    _check_mode(mode)
    _check_eps(eps)
    if kind not in (SEPARATED, SPANNING):
        raise InputError(f"unknown kind {kind!r}")
    ns = sorted({int(n) for n in ns})
    if not ns:
        raise InputError("n-range must be nonempty")
    size = sys.size if idx is None else len(idx)
    if mode == EXACT and size > exact_cap:
        raise CapacityError(f"exact mode on {size} points exceeds exact_cap={exact_cap}", cap=exact_cap)
    warn_grid(sys, eps)
    cutoff = sys.space.cutoff(eps)
    wanted = set(ns)
    out = []
    solve = separated_from_matrix if kind == SEPARATED else spanning_from_matrix
    last_D, last_count = None, None
    for n, D in dyn_units_series(sys, ns[-1], idx):
        if n in wanted:
            # d_n often stops changing once orbits settle; reuse the count
            if last_D is None or not np.array_equal(D, last_D):
                last_D, last_count = D, len(solve(D, cutoff, mode))
            out.append((n, last_count))
    return GrowthSamples(eps, tuple(out), kind, mode)


# ---------------------------------------------------------------------------
# entropy-type estimates


def tail_indices(count: int, tail=DEFAULT_TAIL) -> slice:
    """Last ceil(tail * count) samples (at least two)."""
    if isinstance(tail, int) and not isinstance(tail, bool) and tail >= 1:
        k = tail
    else:
        k = math.ceil(float(tail) * count)
    k = max(2, min(count, k))
    return slice(count - k, count)


def _slope(x: np.ndarray, y: np.ndarray) -> float:
    if np.ptp(y) == 0:
        return 0.0
    return float(np.polyfit(x, y, 1)[0])


def _check_levels(samples: Sequence[GrowthSamples], min_levels: int, min_n: int) -> None:
    if len(samples) < min_levels:
        raise InputError(f"need at least {min_levels} epsilon levels, got {len(samples)}")
    for s in samples:
        if len(s.samples) < min_n:
            raise InputError(f"need at least {min_n} n-values per level, eps={s.epsilon} has {len(s.samples)}")


def tail_slope(s: GrowthSamples, tail=DEFAULT_TAIL, log_n=False) -> float:
    sl = tail_indices(len(s.samples), tail)
    x = s.ns[sl]
    if log_n:
        x = np.log(x)
    return _slope(x, s.log_counts[sl])


def entropy_estimate(samples: Sequence[GrowthSamples], tail=DEFAULT_TAIL) -> float:
    """max over eps of the tail slope of log(count) against n."""
    _check_levels(samples, 2, 4)
    return max(0.0, max(tail_slope(s, tail) for s in samples))


def pol_entropy_estimate(samples: Sequence[GrowthSamples], tail=DEFAULT_TAIL) -> float:
    """max over eps of the tail slope of log(count) against log n."""
    _check_levels(samples, 2, 4)
    for s in samples:
        if s.ns.min() < 1:
            raise InputError("polynomial fits need n >= 1")
    return max(0.0, max(tail_slope(s, tail, log_n=True) for s in samples))


def mdim_estimate(samples: Sequence[GrowthSamples], tail=DEFAULT_TAIL) -> list[tuple]:
    """(eps, Span(T, eps) / |log eps|) per level; no limit is taken."""
    _check_levels(samples, 3, 2)
    out = []
    for s in sorted(samples, key=lambda s: as_fraction(s.epsilon), reverse=True):
        e = float(s.epsilon)
        if not 0 < e < 1:
            raise InputError("metric mean dimension ratios need 0 < eps < 1")
        rate = max(0.0, tail_slope(s, tail))
        out.append((s.epsilon, rate / abs(math.log(e))))
    return out

