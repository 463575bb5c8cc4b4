"""Orders of growth: classification of count sequences and their comparison.

A count sequence n -> c(n) is fitted against four families on its tail
window: Bounded (constant tail), Log (c ~ t log n), Poly (c ~ n^t) and
Exp (c ~ e^(t n)).  Abstract suprema of whole families exist only as
symbolic ``SupOfFamily`` tags.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InputError
from .separation import (
    DEFAULT_TAIL,
    EXACT,
    SPANNING,
    GrowthSamples,
    sample_growth,
    tail_indices,
)

BOUNDED = "Bounded"
LOG = "Log"
POLY = "Poly"
EXP = "Exp"
SUP = "SupOfFamily"
UNCLASSIFIED = "Unclassified"

FAMILY_RANK = {BOUNDED: 0, LOG: 1, POLY: 2, EXP: 3}

# base tags for symbolic suprema: all powers a(n)^t, all polynomials, all exponentials
POWERS = "Powers"
SUP_BASES = {POWERS: 4, POLY: 2, EXP: 3}

DEFAULT_THETA = 0.01
DEFAULT_MARGIN = 0.8
# a ratio whose log falls faster than this against log n is taken to vanish
DEFAULT_DECAY = 0.05

LESS_EQ = "LessEq"
GREATER_EQ = "GreaterEq"
EQUIVALENT = "Equivalent"
INCOMPARABLE = "Incomparable"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class GrowthClass:
    family: str
    param: float | None = None
    base: str | None = None
    fit: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.family in (POLY, EXP) and not (self.param is not None and self.param > 0):
            raise InputError(f"{self.family} needs a positive parameter")
        if self.family == SUP and self.base not in SUP_BASES:
            raise InputError(f"SupOfFamily base must be one of {sorted(SUP_BASES)}")

    def key(self):
        """Position in the family lattice; None for Unclassified."""
        if self.family == UNCLASSIFIED:
            return None
        if self.family == SUP:
            return (SUP_BASES[self.base], math.inf)
        return (FAMILY_RANK[self.family], self.param or 0.0)

    def label(self) -> str:
        if self.family == SUP:
            return f"sup[{self.base}]"
        if self.param is None:
            return self.family
        return f"{self.family}({self.param:.4g})"

    def to_dict(self) -> dict:
        d = {"family": self.family, "param": self.param}
        if self.base is not None:
            d["base"] = self.base
        if self.fit:
            d["fit"] = {k: v for k, v in self.fit.items() if k != "per_eps"}
            if "per_eps" in self.fit:
                d["per_eps"] = [[str(e), c.to_dict()] for e, c in self.fit["per_eps"]]
        return d


def sup_of_family(base: str) -> GrowthClass:
    return GrowthClass(SUP, base=base)


@dataclass(frozen=True)
class OrderRelation:
    verdict: str
    diagnostics: dict

    @property
    def less_eq(self) -> bool:
        return self.verdict in (LESS_EQ, EQUIVALENT)

    @property
    def greater_eq(self) -> bool:
        return self.verdict in (GREATER_EQ, EQUIVALENT)


def _as_series(s):
    if isinstance(s, GrowthSamples):
        return s.ns, np.array(s.counts, dtype=object)
    pairs = list(s)
    if pairs and isinstance(pairs[0], (tuple, list)):
        ns = np.array([p[0] for p in pairs], dtype=float)
        cs = np.array([p[1] for p in pairs], dtype=object)
    else:
        ns = np.arange(1, len(pairs) + 1, dtype=float)
        cs = np.array(pairs, dtype=object)
    return ns, cs


def _logs(cs) -> np.ndarray:
    out = []
    for c in cs:
        if c <= 0:
            raise InputError("counts must be positive")
        out.append(math.log(c))
    return np.array(out, dtype=float)


def _linfit(x, y):
    slope, icpt = np.polyfit(x, y, 1)
    return float(slope), float(icpt)


def _rms(r) -> float:
    return float(np.sqrt(np.mean(np.square(r))))


# ---------------------------------------------------------------------------
# classification


def classify(samples, tail=DEFAULT_TAIL, margin=DEFAULT_MARGIN, min_points=6) -> GrowthClass:
    """Fit the tail of a count sequence to the family lattice.

    ``samples`` is a GrowthSamples, a list of (n, count) pairs, or a plain
    list of counts for n = 1, 2, ...  All residuals are measured in
    log-count space so the fits are comparable.
    """
    ns, cs = _as_series(samples)
    if len(ns) < min_points:
        raise InputError(f"classification needs at least {min_points} n-values, got {len(ns)}")
    if ns.min() < 1:
        raise InputError("classification needs n >= 1")
    sl = tail_indices(len(ns), tail)
    x, logc = ns[sl], _logs(cs[sl])
    window = (int(x[0]), int(x[-1]))
    if np.ptp(logc) == 0:
        return GrowthClass(BOUNDED, fit={"slope": 0.0, "residual": 0.0, "window": window})
    logn = np.log(x)
    fits = {}
    t, a = _linfit(x, logc)
    fits[EXP] = (t, _rms(logc - (a + t * x)))
    t, a = _linfit(logn, logc)
    fits[POLY] = (t, _rms(logc - (a + t * logn)))
    if logc.max() < 700:
        t, a = _linfit(logn, np.exp(logc))
        pred = a + t * logn
        if t > 0 and np.all(pred > 0):
            fits[LOG] = (t, _rms(logc - np.log(pred)))
    valid = {f: v for f, v in fits.items() if v[0] > 0}
    info = {"window": window, "fits": {f: {"slope": v[0], "residual": v[1]} for f, v in fits.items()}}
    if not valid:
        return GrowthClass(UNCLASSIFIED, fit=info)
    ranked = sorted(valid.items(), key=lambda kv: kv[1][1])
    best, (slope, res) = ranked[0]
    info.update(slope=slope, residual=res)
    if len(ranked) > 1:
        second = ranked[1][1][1]
        if not res <= margin * second:
            info["tie"] = [f for f, _ in ranked[:2]]
            return GrowthClass(UNCLASSIFIED, fit=info)
    return GrowthClass(best, slope, fit=info)


def lattice_max(classes: Sequence[GrowthClass]) -> GrowthClass:
    """Largest class in the lattice; Unclassified entries are skipped."""
    ranked = [c for c in classes if c.key() is not None]
    if not ranked:
        return GrowthClass(UNCLASSIFIED)
    return max(ranked, key=lambda c: c.key())


def lattice_le(a: GrowthClass, b: GrowthClass) -> bool:
    if a.key() is None or b.key() is None:
        raise InputError("Unclassified has no place in the lattice")
    return a.key() <= b.key()


def exp_projection(cls: GrowthClass) -> float:
    """Entropy read off a class: the Exp rate, 0 below Exp, inf above."""
    if cls.family == EXP:
        return float(cls.param)
    if cls.family == SUP and cls.base != POLY:
        return math.inf
    return 0.0


def poly_projection(cls: GrowthClass) -> float:
    """Polynomial entropy read off a class: the Poly exponent, 0 below, inf above."""
    if cls.family == POLY:
        return float(cls.param)
    if cls.family in (BOUNDED, LOG):
        return 0.0
    if cls.family == UNCLASSIFIED:
        return math.nan
    return math.inf


# ---------------------------------------------------------------------------
# comparison


def _ratio_test(num: np.ndarray, den: np.ndarray, x: np.ndarray, theta, decay):
    """Is liminf num/den > 0, judged on the tail?

    The minimum is taken relative to the ratio at the start of the window,
    so a constant factor between the sequences never decides the verdict.
    """
    logr = num - den
    rmin = float(np.exp(logr.min() - logr[0]))
    slope = _linfit(np.log(x), logr)[0] if np.ptp(x) > 0 else 0.0
    return rmin >= theta and slope >= -decay, rmin, slope


def compare_sequences(a, b, tail=DEFAULT_TAIL, theta=DEFAULT_THETA, decay=DEFAULT_DECAY) -> OrderRelation:
    """Compare [a] and [b] from finite data.

    [a] <= [b] is certified when b/a never falls below theta times its
    value at the start of the tail window and shows no power-law decay
    (log-log slope >= -decay).
    """
    na, ca = _as_series(a)
    nb, cb = _as_series(b)
    if len(na) != len(nb) or np.any(na != nb):
        raise InputError("sequences must share the same n-range")
    if len(na) < 2:
        raise InputError("need at least two samples to compare")
    sl = tail_indices(len(na), tail)
    x = na[sl]
    la, lb = _logs(ca[sl]), _logs(cb[sl])
    le, min_ba, slope_ba = _ratio_test(lb, la, x, theta, decay)
    ge, min_ab, slope_ab = _ratio_test(la, lb, x, theta, decay)
    diag = {
        "window": (int(x[0]), int(x[-1])),
        "tail_min_b_over_a": min_ba,
        "tail_min_a_over_b": min_ab,
        "log_slope_b_over_a": slope_ba,
        "log_slope_a_over_b": slope_ab,
        "theta": theta,
    }
    if le and ge:
        verdict = EQUIVALENT
    elif le:
        verdict = LESS_EQ
    elif ge:
        verdict = GREATER_EQ
    else:
        verdict = INCONCLUSIVE
    return OrderRelation(verdict, diag)


# ---------------------------------------------------------------------------
# generalized entropy


def sup_over_eps(samples: Sequence[GrowthSamples], tail=DEFAULT_TAIL, margin=DEFAULT_MARGIN) -> GrowthClass:
    """Classify each eps-level and take the lattice maximum."""
    if not samples:
        raise InputError("need at least one eps level")
    per = [(s.epsilon, classify(s, tail, margin)) for s in samples]
    top = lattice_max([c for _, c in per])
    fit = dict(top.fit)
    fit["per_eps"] = per
    return GrowthClass(top.family, top.param, top.base, fit)


def exponentiate(s: GrowthSamples, base: int = 2) -> GrowthSamples:
    """n -> base**count(n), kept as exact integers."""
    return GrowthSamples(s.epsilon, tuple((n, base ** c) for n, c in s.samples), s.kind, s.mode)


def generalized_entropy(sys, eps_schedule, n_range, level="base", mode=EXACT, exact_cap=64,
                        kind=SPANNING, tail=DEFAULT_TAIL, margin=DEFAULT_MARGIN,
                        measure_L: int = 2) -> GrowthClass:
    """Order of growth of Span (or Sep) counts, maximized over the eps schedule.

    ``hyper`` applies the closed form o(T_K) = sup [2^Span(T, n, eps)] to
    exact base counts; ``measure`` works on the push-forward system over
    the finite invariant set G_L of rational measures.
    """
    eps_schedule = list(eps_schedule)
    n_range = list(n_range)
    if not eps_schedule or not n_range:
        raise InputError("eps schedule and n-range must be nonempty")
    if level not in ("base", "hyper", "measure"):
        raise InputError(f"unknown level {level!r}")
    target = sys
    if level == "measure":
        from .measures import measure_system

        target = measure_system(sys, measure_L)
    samples = [sample_growth(target, e, n_range, kind, mode, exact_cap) for e in eps_schedule]
    if level == "hyper":
        samples = [exponentiate(s) for s in samples]
    return sup_over_eps(samples, tail, margin)
