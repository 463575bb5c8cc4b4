"""Deterministic constructors for the example systems.

Circle systems live on the grid {k/g} with the arc metric.  Shift systems
are finite two-sided windows: a point is a word on positions
``-past .. window-1`` and ``d(u, v) = 2**-min{|i| : u_i != v_i}``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .core import FiniteMetricSpace, System, _int_dtype, circle_grid
from .errors import ConstructionError, InputError

IDENTITY = "Identity"
ROTATION = "Rotation"
DOUBLING = "Doubling"
MORSE_SMALE = "MorseSmaleCircle"
FULL_SHIFT = "FullShiftWindow"
SINGLE_ONE = "SingleOneSubshift"

KINDS = (IDENTITY, ROTATION, DOUBLING, MORSE_SMALE, FULL_SHIFT, SINGLE_ONE)
SHIFT_KINDS = (FULL_SHIFT, SINGLE_ONE)


@dataclass(frozen=True)
class ZooSpec:
    kind: str
    resolution: int
    alpha: Fraction = Fraction(1, 4)
    pairs: int = 1
    lam: float = 0.75
    past: int | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown zoo kind {self.kind!r}; expected one of {KINDS}")
        if int(self.resolution) < 4:
            raise InputError("resolution must be >= 4")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.past is None and self.kind in SHIFT_KINDS:
            object.__setattr__(self, "past", self.resolution if self.kind == SINGLE_ONE else 0)
        if self.past is not None and self.past < 0:
            raise InputError("past must be >= 0")

    @property
    def window(self) -> int:
        return self.resolution

    def positions(self) -> range:
        return range(-self.past, self.resolution)

    def feasible(self, n: int, k: int) -> bool:
        """Whether Sep/Span at (n, 2**-k) is unaffected by window truncation."""
        return n >= 1 and 0 <= k <= self.past and n + k <= self.resolution

    def name(self) -> str:
        if self.kind == ROTATION:
            return f"{self.kind}({self.alpha})[{self.resolution}]"
        if self.kind == MORSE_SMALE:
            return f"{self.kind}(k={self.pairs},lam={self.lam})[{self.resolution}]"
        if self.kind in SHIFT_KINDS:
            return f"{self.kind}(w={self.resolution},past={self.past})"
        return f"{self.kind}[{self.resolution}]"

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "resolution": self.resolution}
        if self.kind == ROTATION:
            d["alpha"] = str(self.alpha)
        if self.kind == MORSE_SMALE:
            d.update(pairs=self.pairs, lam=self.lam)
        if self.kind in SHIFT_KINDS:
            d["past"] = self.past
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ZooSpec":
        allowed = {"kind", "resolution", "alpha", "pairs", "lam", "past"}
        unknown = set(d) - allowed
        if unknown:
            raise InputError(f"unknown system keys: {sorted(unknown)}")
        if "kind" not in d or "resolution" not in d:
            raise InputError("system needs 'kind' and 'resolution'")
        kw = dict(d)
        if "alpha" in kw:
            kw["alpha"] = Fraction(str(kw["alpha"]))
        return cls(**kw)


def build(spec: ZooSpec) -> System:
    builders = {
        IDENTITY: _identity,
        ROTATION: _rotation,
        DOUBLING: _doubling,
        MORSE_SMALE: _morse_smale,
        FULL_SHIFT: _full_shift,
        SINGLE_ONE: _single_one,
    }
    return builders[spec.kind](spec)


def _grid_meta(spec, g):
    return {"spec": spec, "grid_spacing": Fraction(1, g)}


def _identity(spec: ZooSpec) -> System:
    g = spec.resolution
    return System(circle_grid(g), np.arange(g), spec.name(), meta=_grid_meta(spec, g))


def _rotation(spec: ZooSpec) -> System:
    g = spec.resolution
    step = spec.alpha * g
    if step.denominator != 1:
        raise ConstructionError(f"rotation by {spec.alpha} does not preserve the {g}-grid")
    img = (np.arange(g) + int(step)) % g
    return System(circle_grid(g), img, spec.name(), meta=_grid_meta(spec, g))


def _doubling(spec: ZooSpec) -> System:
    g = spec.resolution
    return System(circle_grid(g), (2 * np.arange(g)) % g, spec.name(), meta=_grid_meta(spec, g))


def morse_smale_lift(x: np.ndarray, pairs: int, lam: float) -> np.ndarray:
    """x + lam/(2 pi k) sin(2 pi k x), the smooth map before snapping."""
    return x + lam / (2 * math.pi * pairs) * np.sin(2 * math.pi * pairs * x)


def _morse_smale(spec: ZooSpec) -> System:
    g, k, lam = spec.resolution, spec.pairs, float(spec.lam)
    if k < 1:
        raise ConstructionError("MorseSmaleCircle needs at least one pair of fixed points")
    if not 0 < lam < 1:
        raise ConstructionError(f"lam={lam} gives a non-monotone (or trivial) circle map; need 0 < lam < 1")
    if g % (2 * k):
        raise ConstructionError(f"grid size {g} must be divisible by 2k={2 * k} to hold the fixed points")
    i = np.arange(g)
    # snap to the nearest grid point; fixed points j/(2k) land exactly
    lifted = np.floor(g * morse_smale_lift(i / g, k, lam) + 0.5).astype(np.int64)
    lifted[i % (g // (2 * k)) == 0] = i[i % (g // (2 * k)) == 0]
    if np.any(np.diff(lifted) < 0):
        raise ConstructionError("snapped map is not monotone")
    img = lifted % g
    disp = lifted - i
    fixed = np.flatnonzero(disp == 0)
    expected = np.arange(2 * k) * (g // (2 * k))
    if not np.array_equal(fixed, expected):
        raise ConstructionError(
            f"grid of {g} points with lam={lam} creates spurious fixed points {sorted(set(fixed) - set(expected))}; "
            "increase lam above 1/2 or coarsen the grid"
        )
    kinds = []
    for p in fixed:
        right = disp[(p + 1) % g]
        kinds.append("repelling" if right > 0 else "attracting")
    if any(a == b for a, b in zip(kinds, kinds[1:] + kinds[:1])):
        raise ConstructionError("fixed points do not alternate between attracting and repelling")
    meta = _grid_meta(spec, g)
    meta["fixed"] = dict(zip((int(p) for p in fixed), kinds))
    return System(circle_grid(g), img, spec.name(), meta=meta)


def _shift_space(words: list[tuple], positions: range) -> FiniteMetricSpace:
    arr = np.array(words, dtype=np.int8)
    absidx = np.array([abs(p) for p in positions])
    top = int(absidx.max())
    # first-disagreement depth: min |i| over differing positions
    n = len(words)
    depth = np.full((n, n), -1, dtype=np.int64)
    for p in sorted(range(len(positions)), key=lambda j: absidx[j], reverse=True):
        diff = arr[:, p][:, None] != arr[:, p][None, :]
        depth[diff] = absidx[p]
    scale = 2 ** top
    units = np.where(depth >= 0, 2 ** (top - np.maximum(depth, 0)), 0)
    labels = tuple("".join(str(int(s)) for s in w) for w in words)
    return FiniteMetricSpace(labels, units.astype(_int_dtype(scale)), scale)


def _shift_map(words: list[tuple]) -> np.ndarray:
    index = {w: i for i, w in enumerate(words)}
    # drop the leftmost symbol, append 0 on the right
    return np.array([index[w[1:] + (0,)] for w in words], dtype=np.int64)


def _full_shift(spec: ZooSpec) -> System:
    pos = spec.positions()
    if len(pos) > 16:
        raise ConstructionError("full-shift windows above 16 symbols are not materialized")
    words = list(itertools.product((0, 1), repeat=len(pos)))
    space = _shift_space(words, pos)
    return System(space, _shift_map(words), spec.name(), meta={"spec": spec, "words": words})


def _single_one(spec: ZooSpec) -> System:
    pos = spec.positions()
    L = len(pos)
    words = [tuple([0] * L)] + [tuple(1 if j == p else 0 for j in range(L)) for p in range(L)]
    space = _shift_space(words, pos)
    return System(space, _shift_map(words), spec.name(), meta={"spec": spec, "words": words})


def catalogue() -> list[ZooSpec]:
    """Small default instances, one per kind."""
    return [
        ZooSpec(IDENTITY, 8),
        ZooSpec(ROTATION, 8, alpha=Fraction(1, 4)),
        ZooSpec(DOUBLING, 8),
        ZooSpec(MORSE_SMALE, 12, pairs=1, lam=0.75),
        ZooSpec(FULL_SHIFT, 4, past=0),
        ZooSpec(SINGLE_ONE, 5, past=5),
    ]


def with_resolution(spec: ZooSpec, resolution: int) -> ZooSpec:
    return replace(spec, resolution=resolution)
