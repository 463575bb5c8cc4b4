"""Finite metric spaces, self-maps, orbits and the Bowen distance.

Distances are held as an integer matrix ``units`` together with a common
denominator ``scale`` whenever the generator knows them exactly (grids,
word metrics, Hausdorff and Prohorov values built from those).  Otherwise
``scale`` is ``None`` and ``units`` holds float distances directly.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import InputError

FLOAT_TOL = 1e-12

# full O(N^3) triangle check is skipped above this size
TRIANGLE_CHECK_MAX = 200


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(float(value))


def _int_dtype(max_value: int):
    for dt in (np.int16, np.int32, np.int64):
        if max_value <= np.iinfo(dt).max:
            return dt
    raise InputError("distance numerators overflow int64; use a float space")


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    labels: tuple
    units: np.ndarray
    scale: int | None = None

    def __post_init__(self):
        u = np.asarray(self.units)
        n = len(self.labels)
        if n < 1:
            raise InputError("a metric space needs at least one point")
        if u.shape != (n, n):
            raise InputError(f"distance matrix shape {u.shape} does not match {n} labels")
        if self.scale is not None:
            if int(self.scale) <= 0:
                raise InputError("scale must be a positive integer")
            if not np.issubdtype(u.dtype, np.integer):
                raise InputError("exact spaces need integer distance numerators")
        u.setflags(write=False)
        object.__setattr__(self, "units", u)

    # -- construction -------------------------------------------------
    @classmethod
    def from_fractions(cls, labels, matrix, check=True) -> "FiniteMetricSpace":
        rows = [[as_fraction(v) for v in row] for row in matrix]
        denoms = [v.denominator for row in rows for v in row]
        scale = reduce(math.lcm, denoms, 1)
        nums = [[int(v * scale) for v in row] for row in rows]
        top = max((abs(v) for row in nums for v in row), default=0)
        units = np.array(nums, dtype=_int_dtype(top))
        space = cls(tuple(labels), units, scale)
        if check:
            space.validate()
        return space

    @classmethod
    def from_floats(cls, labels, matrix, check=True) -> "FiniteMetricSpace":
        space = cls(tuple(labels), np.array(matrix, dtype=float), None)
        if check:
            space.validate()
        return space

    def validate(self) -> None:
        u = self.units
        tol = 0 if self.exact else FLOAT_TOL
        if np.any(np.diag(u) != 0):
            raise InputError("dist[i][i] must be 0")
        if np.any(u < 0):
            raise InputError("distances must be nonnegative")
        if np.any(np.abs(u - u.T) > tol):
            raise InputError("distance matrix is not symmetric")
        if np.any((u + np.eye(len(u), dtype=u.dtype)) <= 0):
            raise InputError("distinct points must have positive distance")
        if self.size <= TRIANGLE_CHECK_MAX:
            w = u.astype(np.int64) if self.exact else u
            for j in range(self.size):
                via = w[:, j][:, None] + w[j, :][None, :]
                if np.any(w > via + tol):
                    raise InputError("triangle inequality violated")

    # -- queries ------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def exact(self) -> bool:
        return self.scale is not None

    @property
    def dist(self) -> np.ndarray:
        if self.exact:
            return self.units / self.scale
        return self.units

    def distance(self, i: int, j: int):
        self.check_index(i)
        self.check_index(j)
        return self.value(self.units[i, j])

    def value(self, unit):
        """Convert a raw matrix entry back to a distance."""
        if self.exact:
            return Fraction(int(unit), self.scale)
        return float(unit)

    def diameter(self):
        return self.value(self.units.max())

    def cutoff(self, eps):
        """Threshold c in units with ``d >= eps  <=>  units >= c``.

        The same c gives ``d < eps  <=>  units < c``, so separated and
        spanning tests are exact complements.
        """
        if self.exact:
            e = as_fraction(eps)
            return math.ceil(e * self.scale)
        return float(eps) - FLOAT_TOL

    def check_index(self, i: int) -> None:
        if not (0 <= int(i) < self.size):
            raise InputError(f"point index {i} out of range 0..{self.size - 1}")

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown point label {label!r}") from None


@dataclass(frozen=True, eq=False)
class System:
    space: FiniteMetricSpace
    image: np.ndarray
    name: str = "system"
    injective: bool = field(default=None)
    isometry: bool = field(default=None)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.int64)
        n = self.space.size
        if img.shape != (n,):
            raise InputError("map must be total on the index range")
        if n and (img.min() < 0 or img.max() >= n):
            raise InputError("map sends a point outside the space")
        img.setflags(write=False)
        object.__setattr__(self, "image", img)
        inj = len(np.unique(img)) == n
        if self.injective is None:
            object.__setattr__(self, "injective", inj)
        elif self.injective and not inj:
            raise InputError("injective flag set but the map is not a permutation")
        iso = _is_isometry(self.space, img)
        if self.isometry is None:
            object.__setattr__(self, "isometry", iso)
        elif self.isometry and not iso:
            raise InputError("isometry flag set but the map does not preserve distances")

    @property
    def size(self) -> int:
        return self.space.size

    def fixed_points(self) -> np.ndarray:
        return np.flatnonzero(self.image == np.arange(self.size))

    def iterate(self, k: int) -> np.ndarray:
        """Index array of T^k."""
        cur = np.arange(self.size)
        for _ in range(k):
            cur = self.image[cur]
        return cur


def _is_isometry(space: FiniteMetricSpace, img: np.ndarray) -> bool:
    if space.size > 4096:
        return False
    u = space.units
    moved = u[np.ix_(img, img)]
    if space.exact:
        return bool(np.array_equal(moved, u))
    return bool(np.all(np.abs(moved - u) <= FLOAT_TOL))


def orbit(sys: System, x: int, n: int) -> list[int]:
    """[x, Tx, ..., T^(n-1)x]."""
    if n < 1:
        raise InputError("n must be >= 1")
    sys.space.check_index(x)
    out = [int(x)]
    for _ in range(n - 1):
        out.append(int(sys.image[out[-1]]))
    return out


def dyn_distance(sys: System, x: int, y: int, n: int):
    """max_{0<=i<n} d(T^i x, T^i y)."""
    ox, oy = orbit(sys, x, n), orbit(sys, y, n)
    u = sys.space.units
    return sys.space.value(max(u[a, b] for a, b in zip(ox, oy)))


def dyn_units(sys: System, n: int, idx: Sequence[int] | None = None) -> np.ndarray:
    """Matrix of d_n in units over ``idx`` (all points by default)."""
    for _, mat in dyn_units_series(sys, n, idx):
        pass
    return mat


def dyn_units_series(sys: System, n_max: int, idx=None):
    """Yield (n, d_n matrix) for n = 1..n_max, reusing the previous step."""
    if n_max < 1:
        raise InputError("n must be >= 1")
    u = sys.space.units
    cur = np.arange(sys.size) if idx is None else np.asarray(idx, dtype=np.int64)
    mat = u[np.ix_(cur, cur)]
    yield 1, mat
    for n in range(2, n_max + 1):
        cur = sys.image[cur]
        if sys.isometry:
            yield n, mat
            continue
        mat = np.maximum(mat, u[np.ix_(cur, cur)])
        yield n, mat


def circle_grid(g: int) -> FiniteMetricSpace:
    """Points k/g on [0,1) with the arc metric min(|x-y|, 1-|x-y|)."""
    if g < 1:
        raise InputError("grid size must be >= 1")
    k = np.arange(g)
    diff = np.abs(k[:, None] - k[None, :])
    units = np.minimum(diff, g - diff).astype(_int_dtype(g))
    labels = tuple(Fraction(i, g) for i in range(g))
    return FiniteMetricSpace(labels, units, g)


def product_with_identity(sys: System, g: int) -> System:
    """T x Id on X x {0, 1/g, ..., 1} with the max metric."""
    if g < 1:
        raise InputError("grid resolution must be >= 1")
    base = sys.space
    levels = g + 1
    if base.exact:
        scale = math.lcm(base.scale, g)
        bu = base.units.astype(np.int64) * (scale // base.scale)
        s = np.arange(levels, dtype=np.int64) * (scale // g)
    else:
        scale = None
        bu = base.units
        s = np.arange(levels) / g
    su = np.abs(s[:, None] - s[None, :])
    units = np.maximum(bu[:, None, :, None], su[None, :, None, :])
    units = units.reshape(base.size * levels, base.size * levels)
    if scale is not None:
        units = units.astype(_int_dtype(int(units.max())))
    labels = tuple((lab, Fraction(j, g)) for lab in base.labels for j in range(levels))
    space = FiniteMetricSpace(labels, units, scale)
    img = (sys.image[:, None] * levels + np.arange(levels)[None, :]).reshape(-1)
    return System(
        space,
        img,
        name=f"{sys.name} x Id[{g}]",
        injective=sys.injective,
        meta={"base": sys, "levels": levels, "g": g},
    )


def product_index(levels: int, x: int, j: int) -> int:
    return x * levels + j


def warn_grid(sys: System, eps) -> None:
    """Warn when a grid is too coarse for the requested scale."""
    spacing = sys.meta.get("grid_spacing")
    if spacing is not None and spacing > as_fraction(eps) / 10:
        warnings.warn(
            f"{sys.name}: grid spacing {spacing} exceeds eps/10 for eps={eps}; "
            "separation decisions may reflect the discretization",
            RuntimeWarning,
            stacklevel=3,
        )


def restrict(sys: System, keep: Sequence[int]) -> System:
    """Restriction of T to a forward-invariant subset of indices."""
    keep = sorted({int(k) for k in keep})
    if not keep:
        raise InputError("restriction needs a nonempty subset")
    pos = {k: i for i, k in enumerate(keep)}
    try:
        img = [pos[int(sys.image[k])] for k in keep]
    except KeyError:
        raise InputError("subset is not forward invariant") from None
    u = sys.space.units[np.ix_(keep, keep)]
    space = FiniteMetricSpace(tuple(sys.space.labels[k] for k in keep), u.copy(), sys.space.scale)
    meta = dict(sys.meta)
    meta["restricted_from"] = sys.name
    return System(space, img, f"{sys.name}|{len(keep)}", meta=meta)
