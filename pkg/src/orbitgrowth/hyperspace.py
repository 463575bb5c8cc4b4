"""The hyperspace of nonempty subsets with the Hausdorff metric.

Hyperpoints are bitsets over base indices: a subset with mask m sits at
index m - 1 of the enumerated hyperspace.  Full enumeration builds the
Hausdorff matrix by a subset recursion: adding the top point b to a set R
only lowers the point-to-set distances to ``min(., d(., b))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteMetricSpace, System, _int_dtype, dyn_units
from .errors import CapacityError, InputError
from .search import bits
from .separation import (
    EXACT,
    SEPARATED,
    GrowthSamples,
    max_separated,
    min_spanning,
)

DEFAULT_HYPER_CAP = 12


def hyperpoint(members: Iterable[int]) -> tuple:
    """Normalize to a nonempty sorted duplicate-free tuple."""
    out = tuple(sorted({int(m) for m in members}))
    if not out:
        raise InputError("a hyperpoint must be nonempty")
    return out


def to_mask(A: Iterable[int]) -> int:
    m = 0
    for a in A:
        m |= 1 << int(a)
    if not m:
        raise InputError("a hyperpoint must be nonempty")
    return m


def from_mask(mask: int) -> tuple:
    return tuple(bits(mask))


def hausdorff_distance(A, B, space: FiniteMetricSpace):
    """max of the two directed point-to-set distances."""
    A, B = hyperpoint(A), hyperpoint(B)
    for i in A + B:
        space.check_index(i)
    sub = space.units[np.ix_(A, B)]
    return space.value(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


def induced_map(sys: System, A) -> tuple:
    A = hyperpoint(A)
    for i in A:
        sys.space.check_index(i)
    return hyperpoint(sys.image[list(A)])


def dyn_hausdorff(sys: System, A, B, n: int):
    """max over 0 <= i < n of the Hausdorff distance of T^i A and T^i B."""
    if n < 1:
        raise InputError("n must be >= 1")
    A, B = hyperpoint(A), hyperpoint(B)
    best = None
    for _ in range(n):
        h = hausdorff_distance(A, B, sys.space)
        best = h if best is None or h > best else best
        A, B = induced_map(sys, A), induced_map(sys, B)
    return best


# ---------------------------------------------------------------------------
# full enumeration


def hausdorff_units(space: FiniteMetricSpace) -> np.ndarray:
    """Hausdorff matrix (in base units) over all 2^N - 1 nonempty subsets."""
    N = space.size
    d = space.units.astype(np.int64)
    full = 1 << N
    # mins[m, y] = min over a in m of d(a, y); row 0 is the empty set
    big = int(d.max()) + 1
    mins = np.full((full, N), big, dtype=np.int64)
    for b in range(N):
        lo = 1 << b
        mins[lo:2 * lo] = np.minimum(mins[0:lo], d[b][None, :])
    # directed[m, r] = max over y in r of mins[m, y]; column 0 is the empty set
    dt = _int_dtype(big)
    directed = np.zeros((full, full), dtype=dt)
    for b in range(N):
        lo = 1 << b
        directed[:, lo:2 * lo] = np.maximum(directed[:, 0:lo], mins[:, b][:, None])
    h = np.maximum(directed, directed.T)[1:, 1:]
    return np.ascontiguousarray(h)


def image_masks(sys: System) -> np.ndarray:
    """Image bitmask of every mask 0 .. 2^N - 1."""
    N = sys.size
    img = np.zeros(1 << N, dtype=np.int64)
    for b in range(N):
        lo = 1 << b
        img[lo:2 * lo] = img[0:lo] | (1 << int(sys.image[b]))
    return img


class HyperSystem:
    """The induced map on the hyperspace, materialized on demand."""

    def __init__(self, base: System, cap: int = DEFAULT_HYPER_CAP):
        self.base = base
        self.cap = cap

    @property
    def size(self) -> int:
        return (1 << self.base.size) - 1

    def index(self, A) -> int:
        return to_mask(hyperpoint(A)) - 1

    def point(self, index: int) -> tuple:
        return from_mask(int(index) + 1)

    def image(self, A) -> tuple:
        return induced_map(self.base, A)

    @cached_property
    def system(self) -> System:
        N = self.base.size
        if N > self.cap:
            raise CapacityError(
                f"full hyperspace over {N} base points exceeds the enumeration cap {self.cap}", cap=self.cap
            )
        space = self.base.space
        units = hausdorff_units(space)
        labels = tuple(range(1, 1 << N))  # bitmask labels; decode with from_mask
        hspace = FiniteMetricSpace(labels, units, space.scale)
        img = image_masks(self.base)[1:] - 1
        return System(hspace, img, name=f"K({self.base.name})", meta={"base": self.base})

    def singleton_indices(self) -> list[int]:
        return [(1 << i) - 1 for i in range(self.base.size)]

    def family_indices(self, family: Iterable) -> list[int]:
        return [self.index(A) for A in family]


def subsets_of(points: Sequence[int]) -> list[tuple]:
    pts = sorted(int(p) for p in points)
    out = []
    for m in range(1, 1 << len(pts)):
        out.append(tuple(pts[i] for i in bits(m)))
    return out


# ---------------------------------------------------------------------------
# lemma-level witnesses


@dataclass(frozen=True)
class HyperWitness:
    family: tuple
    base_witness: tuple
    n: int
    epsilon: object
    certified: bool
    violations: tuple

    @property
    def size(self) -> int:
        return len(self.family)


def _hyper_dn(hsys: HyperSystem, n: int, rows: Sequence[int]) -> np.ndarray:
    """D_n rows for the given hyperpoint indices against all hyperpoints."""
    hs = hsys.system
    u = hs.space.units
    rows = np.asarray(rows, dtype=np.int64)
    cur_r, cur_c = rows.copy(), np.arange(hs.size)
    out = u[np.ix_(cur_r, cur_c)]
    for _ in range(n - 1):
        cur_r, cur_c = hs.image[cur_r], hs.image[cur_c]
        out = np.maximum(out, u[np.ix_(cur_r, cur_c)])
    return out


def cover_subfamily(sys: System, n: int, eps, E: Sequence[int], A) -> tuple:
    """The E-points whose (n, eps) ball meets A."""
    cutoff = sys.space.cutoff(eps)
    D = dyn_units(sys, n)
    A = list(hyperpoint(A))
    return tuple(e for e in E if (D[e, A] < cutoff).any())


def hyper_span_upper_witness(sys: System, n: int, eps, exact_cap=64, hyper_cap=DEFAULT_HYPER_CAP,
                             hsys: HyperSystem | None = None) -> HyperWitness:
    """All nonempty subsets of a minimum (n, eps)-spanning set E.

    Certification: every hyperpoint A is within D_n < eps of the subset
    F(A) of E-points whose ball meets A, and of some family member.
    """
    _, wit = min_spanning(sys, n, eps, EXACT, exact_cap)
    E = wit.indices
    family = tuple(subsets_of(E))
    hsys = hsys or HyperSystem(sys, hyper_cap)
    cutoff = sys.space.cutoff(eps)
    rows = hsys.family_indices(family)
    Dn = _hyper_dn(hsys, n, rows)
    covered = (Dn < cutoff).any(axis=0)
    violations = []
    D = dyn_units(sys, n)
    fam_pos = {f: i for i, f in enumerate(family)}
    for idx in np.flatnonzero(~covered):
        violations.append(("uncovered", hsys.point(idx)))
    # the explicit F(A) of the covering argument must itself be within eps
    for idx in range(hsys.size):
        A = list(hsys.point(idx))
        F = tuple(e for e in E if (D[e, A] < cutoff).any())
        if not F or Dn[fam_pos[F], idx] >= cutoff:
            violations.append(("F(A) too far", tuple(A), F))
    return HyperWitness(family, E, n, eps, not violations, tuple(violations))


def hyper_sep_lower_witness(sys: System, n: int, eps, exact_cap=64, hyper_cap=DEFAULT_HYPER_CAP,
                            hsys: HyperSystem | None = None) -> HyperWitness:
    """All nonempty subsets of a maximum (n, eps)-separated set, with their
    pairwise D_n checked against eps/2."""
    _, wit = max_separated(sys, n, eps, EXACT, exact_cap)
    A = wit.indices
    family = tuple(subsets_of(A))
    cutoff = sys.space.cutoff(eps / 2)
    hsys = hsys or HyperSystem(sys, hyper_cap)
    if sys.size <= hsys.cap:
        rows = hsys.family_indices(family)
        Dn = _hyper_dn(hsys, n, rows)[:, rows]
        bad = np.argwhere(np.triu(Dn < cutoff, 1))
        violations = tuple((family[i], family[j]) for i, j in bad)
    else:
        violations = tuple(
            (family[i], family[j])
            for i in range(len(family))
            for j in range(i + 1, len(family))
            if dyn_hausdorff(sys, family[i], family[j], n) < eps / 2
        )
    return HyperWitness(family, A, n, eps, not violations, violations)


def hyper_generalized_entropy_formula(base_samples: Sequence[GrowthSamples], tail=None):
    """o(T_K) = sup over eps of [2^Span(T, n, eps)], from base Span counts."""
    from .growth import DEFAULT_TAIL, exponentiate, sup_over_eps

    if len(base_samples) < 2:
        raise InputError("need base Span samples at >= 2 eps levels")
    for s in base_samples:
        if s.kind == SEPARATED:
            raise InputError("the formula takes spanning counts")
    return sup_over_eps([exponentiate(s) for s in base_samples], DEFAULT_TAIL if tail is None else tail)
