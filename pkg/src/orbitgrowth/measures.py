"""Finite-support rational probability measures and the push-forward map.

Prohorov distances are exact: for a radius r the worst deficiency
max_A mu(A) - nu(N_r(A)) is 1 - maxflow in the bipartite network that
links x to y when d(x, y) <= r.  The distance is the least
max(r_j, g_j) over the distinct cross-support radii r_j.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .core import FiniteMetricSpace, System, _int_dtype, as_fraction, product_index, product_with_identity
from .errors import (
    CapacityError,
    ConstructionError,
    InputError,
    InternalError,
    PreconditionError,
    UnsupportedError,
)

SUBSET_LIMIT = 16


@dataclass(frozen=True)
class RationalMeasure:
    support: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.support) != len(self.weights):
            raise InputError("support and weights differ in length")
        pairs: dict[int, Fraction] = {}
        for x, w in zip(self.support, self.weights):
            w = as_fraction(w)
            if w < 0:
                raise InputError("weights must be nonnegative")
            pairs[int(x)] = pairs.get(int(x), Fraction(0)) + w
        items = sorted((x, w) for x, w in pairs.items() if w > 0)
        if not items:
            raise InputError("a measure needs positive mass")
        if sum(w for _, w in items) != 1:
            raise InputError("weights must sum to exactly 1")
        object.__setattr__(self, "support", tuple(x for x, _ in items))
        object.__setattr__(self, "weights", tuple(w for _, w in items))

    @classmethod
    def dirac(cls, x: int) -> "RationalMeasure":
        return cls((int(x),), (Fraction(1),))

    @classmethod
    def from_counts(cls, counts: dict) -> "RationalMeasure":
        """(1/N) sum of Diracs with the given multiplicities."""
        N = sum(counts.values())
        return cls(tuple(counts), tuple(Fraction(c, N) for c in counts.values()))

    @property
    def N(self) -> int:
        """Least common denominator of the weights."""
        return reduce(math.lcm, (w.denominator for w in self.weights), 1)

    def multiplicities(self) -> dict:
        N = self.N
        return {x: int(w * N) for x, w in zip(self.support, self.weights)}

    def in_G(self, L: int) -> bool:
        return self.N <= L

    def mass(self, A) -> Fraction:
        A = set(A)
        return sum((w for x, w in zip(self.support, self.weights) if x in A), Fraction(0))

    def as_dict(self) -> dict:
        return dict(zip(self.support, self.weights))

    def mix(self, other: "RationalMeasure", b) -> "RationalMeasure":
        """(1 - b) self + b other."""
        b = as_fraction(b)
        if not 0 <= b <= 1:
            raise InputError("mixing weight must lie in [0, 1]")
        d = {x: (1 - b) * w for x, w in self.as_dict().items()}
        for x, w in other.as_dict().items():
            d[x] = d.get(x, Fraction(0)) + b * w
        return RationalMeasure(tuple(d), tuple(d.values()))

    def to_dict(self, space: FiniteMetricSpace | None = None) -> dict:
        labels = [str(space.labels[x]) if space is not None else x for x in self.support]
        N = self.N
        return {"support": labels, "weights": [f"{int(w * N)}/{N}" for w in self.weights]}

    @classmethod
    def from_dict(cls, d: dict, space: FiniteMetricSpace | None = None) -> "RationalMeasure":
        if set(d) != {"support", "weights"}:
            raise InputError("measure needs exactly 'support' and 'weights'")
        if space is not None:
            lookup = {str(l): i for i, l in enumerate(space.labels)}
            support = []
            for s in d["support"]:
                if str(s) not in lookup:
                    raise InputError(f"unknown point label {s!r}")
                support.append(lookup[str(s)])
        else:
            support = [int(s) for s in d["support"]]
        return cls(tuple(support), tuple(Fraction(w) for w in d["weights"]))


def pushforward(sys: System, mu: RationalMeasure) -> RationalMeasure:
    for x in mu.support:
        sys.space.check_index(x)
    return RationalMeasure(tuple(int(sys.image[x]) for x in mu.support), mu.weights)


def pushforward_iter(sys: System, mu: RationalMeasure, k: int) -> RationalMeasure:
    for _ in range(k):
        mu = pushforward(sys, mu)
    return mu


# ---------------------------------------------------------------------------
# Prohorov


def _radii(mu, nu, space):
    sub = space.units[np.ix_(mu.support, nu.support)]
    return np.unique(np.concatenate([[0], sub.ravel()])), sub


def _deficiency_flow(mu, nu, sub, r_unit) -> Fraction:
    """max_A mu(A) - nu(N_r(A)) via max-flow."""
    a, b = len(mu.support), len(nu.support)
    Q = reduce(math.lcm, (w.denominator for w in mu.weights + nu.weights), 1)
    src, sink = 0, a + b + 1
    rows, cols, caps = [], [], []
    for i, w in enumerate(mu.weights):
        rows.append(src), cols.append(1 + i), caps.append(int(w * Q))
    xi, yj = np.nonzero(sub <= r_unit)
    for i, j in zip(xi, yj):
        rows.append(1 + int(i)), cols.append(1 + a + int(j)), caps.append(Q)
    for j, w in enumerate(nu.weights):
        rows.append(1 + a + j), cols.append(sink), caps.append(int(w * Q))
    if Q > np.iinfo(np.int32).max:
        raise CapacityError("common weight denominator too large for the flow backend")
    g = csr_matrix((np.array(caps, dtype=np.int32), (rows, cols)), shape=(a + b + 2,) * 2)
    flow = maximum_flow(g, src, sink).flow_value
    return 1 - Fraction(int(flow), Q)


def _deficiency_subsets(mu, nu, sub, r_unit) -> Fraction:
    near = sub <= r_unit
    best = Fraction(-1)
    a = len(mu.support)
    for m in range(1, 1 << a):
        idx = [i for i in range(a) if m >> i & 1]
        hit = near[idx].any(axis=0)
        val = sum(mu.weights[i] for i in idx) - sum(w for w, h in zip(nu.weights, hit) if h)
        best = max(best, val)
    return best


def _one_sided(mu, nu, space, method) -> Fraction | float:
    radii, sub = _radii(mu, nu, space)
    if method == "subsets":
        if len(mu.support) > SUBSET_LIMIT:
            raise CapacityError(f"subset enumeration over {len(mu.support)} atoms exceeds {SUBSET_LIMIT}",
                                cap=SUBSET_LIMIT)
        defic = _deficiency_subsets
    else:
        defic = _deficiency_flow
    # g_j falls and r_j rises; find the first j with g_j <= r_j
    value = space.value
    lo, hi = 0, len(radii) - 1
    g_cache = {}

    def g(j):
        if j not in g_cache:
            g_cache[j] = defic(mu, nu, sub, radii[j])
        return g_cache[j]

    while lo < hi:
        mid = (lo + hi) // 2
        if g(mid) <= value(radii[mid]):
            hi = mid
        else:
            lo = mid + 1
    best = value(radii[lo])
    if lo > 0:
        best = min(best, g(lo - 1))
    return min(best, 1)


def prohorov_distance(mu: RationalMeasure, nu: RationalMeasure, space: FiniteMetricSpace, method="flow"):
    """Symmetrized Prohorov distance; the two one-sided values must agree."""
    if method not in ("flow", "subsets"):
        raise InputError(f"unknown Prohorov method {method!r}")
    for x in mu.support + nu.support:
        space.check_index(x)
    if mu == nu:
        return space.value(0)
    a = _one_sided(mu, nu, space, method)
    b = _one_sided(nu, mu, space, method)
    if a != b:
        raise InternalError(f"one-sided Prohorov values disagree: {a} vs {b}")
    return a


# ---------------------------------------------------------------------------
# dual norm


@dataclass(frozen=True)
class TestFunctionFamily:
    values: tuple          # one tuple of Fractions per function, indexed by point
    weights: tuple         # 2^-k
    name: str = "custom"

    def __post_init__(self):
        if len(self.values) < 4:
            raise InputError("a test-function family needs at least 4 functions")
        if len(self.values) != len(self.weights):
            raise InputError("one weight per function")
        vals = tuple(tuple(as_fraction(v) for v in f) for f in self.values)
        if any(abs(v) > 1 for f in vals for v in f):
            raise InputError("test functions must be bounded by 1")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", tuple(as_fraction(w) for w in self.weights))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[float(v) for v in f] for f in self.values])

    def integrals(self, mu: RationalMeasure) -> tuple:
        return tuple(sum((f[x] * w for x, w in zip(mu.support, mu.weights)), Fraction(0)) for f in self.values)


def _dyadic(v: float, bits=20) -> Fraction:
    return Fraction(round(v * (1 << bits)), 1 << bits)


def _weights(k: int) -> tuple:
    return tuple(Fraction(1, 2 ** (i + 1)) for i in range(k))


def circle_family(space: FiniteMetricSpace, size: int = 8) -> TestFunctionFamily:
    """(1 + cos 2 pi j x)/2 and (1 + sin 2 pi j x)/2, j = 1..size/2, dyadic-rounded."""
    xs = [float(l) for l in space.labels]
    funcs = []
    for j in range(1, size // 2 + 1):
        funcs.append(tuple(_dyadic((1 + math.cos(2 * math.pi * j * x)) / 2) for x in xs))
        funcs.append(tuple(_dyadic((1 + math.sin(2 * math.pi * j * x)) / 2) for x in xs))
    return TestFunctionFamily(tuple(funcs), _weights(len(funcs)), "circle")


def shift_family(space: FiniteMetricSpace, positions: Sequence[int], size: int = 8) -> TestFunctionFamily:
    """Indicators of one-symbol cylinders [u_i = 1], nearest positions first,
    then their complements if the window is short."""
    order = sorted(range(len(positions)), key=lambda j: (abs(positions[j]), positions[j]))
    funcs = []
    for j in order:
        funcs.append(tuple(Fraction(int(l[j] == "1")) for l in space.labels))
    for j in order:
        funcs.append(tuple(Fraction(int(l[j] == "0")) for l in space.labels))
    funcs = funcs[:size]
    return TestFunctionFamily(tuple(funcs), _weights(len(funcs)), "shift")


def distance_family(space: FiniteMetricSpace, size: int = 8) -> TestFunctionFamily:
    """min(1, d(., a_j)) for evenly spread anchors a_j."""
    anchors = sorted({round(i * space.size / size) % space.size for i in range(size)})
    while len(anchors) < 4:
        anchors.append(anchors[-1])
    funcs = []
    for a in anchors:
        funcs.append(tuple(min(as_fraction(space.distance(x, a)), Fraction(1)) for x in range(space.size)))
    return TestFunctionFamily(tuple(funcs), _weights(len(funcs)), "distance")


def default_family(sys: System) -> TestFunctionFamily:
    spec = sys.meta.get("spec")
    if spec is not None and spec.kind in ("FullShiftWindow", "SingleOneSubshift"):
        return shift_family(sys.space, list(spec.positions()))
    if all(isinstance(l, Fraction) for l in sys.space.labels):
        return circle_family(sys.space)
    return distance_family(sys.space)


def dual_norm_distance(mu: RationalMeasure, nu: RationalMeasure, fam: TestFunctionFamily) -> Fraction:
    """sum_k 2^-k |int f_k dmu - int f_k dnu|, exactly."""
    a, b = fam.integrals(mu), fam.integrals(nu)
    return sum((w * abs(x - y) for w, x, y in zip(fam.weights, a, b)), Fraction(0))


def dyn_dual_distance(sys: System, mu, nu, n: int, fam: TestFunctionFamily) -> Fraction:
    best = Fraction(0)
    for _ in range(n):
        best = max(best, dual_norm_distance(mu, nu, fam))
        mu, nu = pushforward(sys, mu), pushforward(sys, nu)
    return best


def _feature_stack(sys, measures, n, fam):
    """Float integrals of every test function, per iterate: shape (n, m, k)."""
    F = fam.matrix
    out = np.zeros((n, len(measures), len(fam.values)))
    cur = list(measures)
    for i in range(n):
        for j, mu in enumerate(cur):
            w = np.array([float(v) for v in mu.weights])
            out[i, j] = F[:, list(mu.support)] @ w
        if i + 1 < n:
            cur = [pushforward(sys, mu) for mu in cur]
    return out


def pairs_below(sys: System, measures: Sequence[RationalMeasure], n: int, eps, fam: TestFunctionFamily,
                guard: float = 1e-9) -> list[tuple]:
    """Pairs (i, j), i < j, with dynamical dual-norm distance < eps.

    A float pass decides all pairs farther than ``guard`` from eps; the
    rest are settled with exact rational arithmetic.
    """
    eps = as_fraction(eps)
    m = len(measures)
    if m < 2:
        return []
    feats = _feature_stack(sys, measures, n, fam)
    w = np.array([float(x) for x in fam.weights])
    best = np.zeros((m, m))
    for i in range(n):
        f = feats[i]
        d = np.abs(f[:, None, :] - f[None, :, :]) @ w
        np.maximum(best, d, out=best)
    iu = np.triu_indices(m, 1)
    vals = best[iu]
    e = float(eps)
    below = []
    for k in np.flatnonzero(vals < e + guard):
        i, j = int(iu[0][k]), int(iu[1][k])
        if vals[k] < e - guard or dyn_dual_distance(sys, measures[i], measures[j], n, fam) < eps:
            below.append((i, j))
    return below


# ---------------------------------------------------------------------------
# Dirac copy and squaring


def dirac_system(sys: System, method="flow") -> System:
    """T_* restricted to Dirac measures, with Prohorov distances computed as measures."""
    N = sys.size
    diracs = [RationalMeasure.dirac(x) for x in range(N)]
    vals = [[prohorov_distance(diracs[i], diracs[j], sys.space, method) if i != j else 0
             for j in range(N)] for i in range(N)]
    if sys.space.exact:
        space = FiniteMetricSpace.from_fractions(tuple(f"delta_{l}" for l in sys.space.labels), vals, check=False)
    else:
        space = FiniteMetricSpace.from_floats(tuple(f"delta_{l}" for l in sys.space.labels), vals, check=False)
    img = [pushforward(sys, d).support[0] for d in diracs]
    return System(space, img, f"{sys.name}_*|Dirac")


def atomic_embedding_sep(sys: System, n: int, eps, exact_cap=64):
    """(Sep of T, Sep of T_* on Dirac measures under Prohorov)."""
    from .separation import EXACT, max_separated

    base, _ = max_separated(sys, n, eps, EXACT, exact_cap)
    lifted, _ = max_separated(dirac_system(sys), n, eps, EXACT, exact_cap)
    return base, lifted


@dataclass(frozen=True)
class SquaringResult:
    measures: tuple
    b: Fraction
    eps0: Fraction
    certified: bool
    violations: tuple

    @property
    def size(self) -> int:
        return len(self.measures)


def squaring_constants(eps) -> tuple[Fraction, Fraction]:
    eps = as_fraction(eps)
    b = eps / (2 + eps)
    return b, b * eps / 2


def square_separated(E: Sequence[RationalMeasure], n: int, eps, sys: System,
                     fam: TestFunctionFamily | None = None) -> SquaringResult:
    """E_b = {(1 - b) mu1 + b mu2}, certified (n, eps0)-separated."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    fam = fam or default_family(sys)
    E = list(E)
    if not E:
        raise InputError("E must be nonempty")
    bad = pairs_below(sys, E, n, eps, fam)
    if bad:
        i, j = bad[0]
        raise PreconditionError(f"E is not ({n}, {eps})-separated: members {i} and {j} are closer")
    b, eps0 = squaring_constants(eps)
    Eb = [m1.mix(m2, b) for m1 in E for m2 in E]
    violations = tuple((Eb[i], Eb[j]) for i, j in pairs_below(sys, Eb, n, eps0, fam))
    return SquaringResult(tuple(Eb), b, eps0, not violations, violations)


def separated_diracs(sys: System, n: int, eps, count: int, seed: int = 0,
                     fam: TestFunctionFamily | None = None) -> list[RationalMeasure]:
    """A seeded (n, eps)-separated set of Dirac measures of the given size."""
    fam = fam or default_family(sys)
    order = list(range(sys.size))
    random.Random(seed).shuffle(order)
    chosen: list[RationalMeasure] = []
    for x in order:
        cand = RationalMeasure.dirac(x)
        if all(dyn_dual_distance(sys, cand, m, n, fam) >= as_fraction(eps) for m in chosen):
            chosen.append(cand)
            if len(chosen) == count:
                return chosen
    raise PreconditionError(f"only {len(chosen)} Diracs are ({n}, {eps})-separated; asked for {count}")


# ---------------------------------------------------------------------------
# Psi_L: measures as graphs in X x [0, 1]


def product_resolution(L: int) -> int:
    return reduce(math.lcm, range(1, L + 1), 1)


def psi_embed(mu: RationalMeasure, L: int) -> tuple:
    """{(x_i, chi(x_i)/N)} with weights as exact fractions."""
    if not mu.in_G(L):
        raise PreconditionError(f"measure has denominator {mu.N} > L={L}")
    return tuple(zip(mu.support, mu.weights))


def psi_indices(mu: RationalMeasure, L: int, levels: int) -> tuple:
    """Psi_L(mu) as point indices of the product space X x {0, 1/g, .., 1}."""
    g = levels - 1
    out = []
    for x, w in psi_embed(mu, L):
        j = w * g
        if j.denominator != 1:
            raise PreconditionError(f"grid 1/{g} does not contain the weight {w}")
        out.append(product_index(levels, x, int(j)))
    return tuple(sorted(out))


def graph_hausdorff(A: tuple, B: tuple, space: FiniteMetricSpace):
    """Hausdorff distance of two finite graphs {(x, s)} under the max metric."""
    def d(p, q):
        return max(space.distance(p[0], q[0]), abs(p[1] - q[1]))
    return max(max(min(d(p, q) for q in B) for p in A), max(min(d(p, q) for p in A) for q in B))


def check_psi_equivariance(sys: System, mu: RationalMeasure, L: int, product: System | None = None) -> bool:
    """Psi_L(T_* mu) == (T x Id)_K(Psi_L(mu)), compared as index sets."""
    if not sys.injective:
        raise UnsupportedError("equivariance of Psi_L needs an injective map")
    product = product or product_with_identity(sys, product_resolution(L))
    levels = product.meta["levels"]
    left = psi_indices(pushforward(sys, mu), L, levels)
    right = tuple(sorted({int(product.image[i]) for i in psi_indices(mu, L, levels)}))
    return left == right


def check_support_cardinality(mu, lam, L: int, eps, space: FiniteMetricSpace) -> bool:
    """d_H(Psi mu, Psi lam) < eps implies equal support sizes (for eps < 1/L^2)."""
    eps = as_fraction(eps)
    if eps >= Fraction(1, L * L):
        raise PreconditionError(f"need eps < 1/L^2 = {Fraction(1, L * L)}")
    dh = graph_hausdorff(psi_embed(mu, L), psi_embed(lam, L), space)
    return dh >= eps or len(mu.support) == len(lam.support)


def check_distance_distortion(mu, lam, L: int, space: FiniteMetricSpace):
    """(rho, d_H, d_H >= rho / L)."""
    rho = prohorov_distance(mu, lam, space)
    dh = graph_hausdorff(psi_embed(mu, L), psi_embed(lam, L), space)
    return rho, dh, dh >= rho / L


# ---------------------------------------------------------------------------
# quotient X / Fix


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    base: FiniteMetricSpace
    fixed: tuple
    classes: tuple           # classes[c] = tuple of base indices; classes[0] is Fix
    space: FiniteMetricSpace

    def project(self, x: int) -> int:
        return 0 if x in self.fixed else self.classes.index((int(x),))

    def lift(self, c: int) -> tuple:
        return self.classes[c]


QUOTIENT_RULES = ("two-path", "infimum")


def quotient_system(sys: System, fixed: Sequence[int] | None = None, rule: str = "two-path"):
    """Collapse Fix(T) to one class.

    ``two-path``: d0 = min(d(x,y), d(x,Fix) + d(y,Fix)), always a metric.
    ``infimum``: d0 = inf over representatives, i.e. d(x,y) between
    singleton classes; may break the triangle inequality through the
    collapsed class (recorded in ``meta["metric"]``).
    Either way the collapsed class sits at distance d(x, Fix).
    """
    if rule not in QUOTIENT_RULES:
        raise InputError(f"rule must be one of {QUOTIENT_RULES}")
    fixed = tuple(sorted(int(f) for f in (sys.fixed_points() if fixed is None else fixed)))
    if not fixed:
        raise PreconditionError("the fixed set is empty")
    if len(fixed) == sys.size:
        raise ConstructionError("Fix = X: the quotient is a single point")
    if any(int(sys.image[f]) not in fixed for f in fixed):
        raise PreconditionError("the collapsed set must be invariant")
    fixset = set(fixed)
    rest = [x for x in range(sys.size) if x not in fixset]
    u = sys.space.units.astype(np.int64) if sys.space.exact else sys.space.units
    dfix = u[:, list(fixed)].min(axis=1)
    d0 = u[np.ix_(rest, rest)]
    if rule == "two-path":
        d0 = np.minimum(d0, dfix[rest][:, None] + dfix[rest][None, :])
        np.fill_diagonal(d0, 0)
    m = len(rest) + 1
    units = np.zeros((m, m), dtype=d0.dtype)
    units[1:, 1:] = d0
    units[0, 1:] = units[1:, 0] = dfix[rest]
    if sys.space.exact:
        units = units.astype(_int_dtype(int(units.max())))
    labels = ("Fix",) + tuple(sys.space.labels[x] for x in rest)
    space = FiniteMetricSpace(labels, units, sys.space.scale)
    is_metric = True
    if rule == "two-path" and space.size <= 200:
        space.validate()
    elif rule == "infimum":
        try:
            space.validate()
        except InputError:
            is_metric = False
    classes = (fixed,) + tuple((x,) for x in rest)
    pos = {x: i + 1 for i, x in enumerate(rest)}
    img = [0] + [0 if int(sys.image[x]) in fixset else pos[int(sys.image[x])] for x in rest]
    q = QuotientSpace(sys.space, fixed, classes, space)
    return q, System(space, img, f"{sys.name}/Fix", meta={"quotient": q, "rule": rule, "metric": is_metric})


# ---------------------------------------------------------------------------
# the simplex of fixed-point measures


def _require_morse_smale(sys: System):
    spec = sys.meta.get("spec")
    if spec is None or spec.kind != "MorseSmaleCircle":
        raise UnsupportedError("the simplex check applies to Morse-Smale zoo systems")


def in_gamma(sys: System, mu: RationalMeasure) -> bool:
    fixed = set(int(f) for f in sys.fixed_points())
    return all(x in fixed for x in mu.support)


def gamma_simplex_check(sys: System, mu: RationalMeasure) -> bool:
    """A simplex measure is an exact fixed point of the push-forward."""
    _require_morse_smale(sys)
    if not in_gamma(sys, mu):
        raise PreconditionError("measure is not a combination of fixed-point Diracs")
    return pushforward(sys, mu) == mu


def basin_limits(sys: System) -> np.ndarray:
    """The fixed point each orbit ends at (-1 if it never settles)."""
    cur = np.arange(sys.size)
    for _ in range(sys.size):
        cur = sys.image[cur]
    fixed = sys.image[cur] == cur
    return np.where(fixed, cur, -1)


def gamma_distance_trace(sys: System, nu: RationalMeasure, steps: int):
    """Prohorov distance from F_*^k nu to its basin projection in the simplex.

    Each value bounds the distance to the simplex from above.
    """
    _require_morse_smale(sys)
    lim = basin_limits(sys)
    if np.any(lim[list(nu.support)] < 0):
        raise PreconditionError("some orbit does not reach a fixed point")
    target = RationalMeasure(tuple(int(lim[x]) for x in nu.support), nu.weights)
    trace = []
    cur = nu
    for _ in range(steps + 1):
        trace.append(prohorov_distance(cur, target, sys.space))
        cur = pushforward(sys, cur)
    return trace


# ---------------------------------------------------------------------------
# pools and the measure system


def measure_pool(points: Sequence[int], L: int, cap: int | None = None, seed: int = 0) -> list[RationalMeasure]:
    """All measures with denominator <= L over ``points``; seeded sample above cap."""
    points = sorted(int(p) for p in points)
    seen = {}
    for N in range(1, L + 1):
        for combo in itertools.combinations_with_replacement(points, N):
            counts: dict[int, int] = {}
            for x in combo:
                counts[x] = counts.get(x, 0) + 1
            mu = RationalMeasure.from_counts(counts)
            seen.setdefault((mu.support, mu.weights), mu)
    pool = [seen[k] for k in sorted(seen)]
    if cap is not None and len(pool) > cap:
        pool = sorted(random.Random(seed).sample(pool, cap), key=lambda m: (m.support, m.weights))
    return pool


def random_measure(rng: random.Random, points: Sequence[int], L: int) -> RationalMeasure:
    N = rng.randint(1, L)
    counts: dict[int, int] = {}
    for _ in range(N):
        x = rng.choice(list(points))
        counts[x] = counts.get(x, 0) + 1
    return RationalMeasure.from_counts(counts)


MEASURE_SYSTEM_CAP = 400


def measure_system(sys: System, L: int, cap: int = MEASURE_SYSTEM_CAP) -> System:
    """T_* on G_L (all measures with denominator <= L): a finite invariant set."""
    pool = measure_pool(range(sys.size), L)
    if len(pool) > cap:
        raise CapacityError(f"G_{L} over {sys.size} points has {len(pool)} measures (cap {cap})", cap=cap)
    index = {(m.support, m.weights): i for i, m in enumerate(pool)}
    img = []
    for m in pool:
        p = pushforward(sys, m)
        img.append(index[(p.support, p.weights)])
    M = len(pool)
    vals = [[0] * M for _ in range(M)]
    for i in range(M):
        for j in range(i + 1, M):
            vals[i][j] = vals[j][i] = prohorov_distance(pool[i], pool[j], sys.space)
    labels = tuple(tuple(zip(m.support, (str(w) for w in m.weights))) for m in pool)
    if sys.space.exact:
        space = FiniteMetricSpace.from_fractions(labels, vals, check=False)
    else:
        space = FiniteMetricSpace.from_floats(labels, vals, check=False)
    return System(space, img, f"{sys.name}_*|G{L}", meta={"pool": pool, "base": sys})
