"""Exact combinatorial search on bitsets.

Maximum clique (branch and bound with greedy-colouring bounds) gives exact
separated-set counts; minimum set cover (reductions plus branch and bound
with a packing bound) gives exact spanning-set counts.  Vertex and element
sets are Python ints used as bitsets.
"""
from __future__ import annotations

import numpy as np


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def rows_to_masks(matrix: np.ndarray) -> list[int]:
    """Boolean matrix -> one int bitset per row (bit j set iff matrix[i, j])."""
    m = np.asarray(matrix, dtype=bool)
    if m.shape[1] == 0:
        return [0] * m.shape[0]
    packed = np.packbits(m, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


# ---------------------------------------------------------------------------
# maximum clique


def _colour_sort(P: int, adj: list[int]):
    """Greedy sequential colouring of P; returns vertices and colour classes
    in nondecreasing colour order."""
    order, colours = [], []
    uncoloured = P
    k = 0
    while uncoloured:
        k += 1
        Q = uncoloured
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v]
            Q ^= low
            uncoloured ^= low
            order.append(v)
            colours.append(k)
    return order, colours


def max_clique(adj: list[int], candidates: int | None = None) -> list[int]:
    """Maximum clique of the graph given by neighbour bitsets.

    ``adj[v]`` must not contain v itself.  Vertices are relabelled by
    decreasing degree so colouring follows a good static order.
    """
    n = len(adj)
    if n == 0:
        return []
    if candidates is None:
        candidates = (1 << n) - 1
    verts = list(bits(candidates))
    if not verts:
        return []
    deg = {v: popcount(adj[v] & candidates) for v in verts}
    verts.sort(key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(verts)}
    radj = []
    for v in verts:
        m = 0
        for w in bits(adj[v] & candidates):
            m |= 1 << pos[w]
        radj.append(m)

    best = [verts[0]]
    best_len = 1

    def expand(R: list[int], P: int):
        nonlocal best, best_len
        order, colours = _colour_sort(P, radj)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colours[i] <= best_len:
                return
            v = order[i]
            newP = P & radj[v]
            R.append(v)
            if newP:
                expand(R, newP)
            elif len(R) > best_len:
                best_len = len(R)
                best = [verts[u] for u in R]
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << len(verts)) - 1)
    return sorted(best)


# ---------------------------------------------------------------------------
# minimum set cover


def _dedupe_and_reduce(sets: list[int], universe: int):
    """Classical set-cover reductions.

    Returns (forced, sets, universe, names) where ``forced`` are original
    set indices that belong to some optimum cover, and the remaining
    problem is over the surviving sets (``names`` maps back).
    """
    names = list(range(len(sets)))
    sets = [s & universe for s in sets]
    forced: list[int] = []
    while True:
        changed = False
        # drop empty and duplicate sets
        seen: dict[int, int] = {}
        keep = []
        for i, s in enumerate(sets):
            if s and s not in seen:
                seen[s] = i
                keep.append(i)
        if len(keep) != len(sets):
            changed = True
        sets = [sets[i] for i in keep]
        names = [names[i] for i in keep]
        if not universe:
            break
        # element -> coverer bitset (over current set indices)
        cov: dict[int, int] = {}
        for i, s in enumerate(sets):
            b = 1 << i
            for e in bits(s):
                cov[e] = cov.get(e, 0) | b
        # forced sets: element with a single coverer
        force = 0
        for e, c in cov.items():
            if c & (c - 1) == 0:
                force |= c
        if force:
            covered = 0
            for i in bits(force):
                forced.append(names[i])
                covered |= sets[i]
            universe &= ~covered
            sets = [s & universe for j, s in enumerate(sets) if not (force >> j) & 1]
            names = [nm for j, nm in enumerate(names) if not (force >> j) & 1]
            continue
        # dominated elements: cov(e) superset of cov(f) -> e is implied by f
        by_cov: dict[int, int] = {}
        for e, c in cov.items():
            by_cov.setdefault(c, e)
        reps = sorted(by_cov.items(), key=lambda kv: popcount(kv[0]))
        kept_cov: list[int] = []
        kept_el = 0
        for c, e in reps:
            if any((k & c) == k for k in kept_cov):
                continue
            kept_cov.append(c)
            kept_el |= 1 << e
        if kept_el != universe:
            universe = kept_el
            sets = [s & universe for s in sets]
            changed = True
        # dominated sets: s subset of t -> drop s
        order = sorted(range(len(sets)), key=lambda i: -popcount(sets[i]))
        survivors: list[int] = []
        for i in order:
            s = sets[i]
            if any((s & sets[j]) == s for j in survivors):
                changed = True
                continue
            survivors.append(i)
        if len(survivors) != len(sets):
            survivors.sort()
            sets = [sets[i] for i in survivors]
            names = [names[i] for i in survivors]
        if not changed:
            break
    return forced, sets, universe, names


def _components(sets: list[int], universe: int):
    """Split (sets, universe) into independent blocks."""
    parent = list(range(len(sets)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict[int, int] = {}
    for i, s in enumerate(sets):
        for e in bits(s):
            if e in owner:
                ra, rb = find(owner[e]), find(i)
                if ra != rb:
                    parent[ra] = rb
            else:
                owner[e] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(sets)):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in groups.values():
        el = 0
        for i in members:
            el |= sets[i]
        el &= universe
        if el:
            out.append((members, el))
    return out


def _greedy_cover(sets: list[int], universe: int) -> list[int]:
    chosen = []
    left = universe
    while left:
        i = max(range(len(sets)), key=lambda j: (popcount(sets[j] & left), -j))
        if not sets[i] & left:
            raise ValueError("sets do not cover the universe")
        chosen.append(i)
        left &= ~sets[i]
    return chosen


class NodeLimit(Exception):
    pass


def _solve_block(sets: list[int], universe: int, node_limit: int | None = None) -> list[int]:
    """Exact minimum cover of one connected block by branch and bound."""
    m = len(sets)
    cov: dict[int, int] = {}
    for i, s in enumerate(sets):
        for e in bits(s):
            cov[e] = cov.get(e, 0) | (1 << i)
    best = _greedy_cover(sets, universe)
    best_len = len(best)
    sizes = [popcount(s) for s in sets]
    biggest = max(sizes, default=1)
    nodes = 0

    def lower_bound(left: int, allowed: int) -> int:
        # packing: elements whose allowed coverers are pairwise disjoint
        used = 0
        count = 0
        els = sorted(bits(left), key=lambda e: popcount(cov[e] & allowed))
        for e in els:
            c = cov[e] & allowed
            if not c & used:
                used |= c
                count += 1
        return max(count, -(-popcount(left) // biggest))

    def branch(left: int, allowed: int, chosen: list[int]):
        nonlocal best, best_len, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise NodeLimit
        if not left:
            if len(chosen) < best_len:
                best_len = len(chosen)
                best = list(chosen)
            return
        if len(chosen) + 1 >= best_len:
            return
        # pick the element with the fewest remaining coverers
        pick, pick_c, fewest = -1, 0, m + 1
        for e in bits(left):
            c = cov[e] & allowed
            k = popcount(c)
            if k < fewest:
                pick, pick_c, fewest = e, c, k
                if k <= 1:
                    break
        if fewest == 0:
            return
        if len(chosen) + lower_bound(left, allowed) >= best_len:
            return
        options = sorted(bits(pick_c), key=lambda i: (-popcount(sets[i] & left), i))
        for i in options:
            chosen.append(i)
            branch(left & ~sets[i], allowed, chosen)
            chosen.pop()
            allowed &= ~(1 << i)
            if len(chosen) + 1 >= best_len:
                return

    branch(universe, (1 << m) - 1, [])
    return best


def min_set_cover(sets: list[int], universe: int) -> list[int]:
    """Indices of a minimum-cardinality subfamily of ``sets`` covering ``universe``.

    Pure branch and bound on bitsets; used directly for small instances and
    as the independent reference for :func:`min_cover_matrix`.
    """
    total = 0
    for s in sets:
        total |= s
    if universe & ~total:
        raise ValueError("sets do not cover the universe")
    forced, rsets, runiv, names = _dedupe_and_reduce(sets, universe)
    chosen = list(forced)
    for members, el in _components(rsets, runiv):
        sub = [rsets[i] & el for i in members]
        # reduce again inside the block; cheap and often decisive
        f2, s2, u2, n2 = _dedupe_and_reduce(sub, el)
        chosen.extend(names[members[i]] for i in f2)
        if u2:
            for j in _solve_block(s2, u2):
                chosen.append(names[members[n2[j]]])
    return sorted(set(chosen))


# ---------------------------------------------------------------------------
# matrix front end for large instances

BLOCK_NODE_LIMIT = 20000


def _subset_rows(M: np.ndarray) -> np.ndarray:
    """sub[i, j] = row i is a subset of row j; equal rows only point to
    the earlier one, so dropping every i with some sub[i, j] keeps one copy."""
    Mf = M.astype(np.float32)
    inter = Mf @ Mf.T
    sub = inter == M.sum(axis=1).astype(np.float32)[:, None]
    np.fill_diagonal(sub, False)
    sub &= ~np.triu(sub & sub.T)
    return sub


def reduce_cover_matrix(B: np.ndarray):
    """Set-cover reductions on a boolean (sets x elements) matrix.

    Returns (forced, rows, cols): original row indices that belong to an
    optimum, and the surviving row and column indices.
    """
    rows = np.arange(B.shape[0])
    cols = np.arange(B.shape[1])
    M = np.asarray(B, dtype=bool)
    forced: list[int] = []
    while M.size:
        shape = M.shape
        # empty and duplicate sets, then duplicate elements
        keep = np.flatnonzero(M.any(axis=1))
        M, rows = M[keep], rows[keep]
        _, first = np.unique(M, axis=0, return_index=True)
        first.sort()
        M, rows = M[first], rows[first]
        _, first = np.unique(M, axis=1, return_index=True)
        first.sort()
        M, cols = M[:, first], cols[first]
        # an element with a single coverer forces that set
        single = np.flatnonzero(M.sum(axis=0) == 1)
        if len(single):
            take = np.unique(np.argmax(M[:, single], axis=0))
            forced.extend(int(r) for r in rows[take])
            covered = M[take].any(axis=0)
            left = np.setdiff1d(np.arange(len(rows)), take)
            M, rows = M[left][:, ~covered], rows[left]
            cols = cols[~covered]
            continue
        # a set inside another set is never needed
        keep = ~_subset_rows(M).any(axis=1)
        M, rows = M[keep], rows[keep]
        # an element whose coverers include all coverers of another is implied
        drop = _subset_rows(M.T).any(axis=0)
        M, cols = M[:, ~drop], cols[~drop]
        if M.shape == shape:
            break
    return forced, rows, cols


def _milp_cover(M: np.ndarray) -> list[int]:
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import csr_matrix

    m = M.shape[0]
    res = milp(
        np.ones(m),
        constraints=LinearConstraint(csr_matrix(M.T.astype(float)), lb=1),
        integrality=np.ones(m),
        bounds=Bounds(0, 1),
        options={"mip_rel_gap": 0.0},
    )
    if res.status != 0:
        raise RuntimeError(f"MILP cover solver failed: {res.message}")
    chosen = [int(i) for i in np.flatnonzero(res.x > 0.5)]
    if not M[chosen].any(axis=0).all():
        raise RuntimeError("MILP solution is not a cover")
    return chosen


def min_cover_matrix(B: np.ndarray, node_limit: int = BLOCK_NODE_LIMIT) -> list[int]:
    """Minimum cover for a boolean (sets x elements) matrix.

    Reduce, split into independent blocks, then branch and bound each
    block; blocks that exhaust ``node_limit`` go to an integer program.
    """
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    B = np.asarray(B, dtype=bool)
    if not B.any(axis=0).all():
        raise ValueError("sets do not cover the universe")
    forced, rows, cols = reduce_cover_matrix(B)
    chosen = list(forced)
    if len(cols):
        M = B[np.ix_(rows, cols)]
        m = len(rows)
        # bipartite graph: sets 0..m-1, elements m..
        g = csr_matrix(np.block([[np.zeros((m, m), bool), M], [M.T, np.zeros((len(cols),) * 2, bool)]]))
        _, label = connected_components(g, directed=False)
        for comp in np.unique(label[m:]):
            r = np.flatnonzero(label[:m] == comp)
            c = np.flatnonzero(label[m:] == comp)
            block = M[np.ix_(r, c)]
            masks = rows_to_masks(block)
            try:
                sol = _solve_block(masks, (1 << len(c)) - 1, node_limit)
            except NodeLimit:
                sol = _milp_cover(block)
            chosen.extend(int(rows[r[i]]) for i in sol)
    return sorted(set(chosen))
