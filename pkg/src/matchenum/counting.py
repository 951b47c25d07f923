"""Exact perfect-matching counts by three independent methods.

* ``count_brute``     - backtracking on the minimum-degree vertex; the
  ground-truth oracle for everything else.
* ``count_permanent`` - Ryser inclusion-exclusion on the 0/1 biadjacency;
  works for any balanced bipartite graph (hypercubes included).
* ``count_kasteleyn`` - determinant of the signed biadjacency under a
  Kasteleyn orientation; needs the planar embedding.

Everything here is exact integer arithmetic; no floating point at all.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Optional

from .graphs import GraphError, MatchGraph

BRUTE_FORCE_LIMIT = 64   # vertices
PERMANENT_LIMIT = 20     # columns (one color class)


class BoundError(ValueError):
    """Input exceeds a documented safety bound."""


# -- backtracking oracle ----------------------------------------------------


def count_brute(g: MatchGraph, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Exact number of perfect matchings by branch-and-count.

    Branches on a minimum-degree vertex, so degree-1 vertices propagate
    as forced edges and degree-0 vertices prune immediately.
    """
    if g.n > limit:
        raise BoundError(f"{g.n} vertices exceeds the brute-force limit {limit}")
    if g.n % 2:
        return 0
    adj = [set(ns) for ns in g.adj]
    alive = set(range(g.n))

    def detach(v: int) -> None:
        for u in adj[v]:
            adj[u].remove(v)
        alive.remove(v)

    def attach(v: int) -> None:
        for u in adj[v]:
            adj[u].add(v)
        alive.add(v)

    def rec() -> int:
        if not alive:
            return 1
        v = min(alive, key=lambda u: len(adj[u]))
        if not adj[v]:
            return 0
        total = 0
        detach(v)
        for u in tuple(adj[v]):
            detach(u)
            total += rec()
            attach(u)
        attach(v)
        return total

    return rec()


def enumerate_matchings(
    g: MatchGraph, limit: int = BRUTE_FORCE_LIMIT
) -> Iterator[frozenset[tuple[int, int]]]:
    """Yield every perfect matching as a frozenset of sorted edge pairs."""
    if g.n > limit:
        raise BoundError(f"{g.n} vertices exceeds the brute-force limit {limit}")
    if g.n % 2:
        return
    adj = [set(ns) for ns in g.adj]
    alive = set(range(g.n))
    chosen: list[tuple[int, int]] = []

    def detach(v: int) -> None:
        for u in adj[v]:
            adj[u].remove(v)
        alive.remove(v)

    def attach(v: int) -> None:
        for u in adj[v]:
            adj[u].add(v)
        alive.add(v)

    def rec() -> Iterator[frozenset[tuple[int, int]]]:
        if not alive:
            yield frozenset(chosen)
            return
        v = min(alive, key=lambda u: len(adj[u]))
        if not adj[v]:
            return
        detach(v)
        for u in tuple(adj[v]):
            detach(u)
            chosen.append((v, u) if v < u else (u, v))
            yield from rec()
            chosen.pop()
            attach(u)
        attach(v)

    yield from rec()


# -- permanent via Ryser ----------------------------------------------------


def count_permanent(g: MatchGraph, limit: int = PERMANENT_LIMIT) -> int:
    """Permanent of the 0/1 biadjacency by inclusion-exclusion over column
    subsets (Gray-code order, exact integers)."""
    if g.color is None:
        raise GraphError("count_permanent needs a bipartition")
    rows = [v for v in range(g.n) if g.color[v] == 0]
    cols = [v for v in range(g.n) if g.color[v] == 1]
    if len(rows) != len(cols):
        raise GraphError(
            f"bipartition classes have sizes {len(rows)} != {len(cols)}"
        )
    m = len(rows)
    if m > limit:
        raise BoundError(f"class size {m} exceeds the permanent limit {limit}")
    if m == 0:
        return 1

    col_pos = {v: k for k, v in enumerate(cols)}
    row_masks = []
    for v in rows:
        mask = 0
        for u in g.adj[v]:
            mask |= 1 << col_pos[u]
        row_masks.append(mask)

    sums = [0] * m
    total = 0
    parity = 0  # |S| mod 2
    gray_prev = 0
    for k in range(1, 1 << m):
        gray = k ^ (k >> 1)
        bit = gray ^ gray_prev
        gray_prev = gray
        j = bit.bit_length() - 1
        delta = 1 if gray & bit else -1
        for i in range(m):
            if (row_masks[i] >> j) & 1:
                sums[i] += delta
        parity ^= 1
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if parity else prod
    perm = total if m % 2 == 0 else -total
    if perm < 0:
        raise ArithmeticError("permanent of a 0/1 matrix came out negative")
    return perm


# -- Kasteleyn orientation and determinant ----------------------------------

Orientation = dict[tuple[int, int], tuple[int, int]]


def kasteleyn_orient(g: MatchGraph, seed: int = 0) -> Orientation:
    """Edge orientation making every bounded face clockwise-odd.

    Builds a spanning tree of the dual graph rooted at the outer face and
    fixes face parities from the leaves upward; ``seed`` shuffles the dual
    traversal so tests can probe different (equally valid) orientations.
    Maps each edge (u, v) with u < v to its oriented (tail, head) pair.
    """
    if g.coords is None:
        raise GraphError("kasteleyn_orient needs an embedding")
    if not g.is_connected():
        raise GraphError("kasteleyn_orient needs a connected graph")

    orient: Orientation = {e: e for e in g.edges}
    faces = g.faces()
    if not faces:
        return orient
    face_of = g.face_of_dart()

    dual: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in faces]
    for u, v in g.edges:
        f1 = face_of[(u, v)]
        f2 = face_of[(v, u)]
        if f1 != f2:  # bridges border one face twice and carry no constraint
            dual[f1].append((f2, (u, v)))
            dual[f2].append((f1, (u, v)))

    outer = [i for i, f in enumerate(faces) if not f.bounded]
    root = outer[0]
    rng = random.Random(seed)

    parent_edge: dict[int, tuple[int, int]] = {}
    order = []
    seen = {root}
    stack = [root]
    while stack:
        f = stack.pop()
        order.append(f)
        nbrs = list(dual[f])
        rng.shuffle(nbrs)
        for f2, e in nbrs:
            if f2 not in seen:
                seen.add(f2)
                parent_edge[f2] = e
                stack.append(f2)

    def cw_count(fi: int) -> int:
        # the stored walk keeps the interior on the left (counter-clockwise
        # for bounded faces), so an edge is clockwise iff it opposes its dart
        n_cw = 0
        for a, b in faces[fi].darts:
            e = (a, b) if a < b else (b, a)
            if orient[e] == (b, a):
                n_cw += 1
        return n_cw

    # children first: flipping a face's parent edge never touches a face
    # that was already fixed
    for f in reversed(order):
        if f == root or not faces[f].bounded:
            continue
        if cw_count(f) % 2 == 0:
            e = parent_edge[f]
            t, h = orient[e]
            orient[e] = (h, t)

    return orient


def signed_biadjacency(
    g: MatchGraph, orient: Orientation
) -> tuple[list[int], list[int], list[list[int]]]:
    """Rows are class-0 vertices, columns class-1; entries +1 when the edge
    is oriented row -> column, -1 the other way, 0 for non-edges."""
    if g.color is None:
        raise GraphError("signed biadjacency needs a bipartition")
    rows = [v for v in range(g.n) if g.color[v] == 0]
    cols = [v for v in range(g.n) if g.color[v] == 1]
    col_pos = {v: k for k, v in enumerate(cols)}
    mat = [[0] * len(cols) for _ in rows]
    for r, v in enumerate(rows):
        for u in g.adj[v]:
            e = (v, u) if v < u else (u, v)
            mat[r][col_pos[u]] = 1 if orient[e] == (v, u) else -1
    return rows, cols, mat


def det_bareiss(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def count_kasteleyn(g: MatchGraph, seed: int = 0) -> int:
    """|det| of the Kasteleyn-signed biadjacency.

    Imbalanced graphs count 0 (no perfect matching exists); disconnected
    graphs are counted component by component.
    """
    if g.coords is None:
        raise GraphError("count_kasteleyn needs an embedding")
    if g.color is None:
        raise GraphError("count_kasteleyn needs a bipartition")
    if not g.is_balanced():
        return 0
    comps = g.components()
    if len(comps) > 1:
        total = 1
        for comp in comps:
            total *= count_kasteleyn(g.subgraph(comp), seed=seed)
            if total == 0:
                return 0
        return total
    orient = kasteleyn_orient(g, seed=seed)
    _, _, mat = signed_biadjacency(g, orient)
    if len(mat) != len(mat[0] if mat else []):
        return 0
    return abs(det_bareiss(mat))


# -- forced edges and ratios -------------------------------------------------


def count_auto(g: MatchGraph) -> int:
    """Pick the strongest applicable exact method for this graph."""
    if g.color is not None and not g.is_balanced():
        return 0
    if g.coords is not None and g.color is not None:
        return count_kasteleyn(g)
    if g.color is not None:
        a, _ = g.class_sizes()
        if a <= PERMANENT_LIMIT:
            return count_permanent(g)
    if g.n <= BRUTE_FORCE_LIMIT:
        return count_brute(g)
    raise BoundError(f"no exact method applies to {g.n} vertices")


def count_with_forced_edge(
    g: MatchGraph, e: tuple[int, int], method: Optional[str] = None
) -> int:
    """Matchings containing e = matchings of g minus both endpoints of e."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    h = g.delete_vertices((u, v))
    if method is None:
        return count_auto(h)
    return COUNTERS[method](h)


def containment_ratio(g: MatchGraph, e: tuple[int, int]) -> Fraction:
    """Fraction of all perfect matchings that contain the edge e."""
    total = count_auto(g)
    if total == 0:
        raise GraphError("containment ratio undefined: zero total count")
    return Fraction(count_with_forced_edge(g, e), total)


COUNTERS = {
    "brute": count_brute,
    "permanent": count_permanent,
    "kasteleyn": count_kasteleyn,
    "auto": count_auto,
}
