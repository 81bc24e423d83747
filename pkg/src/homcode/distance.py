"""Minimum distance of a map code: min cycle length that is homologically nontrivial.

Two independent engines:

* bfs - breadth-first search from every vertex; each non-tree edge closes a
  fundamental cycle (the two root paths XOR down to the simple cycle through
  their meet point).  A candidate counts when its edge vector is outside the
  row space of the face-boundary matrix.  Any minimum-weight nontrivial
  element of the cycle space is a simple cycle (an even-degree edge set
  splits into edge-disjoint simple cycles, one of which is nontrivial and no
  heavier), and over all roots some fundamental cycle attains that minimum.
  delta comes from the map, delta_star from the same search on the dual.

* oracle - plain enumeration of all edge subsets of weight 1..cap; a subset
  counts if it lies in nullspace(hx) but outside rowspace(hz) or vice versa.
  Exists purely to cross-check the bfs engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gf2
from .css import CssCode, build_css
from .errors import BudgetError, HomcodeError
from .map_core import PolygonalMap, dual

DEFAULT_BUDGET = 50_000_000


class NoNontrivialCycle(HomcodeError):
    """The map carries no homologically nontrivial cycle (k = 0)."""


class MethodTooExpensive(BudgetError):
    """The requested enumeration exceeds the configured budget."""


@dataclass(frozen=True)
class Unresolved:
    """Oracle outcome: no witness up to weight_cap, so d_min > weight_cap."""

    weight_cap: int


@dataclass(frozen=True)
class DistanceResult:
    """delta/delta_star and witnesses; witness edge ids use the primal indexing."""

    delta: int | None
    delta_star: int | None
    d_min: int
    witness_delta: tuple[int, ...] | None
    witness_delta_star: tuple[int, ...] | None


def _bits(v: int) -> tuple[int, ...]:
    out = []
    while v:
        out.append((v & -v).bit_length() - 1)
        v &= v - 1
    return tuple(out)


def shortest_nontrivial_cycle(m: PolygonalMap, hz_rref: gf2.Rref) -> tuple[int, tuple[int, ...]]:
    """Length and edge-id witness of the shortest cycle outside rowspace(hz)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(m.V)]
    for eid, (u, w) in enumerate(m.edges):
        adj[u].append((w, eid))
        adj[w].append((u, eid))
    best_len = None
    best_vec = None
    for root in range(m.V):
        dist = [-1] * m.V
        pmask = [0] * m.V
        dist[root] = 0
        frontier = [root]
        tree = 0
        while frontier:
            nxt = []
            for u in frontier:
                du, pu = dist[u], pmask[u]
                for w, eid in adj[u]:
                    if dist[w] == -1:
                        dist[w] = du + 1
                        pmask[w] = pu | (1 << eid)
                        tree |= 1 << eid
                        nxt.append(w)
            frontier = nxt
        for eid, (u, w) in enumerate(m.edges):
            bit = 1 << eid
            if tree & bit:
                continue
            vec = pmask[u] ^ pmask[w] ^ bit
            wt = vec.bit_count()
            if best_len is not None and wt >= best_len:
                continue
            if vec and not gf2.in_rowspace(hz_rref, vec):
                best_len = wt
                best_vec = vec
        if best_len == 3:
            break
    if best_vec is None:
        raise NoNontrivialCycle("every cycle of the map is a boundary (k = 0)")
    return best_len, _bits(best_vec)


def _dual_edge_bijection(m: PolygonalMap, dm: PolygonalMap) -> list[int]:
    """primal edge id -> dual edge id, via the shared face pair."""
    out = []
    for eid in range(m.E):
        f1, f2 = m.edge_faces[eid]
        out.append(dm.edge_id(f1, f2))
    if sorted(out) != list(range(dm.E)):
        raise HomcodeError("primal/dual edge correspondence is not a bijection")
    return out


def _oracle_search(code: CssCode, weight_cap: int, budget: int):
    """First (weight, vector, side) hit of the exhaustive subset scan, else None.

    side is "cycle" for nullspace(hx) \\ rowspace(hz) witnesses and "cocycle"
    for the transposed condition.
    """
    n = code.n
    if weight_cap < 1:
        raise HomcodeError("weight_cap must be >= 1")
    planned = math.comb(n, weight_cap)
    if planned > budget:
        raise MethodTooExpensive(
            f"C({n},{weight_cap}) = {planned} subsets exceeds the budget of {budget}"
        )
    cols_x = [0] * n
    cols_z = [0] * n
    for i, row in enumerate(code.hx.rows):
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            cols_x[j] |= 1 << i
            r &= r - 1
    for i, row in enumerate(code.hz.rows):
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            cols_z[j] |= 1 << i
            r &= r - 1
    hx_r = gf2.rref(code.hx)
    hz_r = gf2.rref(code.hz)
    in_rowspace = gf2.in_rowspace

    def rec(start, depth, px, pz, pv, w, cx=cols_x, cz=cols_z):
        if depth == w - 1:
            for l in range(start, n):
                if px == cx[l] or pz == cz[l]:
                    v = pv | (1 << l)
                    if px == cx[l] and not in_rowspace(hz_r, v):
                        return v, "cycle"
                    if pz == cz[l] and not in_rowspace(hx_r, v):
                        return v, "cocycle"
            return None
        stop = n - (w - 1 - depth)
        for i in range(start, stop):
            hit = rec(i + 1, depth + 1, px ^ cx[i], pz ^ cz[i], pv | (1 << i), w)
            if hit is not None:
                return hit
        return None

    for w in range(1, weight_cap + 1):
        hit = rec(0, 0, 0, 0, 0, w)
        if hit is not None:
            vec, side = hit
            return w, vec, side
    return None


def oracle_distance(code: CssCode, weight_cap: int, budget: int = DEFAULT_BUDGET):
    """d_min by brute force, or Unresolved(weight_cap) when nothing that light exists."""
    hit = _oracle_search(code, weight_cap, budget)
    if hit is None:
        return Unresolved(weight_cap)
    return hit[0]


def distance(
    code: CssCode,
    m: PolygonalMap,
    method: str = "bfs",
    weight_cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
):
    """DistanceResult via the requested engine; oracle may return Unresolved."""
    if code.k == 0:
        raise NoNontrivialCycle("k = 0: the code has no logical operators")
    if method == "bfs":
        delta, wit = shortest_nontrivial_cycle(m, gf2.rref(code.hz))
        dm = dual(m)
        dcode = build_css(dm)
        delta_star, dual_wit = shortest_nontrivial_cycle(dm, gf2.rref(dcode.hz))
        to_dual = _dual_edge_bijection(m, dm)
        from_dual = {d: p for p, d in enumerate(to_dual)}
        wit_star = tuple(sorted(from_dual[e] for e in dual_wit))
        return DistanceResult(delta, delta_star, min(delta, delta_star), wit, wit_star)
    if method == "oracle":
        cap = 6 if weight_cap is None else weight_cap
        hit = _oracle_search(code, cap, budget)
        if hit is None:
            return Unresolved(cap)
        w, vec, side = hit
        wit = _bits(vec)
        if side == "cycle":
            return DistanceResult(w, None, w, wit, None)
        return DistanceResult(None, w, w, None, wit)
    raise HomcodeError(f"unknown distance method {method!r}")
