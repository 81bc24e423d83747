"""Cyclic covers: cut a map along a non-separating two-sided cycle, glue d copies.

Cutting duplicates every cycle vertex into an A-side and a B-side clone.
Which side a face corner belongs to is decided by walking the cycle's
tubular neighborhood: at each cycle vertex the two incident cycle edges
split the rotation into two corner arcs, and the faces sharing a cycle edge
tie the arc labels of consecutive cycle vertices together.  If the labels
come back flipped after a full lap, the neighborhood is a Moebius band and
the cycle is one-sided.

The d-fold cover relabels copy j of cut vertex v as j*V + v, with the
B-side boundary of copy j identified with the A-side boundary of copy j+1
(mod d).  The result is re-validated from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .css import build_css
from .distance import NoNontrivialCycle, shortest_nontrivial_cycle
from .errors import HomcodeError, ValidationError
from .map_core import Disconnected, PolygonalMap, _canonical_cycle, from_faces


class NoSuchCycle(ValidationError):
    """No homologically nontrivial two-sided cycle exists (e.g. on a sphere)."""


class OneSidedCycle(ValidationError):
    """The cycle's neighborhood is a Moebius band; cutting gives one boundary."""


class NotACycle(ValidationError):
    """The vertex list is not a simple closed walk along existing edges."""


class DisconnectedCover(ValidationError):
    """Gluing produced a disconnected result (the cycle was separating)."""


@dataclass(frozen=True)
class CoverSpec:
    """Gluing cycle (0-based vertex ids) and fold count d >= 1."""

    cycle: tuple[int, ...]
    d: int


@dataclass(frozen=True)
class CutResult:
    """The cut-open complex.

    Faces use the base map's vertex ids except that cycle vertex i is
    replaced by its A clone (base V + i) or B clone (base V + k + i).
    boundary_a/boundary_b list the clone ids along the two boundary cycles.
    """

    faces: tuple[tuple[int, ...], ...]
    num_vertices: int
    boundary_a: tuple[int, ...]
    boundary_b: tuple[int, ...]
    cycle: tuple[int, ...]


def _check_cycle(m: PolygonalMap, cycle) -> tuple[int, ...]:
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise NotACycle("a cutting cycle needs at least 3 vertices")
    if len(set(cycle)) != len(cycle):
        raise NotACycle(f"cycle {cycle} repeats a vertex")
    for v in cycle:
        if not 0 <= v < m.V:
            raise NotACycle(f"vertex {v} outside the map")
    for i, u in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not m.has_edge(u, w):
            raise NotACycle(f"{u + 1}-{w + 1} is not an edge of the map")
    return cycle


def _cycle_sides(m: PolygonalMap, cycle: tuple[int, ...]):
    """Per cycle position, the (A-side, B-side) face sets; raises OneSidedCycle."""
    k = len(cycle)
    local = []
    for i in range(k):
        v = cycle[i]
        e_prev = m.edge_id(cycle[i - 1], v)
        e_next = m.edge_id(v, cycle[(i + 1) % k])
        rot = m.rotations[v]
        eids = [e for e, _ in rot]
        p, q = eids.index(e_next), eids.index(e_prev)
        arc0, arc1 = [], []
        j = p
        while j != q:
            arc0.append(rot[j][1])
            j = (j + 1) % len(rot)
        while j != p:
            arc1.append(rot[j][1])
            j = (j + 1) % len(rot)
        local.append((frozenset(arc0), frozenset(arc1)))

    sides: list[tuple[frozenset, frozenset] | None] = [None] * k
    sides[0] = local[0]
    for i in range(k):
        nxt = (i + 1) % k
        eid = m.edge_id(cycle[i], cycle[nxt])
        f1, _ = m.edge_faces[eid]
        on_a = f1 in sides[i][0]
        if nxt == 0:
            if (f1 in sides[0][0]) != on_a:
                raise OneSidedCycle(
                    "side labels flip after one lap: cycle "
                    + "-".join(str(v + 1) for v in cycle)
                    + " is one-sided"
                )
        else:
            a0, a1 = local[nxt]
            if (f1 in a0) == on_a:
                sides[nxt] = (a0, a1)
            else:
                sides[nxt] = (a1, a0)
    return sides


def is_two_sided(m: PolygonalMap, cycle) -> bool:
    try:
        _cycle_sides(m, _check_cycle(m, cycle))
    except OneSidedCycle:
        return False
    return True


def cut_along(m: PolygonalMap, cycle) -> CutResult:
    """Cut the map open along a two-sided cycle."""
    cycle = _check_cycle(m, cycle)
    sides = _cycle_sides(m, cycle)
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    new_faces = []
    for fid, face in enumerate(m.faces):
        out = []
        for v in face:
            i = pos.get(v)
            if i is None:
                out.append(v)
            else:
                out.append(m.V + i if fid in sides[i][0] else m.V + k + i)
        new_faces.append(tuple(out))

    # Bookkeeping check: boundary copies in one face each, everything else in two.
    counts: dict[tuple[int, int], int] = {}
    for face in new_faces:
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            key = (u, w) if u < w else (w, u)
            counts[key] = counts.get(key, 0) + 1
    boundary_a = tuple(m.V + i for i in range(k))
    boundary_b = tuple(m.V + k + i for i in range(k))
    expect_once = set()
    for ring in (boundary_a, boundary_b):
        for i in range(k):
            u, w = ring[i], ring[(i + 1) % k]
            expect_once.add((u, w) if u < w else (w, u))
    for key, c in counts.items():
        want = 1 if key in expect_once else 2
        if c != want:
            raise HomcodeError(f"cut bookkeeping broke at pair {key}: {c} faces, wanted {want}")
    return CutResult(tuple(new_faces), m.V + k, boundary_a, boundary_b, cycle)


def d_cover(m: PolygonalMap, spec: CoverSpec) -> PolygonalMap:
    """Glue spec.d copies of the cut complex in a ring."""
    if spec.d < 1:
        raise ValidationError("cover fold count d must be >= 1")
    cut = cut_along(m, spec.cycle)
    k = len(cut.cycle)
    V, d = m.V, spec.d
    faces = []
    for j in range(d):
        for face in cut.faces:
            out = []
            for u in face:
                if u < V:
                    out.append(j * V + u)
                elif u < V + k:
                    out.append(j * V + cut.cycle[u - V])
                else:
                    out.append(((j + 1) % d) * V + cut.cycle[u - V - k])
            faces.append(out)
    try:
        return from_faces(faces)
    except Disconnected as exc:
        raise DisconnectedCover(
            "the gluing cycle separates the surface; the ring of copies falls apart"
        ) from exc


def _simple_cycles_of_length(m: PolygonalMap, length: int):
    """Simple cycles as vertex tuples: minimal vertex first, second < last."""
    adj: list[list[int]] = [[] for _ in range(m.V)]
    for u, w in m.edges:
        adj[u].append(w)
        adj[w].append(u)
    for nbrs in adj:
        nbrs.sort()

    def extend(path, visited):
        if len(path) == length:
            if path[1] < path[-1] and path[0] in adj[path[-1]]:
                yield tuple(path)
            return
        for w in adj[path[-1]]:
            if w > path[0] and w not in visited:
                path.append(w)
                visited.add(w)
                yield from extend(path, visited)
                path.pop()
                visited.remove(w)

    for s in range(m.V):
        yield from extend([s], {s})


def find_gluing_cycle(m: PolygonalMap) -> tuple[int, ...]:
    """Shortest homologically nontrivial two-sided cycle.

    Ties at the minimal length are broken by the lexicographically least
    sorted edge-id set.  Raises NoSuchCycle when no such cycle exists.
    """
    code = build_css(m)
    if code.k == 0:
        raise NoSuchCycle("the map has trivial cycle homology (k = 0)")
    hz_rref = gf2.rref(code.hz)
    try:
        shortest, _ = shortest_nontrivial_cycle(m, hz_rref)
    except NoNontrivialCycle as exc:  # unreachable once k > 0; keep the guard
        raise NoSuchCycle(str(exc)) from exc
    for length in range(shortest, m.V + 1):
        best = None
        for cyc in _simple_cycles_of_length(m, length):
            vec = 0
            for i, u in enumerate(cyc):
                vec |= 1 << m.edge_id(u, cyc[(i + 1) % length])
            if gf2.in_rowspace(hz_rref, vec):
                continue
            try:
                _cycle_sides(m, cyc)
            except OneSidedCycle:
                continue
            key = _bits_sorted(vec)
            if best is None or key < best[0]:
                best = (key, cyc)
        if best is not None:
            return _canonical_cycle(best[1])
    raise NoSuchCycle("no two-sided nontrivial cycle of any length")


def _bits_sorted(v: int) -> tuple[int, ...]:
    out = []
    while v:
        out.append((v & -v).bit_length() - 1)
        v &= v - 1
    return tuple(out)


def cover_code_formula(base: PolygonalMap, d: int) -> tuple[int, int]:
    """(n, k) of the d-fold cover's code, from the base map's invariants alone."""
    chi = base.V - base.E + base.F
    return base.E * d, 2 - chi * d


def cover_rate_limit(base: PolygonalMap) -> "Fraction":
    """Exact limit of k/n for the cover family as d grows."""
    from fractions import Fraction

    chi = base.V - base.E + base.F
    return Fraction(-chi, base.E)
