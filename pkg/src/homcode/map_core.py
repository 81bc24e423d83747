"""Polygonal maps on closed surfaces.

A map is stored as its list of faces, each face a cyclic sequence of
vertex ids.  Construction derives the edge list (sorted lexicographically,
0-based edge ids) and, for every vertex, the rotation: the cyclic
alternating sequence of incident edges and face corners.  Validation
enforces the closed-surface conditions: every edge lies in exactly two
faces, every vertex neighborhood is a single disk, the edge graph is
connected, and faces are simple (length >= 3, no repeated vertex).

Vertex ids in map files are 1-based; everything in memory is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError


class OpenEdge(ValidationError):
    """Some vertex pair occurs in a number of face boundaries other than 0 or 2."""


class PinchedVertex(ValidationError):
    """The corners around a vertex form more than one cycle (no disk neighborhood)."""


class RepeatedVertexInFace(ValidationError):
    """A face visits the same vertex twice."""


class Disconnected(ValidationError):
    """The edge graph of the map is not connected."""


class PolygonalMap:
    """Immutable polygonal map on a closed surface.

    Attributes:
        faces: tuple of faces, each a tuple of 0-based vertex ids in cyclic order.
        num_vertices: vertex count V (ids are 0..V-1).
        edges: sorted tuple of (u, v) pairs with u < v; edge id = index here.
        edge_index: dict mapping (u, v) with u < v to the edge id.
        edge_faces: per edge, the pair (f1, f2) of face ids containing it (f1 <= f2).
        rotations: per vertex, a tuple of (edge_id, face_id) pairs giving the
            cyclic order around the vertex; the corner face_id sits between
            edge_id and the next entry's edge.
    """

    __slots__ = ("faces", "num_vertices", "edges", "edge_index", "edge_faces", "rotations")

    def __init__(self, faces, num_vertices, edges, edge_index, edge_faces, rotations):
        self.faces = faces
        self.num_vertices = num_vertices
        self.edges = edges
        self.edge_index = edge_index
        self.edge_faces = edge_faces
        self.rotations = rotations

    @property
    def V(self) -> int:
        return self.num_vertices

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def __repr__(self) -> str:
        return f"PolygonalMap(V={self.V}, E={self.E}, F={self.F})"


@dataclass(frozen=True)
class VertexType:
    """Canonical run-length encoding of the face sizes around a vertex.

    runs is the lexicographically least sequence of (face_size, multiplicity)
    pairs over all rotations and the reflection of the cyclic size sequence.
    """

    runs: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return "[" + ",".join(f"{size}^{mult}" for size, mult in self.runs) + "]"


@dataclass(frozen=True)
class NotSemiEquivelar:
    """Returned by vertex_type when two vertices disagree; not an error."""

    vertex_a: int
    vertex_b: int
    type_a: VertexType
    type_b: VertexType

    def __str__(self) -> str:
        return (
            f"not semi-equivelar: vertex {self.vertex_a + 1} has type {self.type_a}, "
            f"vertex {self.vertex_b + 1} has type {self.type_b}"
        )


def from_faces(face_lists: Iterable[Sequence[int]]) -> PolygonalMap:
    """Build and validate a map from its faces.

    Vertex ids may start at any base (files use 1); they are shifted so the
    smallest id becomes 0 and must form a contiguous range.  Faces are kept
    exactly in the given order and cyclic orientation.

    Raises RepeatedVertexInFace, OpenEdge, PinchedVertex, Disconnected, or a
    plain ValidationError for malformed input (short face, id gaps).
    """
    raw = [tuple(face) for face in face_lists]
    if not raw:
        raise ValidationError("a map needs at least one face")
    for face in raw:
        if len(face) < 3:
            raise ValidationError(f"face {face} has fewer than 3 vertices")
        if len(set(face)) != len(face):
            raise RepeatedVertexInFace(f"face {face} repeats a vertex")

    ids = sorted({v for face in raw for v in face})
    base = ids[0]
    if ids != list(range(base, base + len(ids))):
        raise ValidationError("vertex ids do not form a contiguous range")
    num_vertices = len(ids)
    faces = tuple(tuple(v - base for v in face) for face in raw)

    # Every unordered pair of cyclically consecutive vertices must occur in
    # exactly two face boundaries (closed surface, no boundary edges).
    pair_faces: dict[tuple[int, int], list[int]] = {}
    for fid, face in enumerate(faces):
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            key = (u, w) if u < w else (w, u)
            pair_faces.setdefault(key, []).append(fid)
    for key, fids in pair_faces.items():
        if len(fids) != 2:
            raise OpenEdge(
                f"edge {key[0] + 1}-{key[1] + 1} lies in {len(fids)} face(s), expected 2"
            )

    edges = tuple(sorted(pair_faces))
    edge_index = {pair: eid for eid, pair in enumerate(edges)}
    edge_faces = tuple(tuple(sorted(pair_faces[pair])) for pair in edges)

    rotations = tuple(_build_rotation(v, faces, edge_index) for v in range(num_vertices))

    # Connectivity of the edge graph.
    seen = [False] * num_vertices
    stack = [0]
    seen[0] = True
    count = 1
    adjacency: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, w in edges:
        adjacency[u].append(w)
        adjacency[w].append(u)
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != num_vertices:
        raise Disconnected(f"edge graph has >1 component ({count} of {num_vertices} reached)")

    return PolygonalMap(faces, num_vertices, edges, edge_index, edge_faces, rotations)


def _build_rotation(v, faces, edge_index):
    """Walk the corners around v into a single alternating edge/corner cycle."""
    # corner j = visit of v in face corners[j][0], flanked by two edge ids.
    corners = []
    for fid, face in enumerate(faces):
        for i, u in enumerate(face):
            if u != v:
                continue
            a = face[i - 1]
            b = face[(i + 1) % len(face)]
            ea = edge_index[(a, v) if a < v else (v, a)]
            eb = edge_index[(v, b) if v < b else (b, v)]
            corners.append((fid, ea, eb))
    edge_corners: dict[int, list[int]] = {}
    for j, (_, ea, eb) in enumerate(corners):
        edge_corners.setdefault(ea, []).append(j)
        edge_corners.setdefault(eb, []).append(j)
    for eid, js in edge_corners.items():
        if len(js) != 2:
            # cannot happen once the pair count check passed; guards corrupt state
            raise PinchedVertex(f"edge {eid} meets {len(js)} corners at vertex {v + 1}")

    # Deterministic start: smallest incident edge, then its smaller-face corner.
    start_edge = min(edge_corners)
    j0 = min(edge_corners[start_edge], key=lambda j: corners[j][0])
    cycle = []
    eid, j = start_edge, j0
    while True:
        cycle.append((eid, corners[j][0]))
        fid, ea, eb = corners[j]
        eid = eb if eid == ea else ea
        pair = edge_corners[eid]
        j = pair[1] if pair[0] == j else pair[0]
        if eid == start_edge and j == j0:
            break
        if len(cycle) > len(corners):
            raise PinchedVertex(f"corner walk at vertex {v + 1} does not close")
    if len(cycle) != len(corners):
        raise PinchedVertex(
            f"vertex {v + 1} has {len(corners)} corners but its walk closes after {len(cycle)}"
        )
    return tuple(cycle)


def euler_characteristic(m: PolygonalMap) -> int:
    """V - E + F."""
    return m.V - m.E + m.F


def _canonical_runs(sizes: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Run-length encoding of a cyclic sequence, least over rotation and reflection."""
    seq = tuple(sizes)
    candidates = [seq[i:] + seq[:i] for i in range(len(seq))]
    rev = seq[::-1]
    candidates += [rev[i:] + rev[:i] for i in range(len(rev))]
    best = min(candidates)
    runs: list[list[int]] = []
    for s in best:
        if runs and runs[-1][0] == s:
            runs[-1][1] += 1
        else:
            runs.append([s, 1])
    # The least rotation never starts or ends mid-run, so no wrap merge is needed.
    return tuple((s, n) for s, n in runs)


def vertex_type_at(m: PolygonalMap, v: int) -> VertexType:
    """Type of a single vertex from its rotation."""
    return VertexType(_canonical_runs([len(m.faces[fid]) for _, fid in m.rotations[v]]))


def vertex_type(m: PolygonalMap) -> VertexType | NotSemiEquivelar:
    """Common vertex type, or a NotSemiEquivelar value naming two witnesses."""
    t0 = vertex_type_at(m, 0)
    for v in range(1, m.V):
        t = vertex_type_at(m, v)
        if t != t0:
            return NotSemiEquivelar(0, v, t0, t)
    return t0


def dual(m: PolygonalMap) -> PolygonalMap:
    """Dual map: vertices are the faces of m, faces are the vertex rotations of m."""
    return from_faces([[fid for _, fid in m.rotations[v]] for v in range(m.V)])


def is_orientable(m: PolygonalMap) -> bool:
    """True iff the faces can be oriented so each edge is traversed once per direction."""
    # direction bit: 0 if the face traverses the edge from min to max endpoint
    visits: list[list[tuple[int, int]]] = [[] for _ in range(m.E)]
    for fid, face in enumerate(m.faces):
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            eid = m.edge_id(u, w)
            visits[eid].append((fid, 0 if u < w else 1))
    face_edges = [
        [m.edge_id(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]
        for face in m.faces
    ]
    flip = [-1] * m.F
    for start in range(m.F):
        if flip[start] != -1:
            continue
        flip[start] = 0
        stack = [start]
        while stack:
            fid = stack.pop()
            for eid in face_edges[fid]:
                (fa, da), (fb, db) = visits[eid]
                # opposite traversal required after flips
                want = da ^ db ^ 1
                other = fb if fa == fid else fa
                if flip[other] == -1:
                    flip[other] = flip[fid] ^ want
                    stack.append(other)
                elif flip[fid] ^ flip[other] != want:
                    return False
    return True


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Least representative of a cyclic sequence under rotation and reflection."""
    seq = tuple(seq)
    best = None
    for cand in (seq, seq[::-1]):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best


def _flag_system(m: PolygonalMap):
    """Flag arrays for isomorphism testing.

    Flags are (vertex, edge, face) incidences; within face f of length L and
    corner position i, flag 2i is (face[i], prev edge, f) and flag 2i+1 is
    (face[i], next edge, f).  Returns (s0, s1, s2, flag_vertex, flag_key)
    where the s_i are the involutions changing vertex, edge, and face, and
    flag_key carries (degree, face length) for anchor pruning.
    """
    nf = 4 * m.E
    s0 = [0] * nf
    s1 = [0] * nf
    s2 = [0] * nf
    flag_vertex = [0] * nf
    flag_key = [None] * nf
    offsets = []
    off = 0
    for face in m.faces:
        offsets.append(off)
        off += 2 * len(face)
    by_vertex_edge: dict[tuple[int, int], list[int]] = {}
    for fid, face in enumerate(m.faces):
        L = len(face)
        off = offsets[fid]
        for i, v in enumerate(face):
            prev_e = m.edge_id(face[i - 1], v)
            next_e = m.edge_id(v, face[(i + 1) % L])
            fa, fb = off + 2 * i, off + 2 * i + 1
            flag_vertex[fa] = flag_vertex[fb] = v
            flag_key[fa] = flag_key[fb] = (m.degree(v), L)
            s1[fa], s1[fb] = fb, fa
            # next edge joins this corner to the next corner in the face
            s0[fb] = off + 2 * ((i + 1) % L)
            s0[off + 2 * ((i + 1) % L)] = fb
            by_vertex_edge.setdefault((v, prev_e), []).append(fa)
            by_vertex_edge.setdefault((v, next_e), []).append(fb)
    for pair in by_vertex_edge.values():
        a, b = pair
        s2[a], s2[b] = b, a
    return s0, s1, s2, flag_vertex, flag_key


def is_isomorphic(a: PolygonalMap, b: PolygonalMap) -> bool:
    """Test map isomorphism (faces matched as cyclic sequences up to reflection).

    One anchor flag of a is matched against every flag of b; the involution
    structure then propagates the whole correspondence, which is finally
    checked to carry faces onto faces.
    """
    if (a.V, a.E, a.F) != (b.V, b.E, b.F):
        return False
    if sorted(map(len, a.faces)) != sorted(map(len, b.faces)):
        return False
    if sorted(a.degree(v) for v in range(a.V)) != sorted(b.degree(v) for v in range(b.V)):
        return False

    s0a, s1a, s2a, fva, fka = _flag_system(a)
    s0b, s1b, s2b, fvb, fkb = _flag_system(b)
    nf = len(s0a)
    face_multiset_b = sorted(_canonical_cycle(face) for face in b.faces)
    anchor = 0
    for target in range(nf):
        if fkb[target] != fka[anchor]:
            continue
        match = [-1] * nf
        used = [False] * nf
        match[anchor] = target
        used[target] = True
        stack = [anchor]
        ok = True
        while stack and ok:
            x = stack.pop()
            y = match[x]
            for sa, sb in ((s0a, s0b), (s1a, s1b), (s2a, s2b)):
                x2, y2 = sa[x], sb[y]
                if match[x2] == -1:
                    if used[y2]:
                        ok = False
                        break
                    match[x2] = y2
                    used[y2] = True
                    stack.append(x2)
                elif match[x2] != y2:
                    ok = False
                    break
        if not ok or -1 in match:
            continue
        vmap = [-1] * a.V
        for x in range(nf):
            va, vb = fva[x], fvb[match[x]]
            if vmap[va] == -1:
                vmap[va] = vb
            elif vmap[va] != vb:
                ok = False
                break
        if not ok or sorted(vmap) != list(range(b.V)):
            continue
        mapped = sorted(_canonical_cycle([vmap[v] for v in face]) for face in a.faces)
        if mapped == face_multiset_b:
            return True
    return False


def from_map_text(text: str) -> PolygonalMap:
    """Parse the .map format: '#' comments, one face of 1-based ids per line."""
    faces = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            faces.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValidationError(f"bad map line: {line!r}") from exc
    return from_faces(faces)


def to_map_text(m: PolygonalMap) -> str:
    """Serialize to the .map format, faces in stored order, 1-based ids."""
    return "\n".join(" ".join(str(v + 1) for v in face) for face in m.faces) + "\n"
