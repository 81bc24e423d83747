"""Equivelar map families on vertex set Z_N plus the built-in catalog maps.

The two parametric families produce self-dual equivelar maps of types
[(2*m1-1)^(2*m1-1)] and [(2*m1)^(2*m1)] for m1 >= 3, m2 >= 0.  Faces are
translates of a fixed polygon whose vertex offsets come from the sequence
a(2n-1) = 3^(n-1) - 1, a(2n) = 2*3^(n-1) - 1, with the last one or two
offsets shifted by m2.  The construction is re-validated on every call
rather than trusted.
"""

from __future__ import annotations

from .errors import ValidationError
from .map_core import PolygonalMap, VertexType, from_faces, vertex_type


class DegenerateParams(ValidationError):
    """Family parameters outside the construction's validity."""


class UnknownName(ValidationError):
    """No built-in map under that name."""


# 12-vertex triangulation of the double torus (type [3^7], chi = -2).
N1_FACES = [
    [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 7], [1, 6, 8], [1, 7, 8],
    [2, 3, 6], [2, 4, 7], [2, 6, 9], [2, 7, 10], [2, 9, 10], [3, 5, 9], [3, 6, 11],
    [3, 9, 12], [3, 11, 12], [4, 6, 9], [4, 7, 8], [4, 8, 12], [4, 9, 12],
    [5, 7, 11], [5, 9, 10], [5, 10, 12], [5, 11, 12], [6, 8, 11], [7, 10, 11],
    [8, 10, 11], [8, 10, 12],
]

# 20-vertex map of type [4^3,5^1] on the non-orientable surface with chi = -1.
K3_FACES = [
    [1, 2, 10, 9, 8], [3, 4, 19, 17, 16], [5, 11, 13, 15, 14], [6, 7, 20, 18, 12],
    [1, 2, 3, 4], [1, 4, 5, 6], [1, 6, 7, 8], [2, 3, 12, 11], [2, 10, 13, 11],
    [3, 12, 18, 16], [4, 5, 14, 19], [5, 6, 12, 11], [7, 8, 14, 19],
    [7, 19, 17, 20], [8, 9, 15, 14], [9, 10, 16, 17], [9, 15, 20, 17],
    [10, 13, 18, 16], [13, 15, 20, 18],
]

BUILTIN_FACES = {"n1": N1_FACES, "k3": K3_FACES}


def offset_sequence(count: int) -> list[int]:
    """First `count` terms of 0, 1, 2, 5, 8, 17, 26, 53, ..."""
    seq = []
    n = 1
    while len(seq) < count:
        seq.append(3 ** (n - 1) - 1)
        if len(seq) < count:
            seq.append(2 * 3 ** (n - 1) - 1)
        n += 1
    return seq


def _check_params(m1: int, m2: int) -> None:
    if m1 < 3:
        raise DegenerateParams("m1 must be >= 3")
    if m2 < 0:
        raise DegenerateParams("m2 must be >= 0")


def _build_family(num_vertices: int, offsets: list[int], type_runs: tuple) -> PolygonalMap:
    faces = []
    for j in range(1, num_vertices + 1):
        face = [(j - 1 + off) % num_vertices + 1 for off in offsets]
        if len(set(face)) != len(face):
            raise DegenerateParams(f"face {face} of the {num_vertices}-vertex map repeats a vertex")
        faces.append(face)
    try:
        m = from_faces(faces)
    except ValidationError as exc:
        raise DegenerateParams(f"family map failed validation: {exc}") from exc
    t = vertex_type(m)
    if t != VertexType((type_runs,)):
        raise DegenerateParams(f"family map came out with vertex type {t}")
    return m


def odd_vertex_count(m1: int, m2: int) -> int:
    return 2 * (3 ** (m1 - 1) + 2 * m2 - 1)


def even_vertex_count(m1: int, m2: int) -> int:
    return 3**m1 + 2 * m2 - 1


def gen_odd(m1: int, m2: int) -> PolygonalMap:
    """Self-dual equivelar map of type [(2*m1-1)^(2*m1-1)] on 2*(3^(m1-1)+2*m2-1) vertices."""
    _check_params(m1, m2)
    size = 2 * m1 - 1
    a = offset_sequence(size)
    offsets = a[: size - 2] + [a[size - 2] + m2, a[size - 1] + 2 * m2]
    return _build_family(odd_vertex_count(m1, m2), offsets, (size, size))


def gen_even(m1: int, m2: int) -> PolygonalMap:
    """Self-dual equivelar map of type [(2*m1)^(2*m1)] on 3^m1+2*m2-1 vertices."""
    _check_params(m1, m2)
    size = 2 * m1
    a = offset_sequence(size)
    offsets = a[: size - 1] + [a[size - 1] + m2]
    return _build_family(even_vertex_count(m1, m2), offsets, (size, size))


def odd_code_formula(m1: int, m2: int) -> tuple[int, int]:
    """(n, k) predicted for the odd family: edges and 2 - chi."""
    base = 3 ** (m1 - 1) + 2 * m2 - 1
    return (2 * m1 - 1) * base, 2 + (2 * m1 - 5) * base


def even_code_formula(m1: int, m2: int) -> tuple[int, int]:
    """(n, k) predicted for the even family."""
    base = 3**m1 + 2 * m2 - 1
    return m1 * base, 2 + (m1 - 2) * base


def builtin(name: str) -> PolygonalMap:
    """Catalog map by name ('n1' or 'k3')."""
    try:
        faces = BUILTIN_FACES[name]
    except KeyError:
        raise UnknownName(f"no built-in map named {name!r}; have {sorted(BUILTIN_FACES)}") from None
    return from_faces(faces)
