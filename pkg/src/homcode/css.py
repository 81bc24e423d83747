"""CSS codes from maps: vertex-edge and face-edge incidence matrices.

For a map with edge set E, hx is the V x E vertex-edge incidence matrix and
hz the F x E face-edge incidence matrix, columns ordered by the map's
lexicographic edge index.  Every edge has two endpoints and two faces, so
hx hz^T = 0 and the pair defines an [[n, k]] code with n = E and
k = n - rank(hx) - rank(hz) = 2 - chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .errors import HomcodeError
from .map_core import PolygonalMap, euler_characteristic, vertex_type


@dataclass(frozen=True)
class CssCode:
    hx: gf2.BitMatrix
    hz: gf2.BitMatrix
    edges: tuple[tuple[int, int], ...]
    n: int
    k: int


@dataclass(frozen=True)
class CssCheck:
    """Outcome of verify_css; falsy with a diagnostic when a condition fails."""

    ok: bool
    message: str
    cell: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CodeReport:
    """One code-table row: parameters plus provenance."""

    n: int
    k: int
    d_min: int | None
    chi: int
    map_type: str
    rate: Fraction
    provenance: str

    def render(self, witness: str | None = None) -> str:
        d = "?" if self.d_min is None else str(self.d_min)
        line = (
            f"[[{self.n},{self.k},{d}]] chi={self.chi} type={self.map_type} "
            f"rate={self.rate} src={self.provenance}"
        )
        if witness is not None:
            line += f" witness={witness}"
        return line


def build_css(m: PolygonalMap) -> CssCode:
    """Build the code of a map; k comes from ranks and is checked against 2 - chi."""
    hx_rows = [0] * m.V
    hz_rows = [0] * m.F
    for eid, (u, w) in enumerate(m.edges):
        bit = 1 << eid
        hx_rows[u] |= bit
        hx_rows[w] |= bit
        f1, f2 = m.edge_faces[eid]
        hz_rows[f1] |= bit
        hz_rows[f2] |= bit
    hx = gf2.BitMatrix(tuple(hx_rows), m.E)
    hz = gf2.BitMatrix(tuple(hz_rows), m.E)
    k = m.E - gf2.rank(hx) - gf2.rank(hz)
    chi = euler_characteristic(m)
    if k != 2 - chi:
        # falsifies either the map or the linear algebra; never tolerate it
        raise HomcodeError(f"rank-based k={k} but 2-chi={2 - chi}")
    return CssCode(hx, hz, m.edges, m.E, k)


def verify_css(code: CssCode) -> CssCheck:
    """Check hx hz^T = 0 and k = 2 - chi, naming the first bad product cell."""
    prod = gf2.mul(code.hx, gf2.transpose(code.hz))
    for i, row in enumerate(prod.rows):
        if row:
            j = (row & -row).bit_length() - 1
            return CssCheck(False, f"hx hz^T is nonzero at cell ({i}, {j})", (i, j))
    chi = len(code.hx.rows) - code.n + len(code.hz.rows)
    if code.k != 2 - chi:
        return CssCheck(False, f"k={code.k} disagrees with 2-chi={2 - chi}")
    return CssCheck(True, "ok")


def encoding_rate(report: CodeReport) -> Fraction:
    """k/n in lowest terms."""
    if report.n <= 0:
        raise HomcodeError("encoding rate needs n > 0")
    return Fraction(report.k, report.n)


def stabilizer_supports(code: CssCode) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Edge-id supports of the vertex (X) and face (Z) stabilizers."""

    def bits(row: int) -> tuple[int, ...]:
        out = []
        while row:
            out.append((row & -row).bit_length() - 1)
            row &= row - 1
        return tuple(out)

    return [bits(r) for r in code.hx.rows], [bits(r) for r in code.hz.rows]


def make_report(
    m: PolygonalMap, code: CssCode, d_min: int | None, provenance: str
) -> CodeReport:
    """Assemble the table row for a map and its code."""
    t = vertex_type(m)
    report = CodeReport(
        n=code.n,
        k=code.k,
        d_min=d_min,
        chi=euler_characteristic(m),
        map_type=str(t) if hasattr(t, "runs") else "-",
        rate=Fraction(code.k, code.n),
        provenance=provenance,
    )
    return report
