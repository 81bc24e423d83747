"""Exact dense linear algebra over GF(2) on int-bitset rows.

Rows are Python ints; bit j of a row is column j.  Everything is exact,
immutable, and word-level XOR fast at the sizes this package needs
(a few hundred columns).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HomcodeError


class DimensionMismatch(HomcodeError):
    """Operands have incompatible shapes."""


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    cols: int

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def column_weights(self) -> list[int]:
        return [sum((r >> j) & 1 for r in self.rows) for j in range(self.cols)]


@dataclass(frozen=True)
class Rref:
    """Reduced row echelon form: nonzero rows first, zero rows dropped."""

    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    cols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def from_rows(bit_rows: Iterable[Sequence[int]], cols: int | None = None) -> BitMatrix:
    """Build a BitMatrix from 0/1 row sequences."""
    packed = []
    width = cols
    for row in bit_rows:
        row = list(row)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionMismatch("ragged rows")
        packed.append(sum(1 << j for j, b in enumerate(row) if b))
    return BitMatrix(tuple(packed), width or 0)


def identity(n: int) -> BitMatrix:
    return BitMatrix(tuple(1 << i for i in range(n)), n)


def transpose(m: BitMatrix) -> BitMatrix:
    out = [0] * m.cols
    for i, row in enumerate(m.rows):
        bit = 1 << i
        while row:
            j = (row & -row).bit_length() - 1
            out[j] |= bit
            row &= row - 1
    return BitMatrix(tuple(out), len(m.rows))


def mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) matrix product."""
    if a.cols != len(b.rows):
        raise DimensionMismatch(f"cannot multiply {len(a.rows)}x{a.cols} by {len(b.rows)}x{b.cols}")
    out = []
    for row in a.rows:
        acc = 0
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            acc ^= b.rows[j]
            r &= r - 1
        out.append(acc)
    return BitMatrix(tuple(out), b.cols)


def mul_vec(m: BitMatrix, v: int) -> int:
    """m times a column vector (int bitset of length m.cols); bit i = parity of row i AND v."""
    out = 0
    for i, row in enumerate(m.rows):
        if (row & v).bit_count() & 1:
            out |= 1 << i
    return out


def rref(m: BitMatrix) -> Rref:
    """Reduced row echelon form via Gaussian elimination with XOR row ops."""
    work = list(m.rows)
    pivots = []
    pivot_row = 0
    for col in range(m.cols):
        bit = 1 << col
        found = -1
        for r in range(pivot_row, len(work)):
            if work[r] & bit:
                found = r
                break
        if found == -1:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and work[r] & bit:
                work[r] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return Rref(tuple(work[: len(pivots)]), tuple(pivots), m.cols)


def rank(m: BitMatrix) -> int:
    return rref(m).rank


def in_rowspace(r: Rref, v: int) -> bool:
    """True iff v reduces to zero against the echelon rows."""
    if v >> r.cols:
        raise DimensionMismatch("vector wider than the matrix")
    for row, p in zip(r.rows, r.pivots):
        if (v >> p) & 1:
            v ^= row
    return v == 0


def nullspace_basis(m: BitMatrix) -> list[int]:
    """Basis of {v : m v = 0}, one vector per non-pivot column."""
    r = rref(m)
    pivot_set = set(r.pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(r.rows, r.pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def to_spm_text(m: BitMatrix) -> str:
    """Sparse text export: header '<rows> <cols>', then '<i> <j>' per set bit."""
    lines = [f"{len(m.rows)} {m.cols}"]
    for i, row in enumerate(m.rows):
        while row:
            j = (row & -row).bit_length() - 1
            lines.append(f"{i} {j}")
            row &= row - 1
    return "\n".join(lines) + "\n"


def from_spm_text(text: str) -> BitMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    nrows, ncols = map(int, lines[0].split())
    rows = [0] * nrows
    for ln in lines[1:]:
        i, j = map(int, ln.split())
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise DimensionMismatch(f"entry ({i},{j}) outside {nrows}x{ncols}")
        rows[i] |= 1 << j
    return BitMatrix(tuple(rows), ncols)
