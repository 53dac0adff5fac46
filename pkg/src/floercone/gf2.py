"""Exact linear algebra over GF(2) with bit-packed rows.

Matrices are immutable; each row is a Python int used as a bitset
(bit c = entry in column c), so row operations are single XORs.  This
is the substrate for every rank computation in the package: ranks of
differentials, kernels, homology of d with d^2 = 0, and ranks of maps
induced on homology by chain maps.

Empty matrices (0 rows and/or 0 columns) are legal everywhere and have
rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable matrix over GF(2).

    ``row_bits[r]`` holds row r, with bit c (i.e. ``1 << c``) the entry
    in column c.
    """

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.row_bits) != self.rows:
            raise ValueError("row count does not match row data")
        mask = (1 << self.cols) - 1
        for bits in self.row_bits:
            if bits & ~mask:
                raise ValueError("row has bits outside the column range")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int) -> Gf2Matrix:
        return Gf2Matrix(rows, cols, (0,) * rows)

    @staticmethod
    def identity(n: int) -> Gf2Matrix:
        return Gf2Matrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def from_rows(entries: Sequence[Sequence[int]], cols: int | None = None) -> Gf2Matrix:
        """Build from a list of 0/1 rows.  ``cols`` is required when empty."""
        if not entries:
            if cols is None:
                cols = 0
            return Gf2Matrix(0, cols, ())
        width = len(entries[0])
        if cols is not None and cols != width:
            raise ValueError("explicit cols disagrees with row width")
        bits = []
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            acc = 0
            for c, v in enumerate(row):
                if v & 1:
                    acc |= 1 << c
            bits.append(acc)
        return Gf2Matrix(len(entries), width, tuple(bits))

    # -- element access ----------------------------------------------

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("matrix index out of range")
        return (self.row_bits[r] >> c) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(bits >> c) & 1 for c in range(self.cols)] for bits in self.row_bits]

    def is_zero(self) -> bool:
        return all(bits == 0 for bits in self.row_bits)

    # -- algebra ------------------------------------------------------

    def transpose(self) -> Gf2Matrix:
        out = [0] * self.cols
        for r, bits in enumerate(self.row_bits):
            while bits:
                low = bits & -bits
                out[low.bit_length() - 1] |= 1 << r
                bits ^= low
        return Gf2Matrix(self.cols, self.rows, tuple(out))

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        return Gf2Matrix(
            self.rows, self.cols,
            tuple(a ^ b for a, b in zip(self.row_bits, other.row_bits)),
        )

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        return mul(self, other)

    def hstack(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.rows != other.rows:
            raise ValueError("dimension mismatch in hstack")
        return Gf2Matrix(
            self.rows, self.cols + other.cols,
            tuple(a | (b << self.cols) for a, b in zip(self.row_bits, other.row_bits)),
        )

    def vstack(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.cols:
            raise ValueError("dimension mismatch in vstack")
        return Gf2Matrix(self.rows + other.rows, self.cols, self.row_bits + other.row_bits)

    def rank(self) -> int:
        return rank(self)


def compose_blocks(rows: int, cols: int,
                   placements: Iterable[tuple[int, int, Gf2Matrix]]) -> Gf2Matrix:
    """Assemble a matrix from blocks XORed in at (row_offset, col_offset)."""
    acc = [0] * rows
    for r0, c0, block in placements:
        if r0 < 0 or c0 < 0 or r0 + block.rows > rows or c0 + block.cols > cols:
            raise ValueError("block placement out of range")
        for i, bits in enumerate(block.row_bits):
            acc[r0 + i] ^= bits << c0
    return Gf2Matrix(rows, cols, tuple(acc))


def rank(m: Gf2Matrix) -> int:
    """Rank over GF(2) by Gaussian elimination on bit rows."""
    work = list(m.row_bits)
    rk = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = None
        for r in range(rk, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for r in range(len(work)):
            if r != rk and (work[r] & bit):
                work[r] ^= work[rk]
        rk += 1
        if rk == len(work):
            break
    return rk


def mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(
            f"dimension mismatch in product: {a.rows}x{a.cols} @ {b.rows}x{b.cols}"
        )
    out = []
    for bits in a.row_bits:
        acc = 0
        while bits:
            low = bits & -bits
            acc ^= b.row_bits[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return Gf2Matrix(a.rows, b.cols, tuple(out))


def kernel_basis(m: Gf2Matrix) -> list[tuple[int, ...]]:
    """Basis of the null space {v : M v = 0}, as 0/1 tuples of length cols.

    Always returns cols - rank(M) linearly independent vectors.
    """
    # Row-reduce, remembering pivot columns.
    work = list(m.row_bits)
    pivot_cols: list[int] = []
    rk = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = None
        for r in range(rk, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for r in range(len(work)):
            if r != rk and (work[r] & bit):
                work[r] ^= work[rk]
        pivot_cols.append(col)
        rk += 1
        if rk == len(work):
            break
    pivots = set(pivot_cols)
    free_cols = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [0] * m.cols
        vec[free] = 1
        # Back-substitute: pivot variable of row r equals the free entry there.
        for r, pc in enumerate(pivot_cols):
            if (work[r] >> free) & 1:
                vec[pc] = 1
        basis.append(tuple(vec))
    return basis


def kernel_matrix(m: Gf2Matrix) -> Gf2Matrix:
    """Kernel basis packed as columns of a cols x nullity matrix."""
    basis = kernel_basis(m)
    rows = [0] * m.cols
    for j, vec in enumerate(basis):
        for i, v in enumerate(vec):
            if v:
                rows[i] |= 1 << j
    return Gf2Matrix(m.cols, len(basis), tuple(rows))


def homology_rank(d: Gf2Matrix) -> int:
    """dim ker(d) - rank(d) for a differential d with d^2 = 0."""
    if d.rows != d.cols:
        raise ValueError("differential must be square")
    if not mul(d, d).is_zero():
        raise ValueError("d^2 != 0: not a differential")
    return d.rows - 2 * rank(d)


def induced_homology_map_rank(d_src: Gf2Matrix, d_dst: Gf2Matrix, f: Gf2Matrix) -> int:
    """Rank of the map H(src) -> H(dst) induced by the chain map f.

    Computed as the rank of f on a kernel basis of d_src, reduced modulo
    the image of d_dst.  The chain-map identity f d_src = d_dst f is
    checked eagerly; a violation raises.
    """
    if d_src.rows != d_src.cols or d_dst.rows != d_dst.cols:
        raise ValueError("differential must be square")
    if f.cols != d_src.rows or f.rows != d_dst.rows:
        raise ValueError("chain map has wrong shape")
    if not mul(d_src, d_src).is_zero() or not mul(d_dst, d_dst).is_zero():
        raise ValueError("d^2 != 0: not a differential")
    if mul(f, d_src) != mul(d_dst, f):
        raise ValueError("not a chain map: f.d_src != d_dst.f")
    cycles = kernel_matrix(d_src)            # dim_src x z
    mapped = mul(f, cycles)                  # dim_dst x z
    boundaries = d_dst                       # image(d_dst) spans the boundaries
    return rank(mapped.hstack(boundaries)) - rank(boundaries)
