"""Exact dense linear algebra over the two-element field.

Vectors are Python ints used as bit masks (bit k = coordinate k), so a row
operation is a single word-wide XOR regardless of width.  Every subspace is
stored in reduced row-echelon form; that form is unique for a given span,
so two subspaces are equal iff their bases are identical bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContainmentViolation

__all__ = [
    "GF2Matrix",
    "GF2Subspace",
    "rank",
    "kernel_basis",
    "image_basis",
    "quotient_dim",
    "reduced_echelon",
    "kernel_vectors",
    "span_dim",
]


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def reduced_echelon(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis of the span, pivot columns ascending."""
    rows: list[tuple[int, int]] = []  # (pivot column, vector)
    for v in vectors:
        for p, r in rows:
            if (v >> p) & 1:
                v ^= r
        if v:
            p = _low_bit(v)
            rows = [(q, r ^ v if (r >> p) & 1 else r) for q, r in rows]
            rows.append((p, v))
    rows.sort()
    return tuple(r for _, r in rows)


def span_dim(vectors: Iterable[int]) -> int:
    """Dimension of the span of the given bit vectors."""
    return len(reduced_echelon(vectors))


def kernel_vectors(row_bits: Sequence[int], cols: int) -> list[int]:
    """Basis of ``{x : row & x has even parity for every row}``, echelonized."""
    basis = reduced_echelon(row_bits)
    pivots = [_low_bit(r) for r in basis]
    pivot_set = set(pivots)
    out = []
    for j in range(cols):
        if j in pivot_set:
            continue
        v = 1 << j
        for p, r in zip(pivots, basis):
            if (r >> j) & 1:
                v |= 1 << p
        out.append(v)
    return list(reduced_echelon(out))


@dataclass(frozen=True)
class GF2Matrix:
    """Immutable dense matrix over GF(2); row i is the bit mask row_bits[i]."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.row_bits) != self.rows:
            raise ValueError("row count does not match row data")
        limit = 1 << self.cols
        for r in self.row_bits:
            if not 0 <= r < limit:
                raise ValueError("row data wider than declared column count")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> GF2Matrix:
        data = [list(row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        bits = []
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows")
            v = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"entry {entry!r} is not a bit")
                v |= entry << j
            bits.append(v)
        return cls(len(data), cols, tuple(bits))

    @classmethod
    def zero(cls, rows: int, cols: int) -> GF2Matrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def column_bits(self) -> tuple[int, ...]:
        """Columns as bit vectors over the row index."""
        cols = [0] * self.cols
        for i, r in enumerate(self.row_bits):
            while r:
                j = _low_bit(r)
                cols[j] |= 1 << i
                r &= r - 1
        return tuple(cols)

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(self.cols, self.rows, self.column_bits())

    def matvec(self, v: int) -> int:
        """Matrix-vector product; v is a bit vector over the columns."""
        out = 0
        for i, r in enumerate(self.row_bits):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out


@dataclass(frozen=True)
class GF2Subspace:
    """Subspace of GF(2)^ambient_dim with canonical reduced-echelon basis."""

    ambient_dim: int
    basis: tuple[int, ...]

    def __post_init__(self):
        if tuple(reduced_echelon(self.basis)) != self.basis:
            raise ValueError("basis is not in reduced row-echelon form")
        limit = 1 << self.ambient_dim
        for v in self.basis:
            if not 0 < v < limit:
                raise ValueError("basis vector outside ambient space")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[int]) -> GF2Subspace:
        return cls(ambient_dim, reduced_echelon(vectors))

    @classmethod
    def zero(cls, ambient_dim: int) -> GF2Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> GF2Subspace:
        return cls(ambient_dim, tuple(1 << i for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: int) -> int:
        """Residual of v after elimination against the basis."""
        for r in self.basis:
            if (v >> _low_bit(r)) & 1:
                v ^= r
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_subspace(self, other: GF2Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: GF2Subspace) -> GF2Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return GF2Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)


def rank(m: GF2Matrix) -> int:
    """GF(2) rank; the input is not modified."""
    return len(reduced_echelon(m.row_bits))


def kernel_basis(m: GF2Matrix) -> GF2Subspace:
    """Right kernel {v : m v = 0}, echelonized; dim = cols - rank."""
    return GF2Subspace(m.cols, tuple(kernel_vectors(m.row_bits, m.cols)))


def image_basis(m: GF2Matrix) -> GF2Subspace:
    """Column space of m, echelonized; dim = rank."""
    return GF2Subspace.from_vectors(m.rows, m.column_bits())


def quotient_dim(outer: GF2Subspace, inner: GF2Subspace) -> int:
    """dim(outer/inner); requires inner to be contained in outer."""
    if outer.ambient_dim != inner.ambient_dim:
        raise ContainmentViolation(
            "ambient dimensions differ",
            outer=outer.ambient_dim,
            inner=inner.ambient_dim,
        )
    for v in inner.basis:
        if not outer.contains(v):
            raise ContainmentViolation(
                "inner subspace is not contained in outer subspace",
                witness=v,
            )
    return outer.dim - inner.dim
