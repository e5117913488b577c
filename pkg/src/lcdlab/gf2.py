"""Dense exact linear algebra over GF(2), plus small exact integer matrices.

A matrix row is a single Python int with bit j holding the entry in
column j (LSB-first).  Row operations are therefore word-parallel XORs,
and popcounts give inner products.  All values are immutable; every
operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_DIM = 1 << 16


@dataclass(frozen=True)
class BitMatrix:
    """Bit-packed matrix over GF(2).

    data[i] is row i; bit j of data[i] is entry (i, j).  Bits at
    positions >= cols must be zero.
    """

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if not (0 <= self.rows <= MAX_DIM and 0 <= self.cols <= MAX_DIM):
            raise ValueError(f"dimensions out of range: {self.rows}x{self.cols}")
        if len(self.data) != self.rows:
            raise ValueError("data length does not match row count")
        mask = (1 << self.cols) - 1
        for r in self.data:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> BitMatrix:
        """Build from an iterable of 0/1 sequences (row-major)."""
        packed = []
        for row in rows:
            bits = list(row)
            if cols is None:
                cols = len(bits)
            elif len(bits) != cols:
                raise ValueError("ragged rows")
            packed.append(sum((1 << j) for j, b in enumerate(bits) if b & 1))
        return cls(len(packed), 0 if cols is None else cols, tuple(packed))

    @classmethod
    def from_row_ints(cls, row_ints, cols: int) -> BitMatrix:
        rows = tuple(int(r) for r in row_ints)
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, k: int) -> BitMatrix:
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j packed into an int: bit i is entry (i, j)."""
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.data))

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.cols, self.rows,
                         tuple(self.column(j) for j in range(self.cols)))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        data = tuple(a | (b << self.cols) for a, b in zip(self.data, other.data))
        return BitMatrix(self.rows, self.cols + other.cols, data)

    def __str__(self):
        return "\n".join("".join(str(self.get(i, j)) for j in range(self.cols))
                         for i in range(self.rows))


@dataclass(frozen=True)
class IntMatrix:
    """Small dense matrix with exact (64-bit range) integer entries."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry shape mismatch")

    def get(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def mod2(self) -> BitMatrix:
        return BitMatrix.from_rows([[e & 1 for e in row] for row in self.entries])


@dataclass(frozen=True)
class RrefResult:
    matrix: BitMatrix
    rank: int
    pivots: tuple[int, ...]


def rref(m: BitMatrix) -> RrefResult:
    """Reduced row-echelon form over GF(2).

    Returns the reduced matrix (same shape, zero rows kept at the
    bottom), the rank, and the pivot column indices.  Row space is
    preserved; no column pivoting.
    """
    rows = list(m.data)
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        bit = 1 << c
        p = next((i for i in range(r, m.rows) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(m.rows):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
    return RrefResult(BitMatrix(m.rows, m.cols, tuple(rows)), len(pivots), tuple(pivots))


def rank(m: BitMatrix) -> int:
    return rref(m).rank


def det_f2(m: BitMatrix) -> int:
    """1 iff the square matrix is invertible over GF(2), else 0."""
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    return 1 if rref(m).rank == m.rows else 0


def gram(g: BitMatrix, ring: str = "gf2") -> BitMatrix | IntMatrix:
    """G * G^T with entries either mod 2 or as exact integer dot products.

    The integer result reduced mod 2 equals the GF(2) result entrywise.
    """
    if ring == "gf2":
        data = []
        for ri in g.data:
            row = 0
            for j, rj in enumerate(g.data):
                row |= ((ri & rj).bit_count() & 1) << j
            data.append(row)
        return BitMatrix(g.rows, g.rows, tuple(data))
    if ring == "integer":
        ent = tuple(tuple((ri & rj).bit_count() for rj in g.data) for ri in g.data)
        return IntMatrix(g.rows, g.rows, ent)
    raise ValueError(f"unknown ring {ring!r}")


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2): result row i = XOR of B-rows selected by A row i."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    for arow in a.data:
        acc = 0
        rest = arow
        while rest:
            j = (rest & -rest).bit_length() - 1
            acc ^= b.data[j]
            rest &= rest - 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of the right kernel, one vector per row ((cols - rank) rows)."""
    red = rref(m)
    pivots = red.pivots
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for i, p in enumerate(pivots):
            if (red.matrix.data[i] >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(len(basis), m.cols, tuple(basis))


def det_int(m: IntMatrix) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for r in range(n - 1):
        if a[r][r] == 0:
            p = next((i for i in range(r + 1, n) if a[i][r] != 0), None)
            if p is None:
                return 0
            a[r], a[p] = a[p], a[r]
            sign = -sign
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) // prev
            a[i][r] = 0
        prev = a[r][r]
    return sign * a[n - 1][n - 1]
