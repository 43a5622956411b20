"""Dense matrices over the two-element field, one Python int per row."""

from __future__ import annotations

from typing import Iterable, Sequence


class GF2Matrix:
    """Immutable ``nrows x ncols`` matrix over F2.

    Row ``i`` is stored as an int whose bit ``j`` is the ``(i, j)`` entry.
    Matrices act on column vectors, so a map ``A -> B`` has shape
    ``(dim B, dim A)``.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative matrix dimension")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = (0,) * nrows
        else:
            self.rows = tuple(rows)
            if len(self.rows) != nrows:
                raise ValueError(f"expected {nrows} rows, got {len(self.rows)}")
            mask = (1 << ncols) - 1
            if any(r & ~mask for r in self.rows):
                raise ValueError("row has bits beyond ncols")

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, (1 << i for i in range(n)))

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[Sequence[int]]) -> "GF2Matrix":
        """Build from unit entries ``(row, col)``; repeated entries cancel."""
        rows = [0] * nrows
        for r, c in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ValueError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            rows[r] ^= 1 << c
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> "GF2Matrix":
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        rows = []
        for line in dense:
            if len(line) != ncols:
                raise ValueError("ragged dense matrix")
            rows.append(sum((int(v) & 1) << j for j, v in enumerate(line)))
        return cls(len(dense), ncols, rows)

    @classmethod
    def block(cls, grid: Sequence[Sequence["GF2Matrix"]]) -> "GF2Matrix":
        """Assemble a block matrix; every row of blocks must agree in height."""
        rows: list[int] = []
        col_widths = [b.ncols for b in grid[0]] if grid else []
        for line in grid:
            if [b.ncols for b in line] != col_widths:
                raise ValueError("block column widths disagree")
            heights = {b.nrows for b in line}
            if len(heights) != 1:
                raise ValueError("block row heights disagree")
            (h,) = heights
            for i in range(h):
                acc, shift = 0, 0
                for b in line:
                    acc |= b.rows[i] << shift
                    shift += b.ncols
                rows.append(acc)
        return cls(len(rows), sum(col_widths), rows)

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return (self.rows[r] >> c) & 1

    def entries(self) -> list[tuple[int, int]]:
        out = []
        for i, row in enumerate(self.rows):
            j = 0
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def to_dense(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.ncols)] for row in self.rows]

    def column(self, j: int) -> int:
        """Column ``j`` as a bitmask over rows."""
        return sum(((row >> j) & 1) << i for i, row in enumerate(self.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    # algebra ---------------------------------------------------------------

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return GF2Matrix(self.nrows, self.ncols, (a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.shape} @ {other.shape}")
        orows = other.rows
        out = []
        for row in self.rows:
            acc, j = 0, 0
            while row:
                if row & 1:
                    acc ^= orows[j]
                row >>= 1
                j += 1
            out.append(acc)
        return GF2Matrix(self.nrows, other.ncols, out)

    def apply(self, vec: int) -> int:
        """Image of a column vector given as a bitmask over columns."""
        out = 0
        for i, row in enumerate(self.rows):
            if bin(row & vec).count("1") & 1:
                out |= 1 << i
        return out

    @property
    def T(self) -> "GF2Matrix":
        return GF2Matrix(self.ncols, self.nrows, (self.column(j) for j in range(self.ncols)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "GF2Matrix":
        out = []
        for i in row_idx:
            row = self.rows[i]
            out.append(sum(((row >> c) & 1) << k for k, c in enumerate(col_idx)))
        return GF2Matrix(len(row_idx), len(col_idx), out)

    def rank(self) -> int:
        return rank_of_rows(self.rows)

    def nullspace(self) -> list[int]:
        """Basis of the kernel, each vector a bitmask over columns."""
        pivots: dict[int, int] = {}  # pivot column -> reduced row
        for row in self.rows:
            for col, prow in pivots.items():
                if (row >> col) & 1:
                    row ^= prow
            if row:
                col = (row & -row).bit_length() - 1
                for c in list(pivots):
                    if (pivots[c] >> col) & 1:
                        pivots[c] ^= row
                pivots[col] = row
        basis = []
        for free in range(self.ncols):
            if free in pivots:
                continue
            vec = 1 << free
            for col, prow in pivots.items():
                if (prow >> free) & 1:
                    vec |= 1 << col
            basis.append(vec)
        return basis

    # misc ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols}, entries={self.entries()})"


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a set of bitmask vectors (XOR basis insertion)."""
    basis: dict[int, int] = {}  # highest set bit -> vector
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def columns_matrix(vectors: Sequence[int], nrows: int) -> GF2Matrix:
    """Matrix whose columns are the given bitmask vectors."""
    return GF2Matrix(len(vectors), nrows, vectors).T
