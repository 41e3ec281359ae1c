"""Exact dense integer matrices.

Shapes are explicit so zero-row and zero-column matrices (ubiquitous as
boundary maps of sparsely populated degrees) compose correctly. Entries are
Python ints: nothing here wraps or rounds.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Matrix:
    """Immutable ``rows x cols`` integer matrix, row-major."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if len(r) != self.cols:
                raise ValueError(f"ragged row: expected {self.cols} columns, got {len(r)}")

    # ---- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
        elif cols is None:
            raise ValueError("column count of a 0-row matrix is ambiguous; pass cols=")
        else:
            width = cols
        if cols is not None and cols != width:
            raise ValueError(f"declared cols={cols} but rows have width {width}")
        return cls(len(data), width, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int, cols: int) -> "Matrix":
        if len(entries) > min(rows, cols):
            raise ValueError("too many diagonal entries for the requested shape")
        return cls(
            rows,
            cols,
            tuple(
                tuple(entries[i] if i == j and i < len(entries) else 0 for j in range(cols))
                for i in range(rows)
            ),
        )

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix from a grid of compatible blocks."""
        if not grid or not grid[0]:
            raise ValueError("block grid must be nonempty")
        heights = [row[0].rows for row in grid]
        widths = [b.cols for b in grid[0]]
        for gi, row in enumerate(grid):
            if len(row) != len(widths):
                raise ValueError("ragged block grid")
            for gj, b in enumerate(row):
                if b.rows != heights[gi] or b.cols != widths[gj]:
                    raise ValueError(
                        f"block ({gi},{gj}) has shape {b.rows}x{b.cols}, "
                        f"expected {heights[gi]}x{widths[gj]}"
                    )
        out: list[tuple[int, ...]] = []
        for gi, row in enumerate(grid):
            for i in range(heights[gi]):
                acc: tuple[int, ...] = ()
                for b in row:
                    acc += b.data[i]
                out.append(acc)
        return cls(sum(heights), sum(widths), tuple(out))

    # ---- queries --------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data else tuple(() for _ in range(self.cols)))

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(len(indices), self.cols, tuple(self.data[i] for i in indices))

    def take_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(
            self.rows,
            len(indices),
            tuple(tuple(row[j] for j in indices) for row in self.data),
        )

    # ---- algebra --------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other.transpose().data
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
            for row in self.data
        )
        return Matrix(self.rows, other.cols, out)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.data))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not match {self.shape}")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def unimodular_inverse(self) -> "Matrix":
        """Exact inverse of a square matrix with determinant +-1.

        Raises ValueError if the matrix is singular or the inverse is not
        integral (i.e. the matrix was not unimodular).
        """
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = [
            [Fraction(x) for x in self.data[i]] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                val = aug[i][n + j]
                if val.denominator != 1:
                    raise ValueError("matrix is not unimodular: inverse is not integral")
                row.append(int(val))
            out.append(tuple(row))
        return Matrix(n, n, tuple(out))


def as_matrix(value, cols: int | None = None) -> Matrix:
    """Coerce a Matrix or an iterable of rows into a Matrix."""
    if isinstance(value, Matrix):
        return value
    return Matrix.from_rows(value, cols=cols)
