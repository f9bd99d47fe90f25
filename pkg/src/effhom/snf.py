"""Smith normal form of integer matrices, exactly.

``smith_normal_form`` returns unimodular U (rows x rows) and V (cols x
cols) with U * A * V = D diagonal, the nonzero diagonal entries positive
and forming a divisibility chain d1 | d2 | ...  Entries are Python
integers throughout: intermediate values can exceed any machine word even
on small inputs, so nothing here ever touches floating point or fixed
width arithmetic.

The elimination picks the entry of smallest absolute value in the working
submatrix as pivot and clears its row and column with Euclidean steps,
restarting whenever a remainder swap produced a smaller pivot; this keeps
coefficient growth modest.  Before the pivot is frozen it must also
divide the rest of the submatrix, which a single row addition repairs,
and that is exactly what makes the diagonal a divisibility chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be natural numbers")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the dimensions")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], rows_n=None, cols_n=None):
        data = [tuple(int(x) for x in row) for row in rows]
        if rows_n is None:
            rows_n = len(data)
        if cols_n is None:
            cols_n = len(data[0]) if data else 0
        flat = tuple(x for row in data for x in row)
        return cls(rows_n, cols_n, flat)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix shapes do not compose")
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                out.append(
                    sum(left[k] * other.entry(k, j) for k in range(self.cols))
                )
        return IntMatrix(self.rows, other.cols, tuple(out))

    def is_diagonal(self) -> bool:
        return all(
            self.entry(i, j) == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


@dataclass(frozen=True)
class SNFResult:
    """U * A * V = D with U, V unimodular and D the Smith normal form."""

    U: IntMatrix
    V: IntMatrix
    D: IntMatrix
    invariant_factors: tuple[int, ...]


def smith_normal_form(matrix: IntMatrix) -> SNFResult:
    m, n = matrix.rows, matrix.cols
    d = matrix.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(a, b):
        if a != b:
            d[a], d[b] = d[b], d[a]
            u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        if a != b:
            for row in d:
                row[a], row[b] = row[b], row[a]
            for row in v:
                row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):
        # row dst += q * row src, on D and U alike
        drow, srow = d[dst], d[src]
        for j in range(n):
            drow[j] += q * srow[j]
        urow, usrc = u[dst], u[src]
        for j in range(m):
            urow[j] += q * usrc[j]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    pivot, best = (i, j), abs(x)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t completely; a remainder swap shrinks the pivot
            # and restarts the sweep
            i = t + 1
            while i < m:
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        swap_rows(t, i)
                        i = t + 1
                        continue
                i += 1
            # column t is zero below the pivot, so a column operation only
            # touches row t; a remainder swap dirties the column again
            dirty = False
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if not dirty:
                break
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            # pull the offending row up so the next pass shrinks the pivot
            add_row(t, offender, 1)
            continue
        t += 1

    for i in range(limit):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    factors = tuple(d[i][i] for i in range(limit) if d[i][i])
    return SNFResult(
        U=IntMatrix.from_rows(u, m, m),
        V=IntMatrix.from_rows(v, n, n),
        D=IntMatrix.from_rows(d, m, n),
        invariant_factors=factors,
    )
