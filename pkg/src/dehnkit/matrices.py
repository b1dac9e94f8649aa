"""Exact integer matrices and Smith normal form.

Everything is plain Python int, so homology computations are exact at any size.
Matrices here are small (at most tens of rows), so the classic elimination with
transform tracking is plenty fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        r = tuple(tuple(int(x) for x in row) for row in rows)
        if r and any(len(row) != len(r[0]) for row in r):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "nrows", len(r))
        object.__setattr__(self, "ncols", len(r[0]) if r else 0)

    def __setattr__(self, *_):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        if not cols:
            return cls([])
        n = len(cols[0])
        return cls([[col[i] for col in cols] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix([])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._shape_check(other)
        return IntMatrix(
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._shape_check(other)
        return IntMatrix(
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([-a for a in row] for row in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.rows)) if other.rows else []
        return IntMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows
        )

    def __pow__(self, k: int) -> "IntMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power not supported")
        out = IntMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * v for a, v in zip(row, vec)) for row in self.rows)

    def _shape_check(self, other: "IntMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        if n == 0:
            return 1
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    @property
    def is_unimodular(self) -> bool:
        return self.nrows == self.ncols and self.det() in (1, -1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form ``U @ A @ V == D`` with unimodular ``U``, ``V``.

    ``divisors`` is the full diagonal of ``D`` truncated to its nonzero part,
    each dividing the next.
    """

    matrix: IntMatrix
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def verify(self) -> bool:
        if (self.U @ self.matrix @ self.V) != self.D:
            return False
        if not (self.U.is_unimodular and self.V.is_unimodular):
            return False
        d = self.divisors
        if any(x <= 0 for x in d):
            return False
        return all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


def smith_normal_form(a: IntMatrix) -> SNFResult:
    nr, nc = a.nrows, a.ncols
    m = [list(row) for row in a.rows]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in m:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    def clear_at(t: int) -> bool:
        """Diagonalize position ``t`` against the trailing block.

        Returns False when the trailing block is zero.
        """
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            return False
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t] != 0:
                    add_row(t, i, -(m[i][t] // m[t][t]))
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j] != 0:
                    add_col(t, j, -(m[t][j] // m[t][t]))
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if m[t][t] < 0:
            negate_row(t)
        return True

    rank = 0
    for t in range(min(nr, nc)):
        if not clear_at(t):
            break
        rank += 1

    # Enforce the divisibility chain: fold a bad pair back together and
    # re-diagonalize from that position. Each fix replaces d_i by a proper
    # divisor, so this terminates.
    while True:
        bad = None
        for i in range(rank - 1):
            if m[i + 1][i + 1] % m[i][i] != 0:
                bad = i
                break
        if bad is None:
            break
        add_col(bad + 1, bad, 1)
        for t in range(bad, rank):
            clear_at(t)

    divisors = tuple(m[i][i] for i in range(min(nr, nc)) if m[i][i] != 0)
    res = SNFResult(a, IntMatrix(m), IntMatrix(u), IntMatrix(v), divisors)
    if not res.verify():
        raise AssertionError("smith normal form internal check failed")
    return res


def cokernel_invariants(relations: IntMatrix, n_generators: int) -> tuple[int, tuple[int, ...]]:
    """Invariants of ``Z^n / rowspace(relations)``.

    Returns ``(free_rank, torsion)`` with torsion the invariant factors > 1.
    Rows are relations; ``relations.ncols`` must equal ``n_generators`` unless
    the matrix is empty.
    """
    if relations.nrows == 0 or relations.ncols == 0:
        return n_generators, ()
    if relations.ncols != n_generators:
        raise ValueError("relation width disagrees with generator count")
    snf = smith_normal_form(relations)
    free_rank = n_generators - snf.rank
    torsion = tuple(d for d in snf.divisors if d > 1)
    return free_rank, torsion
