"""Exact linear algebra over arbitrary-precision rationals.

Dense matrices, deterministic first-nonzero pivoting (arithmetic is exact,
so there is nothing to stabilize), and a canonical free-variables-zero
solution convention so that solutions and kernel vectors are reproducible.
Instances stay desk-scale; nothing here is tuned for size.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Rat = Fraction


class Unsolvable(ValueError):
    """The linear system has no solution."""


class ZeroVector(ValueError):
    """A nonzero vector was required."""


class RatMatrix:
    """Dense rows x cols matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence[Rat | int]], ncols: int | None = None):
        data = [[Fraction(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], ncols=n)

    def copy_rows(self) -> list[list[Fraction]]:
        return [row[:] for row in self.rows]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.rows[r][c] for r in range(self.nrows)]
                          for c in range(self.ncols)], ncols=self.nrows)

    def mul_vec(self, v: Sequence[Rat | int]) -> list[Fraction]:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        vv = [Fraction(x) for x in v]
        return [sum((a * b for a, b in zip(row, vv)), Fraction(0)) for row in self.rows]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RatMatrix({self.nrows}x{self.ncols}: {body})"


def dot(u: Sequence[Rat | int], v: Sequence[Rat | int]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("vectors have unequal lengths")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns.

    Pivot rule: first row with a nonzero entry, in column order.
    rank(m) == len(pivots).
    """
    rows = m.copy_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        pivot_row = next((i for i in range(r, m.nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return RatMatrix(rows, ncols=m.ncols), pivots


def _integer_rank(rows: list[list[int]], ncols: int) -> int:
    # Bareiss fraction-free elimination; every division below is exact.
    nrows = len(rows)
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            fi = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c + 1, ncols):
                q, rem = divmod(row_i[j] * pv - fi * row_r[j], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def rank(m: RatMatrix) -> int:
    """Rank of m; integer matrices take a fraction-free fast path."""
    if m.is_integral():
        return _integer_rank([[int(x) for x in row] for row in m.rows], m.ncols)
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of {v : m v = 0} under the canonical pivot convention.

    Each basis vector carries a 1 in its own free column and 0 in every
    other free column; there are cols - rank of them.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for row, piv in enumerate(pivots):
            v[piv] = -reduced.rows[row][free]
        basis.append(v)
    return basis


def solve(m: RatMatrix, b: Sequence[Rat | int]) -> list[Fraction]:
    """Canonical solution of m x = b (free variables zero), or Unsolvable."""
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix {m.nrows} rows")
    aug = RatMatrix([row + [Fraction(bv)] for row, bv in zip(m.copy_rows(), b)],
                    ncols=m.ncols + 1)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        raise Unsolvable("rank of the augmented matrix exceeds rank of the matrix")
    x = [Fraction(0)] * m.ncols
    for row, piv in enumerate(pivots):
        x[piv] = reduced.rows[row][m.ncols]
    return x


def primitive_integer(v: Sequence[Rat | int]) -> list[int]:
    """Scale a nonzero rational vector to primitive integers.

    Multiplies by the lcm of denominators, divides by the gcd of the result,
    and fixes the sign so the first nonzero entry is positive.  Output is
    unique per line through the origin, so certificates compare equal across
    runs.
    """
    vv = [Fraction(x) for x in v]
    if not any(vv):
        raise ZeroVector("cannot scale the zero vector")
    mult = lcm(*(x.denominator for x in vv))
    ints = [int(x * mult) for x in vv]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return ints
