"""The ground-truth decision oracle for basicness, with certificates both ways.

A point set is *basic* when every function on it is a sum of one
single-coordinate function per axis.  Writing one equation per point in the
unknown per-slice values gives the 0/1 slice matrix; the set is basic exactly
when its rows are independent.  A dependency, scaled to primitive integers,
is a certificate of non-basicness: nonzero weights on the points whose sum
over every slice is zero.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Mapping

from .core import Point, PointSet, SliceId, axes_for, slices_of
from . import ratlin
from .ratlin import RatMatrix, Unsolvable


class DomainMismatch(ValueError):
    """A per-point mapping does not cover exactly the points of the set."""


class NotNonBasic(ValueError):
    """An operation that needs a non-basic set was given a basic one."""


@dataclass(frozen=True)
class SliceMatrix:
    """0/1 incidence of points (rows) against slices (columns)."""

    matrix: RatMatrix
    columns: tuple[SliceId, ...]


@dataclass(frozen=True)
class Certificate:
    """Nonzero primitive integer weights per point, in canonical point order.

    Valid for a set when the weights of the points in every slice sum to
    exactly zero; see certificate_valid.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        if not any(self.weights):
            raise ValueError("certificate weights must not all be zero")
        if gcd(*self.weights) != 1:
            raise ValueError("certificate weights must have gcd 1")

    @property
    def sup_norm(self) -> int:
        return max(abs(w) for w in self.weights)


@dataclass(frozen=True)
class Witness:
    """Proof that one particular function is not decomposable.

    The certificate pairs to a nonzero value against the function, which is
    impossible for any sum of per-axis functions.
    """

    certificate: Certificate
    pairing: Fraction


@dataclass(frozen=True)
class Verdict:
    basic: bool
    certificate: Certificate | None = None

    def __post_init__(self):
        if self.basic and self.certificate is not None:
            raise ValueError("a basic verdict carries no certificate")
        if not self.basic and self.certificate is None:
            raise ValueError("a non-basic verdict requires a certificate")

    @property
    def kind(self) -> str:
        return "basic" if self.basic else "nonbasic"


class Color(Enum):
    BLACK = "black"
    WHITE = "white"


@dataclass(frozen=True)
class InvalidColoring:
    """Names a slice whose two color counts differ."""

    slice_id: SliceId
    black: int
    white: int


@dataclass(frozen=True)
class Decomposition:
    """One exact value table per axis; tables[a][v] is the a-th summand at v."""

    tables: tuple[dict[int, Fraction], ...]

    def value_at(self, point: Point) -> Fraction:
        return sum((self.tables[a][point[a]] for a in range(len(self.tables))), Fraction(0))


def slice_matrix(ps: PointSet) -> SliceMatrix:
    """Row per point (canonical order), column per slice (slices_of order)."""
    slices = slices_of(ps)
    columns = tuple(sid for sid, _ in slices)
    rows = [[Fraction(0)] * len(columns) for _ in range(len(ps))]
    for col, (_, members) in enumerate(slices):
        for i in members:
            rows[i][col] = Fraction(1)
    return SliceMatrix(RatMatrix(rows, ncols=len(columns)), columns)


def slice_sums(ps: PointSet, weights) -> dict[SliceId, Fraction]:
    if len(weights) != len(ps):
        raise DomainMismatch(f"{len(weights)} weights for {len(ps)} points")
    return {sid: sum((Fraction(weights[i]) for i in members), Fraction(0))
            for sid, members in slices_of(ps)}


def certificate_valid(ps: PointSet, cert: Certificate) -> bool:
    return all(s == 0 for s in slice_sums(ps, cert.weights).values())


def is_basic(ps: PointSet) -> Verdict:
    """Basic iff the slice-matrix rows are independent.

    Non-basic verdicts carry the primitive form of the first canonical
    kernel basis vector of the transpose system, so repeated runs agree.
    """
    n = len(ps)
    if n == 0:
        return Verdict(True)
    transpose = slice_matrix(ps).matrix.transpose()
    if ratlin.rank(transpose) == n:
        return Verdict(True)
    vector = ratlin.kernel_basis(transpose)[0]
    return Verdict(False, Certificate(tuple(ratlin.primitive_integer(vector))))


def decompose(ps: PointSet, f: Mapping[Point, Fraction | int]) -> Decomposition | Witness:
    """Split f into per-axis tables, or produce a witness that none exists.

    Success returns the canonical solution (free slice values zero under the
    fixed column order).  Failure returns a certificate pairing to a nonzero
    value against f; such a certificate always exists when the system is
    inconsistent.
    """
    if set(f.keys()) != set(ps.points):
        raise DomainMismatch("function values must be given on exactly the points of the set")
    values = [Fraction(f[p]) for p in ps.points]
    sm = slice_matrix(ps)
    try:
        x = ratlin.solve(sm.matrix, values)
    except Unsolvable:
        for vector in ratlin.kernel_basis(sm.matrix.transpose()):
            if ratlin.dot(vector, values) != 0:
                weights = ratlin.primitive_integer(vector)
                return Witness(Certificate(tuple(weights)), ratlin.dot(weights, values))
        raise AssertionError("inconsistent system but every kernel vector pairs to zero")
    tables: tuple[dict[int, Fraction], ...] = tuple({} for _ in range(ps.dim))
    for sid, xv in zip(sm.columns, x):
        tables[sid.axis][sid.value] = xv
    return Decomposition(tables)


def indicator_witness(ps: PointSet, cert: Certificate) -> dict[Point, Fraction]:
    """Indicator of the first point with nonzero weight.

    By construction the certificate pairs with it to that weight, which is
    nonzero, so decompose() on the result returns a Witness.
    """
    if len(cert.weights) != len(ps):
        raise DomainMismatch(f"certificate has {len(cert.weights)} weights for {len(ps)} points")
    target = ps.points[next(i for i, w in enumerate(cert.weights) if w)]
    return {p: Fraction(1 if p == target else 0) for p in ps.points}


def peel(ps: PointSet) -> tuple[list[Point], PointSet]:
    """Iteratively strip points that are alone in some slice of the remainder.

    A point alone in a slice owns a private column of the slice matrix, so
    its row is independent of the others and removing it cannot change the
    verdict of what is left.  Empty core therefore certifies a basic set;
    a nonempty core is merely inconclusive.  Ties go to the point that is
    lowest in canonical order.
    """
    remaining = list(ps.points)
    order: list[Point] = []
    while remaining:
        groups: dict[tuple[int, int], list[Point]] = {}
        for p in remaining:
            for a in axes_for(ps.dim):
                groups.setdefault((a, p[a]), []).append(p)
        lonely = sorted({g[0] for g in groups.values() if len(g) == 1})
        if not lonely:
            break
        victim = lonely[0]
        remaining.remove(victim)
        order.append(victim)
    return order, PointSet.from_points(remaining, dim=ps.dim)


def coloring_certificate(ps: PointSet, coloring: Mapping[Point, Color]) -> Certificate | InvalidColoring:
    """Turn a slice-balanced two-coloring into a +/-1 certificate.

    Every slice must contain as many black as white points; the first
    unbalanced slice (in slice order) is reported otherwise.
    """
    if set(coloring.keys()) != set(ps.points):
        raise DomainMismatch("coloring must cover exactly the points of the set")
    for sid, members in slices_of(ps):
        black = sum(1 for i in members if coloring[ps.points[i]] is Color.BLACK)
        white = len(members) - black
        if black != white:
            return InvalidColoring(sid, black, white)
    raw = [1 if coloring[p] is Color.BLACK else -1 for p in ps.points]
    return Certificate(tuple(ratlin.primitive_integer(raw)))


# ---------------------------------------------------------------------------
# JSON payload helpers.  Certificates serialize as integer arrays in
# canonical point order; decompositions as one {value: rational-string}
# table per axis.  Rationals are strings, never floats.

def certificate_payload(cert: Certificate) -> list[int]:
    return list(cert.weights)


def decomposition_payload(dec: Decomposition) -> dict[str, dict[str, str]]:
    return {f"f{a + 1}": {str(v): str(x) for v, x in sorted(table.items())}
            for a, table in enumerate(dec.tables)}


def witness_payload(w: Witness) -> dict:
    return {"certificate": certificate_payload(w.certificate), "pairing": str(w.pairing)}
