"""Lattice point sets, axis slices, and exact-coordinate canonicalization.

Whether every function on a finite point set splits into a sum of
single-coordinate functions depends only on which points share a coordinate
value on each axis.  Raw exact coordinates are therefore reduced to dense
integer ranks per axis before anything else runs; all downstream arithmetic
is exact and bounded.
"""

import json
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Point = tuple[int, ...]


class Axis(IntEnum):
    """Coordinate axis.  2D sets use X and Y only."""

    X = 0
    Y = 1
    Z = 2


def axes_for(dim: int) -> tuple[Axis, ...]:
    if dim not in (2, 3):
        raise ValueError(f"dimension must be 2 or 3, got {dim}")
    return tuple(Axis(i) for i in range(dim))


class SliceId(NamedTuple):
    """A plane (a line in 2D) perpendicular to `axis` at coordinate `value`."""

    axis: Axis
    value: int

    def __str__(self) -> str:
        return f"{self.axis.name.lower()}={self.value}"


class DuplicatePoint(ValueError):
    """An input point occurred more than once.

    Duplicates are rejected rather than merged: a repeated point would make
    the weight vector (+1, -1, 0, ...) a certificate, which says something
    about the input encoding, not about the set.
    """


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PointSet:
    """Finite set of lattice points plus per-axis tables of occurring values.

    `points` is sorted lexicographically; that order fixes point indices in
    slice listings, matrices, certificates, and decompositions, so results
    are reproducible byte for byte.
    """

    dim: int
    points: tuple[Point, ...]
    values: tuple[tuple[int, ...], ...]

    @classmethod
    def from_points(cls, pts: Iterable[Sequence[int]], dim: int | None = None) -> "PointSet":
        rows = [tuple(p) for p in pts]
        if dim is None:
            if not rows:
                raise ValueError("dimension is required for an empty point set")
            dim = len(rows[0])
        if dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {dim}")
        seen: set[Point] = set()
        for p in rows:
            if len(p) != dim:
                raise ValueError(f"point {p} does not have {dim} coordinates")
            for c in p:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coordinate {c!r} is not an integer index")
            if p in seen:
                raise DuplicatePoint(f"point {p} occurs more than once")
            seen.add(p)
        points = tuple(sorted(rows))
        values = tuple(tuple(sorted({p[a] for p in points})) for a in range(dim))
        return cls(dim, points, values)

    @classmethod
    def empty(cls, dim: int = 3) -> "PointSet":
        if dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {dim}")
        return cls(dim, (), tuple(() for _ in range(dim)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def position(self, point) -> int:
        """Index of `point` in canonical order."""
        return self.points.index(tuple(point))

    def is_canonical(self) -> bool:
        """True when every axis table is exactly 0..k-1."""
        return all(vals == tuple(range(len(vals))) for vals in self.values)


ExactScalar = int | str | Fraction


def _exact(value: ExactScalar) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"coordinate {value!r} is not exact; use integers or rational text")
    if isinstance(value, (int, str, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot read coordinate {value!r} exactly")


def canonicalize_points(raw_points: Iterable[Sequence[ExactScalar]],
                        dim: int | None = None) -> list[Point]:
    """Relabel raw exact coordinates to dense per-axis ranks, in input order.

    Two raw points map to the same output iff they were equal, so the
    basic/non-basic status of the set is unchanged.
    """
    rows = []
    for p in raw_points:
        p = tuple(p)
        if dim is None:
            dim = len(p)
        if len(p) != dim:
            raise ValueError(f"point {p} does not have {dim} coordinates")
        rows.append(tuple(_exact(c) for c in p))
    if dim is not None and dim not in (2, 3):
        raise ValueError(f"dimension must be 2 or 3, got {dim}")
    seen: set[tuple[Fraction, ...]] = set()
    for p in rows:
        if p in seen:
            raise DuplicatePoint(f"point {tuple(str(c) for c in p)} occurs more than once")
        seen.add(p)
    if not rows:
        return []
    ranks = []
    for a in range(dim):
        distinct = sorted({p[a] for p in rows})
        ranks.append({v: r for r, v in enumerate(distinct)})
    return [tuple(ranks[a][p[a]] for a in range(dim)) for p in rows]


def canonicalize(raw_points: Iterable[Sequence[ExactScalar]],
                 dim: int | None = None) -> PointSet:
    """Canonical PointSet for raw exact coordinates (see canonicalize_points)."""
    rows = list(raw_points)
    if not rows:
        return PointSet.empty(dim if dim is not None else 3)
    return PointSet.from_points(canonicalize_points(rows, dim=dim))


def slices_of(ps: PointSet) -> list[tuple[SliceId, tuple[int, ...]]]:
    """Every nonempty slice with the indices of its points.

    Deterministic order: axis X, Y, Z, values ascending.  For each axis the
    slices partition the set.
    """
    out: list[tuple[SliceId, tuple[int, ...]]] = []
    for axis in axes_for(ps.dim):
        groups: dict[int, list[int]] = {}
        for i, p in enumerate(ps.points):
            groups.setdefault(p[axis], []).append(i)
        for value in ps.values[axis]:
            out.append((SliceId(axis, value), tuple(groups[value])))
    return out


# ---------------------------------------------------------------------------
# External formats.  Text: one point per line, whitespace-separated integers,
# '#' starts a comment.  JSON: {"dim": 3, "points": [[x, y, z], ...]}.
# Both reject duplicate points; both produce the canonicalized set.

def read_points_text(text: str) -> list[Point]:
    rows: list[Point] = []
    seen: dict[Point, int] = {}
    dim = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        coords = []
        for tok in tokens:
            try:
                coords.append(int(tok))
            except ValueError:
                raise ParseError(f"{tok!r} is not an integer coordinate",
                                 line=lineno, column=raw_line.find(tok) + 1)
        point = tuple(coords)
        if dim is None:
            if len(point) not in (2, 3):
                raise ParseError(f"expected 2 or 3 coordinates, got {len(point)}", line=lineno)
            dim = len(point)
        elif len(point) != dim:
            raise ParseError(f"expected {dim} coordinates, got {len(point)}", line=lineno)
        if point in seen:
            raise ParseError(f"duplicate point {point} (first at line {seen[point]})", line=lineno)
        seen[point] = lineno
        rows.append(point)
    return rows


def read_points_json(text: str) -> tuple[int, list[Point]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError('expected an object with "dim" and "points"')
    dim = data.get("dim", 3)
    if dim not in (2, 3):
        raise ParseError(f'"dim" must be 2 or 3, got {dim!r}')
    raw = data["points"]
    if not isinstance(raw, list):
        raise ParseError('"points" must be an array of coordinate arrays')
    rows: list[Point] = []
    seen: set[Point] = set()
    for entry in raw:
        if (not isinstance(entry, list) or len(entry) != dim
                or any(isinstance(c, bool) or not isinstance(c, int) for c in entry)):
            raise ParseError(f"point {entry!r} is not an array of {dim} integers")
        point = tuple(entry)
        if point in seen:
            raise ParseError(f"duplicate point {point}")
        seen.add(point)
        rows.append(point)
    return dim, rows


def parse_points_text(text: str, dim: int | None = None) -> PointSet:
    rows = read_points_text(text)
    if not rows:
        return PointSet.empty(dim if dim is not None else 3)
    return canonicalize(rows)


def parse_points_json(text: str) -> PointSet:
    dim, rows = read_points_json(text)
    if not rows:
        return PointSet.empty(dim)
    return canonicalize(rows, dim=dim)


def parse_points_auto(text: str, dim: int | None = None) -> PointSet:
    """Parse either format; JSON when the first significant byte is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_points_json(text)
    return parse_points_text(text, dim=dim)


def format_points_text(ps: PointSet) -> str:
    return "".join(" ".join(str(c) for c in p) + "\n" for p in ps.points)


def points_payload(ps: PointSet) -> dict:
    return {"dim": ps.dim, "points": [list(p) for p in ps.points]}
