"""Exact detection of lattice incenters, touch points, and empirical scans.

The incenter is the unique interior point equidistant from the three
side lines.  Distances to those lines are irrational in general, but for
a lattice point P and side lines in integer normal form n.X + c = 0 the
equidistance d(P, side_i) = d(P, side_j) is equivalent to

    (n_i.P + c_i)^2 * |n_j|^2 == (n_j.P + c_j)^2 * |n_i|^2

which is a pure integer comparison.  The classical weighted-vertex
formula involves the irrational side lengths and is used in tests only
as a floating-point cross-check; here floats never decide anything, they
merely narrow where to look.

Whether some perimeter admits a triangle with lattice incenter is an
open question; scans therefore report witnesses and absences-in-a-box,
never impossibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import hypot

from .centers import RationalPoint
from .lattice import (
    LatticePoint,
    LatticeTriangle,
    ShapeClass,
    classify_shape,
    lattice_perimeter,
)

_BBOX_SCAN_LIMIT = 400


@dataclass(frozen=True)
class IncenterReport:
    incenter: LatticePoint
    inradius_squared: Fraction
    touch_points: tuple[RationalPoint, RationalPoint, RationalPoint]
    touch_on_lattice: tuple[bool, bool, bool]


def _side_lines(t: LatticeTriangle) -> list[tuple[int, int, int, LatticePoint, LatticePoint]]:
    # (nx, ny, c, p, q) per side, line nx*x + ny*y + c = 0 through p and q.
    sides = ((t.v1, t.v2), (t.v2, t.v0), (t.v0, t.v1))
    out = []
    for p, q in sides:
        nx, ny = q.y - p.y, p.x - q.x
        c = -(nx * p.x + ny * p.y)
        out.append((nx, ny, c, p, q))
    return out


def _line_values(t: LatticeTriangle, p: LatticePoint) -> list[int]:
    return [nx * p.x + ny * p.y + c for nx, ny, c, _, _ in _side_lines(t)]


def _interior_signs(t: LatticeTriangle) -> list[int]:
    # Sign of each side's edge function at the opposite vertex.
    signs = []
    for line, v in zip(_side_lines(t), t.vertices):
        nx, ny, c, _, _ = line
        val = nx * v.x + ny * v.y + c
        signs.append(1 if val > 0 else -1)
    return signs


def _is_lattice_incenter(t: LatticeTriangle, p: LatticePoint) -> bool:
    lines = _side_lines(t)
    vals = _line_values(t, p)
    signs = _interior_signs(t)
    for val, sign in zip(vals, signs):
        if val == 0 or (val > 0) != (sign > 0):
            return False  # not strictly interior
    norms = [nx * nx + ny * ny for nx, ny, _, _, _ in lines]
    return (
        vals[0] ** 2 * norms[1] == vals[1] ** 2 * norms[0]
        and vals[0] ** 2 * norms[2] == vals[2] ** 2 * norms[0]
    )


def _float_incenter(t: LatticeTriangle) -> tuple[float, float]:
    a = hypot(t.v1.x - t.v2.x, t.v1.y - t.v2.y)
    b = hypot(t.v2.x - t.v0.x, t.v2.y - t.v0.y)
    c = hypot(t.v0.x - t.v1.x, t.v0.y - t.v1.y)
    s = a + b + c
    ix = (a * t.v0.x + b * t.v1.x + c * t.v2.x) / s
    iy = (a * t.v0.y + b * t.v1.y + c * t.v2.y) / s
    return ix, iy


def lattice_incenter(t: LatticeTriangle) -> LatticePoint | None:
    """The incenter, if it is a lattice point; decided exactly.

    Small triangles scan every interior lattice point of the bounding
    box; larger ones examine a radius-2 neighborhood of a floating-point
    estimate (the incenter of a realistically sized triangle is located
    far more accurately than one unit).  Either way each candidate faces
    the exact integer equidistance test, and the incenter is the only
    interior point that can pass it.
    """
    xs = [v.x for v in t.vertices]
    ys = [v.y for v in t.vertices]
    wx, wy = max(xs) - min(xs), max(ys) - min(ys)
    if (wx - 1) * (wy - 1) <= _BBOX_SCAN_LIMIT:
        candidates = [
            LatticePoint(x, y)
            for x in range(min(xs) + 1, max(xs))
            for y in range(min(ys) + 1, max(ys))
        ]
    else:
        ix, iy = _float_incenter(t)
        candidates = [
            LatticePoint(x, y)
            for x in range(round(ix) - 2, round(ix) + 3)
            for y in range(round(iy) - 2, round(iy) + 3)
        ]
    hits = [p for p in candidates if _is_lattice_incenter(t, p)]
    if len(hits) > 1:
        raise ArithmeticError(f"multiple interior equidistant points in {t}: {hits}")
    return hits[0] if hits else None


def incenter_report(t: LatticeTriangle, center: LatticePoint | None = None) -> IncenterReport:
    """Inradius-squared and the three incircle touch points, exact.

    The touch point on each side is the foot of the perpendicular from
    the incenter, I - (n.I + c)/|n|^2 * n, a rational point lying within
    the closed side segment.
    """
    if center is None:
        center = lattice_incenter(t)
        if center is None:
            raise ValueError(f"{t} has no lattice incenter")
    elif not _is_lattice_incenter(t, center):
        raise ValueError(f"{center} is not the incenter of {t}")

    lines = _side_lines(t)
    vals = _line_values(t, center)
    radii = {Fraction(v * v, nx * nx + ny * ny) for v, (nx, ny, _, _, _) in zip(vals, lines)}
    if len(radii) != 1:
        raise ArithmeticError(f"unequal side distances from {center} in {t}")
    r2 = radii.pop()

    touches = []
    flags = []
    for v, (nx, ny, c, p, q) in zip(vals, lines):
        norm = nx * nx + ny * ny
        tp = RationalPoint(center.x - Fraction(v * nx, norm), center.y - Fraction(v * ny, norm))
        d2 = (tp.x - center.x) ** 2 + (tp.y - center.y) ** 2
        if d2 != r2:
            raise ArithmeticError(f"touch point {tp} not at inradius from {center}")
        along = (tp.x - p.x) * (q.x - p.x) + (tp.y - p.y) * (q.y - p.y)
        span = Fraction((q.x - p.x) ** 2 + (q.y - p.y) ** 2)
        if not 0 <= along <= span:
            raise ArithmeticError(f"touch point {tp} outside its side segment")
        touches.append(tp)
        flags.append(tp.is_lattice())
    return IncenterReport(center, r2, tuple(touches), tuple(flags))


@dataclass(frozen=True)
class IncenterScanRow:
    shape: ShapeClass
    perimeter: int
    triangle: LatticeTriangle
    inradius_squared: Fraction


@dataclass(frozen=True)
class IncenterScan:
    """Empirical scan output: witnesses found in a box, nothing excluded."""

    box_radius: int
    lmax: int
    rows: tuple[IncenterScanRow, ...]

    def achievable(self, shape: ShapeClass) -> list[int]:
        return sorted(r.perimeter for r in self.rows if r.shape is shape)


def incenter_scan(box_radius: int, lmax: int, shard_count: int = 1) -> IncenterScan:
    """One lattice-incenter witness per (shape, perimeter) cell in the box.

    Output is conjecture data bounded by the box; absence of a row says
    nothing beyond "not found with a vertex-anchored box of this radius".
    """
    from .centers import CenterCondition
    from .search import SHAPE_ORDER, SearchConfig, search_witnesses

    config = SearchConfig(
        box_radius=box_radius,
        lmax=lmax,
        conditions=(CenterCondition.INCENTER,),
        shard_count=shard_count,
    )
    cells = frozenset(
        (CenterCondition.INCENTER, shape, ell)
        for shape in SHAPE_ORDER
        for ell in range(3, lmax + 1)
    )
    hits = search_witnesses(config, cells)
    rows = []
    for (cond, shape, ell), tri in sorted(hits.items(), key=lambda kv: (kv[0][2], kv[0][1].value)):
        report = incenter_report(tri)
        if classify_shape(tri) is not shape or lattice_perimeter(tri) != ell:
            raise ArithmeticError(f"scan witness {tri} fails its cell {shape}/{ell}")
        rows.append(IncenterScanRow(shape, ell, tri, report.inradius_squared))
    return IncenterScan(box_radius, lmax, tuple(rows))
