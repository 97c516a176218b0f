"""Deterministic witness factories for achievable perimeters.

Each factory produces a lattice triangle of the requested shape and
perimeter whose required centers land on the lattice, and re-verifies
everything (shape, perimeter, center flags, and any closed-form center
the family predicts) before returning.  Requests outside a family's
domain raise UnachievableError; the feasibility module can then explain
why with certificates.

The achievable sets, by shape, are:

    condition  acute                 obtuse           right
    F          even, not 2/4/6/10    even >= 4        even >= 4
    G          >= 3, not 5/11        >= 3, not 5/11   multiples of 3 >= 9
    H          6 or >= 8             >= 3             >= 3
    G and H    multiples of 3 >= 9 (all shapes)
    F, G, H    multiples of 6 >= 12 (all shapes)
"""

from __future__ import annotations

from dataclasses import dataclass

from .centers import (
    CenterCondition,
    CenterReport,
    RationalPoint,
    center_report,
    centroid,
    circumcenter,
    orthocenter,
)
from .lattice import LatticePoint, LatticeTriangle, ShapeClass, classify_shape, triangle

_SHEAR_CAP = 64
_POWER_CAP = 64


class ConstructionError(ArithmeticError):
    """A family produced a triangle that failed its own verification."""


class UnachievableError(ValueError):
    """The requested perimeter lies outside the family's domain."""


@dataclass(frozen=True)
class WitnessRequest:
    condition: CenterCondition
    shape: ShapeClass
    perimeter: int

    def __post_init__(self) -> None:
        if self.perimeter < 3:
            raise ValueError("a lattice triangle has perimeter >= 3")


@dataclass(frozen=True)
class Witness:
    triangle: LatticeTriangle
    report: CenterReport
    family_tag: str


def _verified(tri: LatticeTriangle, request: WitnessRequest, tag: str) -> Witness:
    report = center_report(tri)
    if report.shape is not request.shape:
        raise ConstructionError(f"{tag}: {tri} is {report.shape}, wanted {request.shape}")
    if report.perimeter != request.perimeter:
        raise ConstructionError(
            f"{tag}: {tri} has perimeter {report.perimeter}, wanted {request.perimeter}"
        )
    if not request.condition.satisfied_by(report):
        raise ConstructionError(f"{tag}: {tri} misses lattice condition {request.condition}")
    return Witness(tri, report, tag)


def _expect(point: RationalPoint, coords: tuple[int, int], what: str) -> None:
    if (point.x, point.y) != coords:
        raise ConstructionError(f"{what}: got {point}, expected {coords}")


def scale(t: LatticeTriangle, n: int) -> LatticeTriangle:
    """Multiply all vertices by n; perimeter scales by n, shape is kept."""
    return t.scaled(n)


def sheared(t: LatticeTriangle, k: int) -> LatticeTriangle:
    """Apply the unimodular map (x, y) -> (x - k*y, y) to all vertices."""
    return LatticeTriangle(*(LatticePoint(v.x - k * v.y, v.y) for v in t.vertices))


def delta(n: int) -> int | None:
    """Smallest prime divisor of n congruent to 5 mod 6, if any."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n
    for p in (2, 3):
        while m % p == 0:
            m //= p
    d = 5
    while d * d <= m:
        if m % d == 0:
            if d % 6 == 5:
                return d
            while m % d == 0:
                m //= d
        d += 2
    return m if m > 1 and m % 6 == 5 else None


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- orthocenter families -------------------------------------------------


def acute_H(perimeter: int) -> Witness:
    """Acute triangle with lattice orthocenter; exists iff perimeter is 6 or >= 8."""
    ell = perimeter
    if ell != 6 and ell < 8:
        raise UnachievableError(
            f"no acute triangle with lattice orthocenter has perimeter {ell}; "
            "see the exclusion report"
        )
    request = WitnessRequest(CenterCondition.ORTHOCENTER, ShapeClass.ACUTE, ell)
    if ell % 2 == 0:
        n = ell // 2
        tri = triangle((0, 0), (n, 0), (1, n - 1))
        _expect(orthocenter(tri), (1, 1), "even-perimeter orthocenter family")
        return _verified(tri, request, "orthocenter/even")
    if ell % 4 == 1:
        tri = triangle((0, 0), ((ell + 1) // 2, 0), (2, (ell - 3) // 2))
        _expect(orthocenter(tri), (2, 2), "1 mod 4 orthocenter family")
        return _verified(tri, request, "orthocenter/odd-1mod4")
    tri = triangle((0, 0), ((ell + 3) // 2, 0), (6, 3 * (ell - 9) // 2))
    _expect(orthocenter(tri), (6, 2), "3 mod 4 orthocenter family")
    return _verified(tri, request, "orthocenter/odd-3mod4")


def obtuse_H(perimeter: int) -> Witness:
    """Obtuse triangle with lattice orthocenter; any perimeter >= 3."""
    ell = perimeter
    request = WitnessRequest(CenterCondition.ORTHOCENTER, ShapeClass.OBTUSE, ell)
    tri = triangle((0, 0), (1, 0), (2 - ell, ell - 2))
    _expect(orthocenter(tri), (2 - ell, 1 - ell), "obtuse orthocenter family")
    return _verified(tri, request, "orthocenter/obtuse")


def right_H(perimeter: int) -> Witness:
    """Right triangle; the orthocenter sits at the right-angle vertex."""
    ell = perimeter
    request = WitnessRequest(CenterCondition.ORTHOCENTER, ShapeClass.RIGHT, ell)
    tri = triangle((0, 0), (ell - 2, 0), (0, 1))
    _expect(orthocenter(tri), (0, 0), "right orthocenter family")
    return _verified(tri, request, "orthocenter/right")


# --- circumcenter families ------------------------------------------------

_ACUTE_F_EXPLICIT = {
    8: (((4, 0), (3, 3)), (2, 1)),
    14: (((8, 0), (3, 5)), (4, 1)),
    16: (((8, 0), (1, 7)), (4, 3)),
}


def acute_F(perimeter: int) -> Witness:
    """Acute triangle with lattice circumcenter; even perimeter, 8 or >= 12."""
    ell = perimeter
    if ell % 2 != 0 or ell in (4, 6, 10) or ell < 8:
        raise UnachievableError(
            f"no acute triangle with lattice circumcenter has perimeter {ell}; "
            "see the exclusion report"
        )
    request = WitnessRequest(CenterCondition.CIRCUMCENTER, ShapeClass.ACUTE, ell)
    if ell in _ACUTE_F_EXPLICIT:
        (a, b), f = _ACUTE_F_EXPLICIT[ell]
        tri = triangle((0, 0), a, b)
        _expect(circumcenter(tri), f, f"explicit circumcenter case {ell}")
        return _verified(tri, request, "circumcenter/explicit")
    r = ell % 8
    if r == 4:
        n = (ell - 4) // 8
        tri = triangle((0, 0), (4 * n + 2, 0), (4, 8 * n - 4))
        _expect(circumcenter(tri), (2 * n + 1, 4 * n - 3), "4 mod 8 circumcenter family")
        return _verified(tri, request, "circumcenter/4mod8")
    if r == 6:
        n = (ell - 6) // 8
        tri = triangle((0, 0), (2 * n + 1, 1), (0, 6 * n + 4))
        _expect(circumcenter(tri), (n - 1, 3 * n + 2), "6 mod 8 circumcenter family")
        return _verified(tri, request, "circumcenter/6mod8")
    # 0 or 2 mod 8: one family covers both, via the parity of n.
    n = (ell - 2) // 4 if r == 2 else (ell - 4) // 4
    tri = triangle((0, 0), (2 * n + 2, 0), (4, 2 * n - 2))
    _expect(circumcenter(tri), (n + 1, n - 3), "0/2 mod 8 circumcenter family")
    return _verified(tri, request, "circumcenter/0or2mod8")


def obtuse_F(perimeter: int) -> Witness:
    """Obtuse triangle with lattice circumcenter; any even perimeter >= 4."""
    ell = perimeter
    if ell % 2 != 0 or ell < 4:
        raise UnachievableError(
            f"a lattice circumcenter needs an even perimeter >= 4, got {ell}"
        )
    request = WitnessRequest(CenterCondition.CIRCUMCENTER, ShapeClass.OBTUSE, ell)
    tri = triangle((0, 0), (2, 0), (3 - ell, ell - 3))
    _expect(circumcenter(tri), (1, ell - 2), "obtuse circumcenter family")
    return _verified(tri, request, "circumcenter/obtuse")


def right_F(perimeter: int) -> Witness:
    """Right triangle with lattice circumcenter; any even perimeter >= 4."""
    ell = perimeter
    if ell % 2 != 0 or ell < 4:
        raise UnachievableError(
            f"a lattice circumcenter needs an even perimeter >= 4, got {ell}"
        )
    request = WitnessRequest(CenterCondition.CIRCUMCENTER, ShapeClass.RIGHT, ell)
    tri = triangle((0, 0), (1, 1), (3 - ell, ell - 3))
    _expect(circumcenter(tri), ((4 - ell) // 2, (ell - 2) // 2), "right circumcenter family")
    return _verified(tri, request, "circumcenter/right")


# --- centroid families ----------------------------------------------------


def _grown_height_witness(
    z: int, x: int, y_base: int, request: WitnessRequest, tag: str
) -> Witness:
    # Triangle O,(z,0),(x,y_base*3^k); raising k keeps all side lengths and
    # the lattice centroid but eventually makes the apex angle acute.
    for k in range(1, _POWER_CAP + 1):
        tri = triangle((0, 0), (z, 0), (x, y_base * 3**k))
        if classify_shape(tri) is ShapeClass.ACUTE:
            return _verified(tri, request, tag)
    raise ConstructionError(f"{tag}: no exponent up to {_POWER_CAP} gave an acute triangle")


def acute_G(perimeter: int) -> Witness:
    """Acute triangle with lattice centroid; any perimeter >= 3 except 5 and 11."""
    ell = perimeter
    if ell in (5, 11):
        raise UnachievableError(
            f"no triangle with lattice centroid has perimeter {ell}; "
            "see the exclusion report"
        )
    request = WitnessRequest(CenterCondition.CENTROID, ShapeClass.ACUTE, ell)
    if ell == 3:
        tri = triangle((0, 0), (1, 2), (2, 1))
        _expect(centroid(tri), (1, 1), "perimeter-3 centroid triangle")
        return _verified(tri, request, "centroid/base-3")
    if ell % 3 == 0:
        base = acute_G(3).triangle
        return _verified(scale(base, ell // 3), request, "centroid/scaled-base")
    if ell % 6 == 1:
        return _grown_height_witness(ell - 2, 4, ell - 2, request, "centroid/1mod6")
    if ell % 6 == 4:
        return _grown_height_witness(ell // 2, 1, (ell - 2) // 2, request, "centroid/4mod6")
    if ell % 6 == 2:
        # Half the perimeter is 1 mod 3, so the halved witness exists; double it.
        inner = acute_G(ell // 2)
        return _verified(scale(inner.triangle, 2), request, "centroid/doubled")
    # 5 mod 6: composites split off a prime factor that is 5 mod 6; the
    # cofactor is 1 mod 6 and handled above.  Primes get direct families
    # keyed by the residue mod 18.
    if not _is_prime(ell):
        p = delta(ell)
        if p is None:
            raise ConstructionError(f"composite {ell} = 5 mod 6 must have a 5 mod 6 prime factor")
        inner = acute_G(ell // p)
        return _verified(scale(inner.triangle, p), request, "centroid/factored")
    r = ell % 18
    offset = {5: 8, 11: 14, 17: 2}[r]
    x = {5: 7, 11: 13, 17: 1}[r]
    d = delta(ell - offset)
    if d is None:
        raise ConstructionError(f"delta({ell - offset}) undefined in centroid family")
    return _grown_height_witness(ell - 1 - d, x, d, request, f"centroid/{r}mod18")


def obtuse_G(perimeter: int) -> Witness:
    """Obtuse triangle with lattice centroid; same perimeters as acute."""
    ell = perimeter
    if ell in (5, 11):
        raise UnachievableError(
            f"no triangle with lattice centroid has perimeter {ell}; "
            "see the exclusion report"
        )
    request = WitnessRequest(CenterCondition.CENTROID, ShapeClass.OBTUSE, ell)
    if ell == 3:
        tri = triangle((0, 0), (1, 0), (-1, 3))
        _expect(centroid(tri), (0, 1), "perimeter-3 obtuse centroid triangle")
        return _verified(tri, request, "centroid/obtuse-3")
    base = acute_G(ell).triangle
    for k in range(1, _SHEAR_CAP + 1):
        tri = sheared(base, k)
        if classify_shape(tri) is ShapeClass.OBTUSE:
            return _verified(tri, request, "centroid/sheared")
    raise ConstructionError(f"no shear up to {_SHEAR_CAP} made {base} obtuse")


def right_G(perimeter: int) -> Witness:
    """Right triangle with lattice centroid; perimeter any multiple of 3 >= 9."""
    ell = perimeter
    if ell % 3 != 0 or ell < 9:
        raise UnachievableError(
            f"a right triangle with lattice centroid has perimeter in 3N, >= 9; got {ell}"
        )
    request = WitnessRequest(CenterCondition.CENTROID, ShapeClass.RIGHT, ell)
    n = (ell - 6) // 3
    tri = triangle((0, 0), (3 * n, 0), (0, 3))
    _expect(centroid(tri), (n, 1), "right centroid family")
    return _verified(tri, request, "centroid/right")


# --- combined conditions --------------------------------------------------

_ACUTE_GH_EXPLICIT = {
    9: (((6, 3), (3, 6)), (3, 3), (4, 4)),
    12: (((6, 0), (3, 9)), (3, 3), (3, 1)),
    15: (((9, 0), (3, 9)), (4, 3), (3, 2)),
    21: (((15, 0), (3, 9)), (6, 3), (3, 4)),
}

_ACUTE_FGH_EXPLICIT = {
    12: (((6, 0), (3, 9)), (3, 4), (3, 3), (3, 1)),
    18: (((12, 6), (6, 12)), (5, 5), (6, 6), (8, 8)),
    30: (((18, 0), (6, 18)), (9, 7), (8, 6), (6, 4)),
}


def _require_gh_domain(ell: int) -> None:
    if ell % 3 != 0 or ell < 9:
        raise UnachievableError(
            f"lattice centroid and orthocenter force a perimeter in 3N, >= 9; got {ell}"
        )


def _require_fgh_domain(ell: int) -> None:
    if ell % 6 != 0 or ell < 12:
        raise UnachievableError(
            f"all three lattice centers force a perimeter in 6N, >= 12; got {ell}"
        )


def acute_GH(perimeter: int) -> Witness:
    """Acute triangle with lattice centroid and orthocenter (3N, >= 9)."""
    ell = perimeter
    _require_gh_domain(ell)
    request = WitnessRequest(CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.ACUTE, ell)
    if ell in _ACUTE_GH_EXPLICIT:
        (a, b), g, h = _ACUTE_GH_EXPLICIT[ell]
        tri = triangle((0, 0), a, b)
        _expect(centroid(tri), g, f"explicit centroid+orthocenter case {ell}")
        _expect(orthocenter(tri), h, f"explicit centroid+orthocenter case {ell}")
        return _verified(tri, request, "centroid+orthocenter/explicit")
    # Tripling any lattice-orthocenter triangle puts the centroid on the
    # lattice as well (vertex sums are what the centroid divides by 3).
    inner = acute_H(ell // 3)
    return _verified(scale(inner.triangle, 3), request, "centroid+orthocenter/tripled")


def obtuse_GH(perimeter: int) -> Witness:
    ell = perimeter
    _require_gh_domain(ell)
    request = WitnessRequest(CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.OBTUSE, ell)
    return _verified(scale(obtuse_H(ell // 3).triangle, 3), request, "centroid+orthocenter/tripled")


def right_GH(perimeter: int) -> Witness:
    ell = perimeter
    _require_gh_domain(ell)
    request = WitnessRequest(CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.RIGHT, ell)
    return _verified(scale(right_H(ell // 3).triangle, 3), request, "centroid+orthocenter/tripled")


def acute_FGH(perimeter: int) -> Witness:
    """Acute triangle with all of F, G, H on the lattice (6N, >= 12)."""
    ell = perimeter
    _require_fgh_domain(ell)
    request = WitnessRequest(CenterCondition.ALL_THREE, ShapeClass.ACUTE, ell)
    if ell in _ACUTE_FGH_EXPLICIT:
        (a, b), f, g, h = _ACUTE_FGH_EXPLICIT[ell]
        tri = triangle((0, 0), a, b)
        _expect(circumcenter(tri), f, f"explicit all-centers case {ell}")
        _expect(centroid(tri), g, f"explicit all-centers case {ell}")
        _expect(orthocenter(tri), h, f"explicit all-centers case {ell}")
        return _verified(tri, request, "all-centers/explicit")
    inner = acute_F(ell // 3)
    return _verified(scale(inner.triangle, 3), request, "all-centers/tripled")


def obtuse_FGH(perimeter: int) -> Witness:
    ell = perimeter
    _require_fgh_domain(ell)
    request = WitnessRequest(CenterCondition.ALL_THREE, ShapeClass.OBTUSE, ell)
    return _verified(scale(obtuse_F(ell // 3).triangle, 3), request, "all-centers/tripled")


def right_FGH(perimeter: int) -> Witness:
    ell = perimeter
    _require_fgh_domain(ell)
    request = WitnessRequest(CenterCondition.ALL_THREE, ShapeClass.RIGHT, ell)
    return _verified(scale(right_F(ell // 3).triangle, 3), request, "all-centers/tripled")


_FACTORIES = {
    (CenterCondition.ORTHOCENTER, ShapeClass.ACUTE): acute_H,
    (CenterCondition.ORTHOCENTER, ShapeClass.OBTUSE): obtuse_H,
    (CenterCondition.ORTHOCENTER, ShapeClass.RIGHT): right_H,
    (CenterCondition.CIRCUMCENTER, ShapeClass.ACUTE): acute_F,
    (CenterCondition.CIRCUMCENTER, ShapeClass.OBTUSE): obtuse_F,
    (CenterCondition.CIRCUMCENTER, ShapeClass.RIGHT): right_F,
    (CenterCondition.CENTROID, ShapeClass.ACUTE): acute_G,
    (CenterCondition.CENTROID, ShapeClass.OBTUSE): obtuse_G,
    (CenterCondition.CENTROID, ShapeClass.RIGHT): right_G,
    (CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.ACUTE): acute_GH,
    (CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.OBTUSE): obtuse_GH,
    (CenterCondition.CENTROID_AND_ORTHOCENTER, ShapeClass.RIGHT): right_GH,
    (CenterCondition.ALL_THREE, ShapeClass.ACUTE): acute_FGH,
    (CenterCondition.ALL_THREE, ShapeClass.OBTUSE): obtuse_FGH,
    (CenterCondition.ALL_THREE, ShapeClass.RIGHT): right_FGH,
}


def build_witness(request: WitnessRequest) -> Witness:
    """Dispatch to the family covering the request, verifying the result."""
    factory = _FACTORIES.get((request.condition, request.shape))
    if factory is None:
        raise ValueError(f"no construction family for {request.condition}/{request.shape}")
    return factory(request.perimeter)
