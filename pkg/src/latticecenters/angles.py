"""Exact arithmetic on angles of the form k*pi + arctan(t), t rational.

The normal form is unique: the arctan part always lies in (-pi/2, pi/2),
with a distinguished half-pi marker for angles of the form k*pi + pi/2.
Sums of arctangents of rationals stay in this family (tangent addition
with quadrant tracking), so equality and comparison against pi are
decidable without any floating point.

A separate directed-rounding layer produces certified decimal digits of
angle-sum / pi ratios; it never feeds back into the exact comparisons.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction | int

_HALF = Fraction(1, 2)


class PiOrder(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ExactAngle:
    """k*pi + arctan(tail), or k*pi + pi/2 when half_pi is set."""

    pi_multiples: int
    tail: Fraction | None  # None together with half_pi=True
    half_pi: bool = False

    def __post_init__(self) -> None:
        if self.half_pi:
            if self.tail is not None:
                raise ValueError("half-pi angles carry no tangent tail")
        else:
            object.__setattr__(self, "tail", Fraction(self.tail))

    def _order_key(self) -> tuple:
        # Within one k, every finite arctan lies below the half-pi mark.
        if self.half_pi:
            return (self.pi_multiples, 1, Fraction(0))
        return (self.pi_multiples, 0, self.tail)

    def __lt__(self, other: "ExactAngle") -> bool:
        return self._order_key() < other._order_key()

    def __float__(self) -> float:
        import math

        if self.half_pi:
            return self.pi_multiples * math.pi + math.pi / 2
        return self.pi_multiples * math.pi + math.atan(self.tail)

    def __str__(self) -> str:
        head = f"{self.pi_multiples}*pi"
        if self.half_pi:
            return f"{head} + pi/2"
        return f"{head} + arctan({self.tail})"


ZERO_ANGLE = ExactAngle(0, Fraction(0))
PI_ANGLE = ExactAngle(1, Fraction(0))


def angle_from_tan(t: Rational) -> ExactAngle:
    """Angle in (0, pi/2) with the given positive rational tangent."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError(f"tangent must be positive, got {t}")
    return ExactAngle(0, t)


def angle_add(a: ExactAngle, b: ExactAngle) -> ExactAngle:
    """Exact sum; the result is again in normal form."""
    k = a.pi_multiples + b.pi_multiples
    if a.half_pi and b.half_pi:
        return ExactAngle(k + 1, Fraction(0))
    if a.half_pi or b.half_pi:
        v = b.tail if a.half_pi else a.tail
        assert v is not None
        if v == 0:
            return ExactAngle(k, None, half_pi=True)
        # pi/2 + arctan(v) = (v>0: pi - arctan(1/v); v<0: arctan(-1/v))
        return ExactAngle(k + 1 if v > 0 else k, -1 / v)
    u, v = a.tail, b.tail
    assert u is not None and v is not None
    prod = u * v
    if prod == 1:
        # u and v share a sign; two negative arctans land at -pi/2.
        return ExactAngle(k if u > 0 else k - 1, None, half_pi=True)
    w = (u + v) / (1 - prod)
    if prod > 1:
        # Both tails share a sign; the sum crossed +-pi/2.
        k += 1 if u > 0 else -1
    return ExactAngle(k, w)


def angle_neg(a: ExactAngle) -> ExactAngle:
    if a.half_pi:
        return ExactAngle(-a.pi_multiples - 1, None, half_pi=True)
    assert a.tail is not None
    return ExactAngle(-a.pi_multiples, -a.tail)


def angle_sum(angles: Iterable[ExactAngle]) -> ExactAngle:
    total = ZERO_ANGLE
    for a in angles:
        total = angle_add(total, a)
    return total


def arctan_sum(tangents: Iterable[Rational]) -> ExactAngle:
    return angle_sum(angle_from_tan(t) for t in tangents)


def compare_to_pi(a: ExactAngle) -> PiOrder:
    """Exact trichotomy of the represented angle against pi."""
    key = a._order_key()
    pi_key = PI_ANGLE._order_key()
    if key < pi_key:
        return PiOrder.LESS
    if key == pi_key:
        return PiOrder.EQUAL
    return PiOrder.GREATER


def sums_to_pi(tangents: Sequence[Rational]) -> bool:
    """Symmetric-function test: three positive tangents sum to pi iff
    t0+t1+t2 == t0*t1*t2 and the pairwise-product sum differs from 1."""
    t = [Fraction(x) for x in tangents]
    if len(t) != 3 or any(x <= 0 for x in t):
        raise ValueError("expected three positive tangents")
    s1 = t[0] + t[1] + t[2]
    s2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2]
    s3 = t[0] * t[1] * t[2]
    return s1 == s3 and s2 != 1


def solve_pi_triples(numerators: Sequence[Rational]) -> list[tuple[int, int, int]]:
    """All (m0, m1, m2) in N^3 with sum of arctan(p_i / m_i) equal to pi.

    Each summand strictly decreases as its m grows, so each m_i is
    bounded by the largest value keeping the sum at least pi while the
    other two denominators sit at 1.  Within those bounds the third
    denominator is solved exactly rather than scanned.
    """
    p = [Fraction(x) for x in numerators]
    if len(p) != 3 or any(x <= 0 for x in p):
        raise ValueError("expected three positive numerators")

    def bound(i: int) -> int:
        others = angle_sum(angle_from_tan(p[j]) for j in range(3) if j != i)
        m = 1
        while compare_to_pi(angle_add(others, angle_from_tan(p[i] / m))) is not PiOrder.LESS:
            m += 1
        return m - 1

    m0_max, m1_max = bound(0), bound(1)
    solutions: list[tuple[int, int, int]] = []
    for m0 in range(1, m0_max + 1):
        a0 = angle_from_tan(p[0] / m0)
        for m1 in range(1, m1_max + 1):
            partial = angle_add(a0, angle_from_tan(p[1] / m1))
            residue = angle_add(PI_ANGLE, angle_neg(partial))
            # Need residue = arctan(p2/m2) for a positive integer m2.
            if residue.half_pi or residue.pi_multiples != 0:
                continue
            assert residue.tail is not None
            if residue.tail <= 0:
                continue
            m2 = p[2] / residue.tail
            if m2.denominator == 1 and m2 >= 1:
                solutions.append((m0, m1, int(m2)))
    return solutions


# --- certified decimal rendering (directed rounding, no floats) ----------


def _atan_taylor_bounds(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    # Alternating series; consecutive partial sums bracket the limit.
    # Only called with |x| <= 1/2 so convergence is geometric (ratio 1/4).
    xx = x * x
    power = x
    s_prev = Fraction(0)
    s = Fraction(0)
    for k in range(terms + 1):
        s_prev = s
        term = power / (2 * k + 1)
        s = s + term if k % 2 == 0 else s - term
        power *= xx
    return (min(s_prev, s), max(s_prev, s))


_pi_bounds_cache: dict[int, tuple[Fraction, Fraction]] = {}


def pi_bounds(terms: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of pi from 16*arctan(1/5) - 4*arctan(1/239)."""
    cached = _pi_bounds_cache.get(terms)
    if cached is not None:
        return cached
    lo1, hi1 = _atan_taylor_bounds(Fraction(1, 5), terms)
    lo2, hi2 = _atan_taylor_bounds(Fraction(1, 239), terms)
    result = (16 * lo1 - 4 * hi2, 16 * hi1 - 4 * lo2)
    _pi_bounds_cache[terms] = result
    return result


def arctan_bounds(x: Rational, terms: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of arctan(x), tightening as terms grows."""
    x = Fraction(x)
    if x < 0:
        lo, hi = arctan_bounds(-x, terms)
        return (-hi, -lo)
    if x > 1:
        plo, phi = pi_bounds(terms)
        lo, hi = arctan_bounds(1 / x, terms)
        return (plo / 2 - hi, phi / 2 - lo)
    if x > _HALF:
        # arctan(x) = pi/4 + arctan((x-1)/(x+1)), argument now in (-1/3, 0].
        plo, phi = pi_bounds(terms)
        lo, hi = _atan_taylor_bounds((x - 1) / (x + 1), terms)
        return (plo / 4 + lo, phi / 4 + hi)
    return _atan_taylor_bounds(x, terms)


def angle_over_pi_bounds(tangents: Sequence[Rational], terms: int) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for t in tangents:
        a, b = arctan_bounds(t, terms)
        lo += a
        hi += b
    plo, phi = pi_bounds(terms)
    return (lo / phi, hi / plo)


def _format_significant(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(value.numerator) / Decimal(value.denominator)
    text = str(d)
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def certified_ratio_string(tangents: Sequence[Rational], digits: int = 6) -> str:
    """Decimal digits of (sum of arctans)/pi, certified by interval refinement.

    The exact comparator decides the ratio-equals-one case; decimals are
    only ever produced through two-sided rational bounds that agree on
    every printed digit.
    """
    if sums_to_pi(tangents):
        return "1"
    for terms in (12, 24, 48, 96, 192):
        lo, hi = angle_over_pi_bounds(tangents, terms)
        slo = _format_significant(lo, digits)
        shi = _format_significant(hi, digits)
        if slo == shi:
            return slo
    raise ArithmeticError(f"could not certify {digits} digits for tangents {tangents}")


def frontier_rows(numerators: Sequence[Rational]) -> list[tuple[int, int, int]]:
    """Denominator triples ordered by total, up to the first total whose
    rows all fall below pi (after which monotonicity keeps them below)."""
    p = [Fraction(x) for x in numerators]
    rows: list[tuple[int, int, int]] = []
    for total in itertools.count(3):
        level = [
            (m0, m1, total - m0 - m1)
            for m0 in range(1, total - 1)
            for m1 in range(1, total - m0)
        ]
        rows.extend(level)
        below = all(
            compare_to_pi(arctan_sum([p[0] / m0, p[1] / m1, p[2] / m2])) is PiOrder.LESS
            for m0, m1, m2 in level
        )
        if below:
            return rows
        if total > 64:
            raise ArithmeticError(f"frontier did not close for numerators {numerators}")


def render_table(
    numerators: Sequence[Rational],
    rows: Sequence[tuple[int, int, int]] | None = None,
    digits: int = 6,
) -> list[tuple[tuple[int, int, int], str]]:
    """(row, certified decimal of angle-sum/pi) for each denominator row."""
    if rows is None:
        rows = frontier_rows(numerators)
    p = [Fraction(x) for x in numerators]
    out = []
    for m0, m1, m2 in rows:
        tangents = [p[0] / m0, p[1] / m1, p[2] / m2]
        out.append(((m0, m1, m2), certified_ratio_string(tangents, digits)))
    return out
