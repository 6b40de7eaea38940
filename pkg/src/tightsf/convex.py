"""Slope calculus for convex neighborhoods of the singular fibers.

A standard neighborhood V_i of the i-th singular fiber with boundary slope
1/n_i (n_i < 0) has, measured in the product coordinates on -d(M \\ V_i),

    s_1 = (-p_1 n_1 - u_1) / (q_1 n_1 + v_1)
    s_i = ((q_i - p_i) n_i + (v_i - u_i)) / (q_i n_i + v_i)      (i = 2, 3).

Cutting along a vertical annulus between V_1 and V_2 whose two boundary
dividing counts balance (q_1 n_1 + v_1 = q_2 n_2 + v_2 = delta) and rounding
the edges gives a torus parallel to dV_3 of slope s_1 + s_2 - 1/delta; pushed
into the V_3 coordinates this is the closed form

    ((A n_1 + F) q_3) / ((C n_1 + D) v_3)

with the four rational coefficients computed by slope_coeffs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as gcd_int

from .contfrac import solid_torus_count
from .seifert import SeifertData, normalize
from .slopes import Slope, UniMat


def measured_slope(i: int, sd: SeifertData, n: int) -> Slope:
    """Boundary slope of V_i at twisting n < 0, in -d(M \\ V_i) coordinates."""
    if n >= 0:
        raise ValueError("twisting must be negative")
    p, q, u, v = sd.conv[i - 1]
    den = q * n + v
    assert den != 0  # q >= v > 0 forces q*n + v < 0 for n < 0
    if i == 1:
        return Slope(-p * n - u, den)
    if i in (2, 3):
        return Slope((q - p) * n + (v - u), den)
    raise ValueError("fiber index must be 1, 2 or 3")


def rounded_slope(s_a: Slope, s_b: Slope, delta: int) -> Slope:
    """Slope after cutting along the balanced annulus and rounding: sA + sB - 1/delta."""
    if delta == 0:
        raise ValueError("delta must be nonzero")
    if s_a.is_inf or s_b.is_inf or delta % s_a.den or delta % s_b.den:
        raise ValueError("imbalanced dividing sets")
    val = s_a.as_fraction() + s_b.as_fraction() - Fraction(1, delta)
    return Slope.from_fraction(val)


@dataclass(frozen=True)
class SlopeCoeffs:
    A: Fraction
    C: Fraction
    F: Fraction
    D: Fraction


def slope_coeffs(sd: SeifertData) -> SlopeCoeffs:
    r1, r2, r3 = sd.r
    (p1, q1, u1, v1), (p2, q2, u2, v2), (p3, q3, u3, v3) = sd.conv
    a = r1 + r2 + r3 - 2
    c = 2 - r1 - r2 - Fraction(u3, v3)
    edge_term = Fraction(u1 * q2 + q2 - 1, q1 * q2)
    f = (r3 + r2 - 2) * Fraction(v1, q1) + edge_term
    d = (2 - r2 - Fraction(u3, v3)) * Fraction(v1, q1) - edge_term
    return SlopeCoeffs(a, c, f, d)


def fiber3_matrix(sd: SeifertData) -> UniMat:
    """Attaching matrix of V_3 in the presentation with the first invariant
    untwisted and the last two twisted down by one."""
    p, q, u, v = sd.conv[2]
    return UniMat(q, v, q - p, v - u)


def v3_slope_stepwise(sd: SeifertData, n1: int, n2: int) -> Slope:
    """Edge rounding between V_1 and V_2 followed by transfer to dV_3.

    Requires the balance q_1 n_1 + v_1 = q_2 n_2 + v_2.  The transfer applies
    the inverse attaching matrix of V_3 to the negated rounded slope; lines
    are unoriented, so this matches the oriented bookkeeping projectively.
    """
    (p1, q1, u1, v1), (p2, q2, u2, v2) = sd.conv[0], sd.conv[1]
    delta = q1 * n1 + v1
    if delta != q2 * n2 + v2:
        raise ValueError("imbalanced dividing sets")
    rounded = rounded_slope(measured_slope(1, sd, n1), measured_slope(2, sd, n2), delta)
    return fiber3_matrix(sd).inverse().apply(-rounded)


def v3_slope(sd: SeifertData, n1: int, coeffs: SlopeCoeffs | None = None) -> Slope:
    """Closed form for the dV_3 slope after rounding, as a function of n_1."""
    if n1 >= 0:
        raise ValueError("twisting must be negative")
    if coeffs is None:
        coeffs = slope_coeffs(sd)
    q3, v3 = sd.conv[2].q, sd.conv[2].v
    den = (coeffs.C * n1 + coeffs.D) * v3
    if den == 0:
        raise ValueError("slope undefined at this twisting")
    num = (coeffs.A * n1 + coeffs.F) * q3
    frac = num / den
    return Slope(frac.numerator, frac.denominator)


@dataclass(frozen=True)
class LimitInfo:
    limit: Slope
    increasing: bool
    threshold_ok: bool


def v3_slope_limit(
    sd: SeifertData, coeffs: SlopeCoeffs | None = None, window: int = 100
) -> LimitInfo:
    """Limit A q_3 / (C v_3) of the closed form as n_1 -> -inf.

    Only meaningful when A >= 1/4 or A < 0 (the two finite-count regimes with
    C of a definite sign).  "increasing" means the value strictly rises toward
    the limit as the twisting n_1 descends through -1, -2, ..., -window, and
    is verified exactly on that range; threshold_ok records whether the limit
    stays on the attainable side of (p_3 - q_3)/(v_3 - u_3).

    The closed form is a Moebius function of n_1, so the flag can come back
    False for honest reasons near the -1 end: the form is constant whenever
    the first two invariants both make balanced standard neighborhoods (for
    example r_1 = r_2 = 1/2), and a pole between -2 and -1 puts n_1 = -1 on
    the far branch.  The tail toward -infinity is monotone in every case.
    """
    if coeffs is None:
        coeffs = slope_coeffs(sd)
    if not (coeffs.A >= Fraction(1, 4) or coeffs.A < 0):
        raise ValueError("gap region")
    assert coeffs.C != 0
    p3, q3, u3, v3 = sd.conv[2]
    a, f, c, d = integer_form(sd, coeffs)
    limit = Fraction(a, c)
    prev_num, prev_den = -a + f, -c + d
    increasing = prev_den != 0
    for n in range(-2, -window - 1, -1):
        num, den = a * n + f, c * n + d
        if den == 0 or prev_den == 0:  # pole inside the window
            increasing = False
            break
        if (num * prev_den - prev_num * den) * (prev_den * den) <= 0:
            increasing = False
            break
        prev_num, prev_den = num, den
    threshold_ok = limit <= Fraction(p3 - q3, v3 - u3)
    return LimitInfo(Slope.from_fraction(limit), increasing, threshold_ok)


def integer_form(sd: SeifertData, coeffs: SlopeCoeffs | None = None) -> tuple[int, int, int, int]:
    """Integers (a, f, c, d) with the closed form equal to (a n + f)/(c n + d)."""
    if coeffs is None:
        coeffs = slope_coeffs(sd)
    q3, v3 = sd.conv[2].q, sd.conv[2].v
    parts = (coeffs.A * q3, coeffs.F * q3, coeffs.C * v3, coeffs.D * v3)
    scale = 1
    for x in parts:
        scale = scale * x.denominator // gcd_int(scale, x.denominator)
    a, f, c, d = (int(x * scale) for x in parts)
    return a, f, c, d


@dataclass(frozen=True)
class MaxTwistRow:
    k: int
    rounded: Slope  # slope of the rounded torus, -k/(6k+1)
    boundary: Slope  # dV_3 boundary slope, -n+k
    count: int  # tight structures on V_3 rel boundary


@dataclass(frozen=True)
class MaxTwistTable:
    n: int
    rows: tuple[MaxTwistRow, ...]

    @property
    def total(self) -> int:
        return sum(row.count for row in self.rows)


def max_twist_table(n: int) -> MaxTwistTable:
    """Upper-bound bookkeeping for M(-2; 1/2, 2/3, (5n+1)/(6n+1)).

    Maximal twisting forces n_1 = -3k-1, n_2 = -2k-1 for some 0 <= k <= n-1;
    rounding gives -k/(6k+1) and the V_3 boundary slope -n+k, a solid torus
    carrying n-k tight structures.  The rows sum to n(n+1)/2.
    """
    if n < 1:
        raise ValueError("family parameter must be positive")
    sd = normalize(
        (Fraction(1, 2), Fraction(2, 3), Fraction(5 * n + 1, 6 * n + 1)), -2
    )
    rows = []
    for k in range(n):
        boundary = v3_slope_stepwise(sd, -3 * k - 1, -2 * k - 1)
        assert boundary == Slope(-n + k)
        rounded = rounded_slope(
            measured_slope(1, sd, -3 * k - 1),
            measured_slope(2, sd, -2 * k - 1),
            2 * (-3 * k - 1) + 1,
        )
        rows.append(MaxTwistRow(k, rounded, boundary, solid_torus_count(boundary)))
    return MaxTwistTable(n, tuple(rows))


def twist_step_allowed(n: int, ruling: Slope) -> bool:
    """Twist number criterion: a bypass along a ruling of slope r raises the
    twisting of a curve with neighborhood slope 1/n when 1/r >= n + 1."""
    rden, rnum = ruling.vec()
    if rnum == 0:
        raise ValueError("ruling slope must be nonzero")
    return Fraction(rden, rnum) >= n + 1
