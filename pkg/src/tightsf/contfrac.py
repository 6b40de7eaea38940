"""Negative continued fractions and the solid torus counting formulas.

A rational x < -1 has a unique expansion

    x = [a_0, a_1, ..., a_m] = a_0 - 1/(a_1 - 1/(... - 1/a_m))

with every a_k <= -2 (the canonical form).  The empty expansion evaluates to
the infinite slope.  reverse_shift produces the derived form
[a_m, ..., a_1, a_0 + 1], whose last entry may legitimately be -1.

For x = -q/p in lowest terms (q > p >= 1) the convergents (p, q, u, v) record
-v/u = [a_0, ..., a_{m-1}], with u = 0, v = 1 when the expansion has length
one; they always satisfy p*v - q*u = 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .slopes import INF, Slope


class Convergents(NamedTuple):
    p: int
    q: int
    u: int
    v: int


def expand(x: Slope | Fraction) -> tuple[int, ...]:
    """Canonical expansion of a rational x < -1, as a tuple of entries <= -2."""
    if isinstance(x, Slope):
        if x.is_inf:
            raise ValueError("not of the form -1/r with r in (0,1)")
        x = x.as_fraction()
    if x >= -1:
        raise ValueError("not of the form -1/r with r in (0,1)")
    n, d = x.numerator, x.denominator
    out = []
    while True:
        if n % d == 0:
            out.append(n // d)
            return tuple(out)
        a = n // d  # floor
        out.append(a)
        # remainder 1/(a - x) = -d/(n - a*d), normalized to positive denominator
        n, d = -d, n - a * d


def ncf_eval(entries) -> Slope:
    """Right-to-left evaluation; the empty sequence gives the infinite slope."""
    n = d = None
    for a in reversed(tuple(entries)):
        if n is None:
            n, d = a, 1
        else:
            if n == 0:
                raise ValueError("intermediate zero denominator in evaluation")
            n, d = a * n - d, n
    if n is None:
        return INF
    return Slope(n, d)


def convergents(x: Slope | Fraction) -> Convergents:
    """Convergents (p, q, u, v) of x = -q/p < -1, with p*v - q*u = 1."""
    entries = expand(x)
    f = x.as_fraction() if isinstance(x, Slope) else Fraction(x)
    q, p = -f.numerator, f.denominator
    head = entries[:-1]
    if not head:
        u, v = 0, 1
    else:
        mvu = ncf_eval(head).as_fraction()  # equals -v/u
        v, u = -mvu.numerator, mvu.denominator
    assert p * v - q * u == 1
    return Convergents(p, q, u, v)


def reverse_shift(entries) -> tuple[int, ...]:
    """[a_m, ..., a_1, a_0 + 1] (derived form; last entry may be -1)."""
    t = tuple(entries)
    if not t:
        raise ValueError("reverse_shift needs a non-empty expansion")
    if any(a > -2 for a in t):
        raise ValueError("reverse_shift needs a canonical expansion")
    rev = t[::-1]
    return rev[:-1] + (rev[-1] + 1,)


def tight_count(r: Fraction) -> int:
    """|prod (a_k + 1)| over the expansion of -1/r, for r in (0, 1).

    This is the number of tight contact structures contributed by a singular
    fiber with normalized invariant r.
    """
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("invariant must lie in (0, 1)")
    prod = 1
    for a in expand(-1 / r):
        prod *= a + 1
    return abs(prod)


def solid_torus_count(s: Slope | Fraction) -> int:
    """Number of tight contact structures on a solid torus with boundary slope s.

    For s = -1 the torus is a standard neighborhood and the count is 1; for
    rational s < -1 with expansion [b_0, ..., b_m] the count is
    |(b_0 + 1) ... (b_{m-1} + 1) * b_m| (last factor unshifted).
    """
    f = s.as_fraction() if isinstance(s, Slope) else Fraction(s)
    if f > -1:
        raise ValueError("boundary slope must be <= -1 in these coordinates")
    if f == -1:
        return 1
    entries = expand(f)
    prod = entries[-1]
    for b in entries[:-1]:
        prod *= b + 1
    return abs(prod)
