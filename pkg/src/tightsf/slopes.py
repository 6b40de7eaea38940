"""Exact slopes on a torus and unimodular integer matrix actions.

A slope is an isotopy class of essential curves on a torus: a point of the
projective line over Z, written p/q with gcd(|p|, q) = 1 and q >= 0, or the
infinite slope 1/0.  The slope p/q is the line through the column vector
(q, p); a matrix [[a, b], [c, d]] acts on column vectors, so it sends p/q to
the slope (c*q + d*p) / (a*q + b*p).  Lines are unoriented, so negating a
vector gives the same slope.

Everything here is arbitrary-precision integer arithmetic; no floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


class Slope:
    """Reduced rational slope num/den with den >= 0; den == 0 encodes infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise ValueError("slope 0/0 is undefined")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(abs(num), den)
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def vec(self) -> tuple[int, int]:
        """The line vector (den, num); (0, 1) for the infinite slope."""
        return (self.den, self.num)

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Slope":
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q', a bare integer, or 'inf'."""
        t = text.strip()
        if t in ("inf", "Inf", "INF", "1/0"):
            return INF
        if "/" in t:
            p, q = t.split("/", 1)
            return cls(int(p), int(q))
        return cls(int(t))

    def __neg__(self) -> "Slope":
        return Slope(-self.num, self.den) if self.den else self

    def __eq__(self, other) -> bool:
        if isinstance(other, Slope):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den != 0 and self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self.num}, {self.den})"


INF = Slope(1, 0)


class UniMat:
    """Integer 2x2 matrix [[a, b], [c, d]] with determinant +1 or -1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c not in (1, -1):
            raise ValueError(f"matrix [[{a},{b}],[{c},{d}]] is not unimodular")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("UniMat is immutable")

    @classmethod
    def identity(cls) -> "UniMat":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "UniMat":
        s = self.det  # +-1, so the integer adjugate is the inverse up to sign
        return UniMat(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __matmul__(self, other: "UniMat") -> "UniMat":
        return UniMat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, s: Slope) -> Slope:
        """Image of the slope under the column-vector action, (x, y) read as y/x."""
        den, num = s.vec()
        x = self.a * den + self.b * num
        y = self.c * den + self.d * num
        assert x != 0 or y != 0  # unimodular matrices kill no line
        return Slope(y, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniMat):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self) -> str:
        return f"UniMat({self.a}, {self.b}, {self.c}, {self.d})"


def slope_vec(s: Slope) -> tuple[int, int]:
    """(den, num) of a slope; the infinite slope gives (0, 1)."""
    return s.vec()


def apply_mat(m: UniMat, s: Slope) -> Slope:
    return m.apply(s)
