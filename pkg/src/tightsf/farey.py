"""The Farey tessellation on Q u {inf} and the bypass slope update.

Two slopes are joined by an edge exactly when their line vectors form an
integral basis of Z^2.  The boundary circle is ordered counterclockwise as the
increasing cyclic order on R u {inf}: ..., -1, 0, 1, ..., inf, ..., -2, -1, ...
A bypass attached along a ruling curve of slope r to a convex torus with
dividing slope s moves the dividing slope to the point of the arc ([r, s] for
a front attachment, [s, r] for a back attachment) closest to r among slopes
with an edge to s; when r itself has an edge to s the result is r.

Whether this "front" agrees with any particular picture's front is a global
orientation choice; swapping the orientation of the circle swaps front and
back.  Every downstream count is insensitive to the choice.
"""
from __future__ import annotations

from dataclasses import dataclass

from .slopes import INF, Slope, UniMat

FRONT = "front"
BACK = "back"


def farey_edge(a: Slope, b: Slope) -> bool:
    """True when the line vectors of a and b span Z^2."""
    da, na = a.vec()
    db, nb = b.vec()
    return abs(da * nb - db * na) == 1


def _cross(p: tuple[int, int], q: tuple[int, int]) -> int:
    return p[0] * q[1] - q[0] * p[1]


def _ccw(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
    # Strictly counterclockwise triple: starting at a and moving in the
    # increasing direction we meet b before c.  Vectors are (den, num) with
    # den >= 0, so the sign test below realizes the stated cyclic order.
    return _cross(a, b) * _cross(b, c) * _cross(c, a) < 0


@dataclass(frozen=True)
class Arc:
    """Closed arc between two distinct slopes.

    side FRONT is the arc traversed counterclockwise from start to end; side
    BACK is the arc from end to start.
    """

    start: Slope
    end: Slope
    side: str = FRONT

    def __post_init__(self):
        if self.start == self.end:
            raise ValueError("arc endpoints must be distinct")
        if self.side not in (FRONT, BACK):
            raise ValueError(f"unknown side {self.side!r}")


def arc_contains(arc: Arc, x: Slope) -> bool:
    if x == arc.start or x == arc.end:
        return True
    a, b = (arc.start, arc.end) if arc.side == FRONT else (arc.end, arc.start)
    return _ccw(a.vec(), x.vec(), b.vec())


def _bezout(x: int, y: int) -> tuple[int, int]:
    # (alpha, beta) with alpha*x + beta*y == 1 for coprime x, y
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def bypass_attach(dividing: Slope, ruling: Slope, side: str = FRONT) -> Slope:
    """Dividing slope after a bypass attachment along a ruling curve.

    Conjugates by an orientation-preserving unimodular matrix sending the
    dividing slope to infinity, where the neighbors are the integers and
    "closest to the ruling inside the arc" is a ceiling (front) or floor
    (back), then conjugates back.
    """
    if side not in (FRONT, BACK):
        raise ValueError(f"unknown side {side!r}")
    if dividing == ruling:
        raise ValueError("dividing and ruling slopes must differ")
    xs, ys = dividing.vec()
    alpha, beta = _bezout(xs, ys)
    m = UniMat(ys, -xs, alpha, beta)  # det +1, sends dividing to inf
    rx, ry = ruling.vec()
    ix = ys * rx - xs * ry
    iy = alpha * rx + beta * ry
    assert ix != 0  # only the dividing slope maps to inf
    if side == FRONT:
        k = -((-iy) // ix) if ix > 0 else -(iy // -ix)  # ceil(iy/ix)
    else:
        k = iy // ix if ix > 0 else (-iy) // (-ix)  # floor(iy/ix)
    return m.inverse().apply(Slope(k, 1))


def bypass_oracle(
    dividing: Slope, ruling: Slope, side: str = FRONT, denom_bound: int | None = None
) -> Slope:
    """Brute-force bypass computation, independent of bypass_attach.

    Enumerates all Farey neighbors of the dividing slope with denominator at
    most a bound, keeps those inside the attachment arc, ranks them by arc
    position, and doubles the bound until the winner survives one further
    doubling.
    """
    if side not in (FRONT, BACK):
        raise ValueError(f"unknown side {side!r}")
    if dividing == ruling:
        raise ValueError("dividing and ruling slopes must differ")
    xs, ys = dividing.vec()
    rvec = ruling.vec()
    dvec = (xs, ys)

    def in_arc(c: tuple[int, int]) -> bool:
        if c == rvec:
            return True
        if side == FRONT:
            return _ccw(rvec, c, dvec)
        return _ccw(dvec, c, rvec)

    def better(c: tuple[int, int], best: tuple[int, int] | None) -> bool:
        if best is None:
            return True
        if side == FRONT:
            return _ccw(rvec, c, best)
        return _ccw(best, c, rvec)

    def best_upto(bound: int) -> tuple[int, int] | None:
        best = None
        if xs == 1:
            # the infinite slope is a neighbor of any integer slope
            c = (0, 1)
            if in_arc(c) and better(c, best):
                best = c
        if xs == 0:
            # neighbors of inf are the integers; scan a window around the ruling
            center = rvec[1] // rvec[0] if rvec[0] else 0
            for a in range(center - bound, center + bound + 1):
                c = (1, a)
                if c == rvec:
                    return c
                if in_arc(c) and better(c, best):
                    best = c
            return best
        for b in range(1, bound + 1):
            base = b * ys
            for eps in (1, -1):
                t = base - eps
                if t % xs == 0:
                    c = (b, t // xs)
                    if c == rvec:
                        return c
                    if in_arc(c) and better(c, best):
                        best = c
        return best

    bound = max(1, dividing.den + ruling.den)
    if denom_bound is not None:
        if denom_bound < dividing.den + ruling.den:
            raise ValueError("denom_bound below den(dividing) + den(ruling)")
        bound = denom_bound
    prev = best_upto(bound)
    for _ in range(40):
        bound *= 2
        cur = best_upto(bound)
        if cur is not None and cur == prev:
            return Slope(cur[1], cur[0])
        prev = cur
    raise AssertionError("bypass oracle failed to stabilize")
