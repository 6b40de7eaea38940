"""Plane-field invariant c1^2 - 3*sigma - 2*chi from a framed link description.

The 4-manifold is a handlebody on the 4-ball with one 2-handle per link
component, so chi = 1 + m.  The linking matrix L (framings on the diagonal)
presents the intersection form; a rotation vector rot represents the first
Chern class, and c1^2 = rot^T L^{-1} rot whenever rot lies in the rational
column span of L (the value does not depend on the chosen solution).  All
linear algebra is exact over the rationals: the signature comes from a
congruence diagonalization, never from numerical eigenvalues.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SurgeryDiagram:
    linking: tuple[tuple[int, ...], ...]
    rot: tuple[int, ...]

    def __post_init__(self):
        m = len(self.linking)
        if any(len(row) != m for row in self.linking):
            raise ValueError("linking matrix must be square")
        if any(self.linking[i][j] != self.linking[j][i] for i in range(m) for j in range(m)):
            raise ValueError("linking matrix must be symmetric")
        if len(self.rot) != m:
            raise ValueError("rotation vector length must match the matrix")

    @classmethod
    def from_lists(cls, linking, rot) -> "SurgeryDiagram":
        return cls(tuple(tuple(int(x) for x in row) for row in linking),
                   tuple(int(x) for x in rot))


def signature(linking) -> int:
    """Signature of a symmetric integer matrix by exact congruence reduction."""
    a = [[Fraction(x) for x in row] for row in linking]
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("matrix must be square")
    sig = 0
    k = 0
    while k < m:
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, m) if a[i][i] != 0), None)
            if pivot is not None:
                # symmetric swap of rows/columns k and pivot
                a[k], a[pivot] = a[pivot], a[k]
                for row in a:
                    row[k], row[pivot] = row[pivot], row[k]
            else:
                off = next(
                    ((i, j) for i in range(k, m) for j in range(i + 1, m) if a[i][j] != 0),
                    None,
                )
                if off is None:
                    break  # remaining block is zero, contributes nothing
                i, j = off
                # row/column addition creates a nonzero diagonal entry at (i, i)
                for col in range(m):
                    a[i][col] += a[j][col]
                for row in a:
                    row[i] += row[j]
                continue
        piv = a[k][k]
        sig += 1 if piv > 0 else -1
        for i in range(k + 1, m):
            f = a[i][k] / piv
            if f:
                for j in range(k, m):
                    a[i][j] -= f * a[k][j]
        for j in range(k + 1, m):
            a[k][j] = Fraction(0)
            a[j][k] = Fraction(0)
        k += 1
    return sig


def _solve(linking, rhs) -> list[Fraction]:
    """One rational solution of L x = rhs; raises when rhs is outside the span."""
    m = len(linking)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(linking)]
    pivots = []
    row = 0
    for col in range(m):
        pivot = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, m):
        if aug[r][m] != 0:
            raise ValueError("c1 not liftable")
    x = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        x[col] = aug[r][m]
    return x


def c1_squared(diagram: SurgeryDiagram) -> Fraction:
    """rot^T L^{-1} rot, well-defined whenever rot lies in the span of L."""
    if not diagram.rot:
        return Fraction(0)
    x = _solve(diagram.linking, diagram.rot)
    return sum((Fraction(r) * xi for r, xi in zip(diagram.rot, x)), Fraction(0))


def theta(diagram: SurgeryDiagram) -> Fraction:
    """c1^2 - 3*sigma - 2*chi with chi = 1 + (number of link components)."""
    m = len(diagram.linking)
    return c1_squared(diagram) - 3 * signature(diagram.linking) - 2 * (1 + m)
