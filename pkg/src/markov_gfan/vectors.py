"""Integer 3-vectors in the modified basis and a few exact 3x3 helpers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix3 = tuple[tuple[Fraction, Fraction, Fraction], ...]


class ModVec(tuple):
    """Coordinates (x1, x2, x3) of x1*e~1 + x2*e~2 + x3*e~3.

    A tuple subclass, so it hashes and compares like a plain triple, with
    vector arithmetic layered on top.
    """

    __slots__ = ()

    def __new__(cls, x1, x2, x3):
        return tuple.__new__(cls, (x1, x2, x3))

    @classmethod
    def of(cls, xs: Iterable) -> "ModVec":
        a, b, c = xs
        return cls(a, b, c)

    def __add__(self, other):
        return ModVec(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def __sub__(self, other):
        return ModVec(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def __neg__(self):
        return ModVec(-self[0], -self[1], -self[2])

    def __mul__(self, k):
        return ModVec(k * self[0], k * self[1], k * self[2])

    __rmul__ = __mul__

    def total(self):
        return self[0] + self[1] + self[2]

    def primitive(self) -> "ModVec":
        """Divide by the gcd of the entries (integer vectors only)."""
        g = gcd(gcd(self[0], self[1]), self[2])
        if g == 0:
            return self
        return ModVec(self[0] // g, self[1] // g, self[2] // g)

    def __repr__(self):
        return f"ModVec{tuple(self)!r}"


def unit(j: int) -> ModVec:
    """The basis vector e~_j (1-based)."""
    return ModVec(*(1 if m == j else 0 for m in (1, 2, 3)))


FIXED_C = ModVec(1, 1, 1)


def as_int_vec(xs: Sequence) -> ModVec:
    out = []
    for x in xs:
        x = Fraction(x)
        if x.denominator != 1:
            from .errors import NonIntegralCoordinate

            raise NonIntegralCoordinate(f"non-integral coordinate {x}")
        out.append(int(x))
    return ModVec(*out)


# ---- exact 3x3 matrices (tuples of Fraction rows) ----

def mat(rows) -> Matrix3:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity3() -> Matrix3:
    return mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def from_columns(cols: Sequence[Sequence]) -> Matrix3:
    return tuple(tuple(Fraction(cols[j][i]) for j in range(3)) for i in range(3))


def matmul(a: Matrix3, b: Matrix3) -> Matrix3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def matvec(a: Matrix3, v: Sequence) -> tuple:
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def det3(a) -> Fraction:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def inverse3(a) -> Matrix3:
    """Adjugate inverse; raises ZeroDivisionError on a singular matrix."""
    d = Fraction(det3(a))
    if d == 0:
        raise ZeroDivisionError("singular 3x3 matrix")
    cof = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [x for x in range(3) if x != j]
            minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    # inverse = adj / det, adj = cofactor transpose
    return tuple(tuple(cof[j][i] / d for j in range(3)) for i in range(3))


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
