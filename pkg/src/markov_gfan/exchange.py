"""B-invariant exchange matrices and the raw c/g-vector recursion.

The raw recursion works on unscaled vectors with exact rationals and serves
as the brute-force reference for the matrix-free recursion in
:mod:`markov_gfan.pattern`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterator, Sequence

from .errors import ConstraintViolation, IrrationalRatio, NonIntegralCoordinate, NonPositive, NonReduced
from .vectors import Matrix3, ModVec, mat

__all__ = [
    "SignPattern",
    "ExchangeMatrix",
    "validate",
    "markov",
    "integer2",
    "matrix_mutate",
    "RawPatternState",
    "raw_initial",
    "raw_step",
    "raw_eval",
    "iter_raw_states",
    "to_modified",
    "rational_sqrt",
    "c_column_signs",
]


class SignPattern(Enum):
    """The two sign shapes of a B-invariant matrix.

    ``CYCLIC_A`` has positive entries at (1,3), (2,1), (3,2);
    ``CYCLIC_B`` is its negative.
    """

    CYCLIC_A = "CyclicA"
    CYCLIC_B = "CyclicB"

    @property
    def sign(self) -> int:
        return 1 if self is SignPattern.CYCLIC_A else -1

    def entry_sign(self, i: int, j: int) -> int:
        """Sign of the (i, j) entry of the initial matrix (1-based)."""
        return self.sign * _CYCLIC_SHAPE[i - 1][j - 1]

    @classmethod
    def from_sign(cls, sign: int) -> "SignPattern":
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        return cls.CYCLIC_A if sign == 1 else cls.CYCLIC_B

    @classmethod
    def parse(cls, text: str) -> "SignPattern":
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ValueError(f"unknown sign pattern {text!r}")


_CYCLIC_SHAPE = ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("matrix parameters must be exact (int, Fraction or 'n/d' string)")
    return Fraction(x)


@dataclass(frozen=True)
class ExchangeMatrix:
    p: Fraction
    pp: Fraction
    q: Fraction
    qp: Fraction
    r: Fraction
    rp: Fraction
    sign: int = 1

    @property
    def entries(self) -> Matrix3:
        p, pp, q, qp, r, rp = self.p, self.pp, self.q, self.qp, self.r, self.rp
        s = self.sign
        return mat([[0, -s * pp, s * r], [s * p, 0, -s * qp], [-s * rp, s * q, 0]])

    @property
    def D(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.p * self.rp, self.pp * self.rp, self.p * self.r)

    @property
    def pattern(self) -> SignPattern:
        return SignPattern.from_sign(self.sign)

    @property
    def params(self) -> tuple[Fraction, ...]:
        return (self.p, self.pp, self.q, self.qp, self.r, self.rp)

    def sqrt_ratios(self) -> tuple[tuple[Fraction, ...], ...]:
        """Matrix of sqrt(d_i / d_j); raises IrrationalRatio if any is irrational."""
        d = self.D
        return tuple(tuple(_norm(rational_sqrt(d[i] / d[j])) for j in range(3)) for i in range(3))

    def to_json(self) -> dict:
        names = ("p", "pp", "q", "qp", "r", "rp")
        out: dict = {n: str(v) for n, v in zip(names, self.params)}
        out["sign"] = self.sign
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ExchangeMatrix":
        names = ("p", "pp", "q", "qp", "r", "rp")
        return validate(*(Fraction(str(data[n])) for n in names), sign=int(data.get("sign", 1)))


def validate(p, pp, q, qp, r, rp, sign: int = 1) -> ExchangeMatrix:
    """Build an :class:`ExchangeMatrix`, checking the defining identities."""
    vals = tuple(_exact(x) for x in (p, pp, q, qp, r, rp))
    names = ("p", "pp", "q", "qp", "r", "rp")
    for n, v in zip(names, vals):
        if v <= 0:
            raise NonPositive(f"parameter {n}={v} must be positive")
    if sign not in (1, -1):
        raise ConstraintViolation(f"sign must be +1 or -1, got {sign!r}")
    p, pp, q, qp, r, rp = vals
    for a, b, label in ((p, pp, "p*pp"), (q, qp, "q*qp"), (r, rp, "r*rp")):
        if a * b != 4:
            raise ConstraintViolation(f"{label} = {a * b}, expected 4")
    if p * q * r != pp * qp * rp:
        raise ConstraintViolation(f"p*q*r = {p * q * r} differs from pp*qp*rp = {pp * qp * rp}")
    return ExchangeMatrix(p, pp, q, qp, r, rp, sign)


def markov(sign: int = 1) -> ExchangeMatrix:
    return validate(2, 2, 2, 2, 2, 2, sign=sign)


def integer2(sign: int = 1) -> ExchangeMatrix:
    """The non-skew-symmetric integer instance with D = diag(1, 4, 4)."""
    return validate(1, 4, 2, 2, 4, 1, sign=sign)


def _norm(x):
    """Exact value as int when integral, Fraction otherwise (ints are much faster)."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _norm_matrix(rows):
    return tuple(tuple(_norm(x) for x in row) for row in rows)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def matrix_mutate(B, k: int) -> Matrix3:
    """Fomin-Zelevinsky mutation of a 3x3 matrix at index k (1-based)."""
    b = _norm_matrix(B.entries if isinstance(B, ExchangeMatrix) else B)
    return _mutate(b, k)


def _mutate(b, k: int):
    k -= 1
    out = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + _sgn(b[i][k]) * max(b[i][k] * b[k][j], 0)
    return tuple(tuple(row) for row in out)


@dataclass(frozen=True)
class RawPatternState:
    """Unscaled c- and g-vectors at a reduced sequence.

    ``C[i][j]`` is coordinate i of the column c_j (0-based storage).
    """

    matrix: ExchangeMatrix
    seq: tuple[int, ...]
    Bw: Matrix3
    C: Matrix3
    G: Matrix3
    B0: Matrix3

    def c_column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.C[i][j - 1] for i in range(3))

    def g_column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.G[i][j - 1] for i in range(3))


def raw_initial(B: ExchangeMatrix) -> RawPatternState:
    one = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    b = _norm_matrix(B.entries)
    return RawPatternState(B, (), b, one, one, b)


def raw_step(state: RawPatternState, k: int) -> RawPatternState:
    if k not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {k!r}")
    if state.seq and state.seq[-1] == k:
        raise NonReduced(f"index {k} repeated at the end of {state.seq}")
    b, C, G = state.Bw, state.C, state.G
    b0 = state.B0
    kk = k - 1
    newC = [list(row) for row in C]
    newG = [list(row) for row in G]
    for i in range(3):
        cik = C[i][kk]
        for j in range(3):
            if j == kk:
                newC[i][j] = -cik
            else:
                newC[i][j] = C[i][j] + cik * max(b[kk][j], 0) + max(-cik, 0) * b[kk][j]
        # only column k of G changes
        acc = -G[i][kk]
        for l in range(3):
            acc += G[i][l] * max(-b[l][kk], 0)
            acc -= max(-C[l][kk], 0) * b0[i][l]
        newG[i][kk] = acc
    return RawPatternState(
        state.matrix,
        state.seq + (k,),
        _mutate(b, k),
        tuple(tuple(r) for r in newC),
        tuple(tuple(r) for r in newG),
        b0,
    )


def raw_eval(B: ExchangeMatrix, seq: Sequence[int]) -> RawPatternState:
    state = raw_initial(B)
    for k in seq:
        state = raw_step(state, k)
    return state


def iter_raw_states(B: ExchangeMatrix, depth: int) -> Iterator[RawPatternState]:
    """Depth-first sweep over all reduced sequences of length <= depth."""
    stack = [raw_initial(B)]
    while stack:
        state = stack.pop()
        yield state
        if len(state.seq) < depth:
            for k in (3, 2, 1):
                if not state.seq or state.seq[-1] != k:
                    stack.append(raw_step(state, k))


def rational_sqrt(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x < 0:
        raise IrrationalRatio(f"negative ratio {x}")
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise IrrationalRatio(f"{x} is not the square of a rational")
    return Fraction(rn, rd)


def _scale(M: Matrix3, ratios) -> tuple[ModVec, ModVec, ModVec]:
    cols = []
    for j in range(3):
        coords = []
        for i in range(3):
            v = M[i][j] * ratios[i][j]
            if not isinstance(v, int):
                if v.denominator != 1:
                    raise NonIntegralCoordinate(f"modified coordinate {v} at ({i + 1},{j + 1})")
                v = v.numerator
            coords.append(v)
        cols.append(ModVec(*coords))
    return tuple(cols)


def to_modified(state: RawPatternState) -> tuple[tuple[ModVec, ...], tuple[ModVec, ...]]:
    """Modified (c_1, c_2, c_3) and (g_1, g_2, g_3) in raw index order.

    Coordinate i of c~_j is c_ij * sqrt(d_i / d_j); same for g.
    """
    ratios = state.matrix.sqrt_ratios()
    return _scale(state.C, ratios), _scale(state.G, ratios)


def c_column_signs(state: RawPatternState) -> tuple[int, int, int]:
    """Sign of each c-column; raises ValueError if a column is not sign-coherent."""
    out = []
    for j in range(1, 4):
        col = state.c_column(j)
        if all(x >= 0 for x in col) and any(x > 0 for x in col):
            out.append(1)
        elif all(x <= 0 for x in col) and any(x < 0 for x in col):
            out.append(-1)
        else:
            raise ValueError(f"c-column {j} of {state.seq} is not sign-coherent: {col}")
    return tuple(out)
