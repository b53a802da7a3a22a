"""Calkin-Wilf style coefficients and coprime parameterizations.

Inside a branch rooted at ``w`` every g-vector at ``wX`` is
``g_fixed + a*vSK(w) + b*vTK(w)`` and every c-vector is
``+-c_fixed + a*xSK(w) + b*xTK(w)``.  The pairs (a, b) depend only on the
word X and on the role, and obey a recursion read from the first letter of
X (letters are prepended).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import InvalidParams
from .exchange import SignPattern
from .pattern import EigenBasis, fixed_g
from .vectors import FIXED_C, ModVec, unit
from .walk import Walk, initial_kst

Pair = tuple[int, int]

INITIAL_Q: dict[str, Pair] = {"K": (1, 1), "S": (0, 1), "T": (1, 0)}
INITIAL_P: dict[str, Pair] = {"K": (1, -1), "S": (0, 1), "T": (-1, 0)}


@dataclass(frozen=True)
class CoeffPair:
    a: int
    b: int
    side: str  # "Q" (g-side) or "P" (c-side)
    role: str

    @property
    def pair(self) -> Pair:
        return (self.a, self.b)


def coeff_step(pair: Pair, letter: str, side: str = "Q") -> Pair:
    """Pair for M'X from the pair for X, where M' = ``letter``."""
    a, b = pair
    if letter == "S":
        return (a + b, b)
    if letter != "T":
        raise ValueError(f"letter must be 'S' or 'T', got {letter!r}")
    if side == "Q":
        return (b, a + b)
    return (-b, -a - b)


def coeffs(role: str, word: str, side: str = "Q") -> CoeffPair:
    pair = (INITIAL_Q if side == "Q" else INITIAL_P)[role]
    for letter in reversed(word):
        pair = coeff_step(pair, letter, side)
    return CoeffPair(pair[0], pair[1], side, role)


def vector_from_coeffs(root: EigenBasis, role: str, pair, side: str = "Q") -> ModVec:
    """Rebuild the vector at rootX from its coefficient pair."""
    a, b = pair.pair if isinstance(pair, CoeffPair) else pair
    if side == "Q":
        return root.gF + root.vSK * a + root.vTK * b
    base = -root.cF if role == "K" else root.cF
    return base + root.xSK * a + root.xTK * b


def enumerate_coprime(limit: int) -> dict[Pair, str]:
    """Every K-pair with a + b <= limit reachable from (1, 1), with its word."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    out: dict[Pair, str] = {}
    stack = [((1, 1), "")]
    while stack:
        pair, word = stack.pop()
        if pair in out:
            raise AssertionError(f"pair {pair} reached twice ({out[pair]!r}, {word!r})")
        out[pair] = word
        for letter in "ST":
            child = coeff_step(pair, letter)
            if sum(child) <= limit:
                stack.append((child, letter + word))
    return out


def word_for_pair(a: int, b: int) -> str:
    """Inverse of :func:`enumerate_coprime` for one coprime pair."""
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise InvalidParams(f"({a}, {b}) is not a coprime pair of positive integers")
    word = []
    while (a, b) != (1, 1):
        if a > b:
            word.append("S")
            a -= b
        else:
            word.append("T")
            a, b = b - a, a
    return "".join(word)


# ---- g-vectors ----

def _kst_units(pattern: SignPattern, i: int):
    k, s, t = initial_kst(pattern, i)
    return unit(k), unit(s), unit(t)


def valid_g_params(a: int, b: int) -> bool:
    if (a, b) in ((1, 0), (0, -1)):
        return True
    return a >= 1 and b >= 1 and gcd(a, b) == 1


def g_from_coprime(pattern: SignPattern, i: int, a: int, b: int) -> ModVec:
    """g_fixed_i + a*(e~k0 - e~t0) + b*(e~s0 - e~k0)."""
    if not valid_g_params(a, b):
        raise InvalidParams(f"(a, b) = ({a}, {b}) is not an admissible g-parameter")
    ek, es, et = _kst_units(pattern, i)
    return fixed_g(pattern, i) + (ek - et) * a + (es - ek) * b


@dataclass(frozen=True)
class GClass:
    """Result of :func:`is_g_vector`; ``subtree`` is None for non-g-vectors."""

    subtree: Optional[int]
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def is_g(self) -> bool:
        return self.subtree is not None


NOT_A_G_VECTOR = GClass(None)


def g_params(pattern: SignPattern, i: int, v) -> Optional[Pair]:
    """(a, b) with v = g_from_coprime(i, a, b) as an affine identity, or None off the plane."""
    if sum(v) != 1:
        return None
    k, s, t = initial_kst(pattern, i)
    return (1 - v[t - 1], v[s - 1] - 1)


def is_g_vector(v, pattern: SignPattern) -> GClass:
    """Classify v against the three subtrees, coprime pairs first."""
    hits = []
    for i in (1, 2, 3):
        ab = g_params(pattern, i, v)
        if ab is not None and valid_g_params(*ab):
            hits.append(GClass(i, *ab))
    if not hits:
        return NOT_A_G_VECTOR
    # e~_{t0} of one subtree is e~_{s0} of another; report the (1, 0) reading
    hits.sort(key=lambda h: (h.b == -1, h.subtree))
    return hits[0]


def walk_for_g_params(pattern: SignPattern, i: int, a: int, b: int) -> Optional[Walk]:
    """The walk w with g_K^w = g_from_coprime(i, a, b); None for (1,0) and (0,-1)."""
    if (a, b) in ((1, 0), (0, -1)):
        return None
    if not valid_g_params(a, b):
        raise InvalidParams(f"({a}, {b}) is not an admissible g-parameter")
    if a == 1:
        return Walk.from_word(pattern, i, "S" * (b - 1))
    # a = qS + qT and b = n*a + qS for the root [i]S^nT
    n, q_s = divmod(b, a)
    return Walk.from_word(pattern, i, "S" * n + "T" + word_for_pair(q_s, a - q_s))


# ---- c-vectors ----

_C_EXCEPTIONS = {(1, 0, -1), (-1, 0, 1), (1, 1, 0), (-1, -1, 0)}


def valid_c_params(eps: int, a: int, b: int) -> bool:
    """Parameters realized by some c-vector of the subtree.

    (-; 1, 1) is included: it gives e~_{k0}, the K-vector at [i]TT.
    """
    if eps not in (1, -1):
        return False
    if (eps, a, b) in _C_EXCEPTIONS:
        return True
    return a * b >= 1 and gcd(abs(a), abs(b)) == 1


def c_from_params(pattern: SignPattern, i: int, eps: int, a: int, b: int) -> ModVec:
    """eps*c_fixed + a*(e~k0 + e~t0) + b*(e~k0 + e~s0)."""
    if not valid_c_params(eps, a, b):
        raise InvalidParams(f"(eps; a, b) = ({eps}; {a}, {b}) is not an admissible c-parameter")
    ek, es, et = _kst_units(pattern, i)
    return FIXED_C * eps + (ek + et) * a + (ek + es) * b


def c_params(pattern: SignPattern, i: int, v) -> Optional[tuple[int, int, int]]:
    """Solve v = eps*c_fixed + a*x_t + b*x_s; None unless eps is +-1."""
    k, s, t = initial_kst(pattern, i)
    vk, vs, vt = v[k - 1], v[s - 1], v[t - 1]
    eps = vt + vs - vk
    if eps not in (1, -1):
        return None
    return (eps, vt - eps, vs - eps)
