"""Linear maps between admissible sub-patterns (c-side and g-side).

Every map is obtained by solving for the unique linear map that carries
the role triple (K, S, T) at one walk to the role triple at another.  The
closed-form matrices below are checked against that construction in the
test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BasisMismatch, NotAdmissible, SingularTriple
from .exchange import ExchangeMatrix, SignPattern
from .pattern import PatternState, eval_walk, step
from .vectors import Matrix3, ModVec, det3, from_columns, identity3, inverse3, mat, matmul, matvec
from .walk import Admissibility, Kind, Walk, admissible, initial_kst

__all__ = [
    "Basis",
    "LinMap",
    "MOD_STD",
    "kst_basis",
    "raw_basis",
    "map_between",
    "psi_il",
    "phi_il",
    "psi_branch_generator",
    "branch_generator",
    "FractalReport",
    "verify_fractal",
    "verify_relations",
    "random_walk",
    "sample_admissible_pairs",
]


@dataclass(frozen=True)
class Basis:
    """Coordinate convention of a :class:`LinMap`.

    ``ModKST`` orders the modified basis as (e~_{k0}, e~_{s0}, e~_{t0}) for
    a subtree ``i``; ``RawStd`` uses the unscaled basis of ``matrix``.
    """

    kind: str
    i: Optional[int] = None
    pattern: Optional[SignPattern] = None
    matrix: Optional[ExchangeMatrix] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("RawStd", "ModStd", "ModKST"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.kind == "ModKST" and (self.i is None or self.pattern is None):
            raise ValueError("ModKST needs a subtree index and a sign pattern")
        if self.kind == "RawStd" and self.matrix is None:
            raise ValueError("RawStd needs the exchange matrix")

    @property
    def tag(self) -> str:
        if self.kind == "ModKST":
            return f"ModKST({self.i})"
        return self.kind

    # x_std = to_std @ x_here
    def _to_std(self) -> Matrix3:
        if self.kind == "ModStd":
            return identity3()
        if self.kind == "ModKST":
            kst = initial_kst(self.pattern, self.i)
            return mat([[1 if kst[c] == r + 1 else 0 for c in range(3)] for r in range(3)])
        # raw coordinate j = modified coordinate j / sqrt(d_j); scale-free ratios suffice
        ratios = self.matrix.sqrt_ratios()
        return mat([[ratios[r][0] if r == c else 0 for c in range(3)] for r in range(3)])


MOD_STD = Basis("ModStd")


def kst_basis(pattern: SignPattern, i: int) -> Basis:
    return Basis("ModKST", i, pattern)


def raw_basis(matrix: ExchangeMatrix) -> Basis:
    return Basis("RawStd", matrix=matrix)


@dataclass(frozen=True)
class LinMap:
    m: Matrix3
    basis: Basis = MOD_STD

    @classmethod
    def of(cls, rows, basis: Basis = MOD_STD) -> "LinMap":
        return cls(mat(rows), basis)

    def to(self, target: Basis) -> "LinMap":
        if target == self.basis:
            return self
        a = self.basis._to_std()
        std = matmul(matmul(a, self.m), inverse3(a))
        b = target._to_std()
        return LinMap(matmul(matmul(inverse3(b), std), b), target)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if not isinstance(other, LinMap):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatch(f"cannot compose maps in {self.basis.tag} and {other.basis.tag}")
        return LinMap(matmul(self.m, other.m), self.basis)

    def __call__(self, v: Sequence) -> ModVec:
        """Apply to a vector in ModStd coordinates; the result must be integral."""
        if self.basis.kind != "ModStd":
            raise BasisMismatch(f"vectors are in ModStd coordinates, map is in {self.basis.tag}")
        out = matvec(self.m, v)
        return ModVec(*(_as_int(x) for x in out))

    def inverse(self) -> "LinMap":
        return LinMap(inverse3(self.m), self.basis)

    def power(self, n: int) -> "LinMap":
        base = self if n >= 0 else self.inverse()
        out = LinMap(identity3(), self.basis)
        for _ in range(abs(n)):
            out = out @ base
        return out

    @property
    def det(self) -> Fraction:
        return det3(self.m)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.m for x in row)

    def rows(self) -> list[list[int | Fraction]]:
        return [[_as_int(x) if x.denominator == 1 else x for x in row] for row in self.m]

    def to_json(self) -> dict:
        return {"basis": self.basis.tag, "rows": [[str(x) for x in row] for row in self.m]}


def _as_int(x):
    x = Fraction(x)
    if x.denominator != 1:
        from .errors import NonIntegralCoordinate

        raise NonIntegralCoordinate(f"non-integral value {x}")
    return x.numerator


def _solve_map(src: Sequence[ModVec], dst: Sequence[ModVec]) -> LinMap:
    a = from_columns(src)
    if det3(a) == 0:
        raise SingularTriple(f"triple {src} is not a basis")
    return LinMap(matmul(from_columns(dst), inverse3(a)), MOD_STD)


def _state(w) -> PatternState:
    return w if isinstance(w, PatternState) else eval_walk(w)


def map_between(w, u, side: str = "G") -> LinMap:
    """The map sending the role triple at ``w`` to the one at ``u`` (ModStd).

    ``w`` and ``u`` may be walks or already evaluated states.
    """
    sw, su = _state(w), _state(u)
    if sw.walk.pattern != su.walk.pattern:
        raise NotAdmissible("walks use different sign patterns")
    if admissible(sw.walk, su.walk) is Admissibility.NO:
        raise NotAdmissible(f"{sw.walk} and {su.walk} are not admissible")
    if side not in ("C", "G"):
        raise ValueError("side must be 'C' or 'G'")
    return _solve_map(sw.roles(side), su.roles(side))


def psi_il(pattern: SignPattern, i: int, l: int) -> LinMap:
    """Closed form of the g-side map from [i]S^mX to [i]S^{m+l}X."""
    return LinMap.of([[-l + 1, -l, 0], [l, l + 1, 0], [0, 0, 1]], kst_basis(pattern, i))


def phi_il(pattern: SignPattern, i: int, l: int) -> LinMap:
    return LinMap.of([[l + 1, -l, 0], [l, -l + 1, 0], [0, 0, 1]], kst_basis(pattern, i))


def psi_branch_generator(pattern: SignPattern, i: int, n: int, letter: str) -> LinMap:
    """Closed form of the g-side map from [i]S^nT to [i]S^nT.letter."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nn = n * n
    if letter == "S":
        rows = [[-nn - 2 * n + 1, -nn - n, -n], [nn + 3 * n + 2, nn + 2 * n + 2, n + 1], [-n - 2, -n - 1, 0]]
    elif letter == "T":
        rows = [[-nn - 3 * n, -nn - 2 * n, -n - 1], [nn + 4 * n + 3, nn + 3 * n + 2, n + 2], [-n - 2, -n - 1, 0]]
    else:
        raise ValueError(f"letter must be 'S' or 'T', got {letter!r}")
    return LinMap.of(rows, kst_basis(pattern, i))


def branch_generator(pattern: SignPattern, i: int, n: int, letter: str, side: str = "G") -> LinMap:
    """Triple-solve version of the generator at the branch root [i]S^nT."""
    root = Walk.from_word(pattern, i, "S" * n + "T")
    return map_between(root, root.child(letter), side)


@dataclass
class FractalReport:
    ok: bool
    checked: int = 0
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "counterexample": self.counterexample}


def verify_fractal(w: Walk, u: Walk, depth: int) -> FractalReport:
    """Check Phi(c^{wX}) = c^{uX} and Psi(g^{wX}) = g^{uX} for all |X| <= depth."""
    if admissible(w, u) is Admissibility.NO:
        raise NotAdmissible(f"{w} and {u} are not admissible")
    sw, su = eval_walk(w), eval_walk(u)
    maps = {side: map_between(sw, su, side) for side in ("C", "G")}
    checked = 0
    stack = [(sw, su, "")]
    while stack:
        a, b, x = stack.pop()
        for side in ("C", "G"):
            f = maps[side]
            for name, va, vb in zip("KST", a.roles(side), b.roles(side)):
                checked += 1
                if f(va) != vb:
                    return FractalReport(
                        False,
                        checked,
                        {"w": str(w), "u": str(u), "X": x, "side": side, "role": name},
                    )
        if len(x) < depth:
            for letter in "TS":
                stack.append((step(a, letter), step(b, letter), x + letter))
    return FractalReport(True, checked)


def random_walk(rng: random.Random, pattern: SignPattern, kind: Kind, max_len: int, i: Optional[int] = None) -> Walk:
    """A random nonempty walk of the given kind with length <= max_len."""
    i = i or rng.randint(1, 3)
    if kind is Kind.TRUNK:
        return Walk.from_word(pattern, i, "S" * rng.randint(0, max_len - 1))
    if max_len < 2:
        raise ValueError("branch walks have length at least 2")
    n = rng.randint(1, max_len - 1)
    while True:
        word = "".join(rng.choice("ST") for _ in range(n))
        if "T" in word:
            return Walk.from_word(pattern, i, word)


def sample_admissible_pairs(
    pattern: SignPattern, count: int, max_len: int, seed: int = 0
) -> list[tuple[Walk, Walk]]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        kind = rng.choice((Kind.TRUNK, Kind.BRANCH))
        pairs.append((random_walk(rng, pattern, kind, max_len), random_walk(rng, pattern, kind, max_len)))
    return pairs


def _random_word(rng: random.Random, max_len: int) -> str:
    return "".join(rng.choice("ST") for _ in range(rng.randint(0, max_len)))


def verify_relations(pattern: SignPattern, depth: int = 8, samples: int = 50, seed: int = 0) -> dict:
    """Chain rule, X-elimination and the word-product law on sampled instances.

    Returns ``{family: FractalReport}`` for the three relation families.
    """
    rng = random.Random(seed)
    reports = {}

    ok, first = True, None
    for _ in range(samples):
        kind = rng.choice((Kind.TRUNK, Kind.BRANCH))
        w0, w1, w2 = (random_walk(rng, pattern, kind, depth) for _ in range(3))
        for side in ("C", "G"):
            if map_between(w1, w2, side) @ map_between(w0, w1, side) != map_between(w0, w2, side):
                ok, first = False, first or {"walks": [str(w0), str(w1), str(w2)], "side": side}
    reports["chain_rule"] = FractalReport(ok, samples, first)

    ok, first = True, None
    for _ in range(samples):
        kind = rng.choice((Kind.TRUNK, Kind.BRANCH))
        w, u = (random_walk(rng, pattern, kind, depth // 2) for _ in range(2))
        x = _random_word(rng, depth // 2)
        for side in ("C", "G"):
            if map_between(w.extend(x), u.extend(x), side) != map_between(w, u, side):
                ok, first = False, first or {"w": str(w), "u": str(u), "X": x, "side": side}
    reports["x_elimination"] = FractalReport(ok, samples, first)

    ok, first = True, None
    for _ in range(samples):
        w = random_walk(rng, pattern, Kind.BRANCH, max(2, depth // 2))
        x, y = _random_word(rng, depth // 4 or 1), _random_word(rng, depth // 4 or 1)
        for side in ("C", "G"):
            lhs = map_between(w, w.extend(x + y), side)
            rhs = map_between(w, w.extend(x), side) @ map_between(w, w.extend(y), side)
            if lhs != rhs:
                ok, first = False, first or {"w": str(w), "X": x, "Y": y, "side": side}
    reports["word_product"] = FractalReport(ok, samples, first)
    return reports
