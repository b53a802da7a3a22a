"""G-fan assembly and exact geometry on the plane of coordinate sum one.

Every modified g-vector has coordinate sum 1, so each maximal G-cone is
determined by the triangle its generators span on that plane.  Fan checks
run on the integer chart (x1, x2) of those points; the chart is an affine
image of barycentric coordinates, so orientation predicates are exact and
chart independent.  Complement components are open rays on the same plane.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Union

from . import kernels
from ._parallel import pmap
from .cw import g_params, valid_g_params, walk_for_g_params
from .errors import NotInHalfSpace
from .exchange import SignPattern
from .fractal import MOD_STD, LinMap, branch_generator, psi_il
from .pattern import PatternState, eval_walk, fixed_g, seed, step
from .vectors import ModVec, cross, dot, unit
from .walk import Walk, initial_kst

__all__ = [
    "CHART_S",
    "Cone3",
    "SectionPoint",
    "SectionRay",
    "ComplementRay",
    "CheckReport",
    "UpperBound",
    "InCone",
    "OnComplementRay",
    "UnknownAtDepth",
    "section",
    "section_ray",
    "subtree_nodes",
    "enumerate_fan",
    "fan_property_check",
    "shared_face",
    "cones_meet_properly",
    "g_uniqueness_check",
    "in_region_d",
    "region_d_check",
    "upper_bound_check",
    "upper_bound_intersection",
    "separation_check",
    "phi",
    "rho",
    "complements_pointwise",
    "complements_recursive",
    "complements_agree",
    "disjointness_check",
    "locate",
]

# rational stand-in for sqrt(3); only the SVG chart uses it
CHART_S = Fraction(97, 56)


# ---- reports ----

@dataclass
class CheckReport:
    ok: bool
    checked: int = 0
    counterexample: Optional[dict] = None

    def merge(self, other: "CheckReport") -> "CheckReport":
        """AND of two reports; keeps the first counterexample."""
        return CheckReport(
            self.ok and other.ok,
            self.checked + other.checked,
            self.counterexample if self.counterexample is not None else other.counterexample,
        )

    def fail(self, **info) -> "CheckReport":
        if self.ok:
            self.ok = False
            self.counterexample = info
        return self

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "counterexample": self.counterexample}


# ---- plane section ----

@dataclass(frozen=True)
class SectionPoint:
    """A point of the plane: barycentric coordinates and chart position."""

    bary: tuple[Fraction, Fraction, Fraction]

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        x1, x2, x3 = self.bary
        return (x2 + x3 / 2, x3 * CHART_S / 2)


@dataclass(frozen=True)
class SectionRay:
    """Open ray {base + t*direction : t > 0}; ``tangent`` has coordinate sum 0."""

    base: SectionPoint
    tangent: tuple[Fraction, Fraction, Fraction]

    @property
    def direction_xy(self) -> tuple[Fraction, Fraction]:
        d1, d2, d3 = self.tangent
        return (d2 + d3 / 2, d3 * CHART_S / 2)


def section(v: Sequence) -> SectionPoint:
    """Intersection of the ray through ``v`` with the plane of sum 1."""
    total = sum(v)
    if total <= 0:
        raise NotInHalfSpace(f"{tuple(v)} has coordinate sum {total} <= 0")
    return SectionPoint(tuple(Fraction(x) / total for x in v))


def section_ray(base: Sequence, tangent: Sequence) -> SectionRay:
    if sum(tangent) != 0:
        raise ValueError(f"direction {tuple(tangent)} must have coordinate sum 0")
    if sum(base) != 1:
        raise ValueError(f"base {tuple(base)} must have coordinate sum 1")
    return SectionRay(section(base), tuple(Fraction(x) for x in tangent))


def _planar(v: Sequence) -> tuple[int, int]:
    return (v[0], v[1])


# ---- cones ----

@dataclass(frozen=True)
class Cone3:
    """C(generators), labelled by its walk and the raw indices J of the face."""

    generators: tuple[ModVec, ...]
    walk: str
    face: tuple[int, ...] = (1, 2, 3)
    trunk: bool = field(default=False, compare=False)

    @property
    def key(self) -> frozenset:
        return frozenset(self.generators)

    def planar(self) -> tuple[int, ...]:
        return tuple(x for g in self.generators for x in _planar(g))

    def to_json(self) -> dict:
        return {"walk": self.walk, "gens": [list(g) for g in self.generators]}


INITIAL_CONE = Cone3((unit(1), unit(2), unit(3)), "[]", (1, 2, 3), True)


@dataclass(frozen=True)
class _Node:
    walk: str
    kst: tuple[int, int, int]
    trunk: bool
    g_roles: tuple[ModVec, ModVec, ModVec]

    def g_raw(self) -> tuple[ModVec, ModVec, ModVec]:
        out = [None, None, None]
        for idx, vec in zip(self.kst, self.g_roles):
            out[idx - 1] = vec
        return tuple(out)


def _words(count: int) -> list[str]:
    words = [""] * count
    for q in range(1, count):
        words[q] = words[(q - 1) // 2] + ("S" if q % 2 else "T")
    return words


@lru_cache(maxsize=64)
def _subtree_nodes_cached(pattern: SignPattern, i: int, depth: int, backend: Optional[str]):
    if depth < 1:
        return ()
    st = seed(pattern, i)
    c0 = tuple(x for v in st.c_roles for x in v)
    g0 = tuple(x for v in st.g_roles for x in v)
    _, G, KST, TR = kernels.expand_tree(c0, g0, initial_kst(pattern, i), True, depth - 1, backend)
    words = _words(len(G))
    return tuple(
        _Node(f"[{i}]{w}", kst, tr, (ModVec(*g[0:3]), ModVec(*g[3:6]), ModVec(*g[6:9])))
        for w, g, kst, tr in zip(words, G, KST, TR)
    )


def subtree_nodes(pattern: SignPattern, i: int, depth: int, backend: Optional[str] = None):
    """All walks [i]X with |[i]X| <= depth, breadth first, with role-ordered g-vectors."""
    return _subtree_nodes_cached(pattern, i, depth, backend)


def enumerate_fan(pattern: SignPattern, depth: int, backend: Optional[str] = None) -> list[Cone3]:
    """Initial cone plus C(G^w) for all |w| <= depth, deduplicated by generator set."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    per_subtree = pmap(lambda i: subtree_nodes(pattern, i, depth, backend), (1, 2, 3))
    cones = [INITIAL_CONE]
    seen = {INITIAL_CONE.key}
    for nodes in per_subtree:
        for node in nodes:
            cone = Cone3(node.g_raw(), node.walk, (1, 2, 3), node.trunk)
            if cone.key not in seen:
                seen.add(cone.key)
                cones.append(cone)
    return cones


def expected_cone_count(depth: int) -> int:
    """1 + sum over levels d >= 1 of 3*2^(d-1)."""
    return 3 * 2**depth - 2


def fan_property_check(
    depth: int, pattern: SignPattern = SignPattern.CYCLIC_A, backend: Optional[str] = None
) -> CheckReport:
    """Distinct maximal cones meet only in common faces (exact triangle tests)."""
    cones = enumerate_fan(pattern, depth, backend)
    n = len(cones)
    report = CheckReport(True, n * (n - 1) // 2)
    for cone in cones:
        if _det(cone.generators) == 0:
            return report.fail(reason="degenerate cone", walk=cone.walk)
    bad = kernels.triangle_pairs([c.planar() for c in cones], backend)
    if bad:
        a, b = bad[0]
        report.fail(reason="improper intersection", cones=[cones[a].walk, cones[b].walk])
    return report


def shared_face(a: Cone3, b: Cone3) -> frozenset:
    return a.key & b.key


def cones_meet_properly(a: Cone3, b: Cone3) -> bool:
    return not kernels.triangle_pairs([a.planar(), b.planar()], "python")


def _det(cols: Sequence[Sequence]) -> int:
    (a, b, c), (d, e, f), (g, h, k) = cols
    # determinant of the matrix with these columns equals that with these rows
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


# ---- g-vector bookkeeping ----

def g_uniqueness_check(pattern: SignPattern, depth: int, backend: Optional[str] = None) -> CheckReport:
    """w -> g_K^w is injective for 1 <= |w| <= depth and avoids the unit vectors."""
    owner: dict[ModVec, str] = {unit(j): f"e~{j}" for j in (1, 2, 3)}
    report = CheckReport(True)
    for i in (1, 2, 3):
        for node in subtree_nodes(pattern, i, depth, backend):
            gk = node.g_roles[0]
            report.checked += 1
            if gk in owner:
                return report.fail(vector=list(gk), walks=[owner[gk], node.walk])
            owner[gk] = node.walk
    return report


def in_region_d(pattern: SignPattern, i: int, x: Sequence, interior: bool = False) -> bool:
    """Membership in the cone spanned by e~_{s0}, e~_{k0}-e~_{t0}, e~_{s0}-e~_{k0}."""
    k, s, t = initial_kst(pattern, i)
    alpha = sum(x)
    y = [x[0], x[1], x[2]]
    y[s - 1] -= alpha
    beta, gamma = -y[t - 1], y[s - 1]
    coeffs = (alpha, beta, gamma)
    if interior:
        return all(c > 0 for c in coeffs)
    return all(c >= 0 for c in coeffs)


def region_d_check(pattern: SignPattern, depth: int, backend: Optional[str] = None) -> CheckReport:
    """Each g-vector lies in exactly one region, in the interior exactly on branches."""
    report = CheckReport(True)
    for j in (1, 2, 3):
        hits = [i for i in (1, 2, 3) if in_region_d(pattern, i, unit(j))]
        report.checked += 1
        owner = next(i for i in (1, 2, 3) if initial_kst(pattern, i)[1] == j)
        if hits != [owner] or in_region_d(pattern, owner, unit(j), interior=True):
            return report.fail(vector=f"e~{j}", regions=hits)
    for i in (1, 2, 3):
        for node in subtree_nodes(pattern, i, depth, backend):
            gk = node.g_roles[0]
            report.checked += 1
            hits = [m for m in (1, 2, 3) if in_region_d(pattern, m, gk)]
            if hits != [i]:
                return report.fail(walk=node.walk, regions=hits)
            if in_region_d(pattern, i, gk, interior=True) == node.trunk:
                return report.fail(walk=node.walk, reason="interior membership disagrees with branch")
    return report


# ---- cone membership helpers ----

def _solve3(cols: Sequence[Sequence], x: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coefficients of x in the basis ``cols``; None if the columns are dependent."""
    d = _det(cols)
    if d == 0:
        return None
    out = []
    for j in range(3):
        swapped = list(cols)
        swapped[j] = x
        out.append(Fraction(_det(swapped), d))
    return tuple(out)


def _solve2(u: Sequence, v: Sequence, x: Sequence) -> Optional[tuple[Fraction, Fraction]]:
    """(alpha, beta) with x = alpha*u + beta*v, or None if x is off the span."""
    n = cross(u, v)
    if n == (0, 0, 0) or dot(n, x) != 0:
        return None
    for r, s in ((0, 1), (0, 2), (1, 2)):
        m = u[r] * v[s] - u[s] * v[r]
        if m:
            alpha = Fraction(x[r] * v[s] - x[s] * v[r], m)
            beta = Fraction(u[r] * x[s] - u[s] * x[r], m)
            return alpha, beta
    return None


def in_closed_cone(gens: Sequence[Sequence], x: Sequence) -> bool:
    if len(gens) == 3:
        lam = _solve3(gens, x)
        return lam is not None and all(c >= 0 for c in lam)
    if len(gens) == 2:
        lam = _solve2(gens[0], gens[1], x)
        return lam is not None and all(c >= 0 for c in lam)
    raise ValueError("expected two or three generators")


def in_open_cone2(u: Sequence, v: Sequence, x: Sequence) -> bool:
    lam = _solve2(u, v, x)
    return lam is not None and lam[0] > 0 and lam[1] > 0


def _facets(gens: Sequence[Sequence]) -> tuple[tuple, ...]:
    normals = set()
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            n = cross(gens[a], gens[b])
            if n == (0, 0, 0):
                continue
            vals = [dot(n, g) for g in gens]
            if all(v >= 0 for v in vals):
                normals.add(_primitive(n))
            elif all(v <= 0 for v in vals):
                normals.add(_primitive(tuple(-c for c in n)))
    return tuple(sorted(normals))


def _primitive(v: Sequence[int]) -> tuple:
    g = gcd(gcd(v[0], v[1]), v[2]) or 1
    return tuple(c // g for c in v)


@dataclass(frozen=True)
class UpperBound:
    """The open cone over gS, gT, vSK, vTK together with the closed cone C(gS, gT)."""

    gK: ModVec
    gS: ModVec
    gT: ModVec
    vSK: ModVec
    vTK: ModVec
    facets: tuple

    @classmethod
    def at(cls, state: PatternState) -> "UpperBound":
        gK, gS, gT = state.g_roles
        vSK, vTK = gK - gS, gK - gT
        facets = _facets((gS, gT, vSK, vTK))
        if len(facets) < 3:
            raise ValueError(f"upper bound at {state.walk} is not full dimensional")
        return cls(gK, gS, gT, vSK, vTK, facets)

    def contains_open(self, x: Sequence) -> bool:
        return all(dot(n, x) > 0 for n in self.facets)

    def on_edge(self, x: Sequence) -> bool:
        return in_closed_cone((self.gS, self.gT), x)

    def contains(self, x: Sequence) -> bool:
        return self.contains_open(x) or self.on_edge(x)


def _decomposition_parts(w_state: PatternState, up: UpperBound):
    s_up = UpperBound.at(step(w_state, "S"))
    t_up = UpperBound.at(step(w_state, "T"))
    cone = w_state.g_roles
    diag = up.vSK + up.vTK
    return (
        ("cone", lambda x: in_closed_cone(cone, x)),
        ("U_S", s_up.contains_open),
        ("U_T", t_up.contains_open),
        ("diagonal", lambda x: in_open_cone2(up.gK, diag, x)),
    )


def _positive_combo(rng: random.Random, gens: Sequence[Sequence], top: int = 9) -> ModVec:
    out = ModVec(0, 0, 0)
    for g in gens:
        out = out + ModVec(*g) * rng.randint(1, top)
    return out


def upper_bound_check(w: Walk, depth: int, samples: int = 20, seed: int = 0) -> CheckReport:
    """Cones below ``w`` stay inside the upper bound at ``w`` and its pieces.

    Checks, for all u >= w with |u| - |w| <= depth: the generators of C(G^u)
    lie in the bound, g_K^u lies in its open part and off C(gS, gT), and
    generators plus sampled interior points land in exactly one of C(G^w)
    and the two open child bounds.  The four-piece decomposition is checked
    on sampled points of the bound and of each piece.
    """
    if not w.is_branch:
        raise ValueError(f"{w} is not in a branch")
    rng = random.Random(seed)
    root = eval_walk(w)
    up = UpperBound.at(root)
    report = CheckReport(True)

    report.checked += 1
    if up.gK * 2 != up.gS + up.gT + up.vSK + up.vTK:
        return report.fail(reason="K-expression identity", walk=str(w))

    parts = _decomposition_parts(root, up)
    detailed = parts[:3]

    def classify(x, table):
        return [name for name, test in table if test(x)]

    stack = [(root, 0)]
    while stack:
        st, level = stack.pop()
        gens = st.g_roles
        probes = list(gens) + [gens[0] + gens[1] + gens[2]]
        probes += [_positive_combo(rng, gens) for _ in range(2)]
        for x in probes:
            report.checked += 1
            if not up.contains(x):
                return report.fail(reason="outside upper bound", walk=str(st.walk), point=list(x))
            hits = classify(x, detailed)
            if len(hits) != 1:
                return report.fail(reason="detailed bound", walk=str(st.walk), point=list(x), parts=hits)
        report.checked += 1
        if not up.contains_open(st.gK) or up.on_edge(st.gK):
            return report.fail(reason="g_K not in open bound", walk=str(st.walk))
        if level < depth:
            stack.append((step(st, "T"), level + 1))
            stack.append((step(st, "S"), level + 1))

    # four-piece decomposition
    probes = [up.gK, up.gS, up.gT, up.gS + up.gT]
    probes += [_positive_combo(rng, (up.gS, up.gT, up.vSK, up.vTK)) for _ in range(samples)]
    probes += [up.gK * rng.randint(1, 9) + (up.vSK + up.vTK) * rng.randint(1, 9) for _ in range(samples)]
    probes += [up.gS * rng.randint(0, 9) + up.gT * rng.randint(1, 9) for _ in range(samples)]
    for x in probes:
        report.checked += 1
        if not up.contains(x):
            return report.fail(reason="probe outside bound", point=list(x))
        hits = classify(x, parts)
        if len(hits) != 1:
            return report.fail(reason="decomposition", point=list(x), parts=hits)
    for letter in "ST":
        child_up = UpperBound.at(step(root, letter))
        for _ in range(samples):
            x = _positive_combo(rng, (child_up.gS, child_up.gT, child_up.vSK, child_up.vTK))
            report.checked += 1
            if not up.contains(x):
                return report.fail(reason=f"open bound at {letter} child leaves bound", point=list(x))
    return report


# ---- separateness between maximal branches ----

def _orient2(p, d, q) -> int:
    return d[0] * (q[1] - p[1]) - d[1] * (q[0] - p[0])


def _cross2(d, e) -> int:
    return d[0] * e[1] - d[1] * e[0]


def _region_data(up: UpperBound):
    return (_planar(up.gS), _planar(up.gT)), (_planar(up.vSK), _planar(up.vTK))


def _side(line, pts, dirs) -> set:
    p, d = line
    signs = {(_orient2(p, d, q) > 0) - (_orient2(p, d, q) < 0) for q in pts}
    signs |= {(_cross2(d, e) > 0) - (_cross2(d, e) < 0) for e in dirs}
    return signs - {0}


def _candidate_lines(pts, dirs):
    a, b = pts
    yield a, (b[0] - a[0], b[1] - a[1])
    for p in pts:
        for e in dirs:
            yield p, e


def _segment_on_line(line, seg) -> list[tuple[int, int]]:
    p, d = line
    return [q for q in seg if _orient2(p, d, q) == 0]


def upper_bound_intersection(first: UpperBound, second: UpperBound) -> Optional[list]:
    """Plane section of the intersection of two upper bounds, if a separating line exists.

    Returns the intersection as a list of 0, 1 or 2 chart points (empty,
    a point, or a closed segment); None when no candidate line separates.
    """
    pts_a, dirs_a = _region_data(first)
    pts_b, dirs_b = _region_data(second)
    for line in list(_candidate_lines(pts_a, dirs_a)) + list(_candidate_lines(pts_b, dirs_b)):
        sa, sb = _side(line, pts_a, dirs_a), _side(line, pts_b, dirs_b)
        if len(sa) > 1 or len(sb) > 1 or (sa and sa == sb):
            continue
        # both regions sit in opposite closed half planes; only the edges reach the line
        on_a = _segment_on_line(line, pts_a)
        on_b = _segment_on_line(line, pts_b)
        if not on_a or not on_b:
            return []
        d = line[1]

        def pos(q):
            return q[0] * d[0] + q[1] * d[1]

        lo = max(min(map(pos, on_a)), min(map(pos, on_b)))
        hi = min(max(map(pos, on_a)), max(map(pos, on_b)))
        if lo > hi:
            return []
        pts = sorted({q for q in on_a + on_b if lo <= pos(q) <= hi}, key=pos)
        return [pts[0]] if lo == hi else [pts[0], pts[-1]]
    return None


def separation_check(pattern: SignPattern, max_index: int = 4) -> CheckReport:
    """Bounds at [i]S^mT and [i]S^nT meet in g_K^{[i]S^n} if m = n+1, else not at all."""
    report = CheckReport(True)
    for i in (1, 2, 3):
        ups = [UpperBound.at(eval_walk(Walk.from_word(pattern, i, "S" * n + "T"))) for n in range(max_index + 1)]
        for n in range(max_index + 1):
            for m in range(n + 1, max_index + 1):
                report.checked += 1
                got = upper_bound_intersection(ups[m], ups[n])
                if m == n + 1:
                    want = [_planar(eval_walk(Walk.from_word(pattern, i, "S" * n)).gK)]
                else:
                    want = []
                if got != want:
                    return report.fail(subtree=i, m=m, n=n, got=got, expected=want)
    return report


# ---- complement rays ----

@dataclass(frozen=True)
class ComplementRay:
    """The open cone C°(base, dir); on the plane, an open ray from ``base``."""

    base: ModVec
    dir: ModVec
    subtree: int
    a: Optional[int] = field(default=None, compare=False)
    b: Optional[int] = field(default=None, compare=False)
    walk: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if sum(self.base) != 1 or sum(self.dir) != 0 or self.dir == (0, 0, 0):
            raise ValueError(f"invalid ray base {self.base} dir {self.dir}")

    @property
    def key(self) -> tuple[ModVec, ModVec]:
        return (self.base, self.dir.primitive())

    def planar(self) -> tuple[int, int, int, int]:
        return (*_planar(self.base), *_planar(self.dir))

    def contains(self, v: Sequence) -> bool:
        """Does the ray through ``v`` (sum > 0) meet this open ray?"""
        total = sum(v)
        if total <= 0:
            return False
        rel = tuple(v[j] - total * self.base[j] for j in range(3))
        return cross(rel, self.dir) == (0, 0, 0) and dot(rel, self.dir) > 0

    def mapped(self, f: LinMap, walk: Optional[str] = None) -> "ComplementRay":
        return ComplementRay(f(self.base), f(self.dir), self.subtree, walk=walk)

    def to_json(self) -> dict:
        return {"subtree": self.subtree, "a": str(self.a), "b": str(self.b)}


def _with_params(pattern: SignPattern, ray: ComplementRay) -> ComplementRay:
    ab = g_params(pattern, ray.subtree, ray.base)
    a, b = ab if ab is not None else (None, None)
    return ComplementRay(ray.base, ray.dir, ray.subtree, a, b, ray.walk)


def phi(pattern: SignPattern, i: int, g: Sequence) -> ComplementRay:
    """C°(g, g - g_fixed_i)."""
    g = ModVec(*g)
    return _with_params(pattern, ComplementRay(g, g - fixed_g(pattern, i), i))


def rho(pattern: SignPattern, i: int, a: int, b: int) -> ComplementRay:
    """The ray attached to the reduced fraction b/a (a >= 1, b >= 0)."""
    if a < 1 or b < 0 or gcd(a, b) != 1:
        raise ValueError(f"b/a = {b}/{a} is not a reduced nonnegative fraction")
    k, s, t = initial_kst(pattern, i)
    tangent = (unit(k) - unit(t)) * a + (unit(s) - unit(k)) * b
    return ComplementRay(fixed_g(pattern, i) + tangent, tangent, i, a, b)


def _fractions(bound: int) -> list[tuple[int, int]]:
    out = [(a, b) for total in range(1, bound + 1) for a in range(1, total + 1) for b in [total - a]]
    return [(a, b) for a, b in out if gcd(a, b) == 1]


def complements_pointwise(pattern: SignPattern, i: int, bound: int) -> list[ComplementRay]:
    """phi_i over the coprime parameters with a + b <= bound, plus F_i."""
    rays = []
    for a, b in _fractions(bound):
        k, s, t = initial_kst(pattern, i)
        g = unit(s) if (a, b) == (1, 0) else fixed_g(pattern, i) + (unit(k) - unit(t)) * a + (unit(s) - unit(k)) * b
        via_phi = phi(pattern, i, g)
        via_rho = rho(pattern, i, a, b)
        if via_phi.key != via_rho.key:
            raise AssertionError(f"phi and rho disagree at ({a}, {b}) in subtree {i}")
        walk = walk_for_g_params(pattern, i, a, b)
        rays.append(ComplementRay(via_rho.base, via_rho.dir, i, a, b, str(walk) if walk else None))
    return rays


def f_ray(pattern: SignPattern, i: int) -> ComplementRay:
    k, s, t = initial_kst(pattern, i)
    return ComplementRay(unit(s), unit(k) - unit(t), i, 1, 0)


@lru_cache(maxsize=32)
def _generators(pattern: SignPattern, i: int):
    return (
        psi_il(pattern, i, 1).to(MOD_STD),
        branch_generator(pattern, i, 0, "S"),
        branch_generator(pattern, i, 0, "T"),
    )


def complements_recursive(pattern: SignPattern, i: int, depth: int) -> list[ComplementRay]:
    """F_i and phi(w) for [i] <= w, |w| <= depth, built from three linear maps.

    Trunk walks: phi([i]S^n) is Psi_{i,1}^(n+1) applied to F_i.  Branch
    walks [i]S^nT M1...Mr: Psi_{i,1}^n Psi^{M1} ... Psi^{Mr} Psi^T (F_i).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    shift, gen_s, gen_t = _generators(pattern, i)
    gens = {"S": gen_s, "T": gen_t}
    base = f_ray(pattern, i)
    rays = [base]

    trunk = base
    for n in range(depth):
        trunk = trunk.mapped(shift, f"[{i}]" + "S" * n)
        rays.append(trunk)

    # words X of length <= depth - 2 below [i]T, built by prepending letters
    layer = [("", base.mapped(gen_t))]
    below_t = []
    for length in range(depth - 1):
        below_t.extend(layer)
        if length < depth - 2:
            layer = [(m + x, r.mapped(gens[m])) for x, r in layer for m in "ST"]
    for word, ray in below_t:
        shifted = ray
        for n in range(depth - 1 - len(word)):
            full = "S" * n + "T" + word
            rays.append(ComplementRay(shifted.base, shifted.dir, i, walk=f"[{i}]{full}"))
            shifted = shifted.mapped(shift)
    return [_with_params(pattern, r) for r in rays]


def complements_agree(pattern: SignPattern, i: int, depth: int, bound: int) -> CheckReport:
    """Recursive and pointwise rays coincide wherever both are defined.

    A recursive ray with a + b <= bound must be a pointwise ray, and every
    pointwise ray whose g-vector sits at a walk of length <= depth must be
    produced by the recursion.  Each recursive ray must also equal phi at
    the g-vector of its own walk.
    """
    report = CheckReport(True)
    rec = complements_recursive(pattern, i, depth)
    pw = complements_pointwise(pattern, i, bound)
    rec_keys = {r.key for r in rec}
    pw_keys = {r.key for r in pw}
    for r in rec:
        report.checked += 1
        if r.walk is not None:
            direct = phi(pattern, i, eval_walk(Walk.parse(pattern, r.walk)).gK)
            if direct.key != r.key:
                return report.fail(reason="recursion differs from phi", walk=r.walk)
        if r.a is None or not valid_g_params(r.a, r.b):
            return report.fail(reason="ray base is not a subtree g-vector", walk=r.walk)
        if r.a + r.b <= bound and r.key not in pw_keys:
            return report.fail(reason="recursive ray missing pointwise", walk=r.walk)
    for r in pw:
        report.checked += 1
        length = 0 if r.walk is None else len(Walk.parse(pattern, r.walk))
        if length <= depth and r.key not in rec_keys:
            return report.fail(reason="pointwise ray missing recursively", a=r.a, b=r.b)
    return report


def all_complements(pattern: SignPattern, depth: int, bound: Optional[int] = None) -> list[ComplementRay]:
    """Recursive rays to ``depth`` and, if ``bound`` is given, pointwise rays too (deduplicated)."""
    out: dict = {}
    for i in (1, 2, 3):
        for r in complements_recursive(pattern, i, depth):
            out.setdefault(r.key, r)
        if bound is not None:
            for r in complements_pointwise(pattern, i, bound):
                out.setdefault(r.key, r)
    return list(out.values())


def disjointness_check(
    depth: int,
    bound: int,
    pattern: SignPattern = SignPattern.CYCLIC_A,
    backend: Optional[str] = None,
    separation_index: int = 4,
) -> CheckReport:
    """No complement ray meets an enumerated cone; branch bounds are separated."""
    cones = enumerate_fan(pattern, depth, backend)
    rays = all_complements(pattern, depth, bound)
    report = CheckReport(True, len(cones) * len(rays))
    hits = kernels.rays_vs_triangles([r.planar() for r in rays], [c.planar() for c in cones], backend)
    if hits:
        r, c = hits[0]
        ray = rays[r]
        return report.fail(
            reason="ray meets cone",
            ray={"subtree": ray.subtree, "a": ray.a, "b": ray.b},
            cone=cones[c].walk,
        )
    return report.merge(separation_check(pattern, separation_index))


# ---- point location ----

@dataclass(frozen=True)
class InCone:
    walk: str
    face: tuple[int, ...]

    def to_json(self) -> dict:
        return {"result": "InCone", "walk": self.walk, "face": list(self.face)}


@dataclass(frozen=True)
class OnComplementRay:
    subtree: int
    a: int
    b: int

    def to_json(self) -> dict:
        return {"result": "OnComplementRay", "subtree": self.subtree, "a": str(self.a), "b": str(self.b)}


@dataclass(frozen=True)
class UnknownAtDepth:
    depth: int
    bound: int

    def to_json(self) -> dict:
        return {"result": "UnknownAtDepth", "depth": self.depth, "bound": self.bound}


Location = Union[InCone, OnComplementRay, UnknownAtDepth]


def locate(
    v: Sequence,
    depth: int,
    bound: int,
    pattern: SignPattern = SignPattern.CYCLIC_A,
    backend: Optional[str] = None,
) -> Location:
    """Exact point location against the cones to ``depth`` and rays with a + b <= bound.

    Cones are searched in enumeration order (initial cone first), so the
    reported cone is the shallowest one containing ``v``; the face lists the
    raw indices of generators with positive coefficient.
    """
    v = ModVec(*v)
    if v == (0, 0, 0):
        return InCone(INITIAL_CONE.walk, ())
    if sum(v) <= 0:
        raise NotInHalfSpace(f"{tuple(v)} has coordinate sum {sum(v)} <= 0")
    for cone in enumerate_fan(pattern, depth, backend):
        lam = _solve3(cone.generators, v)
        if lam is not None and all(c >= 0 for c in lam):
            return InCone(cone.walk, tuple(j + 1 for j, c in enumerate(lam) if c > 0))
    for i in (1, 2, 3):
        for ray in complements_pointwise(pattern, i, bound):
            if ray.contains(v):
                return OnComplementRay(i, ray.a, ray.b)
    return UnknownAtDepth(depth, bound)


def fan_snapshot(pattern: SignPattern, depth: int, backend: Optional[str] = None) -> dict:
    """JSON-ready snapshot of the cones and complement rays to ``depth``."""
    cones = enumerate_fan(pattern, depth, backend)
    rays = all_complements(pattern, depth)
    return {
        "depth": depth,
        "cones": [c.to_json() for c in cones],
        "complements": [r.to_json() for r in rays],
    }

