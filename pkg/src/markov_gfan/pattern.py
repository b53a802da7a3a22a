"""Matrix-free recursion for modified c- and g-vector triples.

States store the six vectors by role (K, S, T); the walk supplies the role
to raw-index map.  The same rules serve every B-invariant matrix with a
given sign pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .exchange import SignPattern
from .vectors import FIXED_C, ModVec, unit
from .walk import Kind, Walk, initial_kst

__all__ = [
    "PatternState",
    "EigenBasis",
    "seed",
    "step",
    "eval_walk",
    "identity_triples",
    "raw_triples",
    "eigen_basis",
    "recover",
    "fixed_g",
    "trunk_closed_form",
    "branch_root_closed_form",
    "iter_states",
]


@dataclass(frozen=True)
class PatternState:
    walk: Walk
    cK: ModVec
    cS: ModVec
    cT: ModVec
    gK: ModVec
    gS: ModVec
    gT: ModVec

    @property
    def c_roles(self) -> tuple[ModVec, ModVec, ModVec]:
        return (self.cK, self.cS, self.cT)

    @property
    def g_roles(self) -> tuple[ModVec, ModVec, ModVec]:
        return (self.gK, self.gS, self.gT)

    def roles(self, side: str) -> tuple[ModVec, ModVec, ModVec]:
        return self.c_roles if side == "C" else self.g_roles

    def role(self, side: str, name: str) -> ModVec:
        return getattr(self, ("c" if side == "C" else "g") + name)

    def c_triple(self) -> tuple[ModVec, ModVec, ModVec]:
        """(c_1, c_2, c_3) in raw index order."""
        return _by_index(self.walk.kst, self.c_roles)

    def g_triple(self) -> tuple[ModVec, ModVec, ModVec]:
        return _by_index(self.walk.kst, self.g_roles)


def _by_index(kst, vecs):
    out = [None, None, None]
    for idx, v in zip(kst, vecs):
        out[idx - 1] = v
    return tuple(out)


def identity_triples() -> tuple[tuple[ModVec, ...], tuple[ModVec, ...]]:
    """Triples at the empty walk: c_j = g_j = e~_j."""
    e = (unit(1), unit(2), unit(3))
    return e, e


def raw_triples(walk: Walk) -> tuple[tuple[ModVec, ...], tuple[ModVec, ...]]:
    """(c-triple, g-triple) in raw index order, including the empty walk."""
    if not walk.seq:
        return identity_triples()
    st = eval_walk(walk)
    return st.c_triple(), st.g_triple()


def seed(pattern: SignPattern, i: int) -> PatternState:
    k, s, t = initial_kst(pattern, i)
    ek, es, et = unit(k), unit(s), unit(t)
    return PatternState(
        Walk.initial(pattern, i),
        cK=-ek,
        cS=es + ek * 2,
        cT=et,
        gK=es * 2 - ek,
        gS=es,
        gT=et,
    )


def step(state: PatternState, letter: str) -> PatternState:
    w = state.walk
    cK, cS, cT, gK, gS, gT = state.cK, state.cS, state.cT, state.gK, state.gS, state.gT
    if letter == "S":
        nc = (-cS, cK + cS * 2, cT)
        ng = (gK * 2 - gS, gK, gT)
    elif letter != "T":
        raise ValueError(f"letter must be 'S' or 'T', got {letter!r}")
    elif w.kind is Kind.TRUNK:
        nc = (-cT, cS + cT * 2, cK)
        ng = (gS * 2 - gT, gS, gK)
    else:
        nc = (-cT, cK + cT * 2, cS)
        ng = (gK * 2 - gT, gK, gS)
    return PatternState(w.child(letter), *nc, *ng)


def eval_walk(walk: Walk) -> PatternState:
    if not walk.seq:
        raise ValueError("eval_walk needs a nonempty walk; use identity_triples for []")
    st = seed(walk.pattern, walk.i)
    for letter in walk.word:
        st = step(st, letter)
    return st


def iter_states(pattern: SignPattern, depth: int, i: Optional[int] = None) -> Iterator[PatternState]:
    """Depth-first sweep over states of nonempty walks with length <= depth."""
    stack = [seed(pattern, j) for j in ((i,) if i else (3, 2, 1)) if depth >= 1]
    while stack:
        st = stack.pop()
        yield st
        if len(st.walk) < depth:
            stack.append(step(st, "T"))
            stack.append(step(st, "S"))


@dataclass(frozen=True)
class EigenBasis:
    cF: ModVec
    xSK: ModVec
    xTK: ModVec
    gF: ModVec
    vSK: ModVec
    vTK: ModVec


def eigen_basis(state: PatternState) -> EigenBasis:
    cK, cS, cT, gK, gS, gT = state.cK, state.cS, state.cT, state.gK, state.gS, state.gT
    return EigenBasis(
        cF=cK + cS + cT,
        xSK=cK + cS,
        xTK=-(cK + cT),
        gF=gS + gT - gK,
        vSK=gK - gS,
        vTK=gK - gT,
    )


def recover(eb: EigenBasis) -> tuple[ModVec, ...]:
    """(cK, cS, cT, gK, gS, gT) from the eigen basis."""
    cK = -eb.cF + eb.xSK - eb.xTK
    cS = eb.cF + eb.xTK
    cT = eb.cF - eb.xSK
    gK = eb.gF + eb.vSK + eb.vTK
    gS = eb.gF + eb.vTK
    gT = eb.gF + eb.vSK
    return cK, cS, cT, gK, gS, gT


def fixed_g(pattern: SignPattern, i: int) -> ModVec:
    """e~_{s0} + e~_{t0} - e~_{k0}; the g-side fixed vector of subtree i."""
    k, s, t = initial_kst(pattern, i)
    return unit(s) + unit(t) - unit(k)


def trunk_closed_form(pattern: SignPattern, i: int, n: int) -> EigenBasis:
    """Eigen basis at [i]S^n in closed form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, s, t = initial_kst(pattern, i)
    ek, es, et = unit(k), unit(s), unit(t)
    return EigenBasis(
        cF=FIXED_C,
        xSK=ek + es,
        xTK=(ek - et) + (ek + es) * n,
        gF=ek + et - es,
        vSK=es - ek,
        vTK=(es - et) + (es - ek) * (n + 1),
    )


def branch_root_closed_form(pattern: SignPattern, i: int, n: int) -> EigenBasis:
    """Eigen basis at the maximal-branch root [i]S^nT in closed form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, s, t = initial_kst(pattern, i)
    ek, es, et = unit(k), unit(s), unit(t)
    return EigenBasis(
        cF=FIXED_C,
        xSK=(ek + et) + (ek + es) * (n + 1),
        xTK=(ek + et) + (ek + es) * n,
        gF=es + et - ek,
        vSK=(ek - et) + (es - ek) * (n + 1),
        vTK=(ek - et) + (es - ek) * n,
    )
