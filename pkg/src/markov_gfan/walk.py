"""Reduced mutation sequences as (initial direction, S/T word) pairs.

At every nonempty walk the three indices carry roles K (the last index),
S and T.  Appending ``S`` mutates at the S-index, appending ``T`` at the
T-index, which puts reduced sequences starting with ``i`` in bijection with
words over {S, T}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence

from .errors import KIsNotAWordLetter, NonReduced
from .exchange import SignPattern

Triple = tuple[int, int, int]


class Kind(Enum):
    TRUNK = "trunk"
    BRANCH = "branch"


class Admissibility(Enum):
    TRUNK_PAIR = "TrunkPair"
    BRANCH_PAIR = "BranchPair"
    NO = "No"


def initial_kst(pattern: SignPattern, i: int) -> Triple:
    """Role indices (K, S, T) at the one-letter walk [i].

    After the first mutation every sign except the i-th is positive and the
    exchange matrix has flipped, so the S-index is the unique s with a
    positive initial entry b_{is}.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"initial direction must be 1, 2 or 3, got {i!r}")
    s = next(j for j in (1, 2, 3) if j != i and pattern.entry_sign(i, j) > 0)
    t = 6 - i - s
    return (i, s, t)


def step_kst(kst: Triple, kind: Kind, letter: str) -> Triple:
    k, s, t = kst
    if letter == "S":
        return (s, k, t)
    if letter != "T":
        raise ValueError(f"letter must be 'S' or 'T', got {letter!r}")
    if kind is Kind.TRUNK:
        return (t, s, k)
    return (t, k, s)


def initial_signs(i: Optional[int] = None) -> Triple:
    if i is None:
        return (1, 1, 1)
    return tuple(-1 if j == i else 1 for j in (1, 2, 3))


def step_sign(eps: Triple, kst: Triple, letter: str) -> Triple:
    """Tropical signs after appending ``letter``.

    An S-step flips the K and S entries, a T-step flips only the T entry.
    """
    k, s, t = kst
    flips = (k, s) if letter == "S" else (t,)
    return tuple(-e if j in flips else e for j, e in zip((1, 2, 3), eps))


@dataclass(frozen=True)
class Walk:
    pattern: SignPattern
    seq: tuple[int, ...]
    word: str = ""
    kst: Optional[Triple] = None
    eps: Triple = (1, 1, 1)
    kind: Optional[Kind] = field(default=None)

    # -- constructors --

    @classmethod
    def empty(cls, pattern: SignPattern) -> "Walk":
        return cls(pattern, ())

    @classmethod
    def initial(cls, pattern: SignPattern, i: int) -> "Walk":
        return cls(pattern, (i,), "", initial_kst(pattern, i), initial_signs(i), Kind.TRUNK)

    @classmethod
    def from_word(cls, pattern: SignPattern, i: int, word: str) -> "Walk":
        w = cls.initial(pattern, i)
        for letter in word:
            w = w.child(letter)
        return w

    @classmethod
    def from_seq(cls, pattern: SignPattern, seq: Sequence[int]) -> "Walk":
        seq = tuple(int(x) for x in seq)
        if not seq:
            return cls.empty(pattern)
        w = cls.initial(pattern, seq[0])
        for k in seq[1:]:
            w = w.child(w.letter_for(k))
        return w

    @classmethod
    def parse(cls, pattern: SignPattern, text: str) -> "Walk":
        """Accept ``"[1]SSTST"``, ``"1,3,1,2"`` or ``"[]"`` for the empty walk."""
        text = text.strip()
        if text in ("", "[]", "()"):
            return cls.empty(pattern)
        m = re.fullmatch(r"\[([123])\]([ST]*)", text)
        if m:
            return cls.from_word(pattern, int(m.group(1)), m.group(2))
        if re.fullmatch(r"[123](\s*,\s*[123])*", text):
            return cls.from_seq(pattern, [int(x) for x in text.split(",")])
        raise ValueError(f"cannot parse walk {text!r}")

    # -- derived data --

    @property
    def i(self) -> Optional[int]:
        return self.seq[0] if self.seq else None

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def is_trunk(self) -> bool:
        return self.kind is Kind.TRUNK

    @property
    def is_branch(self) -> bool:
        return self.kind is Kind.BRANCH

    @property
    def notation(self) -> str:
        if not self.seq:
            return "[]"
        return f"[{self.seq[0]}]{self.word}"

    def __str__(self) -> str:
        return self.notation

    def letter_for(self, k: int) -> str:
        """The letter that appends index ``k``."""
        if not self.seq:
            raise ValueError("the empty walk has no roles")
        K, S, T = self.kst
        if k == S:
            return "S"
        if k == T:
            return "T"
        if k == K:
            raise KIsNotAWordLetter(f"index {k} is K({self.notation}); sequence would not be reduced")
        raise NonReduced(f"bad index {k!r}")

    def child(self, letter: str) -> "Walk":
        if not self.seq:
            raise ValueError("use Walk.initial to leave the empty walk")
        K, S, T = self.kst
        k = S if letter == "S" else T
        kind = self.kind if letter == "S" else Kind.BRANCH
        return Walk(
            self.pattern,
            self.seq + (k,),
            self.word + letter,
            step_kst(self.kst, self.kind, letter),
            step_sign(self.eps, self.kst, letter),
            kind,
        )

    def extend(self, word: str) -> "Walk":
        w = self
        for letter in word:
            w = w.child(letter)
        return w

    def children(self) -> tuple["Walk", "Walk"]:
        return self.child("S"), self.child("T")

    # prefix order
    def __le__(self, other: "Walk") -> bool:
        return other.seq[: len(self.seq)] == self.seq

    def __ge__(self, other: "Walk") -> bool:
        return other <= self

    def to_json(self) -> dict:
        return {"notation": self.notation, "seq": list(self.seq), "i": self.i, "word": self.word}


def seq_to_word(pattern: SignPattern, seq: Sequence[int]) -> tuple[int, str]:
    w = Walk.from_seq(pattern, seq)
    if not w.seq:
        raise ValueError("the empty sequence has no word form")
    return w.i, w.word


def word_to_seq(pattern: SignPattern, i: int, word: str) -> tuple[int, ...]:
    return Walk.from_word(pattern, i, word).seq


def admissible(w: Walk, u: Walk) -> Admissibility:
    if w.kind is Kind.TRUNK and u.kind is Kind.TRUNK:
        return Admissibility.TRUNK_PAIR
    if w.kind is Kind.BRANCH and u.kind is Kind.BRANCH:
        return Admissibility.BRANCH_PAIR
    return Admissibility.NO


def signs_from_scratch(pattern: SignPattern, seq: Sequence[int]) -> tuple[Triple, Optional[int]]:
    """Tropical signs and the S-index recomputed without the role recursion.

    Signs follow from flipping the mutated entry and the unique entry s with
    eps_s != eps_k and eps_s * b^w_{ks} < 0, where b^w = (-1)^{|w|} B.
    Returns ``(eps, s)`` with ``s`` the S-index of the final walk.
    """
    eps = initial_signs()
    s_index = None
    for n, k in enumerate(seq, start=1):
        if n == 1:
            eps = initial_signs(k)
        else:
            prev = seq[n - 2]
            flips = (prev, k) if k == s_index else (k,)
            eps = tuple(-e if j in flips else e for j, e in zip((1, 2, 3), eps))
        sign_w = -1 if n % 2 else 1
        cands = [
            s
            for s in (1, 2, 3)
            if s != k and eps[s - 1] != eps[k - 1] and eps[s - 1] * sign_w * pattern.entry_sign(k, s) < 0
        ]
        if len(cands) != 1:
            raise AssertionError(f"S-index not unique at {tuple(seq[:n])}: {cands}")
        s_index = cands[0]
    return eps, s_index


def iter_walks(pattern: SignPattern, depth: int, i: Optional[int] = None) -> Iterator[Walk]:
    """Breadth-first sweep of nonempty walks with length <= depth."""
    roots = [Walk.initial(pattern, j) for j in ((i,) if i else (1, 2, 3))]
    level = [w for w in roots if depth >= 1]
    while level:
        yield from level
        if len(level[0]) >= depth:
            break
        level = [c for w in level for c in w.children()]
