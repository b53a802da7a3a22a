"""Run configuration shared by the command line and the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import GfanError
from .exchange import ExchangeMatrix, integer2, markov, validate

SUITES = ("cw", "complements", "fan", "fractal", "invariants", "oracle", "params", "signs")


class ConfigError(GfanError, ValueError):
    """Bad command-line or configuration input."""


def _parse_sign(token: str) -> int:
    token = token.strip()
    if token in ("+", "+1", "1"):
        return 1
    if token in ("-", "-1"):
        return -1
    raise ConfigError(f"sign must be + or -, got {token!r}")


def parse_matrix(text: str) -> ExchangeMatrix:
    """``markov``, ``integer2`` (optionally ``:-``) or ``custom:p,pp,q,qp,r,rp,sign``."""
    name, _, rest = text.strip().partition(":")
    name = name.lower()
    if name in ("markov", "integer2"):
        sign = _parse_sign(rest) if rest else 1
        return markov(sign) if name == "markov" else integer2(sign)
    if name == "custom":
        parts = [p.strip() for p in rest.split(",")]
        if len(parts) != 7:
            raise ConfigError("custom matrix needs p,pp,q,qp,r,rp,sign")
        try:
            values = [Fraction(p) for p in parts[:6]]
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"custom parameters must be rationals: {rest!r}") from None
        try:
            return validate(*values, sign=_parse_sign(parts[6]))
        except GfanError as exc:
            raise ConfigError(f"invalid custom matrix: {exc}") from exc
    raise ConfigError(f"unknown matrix {text!r}; use markov, integer2 or custom:...")


@dataclass
class RunConfig:
    matrix: ExchangeMatrix = field(default_factory=markov)
    depth: int = 8
    bound: int = 12
    samples: int = 100
    seed: int = 0
    suites: tuple[str, ...] = SUITES
    out: Optional[str] = None
    format: Optional[str] = None
    subtree: Optional[int] = None
    backend: Optional[str] = None
    side: str = "g"

    def __post_init__(self):
        if self.depth < 0:
            raise ConfigError("depth must be nonnegative")
        if self.bound < 1:
            raise ConfigError("bound must be positive")
        if self.samples < 0:
            raise ConfigError("samples must be nonnegative")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
        if self.subtree is not None and self.subtree not in (1, 2, 3):
            raise ConfigError("subtree must be 1, 2 or 3")
        if self.side not in ("g", "c"):
            raise ConfigError("side must be g or c")

    @property
    def pattern(self):
        return self.matrix.pattern
