"""2-bridge link types via negative continued fractions.

A word [a_1, ..., a_k] of nonzero integers evaluates to the exact
rational a_1 - 1/(a_2 - 1/(... - 1/a_k)) = q/p, giving the type (p, q)
with p reduced modulo q.  Two nontrivial types are isotopic exactly
when q = q' and either p = p' or p * p' = 1 modulo q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class TwoBridgeType:
    """Type (p, q) with q >= 2, p reduced to 0 < p < q, gcd(p, q) = 1."""

    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.q < 1:
            raise ValueError(f"q must be positive, got {self.q}")
        object.__setattr__(self, "p", self.p % self.q)
        if self.p == 0:
            raise ValueError(f"(p, q) = ({self.p}, {self.q}) is trivial; need 0 < p < q")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")

    def __str__(self):
        return f"({self.p}, {self.q})"


def cf_to_type(word) -> TwoBridgeType:
    """Evaluate a negative continued fraction word to its 2-bridge type."""
    word = list(word)
    if not word:
        raise ValueError("continued fraction word must be nonempty")
    for a in word:
        if not isinstance(a, int) or isinstance(a, bool) or a == 0:
            raise ValueError(f"word entries must be nonzero integers, got {a!r}")
    x = Fraction(word[-1])
    for a in reversed(word[:-1]):
        if x == 0:
            raise ValueError("degenerate word: division by zero in the tower")
        x = a - Fraction(1) / x
    num, den = x.numerator, x.denominator
    if num == 0:
        raise ValueError("degenerate word: the tower evaluates to 0")
    q = abs(num)
    p = den if num > 0 else -den
    return TwoBridgeType(p, q)


def isotopic(t1: TwoBridgeType, t2: TwoBridgeType) -> bool:
    """Isotopy criterion: equal q and p = p' or p * p' = 1 modulo q."""
    if t1.q != t2.q:
        return False
    q = t1.q
    return t1.p % q == t2.p % q or (t1.p * t2.p) % q == 1


def is_torus_type(t: TwoBridgeType) -> bool:
    """Whether the type is a (2, n) torus link, i.e. p = +-1 modulo q."""
    return t.p % t.q in (1 % t.q, (t.q - 1) % t.q)
