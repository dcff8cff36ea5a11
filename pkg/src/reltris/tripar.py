"""Arithmetic of relative trisection parameters (g, k; p, b).

A valid parameter tuple satisfies g, k, p >= 0, b >= 1 and
2p + b - 1 <= k <= g + p + b - 1.  Everything else here is derived:
the Euler characteristic g - 3k + 3p + 2b - 1, the count
A = g + p + b - 1 - k of once-intersecting curve pairs in the standard
diagram, the induced open book (page genus p, b bindings), the boundary
Heegaard genus 2p + b - 1, and the enumeration of all tuples with a
prescribed Euler characteristic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ConsistencyError


class BoundaryClass(enum.Enum):
    """What the parameters force (or an input asserts) about the boundary."""

    SPHERE = "sphere"
    LENS = "lens"
    SEIFERT = "seifert"
    NON_SEIFERT_CONSTRAINT_UNKNOWN = "non_seifert_constraint_unknown"
    KNOWN_NON_SEIFERT = "known_non_seifert"


SEIFERT_FORCED = frozenset(
    {BoundaryClass.SPHERE, BoundaryClass.LENS, BoundaryClass.SEIFERT}
)


@dataclass(frozen=True, order=True)
class TrisectionType:
    g: int
    k: int
    p: int
    b: int

    def __post_init__(self):
        for name in ("g", "k", "p", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.g < 0 or self.k < 0 or self.p < 0:
            raise ValueError(f"g, k, p must be nonnegative in {self}")
        if self.b < 1:
            raise ValueError(f"b must be at least 1 in {self}")
        if not (2 * self.p + self.b - 1 <= self.k <= self.g + self.p + self.b - 1):
            raise ValueError(
                f"{self} violates 2p+b-1 <= k <= g+p+b-1"
            )

    def euler_char(self) -> int:
        return self.g - 3 * self.k + 3 * self.p + 2 * self.b - 1

    def intersection_pairs(self) -> int:
        """A = g + p + b - 1 - k, the once-intersecting pairs of the standard diagram."""
        a = self.g + self.p + self.b - 1 - self.k
        if not 0 <= a <= self.g - self.p:
            raise ConsistencyError(f"A = {a} out of range [0, g-p] for {self}")
        return a

    def open_book(self) -> tuple[int, int]:
        """(page genus, binding components) of the induced boundary open book."""
        return (self.p, self.b)

    def heegaard_genus(self) -> int:
        """Genus of the Heegaard splitting the boundary open book induces."""
        return 2 * self.p + self.b - 1

    def boundary_forcing(self) -> BoundaryClass:
        """Boundary type forced by a planar open book with few bindings."""
        if self.p == 0:
            if self.b == 1:
                return BoundaryClass.SPHERE
            if self.b == 2:
                return BoundaryClass.LENS
            if self.b == 3:
                return BoundaryClass.SEIFERT
        return BoundaryClass.NON_SEIFERT_CONSTRAINT_UNKNOWN

    def __str__(self):
        return f"({self.g},{self.k};{self.p},{self.b})"


def admissible_tuples(chi: int, g: int, exclude_seifert_forced: bool = False) -> list[TrisectionType]:
    """All valid (g, k; p, b) of the given genus with Euler characteristic chi.

    Iterates page genus p and pair count A over their closed ranges
    (p <= (g + 1 - chi) / 3 and (2g - 1 + chi) / 3 <= A <= g - p) and
    derives k = 1 - chi - g + p + 2A, b = 3A - 2g + 2 - chi, so the
    Euler characteristic holds identically.  With the exclusion flag,
    tuples whose boundary is forced to be a Seifert fiber space
    (p = 0, b <= 3) are dropped.  Sorted by (p, A).
    """
    if not isinstance(g, int) or isinstance(g, bool) or g < 0:
        raise ValueError(f"g must be a nonnegative integer, got {g!r}")
    if not isinstance(chi, int) or isinstance(chi, bool):
        raise ValueError(f"chi must be an integer, got {chi!r}")
    found = []
    p_max = min((g + 1 - chi) // 3, g)
    a_min = max(0, -((-(2 * g - 1 + chi)) // 3))  # ceil((2g-1+chi)/3)
    for p in range(0, p_max + 1):
        for a in range(a_min, g - p + 1):
            k = 1 - chi - g + p + 2 * a
            b = 3 * a - 2 * g + 2 - chi
            if k < 0 or b < 1:
                continue
            t = TrisectionType(g, k, p, b)
            if exclude_seifert_forced and t.boundary_forcing() in SEIFERT_FORCED:
                continue
            found.append(t)
    found.sort(key=lambda t: (t.p, t.intersection_pairs()))
    return found


def genus_lower_bound(chi: int, boundary: BoundaryClass) -> int:
    """Least trisection genus not excluded for a manifold with this boundary.

    Only a boundary asserted to be no Seifert fiber space yields a
    bound; every genus up to chi + 1 then forces a Seifert boundary, so
    chi + 2 is returned.  For any other boundary class the hypothesis
    fails and 0 is returned, meaning no bound is claimed.
    """
    if boundary is not BoundaryClass.KNOWN_NON_SEIFERT:
        return 0
    for g in range(0, chi + 2):
        survivors = admissible_tuples(chi, g, exclude_seifert_forced=True)
        if survivors:
            raise ConsistencyError(
                f"genus {g} <= chi+1 admits non-Seifert-forced tuples {survivors}"
            )
    return chi + 2
