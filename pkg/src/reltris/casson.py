"""Casson invariants of homology spheres from 1/m surgery on a knot.

The surgery formula gives lambda = m/2 * (second derivative of the
Alexander polynomial at t = 1), with lambda(S^3) = 0 as the base value.
The division by 2 is exact: a symmetric Alexander polynomial has an even
second derivative at 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .laurent import LaurentPoly
from .ribbon import alexander_from_bands, kn_presentation


@dataclass(frozen=True)
class SurgeryDatum:
    """A symmetric Alexander polynomial with Delta(1) = 1 and coefficient 1/m."""

    alexander: LaurentPoly
    m: int

    def __post_init__(self):
        if not isinstance(self.alexander, LaurentPoly):
            raise ValueError("alexander must be a LaurentPoly")
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m == 0:
            raise ValueError(f"surgery coefficient 1/m needs a nonzero integer m, got {self.m!r}")
        if not self.alexander.is_symmetric():
            raise ValueError("alexander polynomial must be symmetric under t -> 1/t")
        if self.alexander.eval_at_one() != 1:
            raise ValueError("alexander polynomial must have value 1 at t = 1")


def casson_surgery(d: SurgeryDatum) -> int:
    """Casson invariant of 1/m surgery along a knot with the given polynomial."""
    dd = d.alexander.second_derivative_at_one()
    if dd % 2 != 0:
        raise ConsistencyError(
            f"second derivative at 1 of a symmetric polynomial must be even, got {dd}"
        )
    return d.m * (dd // 2)


def distinguish_family(ns: list[int]) -> list[int]:
    """Casson invariants of the preset chain family, one per entry.

    Each value runs through the full pipeline (bands, determinant,
    Alexander polynomial, surgery formula).  The entries must be
    distinct; the returned invariants are checked to be pairwise
    distinct as well.
    """
    for n in ns:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"entries must be positive integers, got {n!r}")
    if len(set(ns)) != len(ns):
        raise ValueError("entries must be distinct")
    values = [
        casson_surgery(SurgeryDatum(alexander_from_bands(kn_presentation(n)), 1))
        for n in ns
    ]
    if len(set(values)) != len(values):
        raise ConsistencyError("family invariants collided; they must be pairwise distinct")
    return values
