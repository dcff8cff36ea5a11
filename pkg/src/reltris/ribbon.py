"""Alexander polynomials of chain-type ribbon knots via a band determinant.

A chain-type band presentation is the list of exponent pairs
(delta, delta_c), one pair per band except the last band, which carries
no parameters.  The presentation determines a square matrix over the
Laurent ring (the Terasaka matrix); its exact determinant is a
Fox-Milnor factor f(t), and the Alexander polynomial is the symmetrized
product f(t) * f(1/t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParseError
from .laurent import LaurentPoly, exact_div, unit_equivalent


@dataclass(frozen=True)
class BandPresentation:
    """Band data (delta_i, delta_c_i) for i = 1..m-1; m-1 may be zero."""

    bands: tuple[tuple[int, int], ...]

    def __init__(self, bands=()):
        norm = []
        for pair in bands:
            try:
                delta, delta_c = pair
            except (TypeError, ValueError):
                raise ValueError(f"band must be a (delta, delta_c) pair, got {pair!r}") from None
            if not isinstance(delta, int) or isinstance(delta, bool):
                raise ValueError(f"delta must be an integer, got {delta!r}")
            if not isinstance(delta_c, int) or isinstance(delta_c, bool):
                raise ValueError(f"delta_c must be an integer, got {delta_c!r}")
            norm.append((delta, delta_c))
        object.__setattr__(self, "bands", tuple(norm))

    @property
    def m(self) -> int:
        """Number of bands, hence the matrix size."""
        return len(self.bands) + 1

    def to_json_dict(self) -> dict:
        return {"bands": [{"delta": d, "delta_c": dc} for d, dc in self.bands]}

    @classmethod
    def from_json_dict(cls, obj) -> "BandPresentation":
        if not isinstance(obj, dict) or "bands" not in obj:
            raise ParseError('band file must be an object with a "bands" list')
        raw = obj["bands"]
        if not isinstance(raw, list):
            raise ParseError('"bands" must be a list')
        bands = []
        for entry in raw:
            if not isinstance(entry, dict) or set(entry) != {"delta", "delta_c"}:
                raise ParseError(f'band entries need exactly the keys "delta" and "delta_c", got {entry!r}')
            d, dc = entry["delta"], entry["delta_c"]
            for v in (d, dc):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ParseError(f"band exponents must be integers, got {v!r}")
            bands.append((d, dc))
        return cls(bands)


def kn_presentation(n: int) -> BandPresentation:
    """Preset chain of 2n+1 bands: (-1,-1) at odd positions, (1,0) at even."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    bands = [(-1, -1) if i % 2 == 1 else (1, 0) for i in range(1, 2 * n + 1)]
    return BandPresentation(bands)


@dataclass(frozen=True)
class TerasakaMatrix:
    """m x m matrix of Laurent polynomials built from a band presentation."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("entries must form a nonempty square matrix")
        for row in rows:
            for x in row:
                if not isinstance(x, LaurentPoly):
                    raise ValueError(f"entries must be LaurentPoly, got {x!r}")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)


def build_matrix(b: BandPresentation) -> TerasakaMatrix:
    """Instantiate the band matrix template.

    Row i (1-based, i < m) holds -t^{delta_i} on the diagonal and
    t^{delta_c_i} - 1 in the last column; the subdiagonal is 1 and the
    bottom-right corner is -1.
    """
    m = b.m
    zero = LaurentPoly.zero()
    rows = [[zero] * m for _ in range(m)]
    for i, (delta, delta_c) in enumerate(b.bands):
        rows[i][i] = LaurentPoly({delta: -1})
        rows[i + 1][i] = LaurentPoly.one()
        rows[i][m - 1] = LaurentPoly([(delta_c, 1), (0, -1)])
    rows[m - 1][m - 1] = LaurentPoly({0: -1})
    return TerasakaMatrix(rows)


def terasaka_determinant(b: BandPresentation) -> LaurentPoly:
    """Exact determinant of build_matrix(b).

    Uses the cofactor expansion along the first row; the (1, m) minor of
    the template is upper triangular with unit diagonal, which collapses
    the expansion to a linear recurrence over the bands.
    """
    det = LaurentPoly({0: -1})
    size = 1
    for delta, delta_c in reversed(b.bands):
        size += 1
        corner = LaurentPoly([(delta_c, 1), (0, -1)])
        sign = 1 if size % 2 == 1 else -1
        det = LaurentPoly({delta: -1}) * det + sign * corner
    return det


def fox_milnor_factor(b: BandPresentation) -> LaurentPoly:
    """Unit-normalized determinant of the band matrix."""
    return terasaka_determinant(b).normalize_unit()


def alexander_from_bands(b: BandPresentation) -> LaurentPoly:
    """Symmetrized f(t) * f(1/t) for f the Fox-Milnor factor."""
    f = fox_milnor_factor(b)
    return (f * f.involute()).symmetrize_alexander()


def det_cofactor(entries, row: int | None = None, col: int | None = None) -> LaurentPoly:
    """Laplace expansion along a chosen row or column (default: row 0).

    Exponential in the size; intended for small matrices and for
    cross-checking the other determinant paths.
    """
    rows = [list(r) for r in entries]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if row is not None and col is not None:
        raise ValueError("choose a row or a column, not both")
    if col is not None:
        rows = [[rows[i][j] for i in range(n)] for j in range(n)]
        row = col
    if row is not None:
        if not 0 <= row < n:
            raise ValueError("expansion index out of range")
        if row:
            rows.insert(0, rows.pop(row))
            if row % 2 == 1:
                rows[0] = [-x for x in rows[0]]
    return _det_laplace(rows)


def _det_laplace(rows):
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(entries) -> LaurentPoly:
    """Fraction-free elimination determinant; every division is exact."""
    a = [list(r) for r in entries]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return LaurentPoly.one()
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def verify_fox_milnor(delta: LaurentPoly, max_degree: int, max_coeff: int) -> LaurentPoly | None:
    """Bounded search for g with g(t) * g(1/t) unit-equivalent to delta.

    Iterates coefficient vectors (c_0, ..., c_max_degree) with
    |c_i| <= max_coeff lexicographically and returns the first match,
    unit-normalized, or None when the whole box fails.  Requires delta
    symmetric with delta(1) = 1.
    """
    if not delta.is_symmetric():
        raise ValueError("delta must be symmetric under t -> 1/t")
    if delta.eval_at_one() != 1:
        raise ValueError("delta must have value 1 at t = 1")
    if max_degree < 0 or max_coeff < 0:
        raise ValueError("search bounds must be nonnegative")
    target = delta.normalize_unit()
    span = range(-max_coeff, max_coeff + 1)
    for vec in itertools.product(span, repeat=max_degree + 1):
        g = LaurentPoly(dict(enumerate(vec)))
        if g.is_zero() or g.eval_at_one() ** 2 != 1:
            continue
        if unit_equivalent(g * g.involute(), target):
            return g.normalize_unit()
    return None
