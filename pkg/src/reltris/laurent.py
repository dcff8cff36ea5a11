"""Exact arithmetic for integer Laurent polynomials in one variable t.

A polynomial is stored sparsely as a map from exponent to coefficient.
Exponents may be negative, coefficients are arbitrary-precision integers,
and no zero coefficient is ever stored, so two values are equal exactly
when their maps are equal.  The zero polynomial is the empty map.
"""

from __future__ import annotations

from .errors import ParseError


def _check_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


class LaurentPoly:
    """An integer Laurent polynomial, immutable by convention.

    Construct from a mapping {exponent: coefficient} or an iterable of
    (exponent, coefficient) pairs; repeated exponents accumulate.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        acc: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, c in items:
                _check_int(e, "exponent")
                _check_int(c, "coefficient")
                acc[e] = acc.get(e, 0) + c
        self._coeffs = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        """The single term coeff * t^exp."""
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._coeffs)
        for e, v in other._coeffs.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._coeffs.items():
            for e2, v2 in other._coeffs.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    # -- the operations the invariants are built from ----------------------

    def involute(self) -> "LaurentPoly":
        """Substitute t -> 1/t, negating every exponent."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        return self.involute() == self

    def eval_at_one(self) -> int:
        """Value at t = 1, the sum of all coefficients."""
        return sum(self._coeffs.values())

    def second_derivative_at_one(self) -> int:
        """Second derivative at t = 1: sum of coeff * e * (e - 1)."""
        return sum(c * e * (e - 1) for e, c in self._coeffs.items())

    def normalize_unit(self) -> "LaurentPoly":
        """Canonical representative of the unit orbit {+-t^k * self}.

        Shifts so the minimum exponent is 0 and flips the sign so the
        constant term is positive.  Rejects the zero polynomial.
        """
        if not self._coeffs:
            raise ValueError("cannot unit-normalize the zero polynomial")
        lo = self.min_exp()
        c = {e - lo: v for e, v in self._coeffs.items()}
        if c[0] < 0:
            c = {e: -v for e, v in c.items()}
        return LaurentPoly(c)

    def symmetrize_alexander(self) -> "LaurentPoly":
        """The unit multiple fixed by involute() with positive value at 1.

        Only the exponent shift centering the support can make a Laurent
        polynomial palindromic, so that single candidate is checked.
        Raises ValueError when no palindromic unit multiple exists or the
        value at t = 1 is zero (then the sign cannot be normalized).
        """
        if not self._coeffs:
            raise ValueError("cannot symmetrize the zero polynomial")
        lo, hi = self.min_exp(), self.max_exp()
        if (lo + hi) % 2 != 0:
            raise ValueError("no palindromic unit multiple exists")
        shift = -(lo + hi) // 2
        c = {e + shift: v for e, v in self._coeffs.items()}
        if any(c.get(-e, 0) != v for e, v in c.items()):
            raise ValueError("no palindromic unit multiple exists")
        total = sum(c.values())
        if total == 0:
            raise ValueError("value at t=1 is zero; the sign cannot be normalized")
        if total < 0:
            c = {e: -v for e, v in c.items()}
        return LaurentPoly(c)

    # -- serialization and rendering ----------------------------------------

    def to_json_dict(self) -> dict[str, int]:
        """JSON form: exponent (as a string key) -> coefficient."""
        return {str(e): self._coeffs[e] for e in sorted(self._coeffs)}

    @classmethod
    def from_json_dict(cls, obj) -> "LaurentPoly":
        if not isinstance(obj, dict):
            raise ParseError("Laurent polynomial JSON must be an object of exponent: coefficient")
        coeffs = {}
        for key, val in obj.items():
            try:
                e = int(key)
            except (TypeError, ValueError):
                raise ParseError(f"bad exponent key {key!r}") from None
            if not isinstance(val, int) or isinstance(val, bool):
                raise ParseError(f"bad coefficient {val!r} for exponent {key}")
            coeffs[e] = coeffs.get(e, 0) + val
        return cls(coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            body = str(abs(c)) if e == 0 else f"{abs(c)}*t^{e}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        inner = ", ".join(f"{e}: {self._coeffs[e]}" for e in sorted(self._coeffs))
        return f"LaurentPoly({{{inner}}})"


def unit_equivalent(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True when a = +-t^k * b for some integer k."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.normalize_unit() == b.normalize_unit()


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient a / b when b divides a in the Laurent ring.

    Raises ZeroDivisionError for b = 0 and ValueError when the division
    is not exact.  Division by units (monomials) always succeeds.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    la, lb = a.min_exp(), b.min_exp()
    rem = {e - la: c for e, c in a.coeffs.items()}
    den = {e - lb: c for e, c in b.coeffs.items()}
    db = max(den)
    lead = den[db]
    quo: dict[int, int] = {}
    while rem:
        da = max(rem)
        if da < db:
            raise ValueError("not divisible")
        c, r = divmod(rem[da], lead)
        if r:
            raise ValueError("not divisible")
        qe = da - db
        quo[qe] = c
        for e, v in den.items():
            ne = qe + e
            nv = rem.get(ne, 0) - c * v
            if nv:
                rem[ne] = nv
            else:
                rem.pop(ne, None)
    return LaurentPoly({e + (la - lb): c for e, c in quo.items()})
