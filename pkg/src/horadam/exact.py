"""Exact arithmetic substrate.

Scalars are ints or :class:`fractions.Fraction` (always canonical: positive
denominator, reduced); entries stay ints until a division needs a fraction.  :class:`QuadElem` models ``base + coef*w`` in the ring
Q[w]/(w^2 - D) and :class:`Mat2` is a 2x2 matrix with exact entries.

Both containers are written against the field operations only, so the
symbolic oracle reuses them with polynomial-fraction coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import NotInvertible, UsageError

Rational = Fraction


def _div(x: Any, y: Any) -> Any:
    # entries stay ints for speed, so int / int must become a Fraction here
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def _is_zero(x: Any) -> bool:
    return x == 0


@dataclass(frozen=True)
class QuadElem:
    """Element ``base + coef*w`` with ``w*w == disc``.

    The ring is a field only when ``disc`` is not a rational square; inversion
    therefore checks the norm instead of assuming it is nonzero.
    """

    base: Any
    coef: Any
    disc: Any

    @classmethod
    def scalar(cls, x: Any, disc: Any) -> QuadElem:
        return cls(x, 0 * disc, disc)

    @classmethod
    def omega(cls, disc: Any) -> QuadElem:
        return cls(0 * disc, 0 * disc + 1, disc)

    def _coerce(self, other: Any) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.disc != self.disc:
                raise UsageError(f"disc mismatch: {self.disc} vs {other.disc}")
            return other
        return QuadElem(other, 0 * self.coef, self.disc)

    def __add__(self, other: Any) -> QuadElem:
        o = self._coerce(other)
        return QuadElem(self.base + o.base, self.coef + o.coef, self.disc)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.base, -self.coef, self.disc)

    def __sub__(self, other: Any) -> QuadElem:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> QuadElem:
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> QuadElem:
        return quad_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> QuadElem:
        return quad_mul(self, quad_inv(self._coerce(other)))

    def __rtruediv__(self, other: Any) -> QuadElem:
        return quad_mul(self._coerce(other), quad_inv(self))

    def __pow__(self, n: int) -> QuadElem:
        base = quad_inv(self) if n < 0 else self
        n = abs(n)
        result = QuadElem.scalar(1, self.disc)
        while n:
            if n & 1:
                result = quad_mul(result, base)
            n >>= 1
            if n:
                base = quad_mul(base, base)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadElem):
            if isinstance(other, (int, Fraction)):
                return self.coef == 0 and self.base == other
            return NotImplemented
        return (
            self.disc == other.disc
            and self.base == other.base
            and self.coef == other.coef
        )

    __hash__ = None  # type: ignore[assignment]

    def conj(self) -> QuadElem:
        return QuadElem(self.base, -self.coef, self.disc)

    def norm(self) -> Any:
        return self.base * self.base - self.disc * self.coef * self.coef

    def is_scalar(self) -> bool:
        return _is_zero(self.coef)

    def __repr__(self) -> str:
        return f"QuadElem({self.base}, {self.coef}, disc={self.disc})"


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    if x.disc != y.disc:
        raise UsageError(f"disc mismatch: {x.disc} vs {y.disc}")
    return QuadElem(
        x.base * y.base + x.coef * y.coef * x.disc,
        x.base * y.coef + y.base * x.coef,
        x.disc,
    )


def quad_inv(x: QuadElem) -> QuadElem:
    """Inverse via the conjugate; raises NotInvertible on a zero norm."""
    n = x.norm()
    if _is_zero(n):
        raise NotInvertible(f"{x!r} has zero norm")
    return QuadElem(_div(x.base, n), _div(-x.coef, n), x.disc)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix ``[[e11, e12], [e21, e22]]`` with exact entries."""

    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls, one: Any = 1) -> Mat2:
        return cls(one, 0 * one, 0 * one, one)

    @classmethod
    def companion(cls, p: Any, q: Any) -> Mat2:
        """The matrix ``[[p, -q], [1, 0]]`` driving ``x_n = p x_{n-1} - q x_{n-2}``."""
        return cls(p, -q, 0 * p + 1, 0 * p)

    def __matmul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.e11 * o.e11 + self.e12 * o.e21,
            self.e11 * o.e12 + self.e12 * o.e22,
            self.e21 * o.e11 + self.e22 * o.e21,
            self.e21 * o.e12 + self.e22 * o.e22,
        )

    def det(self) -> Any:
        return self.e11 * self.e22 - self.e12 * self.e21

    def inverse(self) -> Mat2:
        """Adjugate over determinant."""
        d = self.det()
        if _is_zero(d):
            raise NotInvertible("singular matrix")
        return Mat2(_div(self.e22, d), _div(-self.e12, d), _div(-self.e21, d), _div(self.e11, d))

    def rows(self) -> tuple[tuple[Any, Any], tuple[Any, Any]]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    __hash__ = None  # type: ignore[assignment]


def mat_pow(m: Mat2, n: int) -> Mat2:
    """``m**n`` by square-and-multiply; negative ``n`` goes through the inverse."""
    if n < 0:
        m, n = m.inverse(), -n
    one = m.e11 * 0 + 1
    result = Mat2.identity(one)
    started = False
    # left-to-right keeps the big multiplications against the small base
    for bit in bin(n)[2:] if n else "":
        if started:
            result = result @ result
        if bit == "1":
            result = result @ m if started else m
            started = True
    return result
