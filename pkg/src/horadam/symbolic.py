"""Integer polynomials in a, b, p, q and the symbolic sequence terms.

:class:`MPoly` is a sparse map ``(e_a, e_b, e_p, e_q) -> coefficient`` with no
zero coefficients stored.  :class:`SymFrac` is an unreduced quotient of two
MPolys; equality is decided by cross-multiplication, which is exactly the
"cleared" comparison used when proving identities with denominators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Mapping

from .errors import UsageError
from .sequences import SeqKind

VARS = ("a", "b", "p", "q")
DEFAULT_BOUND = 16

Exp = tuple[int, int, int, int]
_ZERO_EXP: Exp = (0, 0, 0, 0)


class MPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None) -> None:
        self._terms: dict[Exp, int] = {e: c for e, c in (terms or {}).items() if c}
        self._hash: int | None = None

    @classmethod
    def const(cls, c: int) -> MPoly:
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> MPoly:
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})  # type: ignore[dict-item]

    @staticmethod
    def _wrap(x: Any) -> MPoly:
        if isinstance(x, MPoly):
            return x
        if isinstance(x, int):
            return MPoly.const(x)
        return NotImplemented

    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: Any) -> MPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> MPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> MPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> MPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exp, int] = {}
        for (a1, b1, p1, q1), c1 in self._terms.items():
            for (a2, b2, p2, q2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2, p1 + p2, q1 + q2)
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise UsageError("negative power of a polynomial")
        result, base = MPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def q_valuation(self) -> int:
        """Largest k with q^k dividing the polynomial (0 for the zero polynomial)."""
        return min((e[3] for e in self._terms), default=0)

    def shift_q(self, k: int) -> MPoly:
        """Multiply by q^k; k may be negative when the division is exact."""
        out = {}
        for (ea, eb, ep, eq), c in self._terms.items():
            if eq + k < 0:
                raise UsageError("q-shift would produce a negative exponent")
            out[(ea, eb, ep, eq + k)] = c
        return MPoly(out)

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def exact_div_int(self, g: int) -> MPoly:
        return MPoly({e: c // g for e, c in self._terms.items()})

    def evaluate(self, a: Any, b: Any, p: Any, q: Any) -> Any:
        vals = (a, b, p, q)
        total: Any = 0
        for e, c in self._terms.items():
            t: Any = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            total = total + t
        return total

    def ordered_terms(self) -> list[tuple[Exp, int]]:
        """Graded lexicographic order, a > b > p > q, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exp, int]]:
        return iter(self.ordered_terms())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.ordered_terms()):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self})"


A_, B_, P_, Q_ = (MPoly.var(v) for v in VARS)
_ONE = MPoly.const(1)


class QCleared:
    """``poly / q**qshift`` with the shift kept minimal."""

    __slots__ = ("poly", "qshift")

    def __init__(self, poly: MPoly, qshift: int = 0) -> None:
        if poly.is_zero():
            qshift = 0
        k = min(qshift, poly.q_valuation())
        if k:
            poly, qshift = poly.shift_q(-k), qshift - k
        self.poly = poly
        self.qshift = qshift

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QCleared):
            return NotImplemented
        return self.poly == other.poly and self.qshift == other.qshift

    def __hash__(self) -> int:
        return hash((self.poly, self.qshift))

    def evaluate(self, a: int, b: int, p: int, q: int) -> Fraction:
        return Fraction(self.poly.evaluate(a, b, p, q)) / Fraction(q) ** self.qshift

    def __str__(self) -> str:
        if self.qshift == 0:
            return str(self.poly)
        den = "q" if self.qshift == 1 else f"q^{self.qshift}"
        return f"({self.poly}) / {den}"

    def __repr__(self) -> str:
        return f"QCleared({self})"


def _initial_polys(kind: SeqKind) -> tuple[MPoly, MPoly]:
    if kind is SeqKind.W:
        return A_, B_
    if kind is SeqKind.H:
        return 2 * B_ - A_ * P_, B_ * P_ - 2 * A_ * Q_
    if kind is SeqKind.U:
        return MPoly.const(0), MPoly.const(1)
    return MPoly.const(2), P_


@lru_cache(maxsize=None)
def _forward(kind: SeqKind, n: int) -> MPoly:
    x0, x1 = _initial_polys(kind)
    if n == 0:
        return x0
    if n == 1:
        return x1
    return P_ * _forward(kind, n - 1) - Q_ * _forward(kind, n - 2)


@lru_cache(maxsize=None)
def _backward(kind: SeqKind, n: int) -> QCleared:
    # x_{-n} = (p x_{-n+1} - x_{-n+2}) / q, kept over the common denominator q^n
    if n <= 1:
        poly = _forward(kind, -n) if n <= 0 else P_ * _forward(kind, 0) - _forward(kind, 1)
        return QCleared(poly, max(n, 0))
    x1 = _backward(kind, n - 1)
    x2 = _backward(kind, n - 2)
    # align to q^(n-1) then divide by q
    num = P_ * x1.poly.shift_q(n - 1 - x1.qshift) - x2.poly.shift_q(n - 1 - x2.qshift)
    return QCleared(num, n)


def sym_term(kind: SeqKind | str, n: int, bound: int = DEFAULT_BOUND) -> QCleared:
    """The ``n``-th term as a polynomial in a, b, p, q over a power of q."""
    kind = SeqKind.parse(kind)
    if abs(n) > bound:
        raise UsageError(f"|n| = {abs(n)} exceeds the symbolic bound {bound}")
    if n >= 0:
        return QCleared(_forward(kind, n))
    return _backward(kind, -n)


def sym_table(maxn: int, bound: int = DEFAULT_BOUND) -> list[str]:
    """Golden-file lines ``w_n = ...`` then ``h_n = ...`` for n = 0..maxn."""
    if maxn < 0:
        raise UsageError("maxn must be >= 0")
    lines = []
    for kind in (SeqKind.W, SeqKind.H):
        for n in range(maxn + 1):
            lines.append(f"{kind.value}_{n} = {sym_term(kind, n, bound)}")
    return lines


class SymFrac:
    """Unreduced quotient ``num / den`` of polynomials.

    Only powers of q and integer content are cancelled; anything else stays in
    the denominator, which is harmless because equality cross-multiplies.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None) -> None:
        den = _ONE if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("SymFrac with zero denominator")
        if num.is_zero():
            den = _ONE
        elif den is not _ONE and den != _ONE:
            k = min(num.q_valuation(), den.q_valuation())
            if k:
                num, den = num.shift_q(-k), den.shift_q(-k)
            g = math.gcd(num.content(), den.content())
            lead = den._terms[max(den._terms, key=lambda e: (sum(e), e))]
            if lead < 0:
                g = -g
            if g != 1:
                num, den = num.exact_div_int(g), den.exact_div_int(g)
        self.num = num
        self.den = den

    @staticmethod
    def lift(x: Any) -> SymFrac:
        if isinstance(x, SymFrac):
            return x
        if isinstance(x, MPoly):
            return SymFrac(x)
        if isinstance(x, int):
            return SymFrac(MPoly.const(x))
        if isinstance(x, Fraction):
            return SymFrac(MPoly.const(x.numerator), MPoly.const(x.denominator))
        return NotImplemented

    def __add__(self, other: Any) -> SymFrac:
        o = self.lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return SymFrac(self.num + o.num, self.den)
        return SymFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> SymFrac:
        return SymFrac(-self.num, self.den)

    def __sub__(self, other: Any) -> SymFrac:
        o = self.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> SymFrac:
        return (-self) + other

    def __mul__(self, other: Any) -> SymFrac:
        o = self.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return SymFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> SymFrac:
        o = self.lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        return SymFrac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Any) -> SymFrac:
        return self.lift(other) / self

    def __pow__(self, n: int) -> SymFrac:
        if n < 0:
            return SymFrac(MPoly.const(1)) / SymFrac(self.num**-n, self.den**-n)
        return SymFrac(self.num**n, self.den**n)

    def cleared_difference(self, other: Any) -> MPoly:
        o = self.lift(other)
        return self.num * o.den - o.num * self.den

    def __eq__(self, other: object) -> bool:
        o = self.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.cleared_difference(o).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, a: int, b: int, p: int, q: int) -> Fraction:
        return Fraction(self.num.evaluate(a, b, p, q)) / self.den.evaluate(a, b, p, q)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"SymFrac({self})"
