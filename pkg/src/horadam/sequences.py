"""Horadam (w), Horadam-Lucas (h) and the u/v specializations.

Every term is available at any integer index through three independent
evaluators:

* :func:`term_recurrence` -- the defining recurrence, run backwards for
  negative indices;
* :func:`term_matrix` -- powers of the companion matrix, O(log |n|);
* :func:`term_binet` -- the closed form evaluated exactly in Q[sqrt(D)].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Sequence

from .errors import DegenerateQ, InvariantViolation, RepeatedRoot, UsageError
from .exact import Mat2, QuadElem, mat_pow

# |n| above which `term` switches from the recurrence to matrix powers
MATRIX_CROSSOVER = 64


class SeqKind(enum.Enum):
    W = "w"
    H = "h"
    U = "u"
    V = "v"

    @classmethod
    def parse(cls, s: str | SeqKind) -> SeqKind:
        if isinstance(s, SeqKind):
            return s
        try:
            return cls(s.lower())
        except ValueError:
            raise UsageError(f"unknown sequence kind {s!r}; expected one of w, h, u, v") from None


@dataclass(frozen=True)
class Params:
    """The four defining integers ``(a, b; p, q)``."""

    a: int
    b: int
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "p", "q"):
            if not isinstance(getattr(self, name), int):
                raise UsageError(f"parameter {name} must be an integer")

    @cached_property
    def D(self) -> int:
        return self.p * self.p - 4 * self.q

    @cached_property
    def E(self) -> int:
        return self.b * self.b - self.a * self.b * self.p + self.a * self.a * self.q

    @cached_property
    def h0(self) -> int:
        return 2 * self.b - self.a * self.p

    @cached_property
    def h1(self) -> int:
        return self.b * self.p - 2 * self.a * self.q

    def initial(self, kind: SeqKind | str) -> tuple[int, int]:
        """``(x_0, x_1)`` for the given sequence; u and v ignore ``a`` and ``b``."""
        kind = SeqKind.parse(kind)
        if kind is SeqKind.W:
            return self.a, self.b
        if kind is SeqKind.H:
            return self.h0, self.h1
        if kind is SeqKind.U:
            return 0, 1
        return 2, self.p

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.p, self.q)

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "p": self.p, "q": self.q}

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.p},{self.q})"


@dataclass(frozen=True)
class BinetData:
    """Roots and Binet weights as elements of Q[w], w^2 = D."""

    alpha: QuadElem
    beta: QuadElem
    d: QuadElem
    A: QuadElem
    B: QuadElem

    @classmethod
    def build(cls, a: Any, b: Any, p: Any, q: Any) -> BinetData:
        disc = p * p - 4 * q
        d = QuadElem.omega(disc)
        half_p = QuadElem.scalar(p, disc) * QuadElem.scalar(Fraction(1, 2), disc)
        half_d = d * QuadElem.scalar(Fraction(1, 2), disc)
        alpha = half_p + half_d
        beta = half_p - half_d
        A = QuadElem.scalar(b, disc) - beta * a
        B = QuadElem.scalar(b, disc) - alpha * a
        return cls(alpha, beta, d, A, B)

    @classmethod
    def of(cls, params: Params) -> BinetData:
        if params.D == 0:
            raise RepeatedRoot(f"p^2 - 4q = 0 for {params}")
        return cls.build(params.a, params.b, params.p, params.q)


def _check_index(params: Params, n: int) -> None:
    if n < 0 and params.q == 0:
        raise DegenerateQ(f"negative index {n} needs q != 0")


def term_recurrence(params: Params, kind: SeqKind | str, n: int) -> Fraction:
    """Walk the recurrence from ``(x_0, x_1)``; backwards when ``n < 0``."""
    kind = SeqKind.parse(kind)
    _check_index(params, n)
    p, q = params.p, params.q
    x0, x1 = params.initial(kind)
    if n >= 0:
        prev, cur = x0, x1
        for _ in range(n):
            prev, cur = cur, p * cur - q * prev
        return Fraction(prev)
    # x_{k-1} = (p x_k - x_{k+1}) / q
    cur, nxt = Fraction(x0), Fraction(x1)
    for _ in range(-n):
        cur, nxt = (p * cur - nxt) / q, cur
    return cur


def u_pair(params: Params, n: int) -> tuple[Any, Any]:
    """``(u_n, u_{n-1})`` read off the first column of ``R**(n-1)``."""
    m = mat_pow(Mat2.companion(params.p, params.q), n - 1)
    return m.e11, m.e21


def term_matrix(params: Params, kind: SeqKind | str, n: int) -> Fraction:
    """Evaluate through powers of the companion matrix."""
    kind = SeqKind.parse(kind)
    _check_index(params, n)
    x0, x1 = params.initial(kind)
    if n == 0:
        return Fraction(x0)
    un, un1 = u_pair(params, n)
    # any solution x of the recurrence satisfies x_n = x_1 u_n - q x_0 u_{n-1}
    return Fraction(x1 * un - params.q * x0 * un1)


def term_binet(params: Params, kind: SeqKind | str, n: int) -> Fraction:
    """Evaluate the closed form in Q[sqrt(D)] and return its rational part.

    Works with the doubled roots ``2 alpha = p + w`` and ``2 beta = p - w``,
    which have integer coordinates, and rescales by a power of two at the end.
    """
    kind = SeqKind.parse(kind)
    if params.D == 0:
        raise RepeatedRoot(f"p^2 - 4q = 0 for {params}")
    _check_index(params, n)
    a, b, p, disc = params.a, params.b, params.p, params.D
    an, bn = QuadElem(p, 1, disc) ** n, QuadElem(p, -1, disc) ** n
    scale = Fraction(2) ** n
    if kind is SeqKind.H or kind is SeqKind.W:
        # 2A = 2b - a(p - w), 2B = 2b - a(p + w)
        A2, B2 = QuadElem(2 * b - a * p, a, disc), QuadElem(2 * b - a * p, -a, disc)
        if kind is SeqKind.H:
            val = (A2 * an + B2 * bn) / (2 * scale)
        else:
            val = (A2 * an - B2 * bn) / QuadElem(0, 2 * scale, disc)
    elif kind is SeqKind.U:
        val = (an - bn) / QuadElem(0, scale, disc)
    else:
        val = (an + bn) / scale
    if not val.is_scalar():
        raise InvariantViolation(f"Binet value for {kind.value}_{n} at {params} is irrational: {val}")
    return Fraction(val.base)


EVALUATORS = {
    "naive": term_recurrence,
    "matrix": term_matrix,
    "binet": term_binet,
}


def term(params: Params, kind: SeqKind | str, n: int, evaluator: str = "auto") -> Fraction:
    if evaluator == "auto":
        evaluator = "matrix" if abs(n) > MATRIX_CROSSOVER else "naive"
    try:
        fn = EVALUATORS[evaluator]
    except KeyError:
        raise UsageError(f"unknown evaluator {evaluator!r}") from None
    return fn(params, kind, n)


def series_div(num: Sequence[Any], den: Sequence[Any], count: int) -> list[Any]:
    """First ``count`` coefficients of ``num(x)/den(x)``; requires ``den[0] == 1``."""
    if den[0] != 1:
        raise UsageError("series_div needs a monic constant term in the denominator")
    out: list[Any] = []
    for n in range(count):
        c = num[n] if n < len(num) else 0 * num[0]
        for j in range(1, min(n, len(den) - 1) + 1):
            c = c - den[j] * out[n - j]
        out.append(c)
    return out


def gf_coefficients(params: Params, count: int) -> list[Fraction]:
    """Power-series coefficients of (h0 + (h1 - p h0) x) / (1 - p x + q x^2)."""
    if count < 1:
        raise UsageError("count must be >= 1")
    p, q = params.p, params.q
    num = [params.h0, params.h1 - p * params.h0]
    return [Fraction(c) for c in series_div(num, [1, -p, q], count)]


CLASSICAL_ROWS = {
    (0, 1, 1, -1): "Fibonacci/Lucas",
    (0, 1, 2, -1): "Pell/Pell-Lucas",
    (0, 1, 1, -2): "Jacobsthal/Jacobsthal-Lucas",
}


def classify(params: Params) -> str | None:
    """Name the classical specialization, if any.

    The named rows take precedence over the parametric families
    ``h(0, 1; p, q) = v``, ``h(0, p; p, q) = p v`` and ``h(2, p; p, q) = d^2 u``.
    """
    name = CLASSICAL_ROWS.get(params.as_tuple())
    if name is not None:
        return name
    a, b, p = params.a, params.b, params.p
    if a == 0 and b == 1:
        return "h = v"
    if b == p and a == 0:
        return "h = p v"
    if b == p and a == 2:
        return "h = d^2 u"
    return None
