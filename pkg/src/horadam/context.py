"""Evaluation contexts for identity checks.

An identity is written once as a function of a context ``c`` that supplies
the scalars ``a, b, p, q, D, E``, terms ``c.h(n)``, ``c.w(n)``, ``c.u(n)``,
``c.v(n)`` and the helpers ``c.qpow``/``c.div``.  :class:`NumericContext`
backs them with exact numbers for one parameter set; the symbolic context in
:mod:`horadam.proof` backs them with polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Any

from .errors import DegenerateQ
from .exact import Mat2
from .sequences import EVALUATORS, BinetData, Params, SeqKind, series_div


def _norm(x: Fraction) -> int | Fraction:
    return x.numerator if x.denominator == 1 else x


class _TermTable:
    """Terms of one sequence cached in both directions from index 0."""

    __slots__ = ("pos", "neg", "p", "q")

    def __init__(self, x0: int, x1: int, p: int, q: int) -> None:
        self.pos: list[int] = [x0, x1]
        self.neg: list[int | Fraction] = []  # neg[j] = x_{-(j+1)}
        self.p, self.q = p, q

    def get(self, n: int) -> int | Fraction:
        if n >= 0:
            pos = self.pos
            while len(pos) <= n:
                pos.append(self.p * pos[-1] - self.q * pos[-2])
            return pos[n]
        if self.q == 0:
            raise DegenerateQ(f"negative index {n} needs q != 0")
        neg = self.neg
        while len(neg) < -n:
            # x_{-j-1} = (p x_{-j} - x_{-j+1}) / q
            j = len(neg)
            x_j = neg[j - 1] if j >= 1 else self.pos[0]
            x_j1 = neg[j - 2] if j >= 2 else self.pos[1 - j]
            neg.append(_norm(Fraction(self.p * x_j - x_j1) / self.q))
        return neg[-n - 1]


class NumericContext:
    """Exact values for a single parameter set.

    ``evaluator="table"`` memoizes the recurrence in both directions; any key
    of :data:`horadam.sequences.EVALUATORS` evaluates every term afresh through
    that evaluator instead.
    """

    symbolic = False

    def __init__(self, params: Params, evaluator: str = "table") -> None:
        self.params = params
        self.evaluator = evaluator
        self.a, self.b, self.p, self.q = params.as_tuple()
        self.D = params.D
        self.E = params.E
        if evaluator == "table":
            self._tables = {
                k: _TermTable(*params.initial(k), self.p, self.q) for k in SeqKind
            }
        else:
            self._fn = EVALUATORS[evaluator]
            self._memo: dict[tuple[SeqKind, int], Any] = {}

    def term(self, kind: SeqKind, n: int) -> int | Fraction:
        if self.evaluator == "table":
            return self._tables[kind].get(n)
        key = (kind, n)
        if key not in self._memo:
            self._memo[key] = _norm(self._fn(self.params, kind, n))
        return self._memo[key]

    def h(self, n: int) -> int | Fraction:
        return self.term(SeqKind.H, n)

    def w(self, n: int) -> int | Fraction:
        return self.term(SeqKind.W, n)

    def u(self, n: int) -> int | Fraction:
        return self.term(SeqKind.U, n)

    def v(self, n: int) -> int | Fraction:
        return self.term(SeqKind.V, n)

    def qpow(self, k: int) -> int | Fraction:
        if k >= 0:
            return self.q**k
        if self.q == 0:
            raise DegenerateQ(f"q^{k} with q = 0")
        return _norm(Fraction(1, self.q ** (-k)))

    def div(self, x: Any, y: Any) -> Any:
        r = Fraction(x) / y if isinstance(x, int) and isinstance(y, int) else x / y
        return _norm(r) if isinstance(r, Fraction) else r

    @cached_property
    def _binet(self) -> BinetData:
        return BinetData.of(self.params)

    def binet(self) -> BinetData:
        return self._binet

    def companion(self) -> Mat2:
        return Mat2.companion(self.p, self.q)

    def mat(self, e11: Any, e12: Any, e21: Any, e22: Any) -> Mat2:
        return Mat2(e11, e12, e21, e22)

    def series(self, num: list[Any], den: list[Any], count: int) -> list[Any]:
        return series_div(num, den, count)
