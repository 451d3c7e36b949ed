"""The identity catalog.

Each :class:`Identity` is data: its free indices, guards, a function returning
``(lhs, rhs)`` from an evaluation context, and a fixed status.  Printed forms
that fail exact evaluation are ``DISPUTED`` and point at a ``CORRECTION``
entry holding the repaired statement.

Conventions used by the evaluators:

* ``c.div`` is used for every division so that integer operands stay exact;
* sums ``sum_{i=1}^{n}`` with ``n < 0`` mean ``-sum_{i=n+1}^{0}``, the
  convention under which telescoped closed forms hold for every integer n;
* chained equalities ``x = y = z`` compare ``(x, x)`` against ``(y, z)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable

from .exact import QuadElem, mat_pow


class Status(enum.Enum):
    CONFIRMED = "CONFIRMED"
    DISPUTED = "DISPUTED"
    CORRECTION = "CORRECTION"


class IdentityId(enum.Enum):
    BINET_H = "binet_h"
    BINET_W = "binet_w"
    DE_MOIVRE = "de_moivre"
    BRAHMAGUPTA = "brahmagupta"
    UNIVERSAL_REC = "universal_rec"
    INTERREL_H_FROM_W = "interrel_h_from_w"
    INTERREL_W_FROM_H_PRINTED = "interrel_w_from_h_printed"
    INTERREL_W_FROM_H_CORRECTED = "interrel_w_from_h_corrected"
    NEG_REC_H = "neg_rec_h"
    NORM = "norm"
    ADDSUB_W_PLUS = "addsub_w_plus"
    ADDSUB_W_MINUS = "addsub_w_minus"
    ADDSUB_H_PLUS = "addsub_h_plus"
    ADDSUB_H_MINUS = "addsub_h_minus"
    DOUBLE_W_PLUS_PRINTED = "double_w_plus_printed"
    DOUBLE_W_PLUS_CORRECTED = "double_w_plus_corrected"
    DOUBLE_W_MINUS_PRINTED = "double_w_minus_printed"
    DOUBLE_W_MINUS_CORRECTED = "double_w_minus_corrected"
    DOUBLE_H_PLUS_PRINTED = "double_h_plus_printed"
    DOUBLE_H_PLUS_CORRECTED = "double_h_plus_corrected"
    DOUBLE_H_MINUS_PRINTED = "double_h_minus_printed"
    DOUBLE_H_MINUS_CORRECTED = "double_h_minus_corrected"
    GF_PRINTED = "gf_printed"
    GF_CORRECTED = "gf_corrected"
    EGF = "egf"
    PYTH_RELATION = "pyth_relation"
    PYTH_PRINTED = "pyth_printed"
    PYTH_CORRECTED = "pyth_corrected"
    SQDIFF = "sqdiff"
    VAJDA = "vajda"
    CATALAN = "catalan"
    CASSINI = "cassini"
    DOCAGNE = "docagne"
    GELIN_CESARO = "gelin_cesaro"
    SUM_LINEAR = "sum_linear"
    SUM_ALT = "sum_alt"
    SUM_EVEN = "sum_even"
    SUM_ODD = "sum_odd"
    LINFORM_U = "linform_u"
    LINFORM_V = "linform_v"
    VU_RELATION = "vu_relation"
    MATRIX_POWER = "matrix_power"
    STATE_MATRIX = "state_matrix"
    HONSBERGER_W_PRINTED = "honsberger_w_printed"
    HONSBERGER_W_CORRECTED = "honsberger_w_corrected"
    HONSBERGER_H = "honsberger_h"
    SHIFTBACK_H = "shiftback_h"
    SHIFTBACK_W = "shiftback_w"
    MELHAM = "melham"
    BILINEAR_H = "bilinear_h"
    BILINEAR_W = "bilinear_w"
    NEG_W_PRINTED = "neg_w_printed"
    NEG_W_CORRECTED = "neg_w_corrected"
    NEG_U_PRINTED = "neg_u_printed"
    NEG_U_CORRECTED = "neg_u_corrected"
    NEG_V = "neg_v"

    @classmethod
    def parse(cls, s: str | IdentityId) -> IdentityId:
        from .errors import UsageError

        if isinstance(s, IdentityId):
            return s
        key = s.strip()
        try:
            return cls(key.lower())
        except ValueError:
            pass
        try:
            return cls[key.upper()]
        except KeyError:
            raise UsageError(f"unknown identity id {s!r}") from None


Guard = tuple[str, Callable[..., bool]]


@dataclass(frozen=True)
class Identity:
    id: IdentityId
    status: Status
    formula: str
    indices: tuple[str, ...]
    evaluate: Callable[..., tuple[Any, Any]]
    guards: tuple[Guard, ...] = ()
    distinct_roots: bool = False
    # window each index is swept over: "n", "aux" or "mult"
    roles: dict[str, str] = field(default_factory=dict)
    # indices computed from the others during a sweep
    derived: Callable[[dict[str, int]], dict[str, int]] | None = None
    side_condition: Callable[[dict[str, int]], bool] | None = None
    pair: IdentityId | None = None
    cleared: str = ""

    def role(self, name: str) -> str:
        return self.roles.get(name, "n" if name == "n" else "aux")

    @property
    def free_indices(self) -> tuple[str, ...]:
        return tuple(i for i in self.indices if self.roles.get(i) != "derived")


def _sign(i: int) -> int:
    return -1 if i % 2 else 1


def _partial_sum(f: Callable[[int], Any], n: int) -> Any:
    if n >= 0:
        return sum((f(i) for i in range(1, n + 1)), 0)
    return -sum((f(i) for i in range(n + 1, 1)), 0)


def _q_zero(c: Any, **_: int) -> bool:
    return c.q == 0


def _n_negative(c: Any, n: int, **_: int) -> bool:
    return n < 0


def _n_nonpositive(c: Any, n: int, **_: int) -> bool:
    return n < 1


# -- evaluators ---------------------------------------------------------------


def _binet_h(c, n):
    bd = c.binet()
    return QuadElem.scalar(c.h(n), bd.d.disc), bd.A * bd.alpha**n + bd.B * bd.beta**n


def _binet_w(c, n):
    bd = c.binet()
    rhs = (bd.A * bd.alpha**n - bd.B * bd.beta**n) / bd.d
    return QuadElem.scalar(c.w(n), bd.d.disc), rhs


def _de_moivre(c, n, k):
    bd = c.binet()
    x = lambda j: c.h(j + 1) - c.q * c.h(j - 1)  # noqa: E731
    two_a_d = bd.A * bd.d * 2
    z = (bd.d * c.h(n) + x(n)) / two_a_d
    return z**k, (bd.d * c.h(k * n) + x(k * n)) / two_a_d


def _brahmagupta(c, n, m, r, s, k, t):
    hn, hm, hr, hs = c.h(n), c.h(m), c.h(r), c.h(s)
    lhs = (k * hn**2 + t * hm**2) * (k * hr**2 + t * hs**2)
    rhs = (k * hn * hr - t * hm * hs) ** 2 + k * t * (hn * hs + hm * hr) ** 2
    return lhs, rhs


def _universal_den(c, n):
    return c.h(n - 1) * c.h(n + 1) - c.h(n) ** 2


def _universal_rec(c, n):
    h = c.h
    num = h(n + 1) ** 3 - 2 * h(n) * h(n + 1) * h(n + 2) + h(n - 1) * h(n + 2) ** 2
    return h(n + 3), c.div(num, _universal_den(c, n))


def _interrel_h(c, n):
    return c.h(n), c.w(n + 1) - c.q * c.w(n - 1)


def _interrel_w_printed(c, n):
    return c.w(n), c.div(2 * c.h(n + 1) - c.p * c.h(n - 1), c.D)


def _interrel_w_corrected(c, n):
    return c.w(n), c.div(2 * c.h(n + 1) - c.p * c.h(n), c.D)


def _neg_rec_h(c, n):
    # hbar_j = h_{-j}; initial value and reversed recurrence
    hbar = lambda j: c.h(-j)  # noqa: E731
    first = c.div(c.b * c.p - c.a * (c.p**2 - 2 * c.q), c.q)
    step = c.div(c.p * hbar(n) - hbar(n - 1), c.q)
    return (hbar(1), hbar(n + 1)), (first, step)


def _norm_id(c, n):
    return c.h(n) ** 2 - c.D * c.w(n) ** 2, 4 * c.E * c.qpow(n)


def _addsub_w_plus(c, m, n):
    return c.w(m + n) + c.qpow(n) * c.w(m - n), c.w(m) * c.v(n)


def _addsub_w_minus(c, m, n):
    return c.w(m + n) - c.qpow(n) * c.w(m - n), c.h(m) * c.u(n)


def _addsub_h_plus(c, m, n):
    return c.h(m + n) + c.qpow(n) * c.h(m - n), c.h(m) * c.v(n)


def _addsub_h_minus(c, m, n):
    return c.h(m + n) - c.qpow(n) * c.h(m - n), c.D * c.w(m) * c.u(n)


def _double_w_plus_printed(c, m, n):
    return 2 * c.w(m + n), c.w(m) * c.v(n) + c.v(m) * c.w(n)


def _double_w_plus_corrected(c, m, n):
    return 2 * c.w(m + n), c.w(m) * c.v(n) + c.h(m) * c.u(n)


def _double_w_minus_printed(c, m, n):
    return 2 * c.qpow(n) * c.w(m - n), c.w(m) * c.v(n) - c.v(m) * c.w(n)


def _double_w_minus_corrected(c, m, n):
    return 2 * c.qpow(n) * c.w(m - n), c.w(m) * c.v(n) - c.h(m) * c.u(n)


def _double_h_plus_printed(c, m, n):
    return 2 * c.h(m + n), c.h(m) * (c.v(n) + c.D * c.u(n))


def _double_h_plus_corrected(c, m, n):
    return 2 * c.h(m + n), c.h(m) * c.v(n) + c.D * c.w(m) * c.u(n)


def _double_h_minus_printed(c, m, n):
    return 2 * c.qpow(n) * c.h(m + n), c.h(m) * (c.v(n) - c.D * c.u(n))


def _double_h_minus_corrected(c, m, n):
    return 2 * c.qpow(n) * c.h(m - n), c.h(m) * c.v(n) - c.D * c.w(m) * c.u(n)


def _gf(sign):
    def evaluate(c, n):
        num = [c.h(0), c.h(1) - c.p * c.h(0)]
        coeffs = c.series(num, [1, -c.p, sign * c.q], n + 1)
        return coeffs[n], c.h(n)

    return evaluate


def _egf(c, n):
    # n! times the x^n Taylor coefficient of A e^{alpha x} + B e^{beta x}
    bd = c.binet()
    fact = math.factorial(n)
    coeff = (bd.A * bd.alpha**n + bd.B * bd.beta**n) * QuadElem.scalar(
        c.div(1, fact), bd.d.disc
    )
    return coeff * fact, QuadElem.scalar(c.h(n), bd.d.disc)


def _pyth_relation(c, n):
    return (c.p**2 - c.q) * c.h(n + 2) - c.p * c.h(n + 3), c.q**2 * c.h(n)


def _pyth_printed(c, n):
    P = c.div(c.p**2 - c.q, 2 * c.q**2)
    x = c.div(c.p, c.q**2) * c.h(n) * c.h(n + 3)
    y = 2 * P * c.h(n + 2) * (2 * P * c.h(n + 2) - c.h(n))
    z = c.h(n) ** 2 + y
    return x**2 + y**2, z**2


def pyth_legs(c, n):
    """``(s, t)`` with ``s - t = p h_{n+3}``: s = (p^2-q) h_{n+2}, t = q^2 h_n."""
    return (c.p**2 - c.q) * c.h(n + 2), c.q**2 * c.h(n)


def _pyth_corrected(c, n):
    s, t = pyth_legs(c, n)
    x = c.p * c.h(n + 3) * (s + t)
    return x**2 + (2 * s * t) ** 2, (s**2 + t**2) ** 2


def _sqdiff_rhs(c, n):
    a, b, p, q = c.a, c.b, c.p, c.q
    return (b**2 - a**2 * q) * c.u(2 * n + 1) - a * q * (2 * b - a * p) * c.u(2 * n)


def _sqdiff(c, n):
    return c.h(n + 1) ** 2 - c.q * c.h(n) ** 2, c.D * _sqdiff_rhs(c, n)


def _vajda(c, n, r, s):
    lhs = c.h(n + s) * c.h(n - r) - c.h(n) * c.h(n - r + s)
    return lhs, c.E * c.qpow(n - r) * (c.v(r + s) - c.qpow(s) * c.v(r - s))


def _catalan(c, n, r):
    lhs = c.h(n + r) * c.h(n - r) - c.h(n) ** 2
    return lhs, c.E * c.qpow(n - r) * (c.v(2 * r) - 2 * c.qpow(r))


def _cassini(c, n):
    return c.h(n + 1) * c.h(n - 1) - c.h(n) ** 2, c.E * c.D * c.qpow(n - 1)


def _docagne(c, n, m):
    lhs = c.h(m) * c.h(n + 1) - c.h(n) * c.h(m + 1)
    return lhs, c.E * c.qpow(m) * (c.v(n - m + 1) - c.q * c.v(n - m - 1))


def _gelin_cesaro(c, n):
    h = c.h
    lhs = h(n - 2) * h(n - 1) * h(n + 1) * h(n + 2) - h(n) ** 4
    ed = c.E * c.D
    rhs = ed * c.qpow(n - 2) * ((c.p**2 + c.q) * h(n) ** 2 + ed * c.p**2 * c.qpow(n - 1))
    return lhs, rhs


def _sum_linear(c, n):
    h, q = c.h, c.q
    rhs = c.div(h(n + 1) - q * h(n) - h(1) + q * h(0), c.p - q - 1)
    return _partial_sum(h, n), rhs


def _sum_alt(c, n):
    h, q = c.h, c.q
    rhs = c.div(_sign(n) * (h(n + 1) + q * h(n)) - h(1) - q * h(0), c.p + q + 1)
    return _partial_sum(lambda i: _sign(i) * h(i), n), rhs


def _sum_even(c, n):
    h, q = c.h, c.q
    rhs = c.div(h(2 * n + 2) - q**2 * h(2 * n) - h(2) + q**2 * h(0), c.p**2 - (q + 1) ** 2)
    return _partial_sum(lambda i: h(2 * i), n), rhs


def _sum_odd(c, n):
    h, p, q = c.h, c.p, c.q
    num = h(2 * n + 1) - q**2 * h(2 * n - 1) - (q + 1) * h(1) + p * q * h(0)
    return _partial_sum(lambda i: h(2 * i - 1), n), c.div(num, p**2 - (q + 1) ** 2)


def _linform_u(c, n):
    a, b, p, q = c.a, c.b, c.p, c.q
    return c.h(n), (b * p - 2 * a * q) * c.u(n) - q * (2 * b - a * p) * c.u(n - 1)


def _linform_v(c, n):
    return c.h(n), c.b * c.v(n) - c.a * c.q * c.v(n - 1)


def _vu_relation(c, n):
    v = c.v(n)
    return (v, v), (2 * c.u(n + 1) - c.p * c.u(n), c.p * c.u(n) - 2 * c.q * c.u(n - 1))


def _matrix_power(c, n):
    u, q = c.u, c.q
    return mat_pow(c.companion(), n), c.mat(u(n + 1), -q * u(n), u(n), -q * u(n - 1))


def _state_matrix(c, n):
    a, b, p, q = c.a, c.b, c.p, c.q
    h, w = c.h, c.w
    H0 = c.mat(b * p - 2 * a * q, 2 * b - a * p, 2 * b - a * p, c.div(b * p - a * (p**2 - 2 * q), q))
    W0 = c.mat(b, a, a, c.div(p * a - b, q))
    Rn = mat_pow(c.companion(), n)
    Hn = c.mat(h(n + 1), h(n), h(n), h(n - 1))
    Wn = c.mat(w(n + 1), w(n), w(n), w(n - 1))
    return (Hn, Wn), (Rn @ H0, Rn @ W0)


def _honsberger_w_printed(c, n, m):
    return c.w(n + m), c.u(n) * c.w(m) - c.q * c.u(n - 1) * c.w(m - 1)


def _honsberger_w_corrected(c, n, m):
    return c.w(n + m), c.u(n + 1) * c.w(m) - c.q * c.u(n) * c.w(m - 1)


def _honsberger_h(c, n, m):
    return c.h(n + m), c.u(m) * c.h(n + 1) - c.q * c.u(m - 1) * c.h(n)


def _shiftback(seq):
    def evaluate(c, n, k):
        x, u = getattr(c, seq), c.u
        first = c.qpow(1 - k) * (u(k) * x(n - 1) - u(k - 1) * x(n))
        second = c.qpow(-k) * (x(n) * u(k + 1) - x(n + 1) * u(k))
        lhs = x(n - k)
        return (lhs, lhs), (first, second)

    return evaluate


def _melham(c, n, k):
    lhs = c.h(n + k + 1) ** 2 - c.qpow(2 * k + 1) * c.h(n - k) ** 2
    return lhs, c.D * c.u(2 * k + 1) * _sqdiff_rhs(c, n)


def _bilinear(seq):
    def evaluate(c, i, j, k, l, r):  # noqa: E741
        x, u = getattr(c, seq), c.u
        lhs = u(i) * x(j) - u(k) * x(l)
        return lhs, c.qpow(r) * (u(i - r) * x(j - r) - u(k - r) * x(l - r))

    return evaluate


def _bilinear_l(idx: dict[str, int]) -> dict[str, int]:
    return {**idx, "l": idx["i"] + idx["j"] - idx["k"]}


def _bilinear_side(idx: dict[str, int]) -> bool:
    return idx["i"] + idx["j"] == idx["k"] + idx["l"]


def _neg_w_printed_den(c, n):
    return c.a * c.u(n) + (c.b - c.p * c.a) * c.u(n - 1)


def _neg_w_printed(c, n):
    num = c.a * c.u(n) - c.b * c.u(n - 1)
    return c.w(-n), c.qpow(-n) * c.div(num, _neg_w_printed_den(c, n))


def _neg_w_corrected(c, n):
    return c.w(-n), c.qpow(-n) * (c.a * c.u(n + 1) - c.b * c.u(n))


def _neg_u_printed(c, n):
    return c.u(-n), c.qpow(-n + 1) * c.u(n - 2)


def _neg_u_corrected(c, n):
    return c.u(-n), -c.qpow(-n) * c.u(n)


def _neg_v(c, n):
    return c.v(-n), c.qpow(-n) * c.v(n)


# -- the catalog --------------------------------------------------------------

_Q = ("q = 0", _q_zero)
_COEFF_NEG = ("coefficient index n < 0", _n_negative)
_POSITIVE_ONLY = ("stated for positive n only", _n_nonpositive)

I = IdentityId  # noqa: E741
C, X, K = Status.CONFIRMED, Status.DISPUTED, Status.CORRECTION

_ENTRIES = [
    Identity(I.BINET_H, C, "h_n = A alpha^n + B beta^n", ("n",), _binet_h, distinct_roots=True),
    Identity(I.BINET_W, C, "w_n = (A alpha^n - B beta^n) / d", ("n",), _binet_w, distinct_roots=True),
    Identity(
        I.DE_MOIVRE, C,
        "((x_n + h_n d) / (2 A d))^k = (x_{kn} + h_{kn} d) / (2 A d), x_n = h_{n+1} - q h_{n-1}",
        ("n", "k"), _de_moivre, distinct_roots=True,
        cleared="2 A d invertible (E D != 0)",
    ),
    Identity(
        I.BRAHMAGUPTA, C,
        "(k h_n^2 + t h_m^2)(k h_r^2 + t h_s^2) = (k h_n h_r - t h_m h_s)^2 + k t (h_n h_s + h_m h_r)^2",
        ("n", "m", "r", "s", "k", "t"), _brahmagupta, roles={"k": "mult", "t": "mult"},
    ),
    Identity(
        I.UNIVERSAL_REC, C,
        "h_{n+3} = (h_{n+1}^3 - 2 h_n h_{n+1} h_{n+2} + h_{n-1} h_{n+2}^2) / (h_{n-1} h_{n+1} - h_n^2)",
        ("n",), _universal_rec,
        guards=(("h_{n-1} h_{n+1} - h_n^2 = 0", lambda c, n: _universal_den(c, n) == 0),),
        cleared="h_{n-1} h_{n+1} - h_n^2 != 0",
    ),
    Identity(I.INTERREL_H_FROM_W, C, "h_n = w_{n+1} - q w_{n-1}", ("n",), _interrel_h),
    Identity(
        I.INTERREL_W_FROM_H_PRINTED, X, "w_n = (2 h_{n+1} - p h_{n-1}) / d^2", ("n",),
        _interrel_w_printed, distinct_roots=True, pair=I.INTERREL_W_FROM_H_CORRECTED, cleared="d^2 != 0",
    ),
    Identity(
        I.INTERREL_W_FROM_H_CORRECTED, K, "w_n = (2 h_{n+1} - p h_n) / d^2", ("n",),
        _interrel_w_corrected, distinct_roots=True, cleared="d^2 != 0",
    ),
    Identity(
        I.NEG_REC_H, C,
        "hbar_j = h_{-j}: hbar_1 = (bp - a(p^2 - 2q)) / q, hbar_{n+1} = (p/q) hbar_n - (1/q) hbar_{n-1}",
        ("n",), _neg_rec_h, guards=(_Q,), cleared="q != 0",
    ),
    Identity(I.NORM, C, "h_n^2 - d^2 w_n^2 = 4 E q^n", ("n",), _norm_id, distinct_roots=True),
    Identity(I.ADDSUB_W_PLUS, C, "w_{m+n} + q^n w_{m-n} = w_m v_n", ("m", "n"), _addsub_w_plus),
    Identity(I.ADDSUB_W_MINUS, C, "w_{m+n} - q^n w_{m-n} = h_m u_n", ("m", "n"), _addsub_w_minus),
    Identity(I.ADDSUB_H_PLUS, C, "h_{m+n} + q^n h_{m-n} = h_m v_n", ("m", "n"), _addsub_h_plus),
    Identity(
        I.ADDSUB_H_MINUS, C, "h_{m+n} - q^n h_{m-n} = d^2 w_m u_n", ("m", "n"),
        _addsub_h_minus, distinct_roots=True,
    ),
    Identity(
        I.DOUBLE_W_PLUS_PRINTED, X, "2 w_{m+n} = w_m v_n + v_m w_n", ("m", "n"),
        _double_w_plus_printed, pair=I.DOUBLE_W_PLUS_CORRECTED,
    ),
    Identity(
        I.DOUBLE_W_PLUS_CORRECTED, K, "2 w_{m+n} = w_m v_n + h_m u_n", ("m", "n"),
        _double_w_plus_corrected,
    ),
    Identity(
        I.DOUBLE_W_MINUS_PRINTED, X, "2 q^n w_{m-n} = w_m v_n - v_m w_n", ("m", "n"),
        _double_w_minus_printed, pair=I.DOUBLE_W_MINUS_CORRECTED,
    ),
    Identity(
        I.DOUBLE_W_MINUS_CORRECTED, K, "2 q^n w_{m-n} = w_m v_n - h_m u_n", ("m", "n"),
        _double_w_minus_corrected,
    ),
    Identity(
        I.DOUBLE_H_PLUS_PRINTED, X, "2 h_{m+n} = h_m (v_n + d^2 u_n)", ("m", "n"),
        _double_h_plus_printed, distinct_roots=True, pair=I.DOUBLE_H_PLUS_CORRECTED,
    ),
    Identity(
        I.DOUBLE_H_PLUS_CORRECTED, K, "2 h_{m+n} = h_m v_n + d^2 w_m u_n", ("m", "n"),
        _double_h_plus_corrected, distinct_roots=True,
    ),
    Identity(
        I.DOUBLE_H_MINUS_PRINTED, X, "2 q^n h_{m+n} = h_m (v_n - d^2 u_n)", ("m", "n"),
        _double_h_minus_printed, distinct_roots=True, pair=I.DOUBLE_H_MINUS_CORRECTED,
    ),
    Identity(
        I.DOUBLE_H_MINUS_CORRECTED, K, "2 q^n h_{m-n} = h_m v_n - d^2 w_m u_n", ("m", "n"),
        _double_h_minus_corrected, distinct_roots=True,
    ),
    Identity(
        I.GF_PRINTED, X, "[x^n] (h_0 + (h_1 - p h_0) x) / (1 - p x - q x^2) = h_n", ("n",),
        _gf(-1), guards=(_COEFF_NEG,), pair=I.GF_CORRECTED,
    ),
    Identity(
        I.GF_CORRECTED, K, "[x^n] (h_0 + (h_1 - p h_0) x) / (1 - p x + q x^2) = h_n", ("n",),
        _gf(+1), guards=(_COEFF_NEG,),
    ),
    Identity(
        I.EGF, C, "n! [x^n] (A e^{alpha x} + B e^{beta x}) = h_n", ("n",), _egf,
        guards=(_COEFF_NEG,), distinct_roots=True,
    ),
    Identity(I.PYTH_RELATION, C, "(p^2 - q) h_{n+2} - p h_{n+3} = q^2 h_n", ("n",), _pyth_relation),
    Identity(
        I.PYTH_PRINTED, X,
        "(p/q^2 h_n h_{n+3})^2 + (2P h_{n+2}(2P h_{n+2} - h_n))^2 = (h_n^2 + 2P h_{n+2}(2P h_{n+2} - h_n))^2,"
        " P = (p^2 - q) / (2 q^2)",
        ("n",), _pyth_printed, guards=(_Q,), pair=I.PYTH_CORRECTED, cleared="q != 0",
    ),
    Identity(
        I.PYTH_CORRECTED, K,
        "(p h_{n+3} (s + t))^2 + (2 s t)^2 = (s^2 + t^2)^2, s = (p^2 - q) h_{n+2}, t = q^2 h_n",
        ("n",), _pyth_corrected,
    ),
    Identity(
        I.SQDIFF, C,
        "h_{n+1}^2 - q h_n^2 = d^2 ((b^2 - a^2 q) u_{2n+1} - a q (2b - ap) u_{2n})",
        ("n",), _sqdiff, distinct_roots=True,
    ),
    Identity(
        I.VAJDA, C, "h_{n+s} h_{n-r} - h_n h_{n-r+s} = E q^{n-r} (v_{r+s} - q^s v_{r-s})",
        ("n", "r", "s"), _vajda,
    ),
    Identity(I.CATALAN, C, "h_{n+r} h_{n-r} - h_n^2 = E q^{n-r} (v_{2r} - 2 q^r)", ("n", "r"), _catalan),
    Identity(
        I.CASSINI, C, "h_{n+1} h_{n-1} - h_n^2 = E d^2 q^{n-1}", ("n",), _cassini, distinct_roots=True,
    ),
    Identity(
        I.DOCAGNE, C, "h_m h_{n+1} - h_n h_{m+1} = E q^m (v_{n-m+1} - q v_{n-m-1})",
        ("n", "m"), _docagne,
    ),
    Identity(
        I.GELIN_CESARO, C,
        "h_{n-2} h_{n-1} h_{n+1} h_{n+2} - h_n^4 = E d^2 q^{n-2} ((p^2 + q) h_n^2 + E d^2 p^2 q^{n-1})",
        ("n",), _gelin_cesaro, distinct_roots=True,
    ),
    Identity(
        I.SUM_LINEAR, C, "sum_{i=1}^n h_i = (h_{n+1} - q h_n - h_1 + q h_0) / (p - q - 1)",
        ("n",), _sum_linear, guards=(("p - q - 1 = 0", lambda c, n: c.p - c.q - 1 == 0),),
        cleared="p - q - 1 != 0",
    ),
    Identity(
        I.SUM_ALT, C,
        "sum_{i=1}^n (-1)^i h_i = ((-1)^n (h_{n+1} + q h_n) - h_1 - q h_0) / (p + q + 1)",
        ("n",), _sum_alt, guards=(("p + q + 1 = 0", lambda c, n: c.p + c.q + 1 == 0),),
        cleared="p + q + 1 != 0",
    ),
    Identity(
        I.SUM_EVEN, C,
        "sum_{i=1}^n h_{2i} = (h_{2n+2} - q^2 h_{2n} - h_2 + q^2 h_0) / (p^2 - (q + 1)^2)",
        ("n",), _sum_even,
        guards=(("p^2 - (q + 1)^2 = 0", lambda c, n: c.p**2 - (c.q + 1) ** 2 == 0),),
        cleared="p^2 - (q + 1)^2 != 0",
    ),
    Identity(
        I.SUM_ODD, C,
        "sum_{i=1}^n h_{2i-1} = (h_{2n+1} - q^2 h_{2n-1} - (q + 1) h_1 + p q h_0) / (p^2 - (q + 1)^2)",
        ("n",), _sum_odd,
        guards=(("p^2 - (q + 1)^2 = 0", lambda c, n: c.p**2 - (c.q + 1) ** 2 == 0),),
        cleared="p^2 - (q + 1)^2 != 0",
    ),
    Identity(I.LINFORM_U, C, "h_n = (bp - 2aq) u_n - q (2b - ap) u_{n-1}", ("n",), _linform_u),
    Identity(I.LINFORM_V, C, "h_n = b v_n - a q v_{n-1}", ("n",), _linform_v),
    Identity(I.VU_RELATION, C, "v_n = 2 u_{n+1} - p u_n = p u_n - 2 q u_{n-1}", ("n",), _vu_relation),
    Identity(
        I.MATRIX_POWER, C, "R^n = [[u_{n+1}, -q u_n], [u_n, -q u_{n-1}]], R = [[p, -q], [1, 0]]",
        ("n",), _matrix_power,
    ),
    Identity(
        I.STATE_MATRIX, C, "H_n = R^n H_0 and W_n = R^n W_0", ("n",), _state_matrix,
        guards=(_Q,), cleared="q != 0",
    ),
    Identity(
        I.HONSBERGER_W_PRINTED, X, "w_{n+m} = u_n w_m - q u_{n-1} w_{m-1}", ("n", "m"),
        _honsberger_w_printed, pair=I.HONSBERGER_W_CORRECTED,
    ),
    Identity(
        I.HONSBERGER_W_CORRECTED, K, "w_{n+m} = u_{n+1} w_m - q u_n w_{m-1}", ("n", "m"),
        _honsberger_w_corrected,
    ),
    Identity(I.HONSBERGER_H, C, "h_{n+m} = u_m h_{n+1} - q u_{m-1} h_n", ("n", "m"), _honsberger_h),
    Identity(
        I.SHIFTBACK_H, C,
        "h_{n-k} = q^{1-k} (u_k h_{n-1} - u_{k-1} h_n) = q^{-k} (h_n u_{k+1} - h_{n+1} u_k)",
        ("n", "k"), _shiftback("h"),
    ),
    Identity(
        I.SHIFTBACK_W, C,
        "w_{n-k} = q^{1-k} (u_k w_{n-1} - u_{k-1} w_n) = q^{-k} (w_n u_{k+1} - w_{n+1} u_k)",
        ("n", "k"), _shiftback("w"),
    ),
    Identity(
        I.MELHAM, C,
        "h_{n+k+1}^2 - q^{2k+1} h_{n-k}^2 = d^2 u_{2k+1} ((b^2 - a^2 q) u_{2n+1} - a q (2b - ap) u_{2n})",
        ("n", "k"), _melham, distinct_roots=True,
    ),
    Identity(
        I.BILINEAR_H, C, "u_i h_j - u_k h_l = q^r (u_{i-r} h_{j-r} - u_{k-r} h_{l-r}), i + j = k + l",
        ("i", "j", "k", "l", "r"), _bilinear("h"),
        roles={"i": "n", "l": "derived"}, derived=_bilinear_l, side_condition=_bilinear_side,
    ),
    Identity(
        I.BILINEAR_W, C, "u_i w_j - u_k w_l = q^r (u_{i-r} w_{j-r} - u_{k-r} w_{l-r}), i + j = k + l",
        ("i", "j", "k", "l", "r"), _bilinear("w"),
        roles={"i": "n", "l": "derived"}, derived=_bilinear_l, side_condition=_bilinear_side,
    ),
    Identity(
        I.NEG_W_PRINTED, X, "w_{-n} = q^{-n} (a u_n - b u_{n-1}) / (a u_n + (b - pa) u_{n-1})",
        ("n",), _neg_w_printed, pair=I.NEG_W_CORRECTED,
        guards=(
            _POSITIVE_ONLY,
            ("a u_n + (b - pa) u_{n-1} = 0", lambda c, n: _neg_w_printed_den(c, n) == 0),
        ),
        cleared="q != 0, a u_n + (b - pa) u_{n-1} != 0",
    ),
    Identity(I.NEG_W_CORRECTED, K, "w_{-n} = q^{-n} (a u_{n+1} - b u_n)", ("n",), _neg_w_corrected),
    Identity(
        I.NEG_U_PRINTED, X, "u_{-n} = q^{-n+1} u_{n-2}", ("n",), _neg_u_printed,
        guards=(_POSITIVE_ONLY,), pair=I.NEG_U_CORRECTED,
    ),
    Identity(I.NEG_U_CORRECTED, K, "u_{-n} = -q^{-n} u_n", ("n",), _neg_u_corrected),
    Identity(I.NEG_V, C, "v_{-n} = q^{-n} v_n", ("n",), _neg_v),
]

CATALOG: dict[IdentityId, Identity] = {e.id: e for e in _ENTRIES}

del I, C, X, K


def entry(id: IdentityId | str) -> Identity:
    return CATALOG[IdentityId.parse(id)]


def ids_with_status(status: Status) -> list[IdentityId]:
    return [e.id for e in _ENTRIES if e.status is status]


def disputed_pairs() -> list[tuple[IdentityId, IdentityId]]:
    return [(e.id, e.pair) for e in _ENTRIES if e.status is Status.DISPUTED and e.pair]
