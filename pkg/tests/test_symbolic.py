from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import params_st
from horadam.errors import UsageError
from horadam.sequences import SeqKind, term
from horadam.symbolic import A_, B_, P_, Q_, MPoly, SymFrac, sym_table, sym_term

a, b, p, q = sympy.symbols("a b p q")
exps = st.tuples(*[st.integers(0, 3)] * 4)
polys = st.dictionaries(exps, st.integers(-9, 9), max_size=6).map(MPoly)


def to_sympy(f: MPoly):
    return sympy.expand(sum((c * a**e[0] * b**e[1] * p**e[2] * q**e[3] for e, c in f.terms().items()), sympy.Integer(0)))


@given(polys, polys, polys)
def test_ring_ops_match_sympy(f, g, h):
    assert to_sympy(f + g) == sympy.expand(to_sympy(f) + to_sympy(g))
    assert to_sympy(f * g - h) == sympy.expand(to_sympy(f) * to_sympy(g) - to_sympy(h))
    assert to_sympy(f**2) == sympy.expand(to_sympy(f) ** 2)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(polys, st.tuples(*[st.integers(-4, 4)] * 4))
def test_evaluate_matches_sympy(f, point):
    expected = to_sympy(f).subs(dict(zip((a, b, p, q), point)))
    assert f.evaluate(*point) == int(expected)


@given(polys)
def test_str_parses_back(f):
    text = str(f).replace("^", "**")
    assert sympy.expand(sympy.sympify(text)) == to_sympy(f)


@pytest.mark.parametrize(
    "kind,n,expected",
    [
        ("h", 2, "b*p**2 - 2*b*q - a*p*q"),
        ("w", 4, "b*p**3 - 2*b*p*q - a*p**2*q + a*q**2"),
        ("h", 0, "2*b - a*p"),
        ("u", 1, "1"),
        ("h", 5, "b*p**5 - 5*b*p**3*q + 5*b*p*q**2 - a*p**4*q + 4*a*p**2*q**2 - 2*a*q**3"),
    ],
)
def test_sym_term_examples(kind, n, expected):
    t = sym_term(kind, n)
    assert t.qshift == 0
    assert to_sympy(t.poly) == sympy.expand(sympy.sympify(expected))


@given(params_st, st.sampled_from(list(SeqKind)), st.integers(-8, 12))
def test_substitution_matches_numeric(params, kind, n):
    assert sym_term(kind, n).evaluate(*params.as_tuple()) == term(params, kind, n)


def test_negative_terms_are_q_cleared():
    t = sym_term("u", -3)
    assert t.qshift == 3
    assert to_sympy(t.poly) == sympy.expand(-(p**2 - q))


def test_bound():
    with pytest.raises(UsageError):
        sym_term("h", 17)
    assert sym_term("h", 20, bound=20).poly.degree() == 21


def test_sym_table_shape():
    lines = sym_table(5)
    assert lines[:2] == ["w_0 = a", "w_1 = b"]
    assert lines[6:8] == ["h_0 = -a*p + 2*b", "h_1 = -2*a*q + b*p"]
    assert sym_table(0) == ["w_0 = a", "h_0 = -a*p + 2*b"]


def test_symfrac_arithmetic():
    x = SymFrac(A_ + B_, P_)
    y = SymFrac(Q_, A_)
    assert x / x == 1
    assert (x + y) - y == x
    assert x * y / y == x
    assert x ** -2 * x**2 == 1
    assert (x * y).evaluate(1, 2, 3, 4) == Fraction(3, 3) * Fraction(4, 1)
    assert SymFrac(2 * Q_**3, 4 * Q_).evaluate(1, 1, 1, 5) == Fraction(25, 2)
    assert (SymFrac(P_) - SymFrac(P_ * Q_, Q_)).is_zero()
    assert SymFrac(P_) != SymFrac(Q_)


def test_published_table_misprints():
    # two published entries drop a factor q from their a-terms
    w5 = sympy.sympify("b*(p**4 - 3*p**2*q + q**2) - a*p*(p**2 - 2*q)")
    h4 = sympy.sympify("b*(p**4 - 4*p**2*q + 2*q**2) - a*p*(p**2 - 3*q)")
    true_w5, true_h4 = to_sympy(sym_term("w", 5).poly), to_sympy(sym_term("h", 4).poly)
    assert sympy.expand(true_w5 - w5) == sympy.expand(a * p * (p**2 - 2 * q) * (1 - q))
    assert sympy.expand(true_h4 - h4) == sympy.expand(a * p * (p**2 - 3 * q) * (1 - q))
    point = {a: 1, b: 0, p: 1, q: 2}
    assert (true_w5.subs(point), w5.subs(point)) == (6, 3)
    assert (true_h4.subs(point), h4.subs(point)) == (10, 5)
