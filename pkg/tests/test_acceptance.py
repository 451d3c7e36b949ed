"""Acceptance criteria, one test each, at the stated tolerances.

Every test records a PASS/FAIL line; the lines are repeated together in the
pytest terminal summary.  Two criteria are expected to fail because the
published statements they check are wrong (see the first-terms table and doubling
notes in the README).
"""

import itertools
import time
from pathlib import Path

import pytest
import sympy

from horadam import cli
from horadam.audit import (
    _ENGINE_SKIPS,
    STANDARD_GRID,
    GridConfig,
    audit_sweep,
    de_moivre_check,
    evaluate_identity,
)
from horadam.catalog import CATALOG, IdentityId, Status, disputed_pairs, ids_with_status
from horadam.exact import Mat2, mat_pow
from horadam.proof import PROOF_WINDOW, prove_window, sym_verify
from horadam.sequences import Params, SeqKind, gf_coefficients, term_binet, term_matrix, term_recurrence

I = IdentityId  # noqa: E741
LUCAS = Params(0, 1, 1, -1)
GOLDEN = Path(__file__).parent / "golden" / "first_terms.txt"


def _run_cli(argv):
    import io

    out = io.StringIO()
    code = cli.run(argv, out, io.StringIO())
    return code, out.getvalue()


def test_first_terms_table(verdict_line):
    code, out = _run_cli(["symtable", "--maxn", "5"])
    assert code == 0
    ours = {}
    for line in out.splitlines():
        lhs, rhs = line.split(" = ", 1)
        kind, n = lhs.split("_")
        ours[(kind, int(n))] = sympy.expand(sympy.sympify(rhs.replace("^", "**")))
    mismatches = []
    for line in GOLDEN.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        kind, n, expr = line.split(" ", 2)
        if sympy.expand(sympy.sympify(expr) - ours[(kind, int(n))]) != 0:
            mismatches.append(f"{kind}_{n}")
    ok = not mismatches and len(ours) == 12
    verdict_line("1 first-terms table reproduction (golden, exact)", ok, f"mismatched {mismatches}" if mismatches else "12/12 rows")
    assert ok, f"published table disagrees with the recurrence at {mismatches}"


def _textbook(x0, x1, step, count):
    out = [x0, x1]
    while len(out) < count:
        out.append(step(out[-1], out[-2]))
    return out


def test_classical_specializations(verdict_line):
    rows = {
        Params(0, 1, 1, -1): _textbook(2, 1, lambda x, y: x + y, 11),  # Lucas
        Params(0, 1, 2, -1): _textbook(2, 2, lambda x, y: 2 * x + y, 11),  # Pell-Lucas
        Params(0, 1, 1, -2): _textbook(2, 1, lambda x, y: x + 2 * y, 11),  # Jacobsthal-Lucas
    }
    assert rows[LUCAS] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
    assert rows[Params(0, 1, 2, -1)][:5] == [2, 2, 6, 14, 34]
    assert rows[Params(0, 1, 1, -2)][:6] == [2, 1, 5, 7, 17, 31]
    bad = []
    for params, expected in rows.items():
        for ev in (term_recurrence, term_matrix, term_binet):
            got = [ev(params, "h", n) for n in range(11)]
            if got != expected:
                bad.append((str(params), ev.__name__))
    verdict_line("2 Lucas, Pell-Lucas, Jacobsthal-Lucas specializations (exact)", not bad, f"mismatches {bad}" if bad else "3 rows x 3 evaluators")
    assert not bad


def test_evaluator_agreement(verdict_line):
    t0 = time.perf_counter()
    disagreements, checked = [], 0
    for params in STANDARD_GRID.params():
        for kind in SeqKind:
            for n in range(-12, 25):
                r = term_recurrence(params, kind, n)
                values = [r, term_matrix(params, kind, n)]
                if params.D != 0:
                    values.append(term_binet(params, kind, n))
                checked += 1
                if any(v != r for v in values):
                    disagreements.append((str(params), kind.value, n))
    dt = time.perf_counter() - t0
    ok = not disagreements and dt < 60
    verdict_line("3 evaluator agreement", ok, f"{checked} terms, {len(disagreements)} disagreements, {dt:.1f} s (< 60 s)")
    assert not disagreements
    assert dt < 60


# The acceptance list names the two printed doubling formulas for w among the
# confirmed identities; they only hold when a = 0, so the catalog files them
# as DISPUTED and this criterion, run on the list as written, fails on them.
LISTED_AS_CONFIRMED = [*ids_with_status(Status.CONFIRMED), I.DOUBLE_W_PLUS_PRINTED, I.DOUBLE_W_MINUS_PRINTED]


def _documented_reasons(e):
    reasons = {r for r, _ in e.guards} | set(_ENGINE_SKIPS.values())
    if e.distinct_roots:
        reasons.add("repeated root (D = 0)")
    return reasons


def test_confirmed_sweep(verdict_line, standard_report):
    failing, undocumented = {}, {}
    for i in LISTED_AS_CONFIRMED:
        t = standard_report.tallies[i]
        if t.failed:
            failing[i.value] = t.failed
        extra = set(t.skip_reasons) - _documented_reasons(CATALOG[i])
        if extra:
            undocumented[i.value] = extra
    catalog_confirmed = [i for i in ids_with_status(Status.CONFIRMED) if standard_report.tallies[i].failed]
    ok = not failing and not undocumented
    detail = (
        f"{len(LISTED_AS_CONFIRMED)} ids; failures {failing or 'none'}; "
        f"undocumented skips {undocumented or 'none'}; catalog-CONFIRMED failures {len(catalog_confirmed)}"
    )
    verdict_line("4 confirmed-identity sweep (zero failures)", ok, detail)
    assert not catalog_confirmed
    assert not undocumented
    assert not failing, f"printed forms listed as confirmed fail: {failing}"


ERRATA_INSTANCES = [
    (I.INTERREL_W_FROM_H_PRINTED, {"n": 2}),
    (I.DOUBLE_H_PLUS_PRINTED, {"m": 2, "n": 1}),
    (I.HONSBERGER_W_PRINTED, {"n": 2, "m": 2}),
    (I.GF_PRINTED, {"n": 2}),
    (I.PYTH_PRINTED, {"n": 0}),
    (I.NEG_U_PRINTED, {"n": 3}),
]
ERRATA_IDS = [
    I.INTERREL_W_FROM_H_PRINTED, I.DOUBLE_H_PLUS_PRINTED, I.DOUBLE_H_MINUS_PRINTED, I.HONSBERGER_W_PRINTED,
    I.GF_PRINTED, I.PYTH_PRINTED, I.NEG_W_PRINTED, I.NEG_U_PRINTED,
]


def test_disputed_errata(verdict_line, standard_report):
    problems = []
    grid_params = {p.as_tuple() for p in STANDARD_GRID.params()}
    for i in ERRATA_IDS:
        if standard_report.tallies[i].failed == 0:
            problems.append(f"{i.value}: no counterexample")
    for i, idx in ERRATA_INSTANCES:
        in_grid = LUCAS.as_tuple() in grid_params and idx in list(STANDARD_GRID.index_tuples(CATALOG[i]))
        v = evaluate_identity(LUCAS, i, idx)
        if not (in_grid and v.evaluated and not v.holds):
            problems.append(f"{i.value} {idx}: listed instance not refuted in grid")
    proofs = 0
    pairs = dict(disputed_pairs())
    for printed in ERRATA_IDS + [I.DOUBLE_W_PLUS_PRINTED, I.DOUBLE_W_MINUS_PRINTED]:
        fixed = pairs[printed]
        if standard_report.tallies[fixed].failed:
            problems.append(f"{fixed.value}: {standard_report.tallies[fixed].failed} numeric failures")
        for idx in STANDARD_GRID.index_tuples(CATALOG[fixed]):
            r = sym_verify(fixed, idx)
            if r.outcome == "skipped" and r.reason in _documented_reasons(CATALOG[fixed]):
                continue  # e.g. negative coefficient indices of a power series
            proofs += 1
            if not r.proven:
                problems.append(f"{fixed.value} {idx}: {r.outcome}")
    verdict_line("5 disputed-identity errata", not problems,
                 f"{len(ERRATA_IDS)} printed forms refuted, {proofs} corrected tuples proven" if not problems else "; ".join(problems[:5]))
    assert not problems


def test_symbolic_proof_suite(verdict_line):
    t0 = time.perf_counter()
    summary = prove_window(ids_with_status(Status.CONFIRMED), PROOF_WINDOW)
    dt = time.perf_counter() - t0
    not_proven = {i.value: (s.refuted, s.skipped) for i, s in summary.items() if s.refuted or s.skipped}
    total = sum(s.proven for s in summary.values())
    ok = not not_proven and dt < 300
    verdict_line("6 symbolic proof suite", ok, f"{total} tuples proven over {len(summary)} ids, {dt:.1f} s (< 300 s)"
                 + (f"; not proven {not_proven}" if not_proven else ""))
    assert not not_proven
    assert dt < 300


def test_generating_function(verdict_line):
    bad = []
    for params in STANDARD_GRID.params():
        series = gf_coefficients(params, 65)
        if series != [term_recurrence(params, "h", n) for n in range(65)]:
            bad.append(str(params))
    printed = evaluate_identity(LUCAS, I.GF_PRINTED, {"n": 2})
    printed_ok = (printed.lhs, printed.rhs, printed.holds) == (-1, 3, False)
    ok = not bad and printed_ok
    verdict_line("7 generating function", ok, f"65 coefficients x {len(list(STANDARD_GRID.params()))} params, "
                 f"{len(bad)} mismatches; printed denominator at n=2 gives {printed.lhs} vs {printed.rhs}")
    assert not bad and printed_ok


def test_performance(verdict_line):
    n = 10**6
    t0 = time.perf_counter()
    big = term_matrix(LUCAS, "h", n)
    dt = time.perf_counter() - t0
    small_ok = term_matrix(LUCAS, "h", 10**4) == term_recurrence(LUCAS, "h", 10**4)
    r = Mat2.companion(1, -1)
    half = mat_pow(r, n // 2)
    full = mat_pow(r, n)
    squares_ok = full == half @ half
    # h_n = h_1 u_n - q h_0 u_{n-1}, read off the squared half power
    consistent = big == LUCAS.h1 * (half @ half).e21 + LUCAS.h0 * (half @ half).e22
    ok = dt < 5 and small_ok and squares_ok and consistent
    verdict_line("8 performance", ok, f"h_1e6 in {dt:.2f} s (< 5 s), {big.numerator.bit_length()} bits; "
                 f"naive agreement at 1e4: {small_ok}; R^1e6 = (R^5e5)^2: {squares_ok and consistent}")
    assert ok


def test_de_moivre(verdict_line):
    held = skipped = wrong = missing = 0
    for params in STANDARD_GRID.params():
        for n, k in itertools.product(range(-2, 5), range(-2, 5)):
            v = de_moivre_check(params, n, k)
            if v.evaluated:
                held += v.holds
                wrong += not v.holds
            else:
                skipped += 1
                if params.D != 0 and params.E != 0 and params.q != 0:
                    missing += 1
    ok = wrong == 0 and missing == 0
    verdict_line("9 de Moivre", ok, f"{held} held, {skipped} skipped at D = 0 or E = 0, {wrong} wrong, "
                 f"{missing} skipped inside the domain")
    assert ok
