from fractions import Fraction

import hypothesis
import pytest
from hypothesis import strategies as st

from horadam.audit import STANDARD_GRID, audit_sweep
from horadam.sequences import Params

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=500)
hypothesis.settings.load_profile("default")

small = st.integers(min_value=-6, max_value=6)
nonzero_small = small.filter(lambda x: x != 0)
params_st = st.builds(Params, small, small, small, nonzero_small)
fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def oracle_terms(x0, x1, p, q, lo, hi):
    """Direct textbook recurrence, forwards and backwards, kept independent of the engine."""
    vals = {0: Fraction(x0), 1: Fraction(x1)}
    for n in range(2, hi + 1):
        vals[n] = p * vals[n - 1] - q * vals[n - 2]
    for n in range(-1, lo - 1, -1):
        vals[n] = (p * vals[n + 1] - vals[n + 2]) / q
    return vals


@pytest.fixture(scope="session")
def standard_report():
    """The full standard-grid audit, computed once per session."""
    return audit_sweep(STANDARD_GRID)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict_line():
    """Record one pass/fail line for the acceptance summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
