"""Fixed-index symbolic proofs of catalog identities.

Every identity evaluator runs unchanged against :class:`SymbolicContext`,
whose values are polynomial quotients in a, b, p, q.  Both sides are then
compared in cleared form: ``lhs.num * rhs.den - rhs.num * lhs.den`` must be
the zero polynomial.  A zero difference proves the identity for every integer
(a, b, p, q) at those indices, provided the recorded denominators do not
vanish; a nonzero difference is returned as the refutation witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable

from .audit import GridConfig, _validate, check_guards
from .catalog import CATALOG, IdentityId, entry
from .exact import Mat2, QuadElem
from .sequences import BinetData, SeqKind, series_div
from .symbolic import A_, B_, P_, Q_, MPoly, SymFrac, sym_term

PROOF_BOUND = 64

# index windows for the proof suite: n in [0, 6], auxiliary indices in [0, 4]
PROOF_WINDOW = GridConfig(n_range=(0, 6), aux_range=(0, 4))


class SymbolicContext:
    symbolic = True

    def __init__(self, bound: int = PROOF_BOUND) -> None:
        self.bound = bound
        self.a, self.b, self.p, self.q = (SymFrac(v) for v in (A_, B_, P_, Q_))
        self.D = self.p * self.p - 4 * self.q
        self.E = self.b * self.b - self.a * self.b * self.p + self.a * self.a * self.q
        self._terms: dict[tuple[SeqKind, int], SymFrac] = {}

    def term(self, kind: SeqKind, n: int) -> SymFrac:
        key = (kind, n)
        if key not in self._terms:
            t = sym_term(kind, n, self.bound)
            self._terms[key] = SymFrac(t.poly, Q_**t.qshift)
        return self._terms[key]

    def h(self, n: int) -> SymFrac:
        return self.term(SeqKind.H, n)

    def w(self, n: int) -> SymFrac:
        return self.term(SeqKind.W, n)

    def u(self, n: int) -> SymFrac:
        return self.term(SeqKind.U, n)

    def v(self, n: int) -> SymFrac:
        return self.term(SeqKind.V, n)

    def qpow(self, k: int) -> SymFrac:
        if k >= 0:
            return SymFrac(Q_**k)
        return SymFrac(MPoly.const(1), Q_ ** (-k))

    def div(self, x: Any, y: Any) -> SymFrac:
        return SymFrac.lift(x) / y

    @cached_property
    def _binet(self) -> BinetData:
        return BinetData.build(self.a, self.b, self.p, self.q)

    def binet(self) -> BinetData:
        return self._binet

    def companion(self) -> Mat2:
        return Mat2.companion(self.p, self.q)

    def mat(self, e11: Any, e12: Any, e21: Any, e22: Any) -> Mat2:
        return Mat2(*(SymFrac.lift(x) if isinstance(x, (int, Fraction)) else x for x in (e11, e12, e21, e22)))

    def series(self, num: list[Any], den: list[Any], count: int) -> list[Any]:
        return series_div(num, den, count)


def cleared_difference(lhs: Any, rhs: Any) -> MPoly:
    """First nonzero cleared component difference, or the zero polynomial."""
    if isinstance(lhs, (tuple, list)):
        for x, y in zip(lhs, rhs):
            d = cleared_difference(x, y)
            if d:
                return d
        return MPoly()
    if isinstance(lhs, QuadElem):
        return cleared_difference((lhs.base, lhs.coef), (rhs.base, rhs.coef))
    if isinstance(lhs, Mat2):
        return cleared_difference((lhs.e11, lhs.e12, lhs.e21, lhs.e22), (rhs.e11, rhs.e12, rhs.e21, rhs.e22))
    return SymFrac.lift(lhs).cleared_difference(rhs)


PROVEN = "proven"
REFUTED = "refuted"
SKIPPED = "skipped"


@dataclass
class ProofResult:
    id: IdentityId
    indices: dict[str, int]
    outcome: str
    witness: MPoly | None = None
    side_conditions: str = ""
    reason: str | None = None

    @property
    def proven(self) -> bool:
        return self.outcome == PROVEN

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id.value, "indices": dict(self.indices), "outcome": self.outcome}
        if self.side_conditions:
            out["side_conditions"] = self.side_conditions
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.reason:
            out["reason"] = self.reason
        return out


def sym_verify(
    id: IdentityId | str,
    indices: dict[str, int],
    ctx: SymbolicContext | None = None,
) -> ProofResult:
    """Prove or refute one identity at fixed indices as a polynomial identity."""
    e = entry(id)
    idx = _validate(e, indices)
    c = ctx if ctx is not None else SymbolicContext()
    reason = check_guards(e, c, idx)
    if reason is not None:
        return ProofResult(e.id, idx, SKIPPED, reason=reason)
    lhs, rhs = e.evaluate(c, **idx)
    diff = cleared_difference(lhs, rhs)
    if diff.is_zero():
        return ProofResult(e.id, idx, PROVEN, side_conditions=e.cleared)
    return ProofResult(e.id, idx, REFUTED, witness=diff, side_conditions=e.cleared)


@dataclass
class ProofSummary:
    id: IdentityId
    proven: int = 0
    refuted: int = 0
    skipped: int = 0
    first_refutation: ProofResult | None = None
    results: list[ProofResult] = field(default_factory=list, repr=False)


def prove_window(
    ids: Iterable[IdentityId | str] | None = None,
    window: GridConfig = PROOF_WINDOW,
    keep_results: bool = False,
) -> dict[IdentityId, ProofSummary]:
    """Run :func:`sym_verify` for every index tuple of the window."""
    chosen = list(CATALOG) if ids is None else [IdentityId.parse(i) for i in ids]
    ctx = SymbolicContext()
    out: dict[IdentityId, ProofSummary] = {}
    for i in chosen:
        s = out[i] = ProofSummary(i)
        for idx in window.index_tuples(CATALOG[i]):
            r = sym_verify(i, idx, ctx)
            if keep_results:
                s.results.append(r)
            if r.outcome == PROVEN:
                s.proven += 1
            elif r.outcome == REFUTED:
                s.refuted += 1
                if s.first_refutation is None:
                    s.first_refutation = r
            else:
                s.skipped += 1
    return out
