"""Evaluate catalog identities exactly and sweep them over parameter grids."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .catalog import CATALOG, Identity, IdentityId, Status, entry, pyth_legs
from .context import NumericContext
from .errors import (
    DegenerateQ,
    DegenerateTriple,
    NotInvertible,
    RepeatedRoot,
    UsageError,
)
from .exact import Mat2, QuadElem
from .sequences import Params

EVALUATED = "evaluated"
SKIPPED = "skipped-degenerate"
DEFAULT_CAP = 16

_ENGINE_SKIPS = {
    DegenerateQ: "q = 0 with a negative index or power",
    RepeatedRoot: "repeated root (D = 0)",
    NotInvertible: "zero norm or determinant",
}


def render(value: Any) -> Any:
    """JSON-ready form of an exact value; rationals become "num/den" strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, QuadElem):
        return {"base": render(value.base), "coef": render(value.coef), "disc": render(value.disc)}
    if isinstance(value, Mat2):
        return [[render(x) for x in row] for row in value.rows()]
    if isinstance(value, (tuple, list)):
        return [render(x) for x in value]
    return str(value)


@dataclass
class Verdict:
    id: IdentityId
    params: Params
    indices: dict[str, int]
    lhs: Any = None
    rhs: Any = None
    holds: bool | None = None
    guard: str = EVALUATED
    reason: str | None = None

    @property
    def evaluated(self) -> bool:
        return self.guard == EVALUATED

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id.value,
            "params": self.params.as_dict(),
            "indices": dict(self.indices),
            "guard": self.guard,
        }
        if self.evaluated:
            out.update(lhs=render(self.lhs), rhs=render(self.rhs), holds=self.holds)
        else:
            out["reason"] = self.reason
        return out


def _validate(e: Identity, indices: dict[str, int]) -> dict[str, int]:
    missing = [i for i in e.indices if i not in indices]
    if missing:
        raise UsageError(f"{e.id.value} needs indices {', '.join(missing)}")
    extra = sorted(set(indices) - set(e.indices))
    if extra:
        raise UsageError(f"{e.id.value} does not take indices {', '.join(extra)}")
    idx = {k: int(indices[k]) for k in e.indices}
    if e.side_condition is not None and not e.side_condition(idx):
        raise UsageError(f"{e.id.value}: side condition violated for {idx} ({e.formula})")
    return idx


def check_guards(e: Identity, c: Any, idx: dict[str, int]) -> str | None:
    """Reason the identity does not apply at this point, or None."""
    if e.distinct_roots and c.D == 0:
        return "repeated root (D = 0)"
    for reason, violated in e.guards:
        try:
            if violated(c, **idx):
                return reason
        except tuple(_ENGINE_SKIPS) as exc:
            return _ENGINE_SKIPS[type(exc)]
    return None


def evaluate_identity(
    params: Params,
    id: IdentityId | str,
    indices: dict[str, int],
    ctx: NumericContext | None = None,
) -> Verdict:
    """Evaluate both sides exactly; degenerate points become skipped verdicts."""
    e = entry(id)
    idx = _validate(e, indices)
    c = ctx if ctx is not None else NumericContext(params)
    reason, lhs, rhs = _evaluate_point(e, c, idx)
    if reason is not None:
        return Verdict(e.id, params, idx, guard=SKIPPED, reason=reason)
    return Verdict(e.id, params, idx, lhs, rhs, bool(lhs == rhs))


_SKIP_TYPES = tuple(_ENGINE_SKIPS)


def _evaluate_point(e: Identity, c: Any, idx: dict[str, int]) -> tuple[str | None, Any, Any]:
    reason = check_guards(e, c, idx) if (e.guards or e.distinct_roots) else None
    if reason is not None:
        return reason, None, None
    try:
        lhs, rhs = e.evaluate(c, **idx)
    except _SKIP_TYPES as exc:
        return _ENGINE_SKIPS[type(exc)], None, None
    return None, lhs, rhs


def de_moivre_check(params: Params, n: int, k: int) -> Verdict:
    return evaluate_identity(params, IdentityId.DE_MOIVRE, {"n": n, "k": k})


@dataclass(frozen=True)
class PythagoreanTriple:
    exact: tuple[Fraction, Fraction, Fraction]
    primitive: tuple[int, int, int]


def pythagorean_triple(params: Params, n: int) -> PythagoreanTriple:
    """Triple (s^2 - t^2, 2st, s^2 + t^2) from s = (p^2-q) h_{n+2}, t = q^2 h_n."""
    if params.q == 0:
        raise DegenerateQ("the Pythagorean construction needs q != 0")
    s, t = pyth_legs(NumericContext(params), n)
    s, t = Fraction(s), Fraction(t)
    x, y, z = s * s - t * t, 2 * s * t, s * s + t * t
    if x == 0 and y == 0:
        raise DegenerateTriple(f"s = t = 0 at n = {n} for {params}")
    scale = math.lcm(x.denominator, y.denominator, z.denominator)
    ints = [abs(int(v * scale)) for v in (x, y, z)]
    g = math.gcd(*ints)
    prim = sorted(v // g for v in ints)
    return PythagoreanTriple((x, y, z), (prim[0], prim[1], prim[2]))


Range = tuple[int, int]


@dataclass(frozen=True)
class GridConfig:
    """Inclusive parameter ranges plus the index windows used per role."""

    a_range: Range = (-2, 2)
    b_range: Range = (-2, 2)
    p_range: Range = (-3, 3)
    q_range: Range = (-3, 3)
    exclude_zero_q: bool = True
    n_range: Range = (-4, 8)
    aux_range: Range = (0, 4)
    # multiplier pairs for identities with free integer coefficients
    multipliers: tuple[tuple[int, int], ...] = ((1, 1), (2, -3))

    def params(self) -> Iterator[Params]:
        for a, b, p, q in itertools.product(
            _span(self.a_range), _span(self.b_range), _span(self.p_range), _span(self.q_range)
        ):
            if self.exclude_zero_q and q == 0:
                continue
            yield Params(a, b, p, q)

    def index_tuples(self, e: Identity) -> Iterator[dict[str, int]]:
        free = [i for i in e.indices if e.role(i) not in ("mult", "derived")]
        mults = [i for i in e.indices if e.role(i) == "mult"]
        spans = [_span(self.n_range if e.role(i) == "n" else self.aux_range) for i in free]
        mult_choices = list(self.multipliers) if mults else [()]
        for values in itertools.product(*spans):
            for mv in mult_choices:
                idx = dict(zip(free, values))
                idx.update(zip(mults, mv))
                if e.derived is not None:
                    idx = e.derived(idx)
                yield {k: idx[k] for k in e.indices}

    def describe(self) -> dict[str, Any]:
        return {
            "a": list(self.a_range),
            "b": list(self.b_range),
            "p": list(self.p_range),
            "q": list(self.q_range),
            "exclude_zero_q": self.exclude_zero_q,
            "n": list(self.n_range),
            "aux": list(self.aux_range),
            "multipliers": [list(m) for m in self.multipliers],
        }


STANDARD_GRID = GridConfig()


def _span(r: Range) -> range:
    return range(r[0], r[1] + 1)


@dataclass
class Tally:
    id: IdentityId
    status: Status
    evaluated: int = 0
    held: int = 0
    failed: int = 0
    skipped: int = 0
    skip_reasons: Counter = field(default_factory=Counter)
    counterexamples: list[Verdict] = field(default_factory=list)

    def add(self, v: Verdict, cap: int) -> None:
        if not v.evaluated:
            self.skipped += 1
            self.skip_reasons[v.reason] += 1
            return
        self.evaluated += 1
        if v.holds:
            self.held += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < cap:
                self.counterexamples.append(v)

    @property
    def consistent(self) -> bool:
        if self.status is Status.DISPUTED:
            return self.failed > 0
        return self.failed == 0

    def to_dict(self) -> dict[str, Any]:
        e = CATALOG[self.id]
        return {
            "id": self.id.value,
            "status": self.status.value,
            "formula": e.formula,
            "evaluated": self.evaluated,
            "held": self.held,
            "failed": self.failed,
            "skipped": self.skipped,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "consistent": self.consistent,
            "counterexamples": [
                {
                    "params": v.params.as_dict(),
                    "indices": dict(v.indices),
                    "lhs": render(v.lhs),
                    "rhs": render(v.rhs),
                }
                for v in self.counterexamples
            ],
        }


@dataclass
class AuditReport:
    grid: dict[str, Any]
    tallies: dict[IdentityId, Tally]

    @property
    def inconsistencies(self) -> list[str]:
        out = []
        for t in self.tallies.values():
            if not t.consistent:
                if t.status is Status.DISPUTED:
                    out.append(f"{t.id.value}: DISPUTED but no counterexample found")
                else:
                    out.append(f"{t.id.value}: {t.status.value} but failed {t.failed} time(s)")
        return out

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": self.grid,
            "consistent": self.consistent,
            "identities": [t.to_dict() for t in self.tallies.values()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "evaluated", "held", "failed", "skipped", "consistent"])
        for t in self.tallies.values():
            w.writerow([t.id.value, t.status.value, t.evaluated, t.held, t.failed, t.skipped, t.consistent])
        return buf.getvalue()

    def to_text(self) -> str:
        rows = [("id", "status", "evaluated", "held", "failed", "skipped", "ok")]
        for t in self.tallies.values():
            rows.append(
                (t.id.value, t.status.value, str(t.evaluated), str(t.held),
                 str(t.failed), str(t.skipped), "yes" if t.consistent else "NO")
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() for r in rows]
        for t in self.tallies.values():
            if t.status is Status.DISPUTED and t.counterexamples:
                v = t.counterexamples[0]
                lines.append(
                    f"counterexample {t.id.value}: params {v.params} indices {v.indices} "
                    f"lhs={json.dumps(render(v.lhs))} rhs={json.dumps(render(v.rhs))}"
                )
        lines.append("statuses reproduced" if self.consistent else "STATUS MISMATCH: " + "; ".join(self.inconsistencies))
        return "\n".join(lines) + "\n"


def audit_sweep(
    grid: GridConfig = STANDARD_GRID,
    ids: Iterable[IdentityId | str] | None = None,
    cap: int = DEFAULT_CAP,
) -> AuditReport:
    """Evaluate every id at every grid point, params-major in lexicographic order."""
    chosen = list(CATALOG) if ids is None else [IdentityId.parse(i) for i in ids]
    chosen = [i for i in CATALOG if i in set(chosen)]  # catalog order
    tallies = {i: Tally(i, CATALOG[i].status) for i in chosen}
    tuples = {i: list(grid.index_tuples(CATALOG[i])) for i in chosen}
    if chosen:
        for params in grid.params():
            ctx = NumericContext(params)
            for i in chosen:
                e, t = CATALOG[i], tallies[i]
                for idx in tuples[i]:
                    reason, lhs, rhs = _evaluate_point(e, ctx, idx)
                    if reason is None and lhs == rhs:
                        t.evaluated += 1
                        t.held += 1
                    elif reason is None:
                        t.add(Verdict(i, params, idx, lhs, rhs, False), cap)
                    else:
                        t.add(Verdict(i, params, idx, guard=SKIPPED, reason=reason), cap)
    return AuditReport(grid.describe(), tallies)
