"""Command-line front end: ``python -m horadam <subcommand> ...``.

Negative values work both as ``-q -1`` and as ``--q=-1``.  Exit codes:
0 success, 1 identity failed or audit status mismatch, 2 usage error or
invalid parameters, 3 check skipped at a degenerate guard, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence, TextIO

from .audit import DEFAULT_CAP, GridConfig, audit_sweep, evaluate_identity, pythagorean_triple, render
from .catalog import CATALOG, IdentityId
from .errors import DegenerateTriple, HoradamError, InvariantViolation, RepeatedRoot, UsageError
from .proof import sym_verify
from .sequences import EVALUATORS, Params, SeqKind, gf_coefficients, term
from .symbolic import sym_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SKIPPED, EXIT_INVARIANT = 0, 1, 2, 3, 4

INDEX_NAMES = ("n", "m", "r", "s", "k", "t", "i", "j", "l")
FORMATS = ("json", "csv", "text")


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _pairs(text: str) -> tuple[tuple[int, int], ...]:
    try:
        out = tuple(tuple(int(x) for x in item.split(":")) for item in text.split(","))
    except ValueError:
        out = ()
    if not out or any(len(pair) != 2 for pair in out):
        raise argparse.ArgumentTypeError(f"expected K:T[,K:T...], got {text!r}")
    return out  # type: ignore[return-value]


def _add_params(sp: argparse.ArgumentParser, required: bool = True) -> None:
    g = sp.add_argument_group("sequence parameters")
    for name in "abpq":
        g.add_argument(f"-{name}", f"--{name}", type=int, required=required, metavar="INT")


def _add_format(sp: argparse.ArgumentParser, default: str) -> None:
    sp.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="horadam", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("term", help="one exact term")
    _add_params(sp)
    sp.add_argument("-k", "--kind", choices=[k.value for k in SeqKind], required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--evaluator", choices=["auto", *EVALUATORS, "all"], default="auto")
    _add_format(sp, "text")

    sp = sub.add_parser("table", help="term table over an index range")
    _add_params(sp)
    sp.add_argument("--from", dest="lo", type=int, default=0)
    sp.add_argument("--to", dest="hi", type=int, default=10)
    sp.add_argument("--kinds", default="w,h,u,v", help="comma list of w,h,u,v")
    sp.add_argument("--evaluator", choices=["auto", *EVALUATORS], default="auto")
    _add_format(sp, "text")

    for name, what in (("check", "evaluate one identity numerically"), ("prove", "prove one identity symbolically")):
        sp = sub.add_parser(name, help=what)
        if name == "check":
            _add_params(sp)
        sp.add_argument("--id", required=True, help="catalog id, e.g. cassini")
        g = sp.add_argument_group("indices")
        for ix in INDEX_NAMES:
            g.add_argument(f"-{ix}", f"--{ix}", dest=f"idx_{ix}", type=int, metavar="INT")
        _add_format(sp, "json")

    sp = sub.add_parser("audit", help="sweep the catalog over a parameter grid")
    d = GridConfig()
    for name in "abpq":
        sp.add_argument(f"--{name}-range", type=_range, default=getattr(d, f"{name}_range"), metavar="LO:HI")
    sp.add_argument("--n-range", type=_range, default=d.n_range, metavar="LO:HI")
    sp.add_argument("--aux-range", type=_range, default=d.aux_range, metavar="LO:HI")
    sp.add_argument("--multipliers", type=_pairs, default=d.multipliers, metavar="K:T,...")
    sp.add_argument("--include-zero-q", action="store_true")
    sp.add_argument("--ids", default=None, help="comma list of catalog ids (default: all)")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="counterexamples kept per id")
    _add_format(sp, "text")

    sp = sub.add_parser("triple", help="Pythagorean triple from Horadam-Lucas terms")
    _add_params(sp)
    sp.add_argument("-n", type=int, required=True)
    _add_format(sp, "text")

    sp = sub.add_parser("gf", help="generating-function coefficients by series division")
    _add_params(sp)
    sp.add_argument("--count", type=int, default=16)
    _add_format(sp, "text")

    sp = sub.add_parser("symtable", help="symbolic terms w_n and h_n in a, b, p, q")
    sp.add_argument("--maxn", type=int, default=5)
    _add_format(sp, "text")

    sp = sub.add_parser("bench", help="time the evaluators at one index")
    _add_params(sp)
    sp.add_argument("-k", "--kind", choices=[k.value for k in SeqKind], default="h")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--check-at", type=int, default=None, help="cross-check index (default min(n, 1000))")
    sp.add_argument("--evaluators", default="naive,matrix,binet")
    sp.add_argument("--naive-limit", type=int, default=100_000, help="skip naive above this |n|")
    _add_format(sp, "text")
    return ap


@dataclass
class CliConfig:
    subcommand: str
    params: Params | None = None
    indices: dict[str, int] = field(default_factory=dict)
    grid: GridConfig | None = None
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    evaluator: str = "auto"
    ns: argparse.Namespace | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> CliConfig:
        cfg = cls(ns.subcommand, fmt=ns.format, ns=ns)
        if getattr(ns, "a", None) is not None:
            cfg.params = Params(ns.a, ns.b, ns.p, ns.q)
        cfg.evaluator = getattr(ns, "evaluator", "auto")
        cfg.indices = {ix: getattr(ns, f"idx_{ix}") for ix in INDEX_NAMES if getattr(ns, f"idx_{ix}", None) is not None}
        if ns.subcommand == "audit":
            cfg.cap = ns.cap
            cfg.grid = GridConfig(
                ns.a_range, ns.b_range, ns.p_range, ns.q_range, not ns.include_zero_q,
                ns.n_range, ns.aux_range, ns.multipliers,
            )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        ns = self.ns
        if self.subcommand in ("check", "prove"):
            e = CATALOG[IdentityId.parse(ns.id)]
            if e.derived is not None:
                given = dict(self.indices)
                self.indices = e.derived({**given, "l": 0}) if "l" not in given else given
                if "l" in given and e.derived(given) != given:
                    raise UsageError(f"{e.id.value}: side condition violated ({e.formula})")
        if self.subcommand == "table" and ns.lo > ns.hi:
            raise UsageError("--from must not exceed --to")
        if self.subcommand == "gf" and ns.count < 0:
            raise UsageError("--count must be >= 0")
        if self.subcommand == "symtable" and ns.maxn < 0:
            raise UsageError("--maxn must be >= 0")
        if self.subcommand == "audit" and self.cap < 0:
            raise UsageError("--cap must be >= 0")


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _do_term(cfg: CliConfig) -> tuple[int, str]:
    ns, params = cfg.ns, cfg.params
    kind = SeqKind.parse(ns.kind)
    if cfg.evaluator == "all":
        values = {}
        for name in EVALUATORS:
            try:
                values[name] = term(params, kind, ns.n, name)
            except RepeatedRoot:
                continue
        if len(set(values.values())) != 1:
            raise InvariantViolation(f"evaluators disagree: { {k: render(v) for k, v in values.items()} }")
        value = next(iter(values.values()))
        extra = {"evaluators": sorted(values)}
    else:
        value = term(params, kind, ns.n, cfg.evaluator)
        extra = {"evaluator": cfg.evaluator}
    if cfg.fmt == "text":
        return EXIT_OK, f"{render(value)}\n"
    rec = {"params": params.as_dict(), "kind": kind.value, "n": ns.n, "value": render(value), **extra}
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["a", "b", "p", "q", "kind", "n", "value"], [*params.as_tuple(), kind.value, ns.n, rec["value"]]])
    return EXIT_OK, _json(rec)


def _do_table(cfg: CliConfig) -> tuple[int, str]:
    ns, params = cfg.ns, cfg.params
    kinds = [SeqKind.parse(k.strip()) for k in ns.kinds.split(",") if k.strip()]
    rows = [[n, *(render(term(params, k, n, cfg.evaluator)) for k in kinds)] for n in range(ns.lo, ns.hi + 1)]
    header = ["n", *(k.value for k in kinds)]
    if cfg.fmt == "json":
        return EXIT_OK, _json({"params": params.as_dict(), "rows": [dict(zip(header, r)) for r in rows]})
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([header, *rows])
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return EXIT_OK, "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def _do_check(cfg: CliConfig) -> tuple[int, str]:
    v = evaluate_identity(cfg.params, cfg.ns.id, cfg.indices)
    code = EXIT_SKIPPED if not v.evaluated else (EXIT_OK if v.holds else EXIT_FAIL)
    d = v.to_dict()
    if cfg.fmt == "json":
        return code, _json(d)
    if cfg.fmt == "csv":
        row = [d["id"], str(v.params), json.dumps(d["indices"]), d["guard"],
               json.dumps(d.get("lhs")), json.dumps(d.get("rhs")), d.get("holds", ""), d.get("reason") or ""]
        return code, _csv([["id", "params", "indices", "guard", "lhs", "rhs", "holds", "reason"], row])
    where = " ".join(f"{k}={x}" for k, x in v.indices.items())
    if not v.evaluated:
        return code, f"{d['id']} {v.params} {where}: skipped ({v.reason})\n"
    verdict = "holds" if v.holds else "FAILS"
    return code, f"{d['id']} {v.params} {where}: lhs={json.dumps(d['lhs'])} rhs={json.dumps(d['rhs'])} {verdict}\n"


def _do_prove(cfg: CliConfig) -> tuple[int, str]:
    r = sym_verify(cfg.ns.id, cfg.indices)
    code = {"proven": EXIT_OK, "refuted": EXIT_FAIL}.get(r.outcome, EXIT_SKIPPED)
    d = r.to_dict()
    if cfg.fmt == "json":
        return code, _json(d)
    if cfg.fmt == "csv":
        return code, _csv([["id", "indices", "outcome", "witness", "side_conditions"],
                           [d["id"], json.dumps(d["indices"]), d["outcome"], d.get("witness", ""), d.get("side_conditions", "")]])
    where = " ".join(f"{k}={x}" for k, x in r.indices.items())
    tail = f" witness: {r.witness}" if r.witness is not None else (f" ({r.reason})" if r.reason else "")
    return code, f"{d['id']} {where}: {r.outcome}{tail}\n"


def _do_audit(cfg: CliConfig) -> tuple[int, str]:
    ids = [s.strip() for s in cfg.ns.ids.split(",")] if cfg.ns.ids else None
    report = audit_sweep(cfg.grid, ids, cfg.cap)
    code = EXIT_OK if report.consistent else EXIT_FAIL
    text = {"json": lambda: report.to_json() + "\n", "csv": report.to_csv, "text": report.to_text}[cfg.fmt]()
    return code, text


def _do_triple(cfg: CliConfig) -> tuple[int, str]:
    try:
        tr = pythagorean_triple(cfg.params, cfg.ns.n)
    except DegenerateTriple as exc:
        msg = {"params": cfg.params.as_dict(), "n": cfg.ns.n, "guard": "skipped-degenerate", "reason": str(exc)}
        return EXIT_SKIPPED, _json(msg) if cfg.fmt == "json" else f"skipped ({exc})\n"
    prim = " ".join(map(str, tr.primitive))
    if cfg.fmt == "text":
        return EXIT_OK, prim + "\n"
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["x", "y", "z", "px", "py", "pz"], [*map(render, tr.exact), *tr.primitive]])
    return EXIT_OK, _json({"params": cfg.params.as_dict(), "n": cfg.ns.n,
                           "exact": render(list(tr.exact)), "primitive": list(tr.primitive)})


def _do_gf(cfg: CliConfig) -> tuple[int, str]:
    coeffs = [render(x) for x in gf_coefficients(cfg.params, cfg.ns.count)]
    if cfg.fmt == "json":
        return EXIT_OK, _json({"params": cfg.params.as_dict(), "coefficients": coeffs})
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["n", "coefficient"], *([i, c] for i, c in enumerate(coeffs))])
    return EXIT_OK, " ".join(coeffs) + "\n"


def _do_symtable(cfg: CliConfig) -> tuple[int, str]:
    lines = sym_table(cfg.ns.maxn)
    if cfg.fmt == "text":
        return EXIT_OK, "\n".join(lines) + "\n"
    rows = [[ln[0], int(ln[2:ln.index(" ")]), ln.split(" = ", 1)[1]] for ln in lines]
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["kind", "n", "polynomial"], *rows])
    return EXIT_OK, _json([{"kind": k, "n": n, "polynomial": poly} for k, n, poly in rows])


def _do_bench(cfg: CliConfig) -> tuple[int, str]:
    ns, params = cfg.ns, cfg.params
    kind = SeqKind.parse(ns.kind)
    names = [s.strip() for s in ns.evaluators.split(",") if s.strip()]
    unknown = [s for s in names if s not in EVALUATORS]
    if unknown:
        raise UsageError(f"unknown evaluators: {', '.join(unknown)}")
    if params.D == 0:
        names = [s for s in names if s != "binet"]
    check_at = ns.check_at if ns.check_at is not None else min(ns.n, 1000) if ns.n >= 0 else max(ns.n, -1000)
    ref = {s: term(params, kind, check_at, s) for s in names}
    if len(set(ref.values())) > 1:
        raise InvariantViolation(f"evaluators disagree at n = {check_at}")
    results = []
    for s in names:
        if s == "naive" and abs(ns.n) > ns.naive_limit:
            results.append({"evaluator": s, "seconds": None, "note": f"skipped, |n| > {ns.naive_limit}"})
            continue
        t0 = time.perf_counter()
        value = term(params, kind, ns.n, s)
        dt = time.perf_counter() - t0
        results.append({"evaluator": s, "seconds": round(dt, 6), "bits": abs(value.numerator).bit_length()})
    out = {"params": params.as_dict(), "kind": kind.value, "n": ns.n, "checked_at": check_at, "results": results}
    if cfg.fmt == "json":
        return EXIT_OK, _json(out)
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([["evaluator", "seconds", "note"],
                              *([r["evaluator"], r["seconds"], r.get("note", "")] for r in results)])
    lines = [f"{kind.value}_{ns.n} for {params}; evaluators agree at n = {check_at}"]
    for r in results:
        lines.append(f"  {r['evaluator']:<7} {r['note']}" if r["seconds"] is None
                     else f"  {r['evaluator']:<7} {r['seconds']:.4f} s  ({r['bits']} bits)")
    return EXIT_OK, "\n".join(lines) + "\n"


_HANDLERS = {
    "term": _do_term, "table": _do_table, "check": _do_check, "prove": _do_prove, "audit": _do_audit,
    "triple": _do_triple, "gf": _do_gf, "symtable": _do_symtable, "bench": _do_bench,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = CliConfig.from_args(ns)
        code, text = _HANDLERS[cfg.subcommand](cfg)
    except InvariantViolation as exc:
        print(f"horadam: internal invariant violated: {exc}", file=err)
        return EXIT_INVARIANT
    except (HoradamError, ValueError, ZeroDivisionError) as exc:
        print(f"horadam {ns.subcommand}: {exc}", file=err)
        return EXIT_USAGE
    out.write(text)
    return code


def main() -> None:
    sys.exit(run())
