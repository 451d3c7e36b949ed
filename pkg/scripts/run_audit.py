"""Sweep the whole catalog over the standard grid and write the report.

    python scripts/run_audit.py --out results/audit
"""

import argparse
import time
from pathlib import Path

from horadam.audit import STANDARD_GRID, audit_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/audit"))
    ap.add_argument("--cap", type=int, default=16)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = audit_sweep(STANDARD_GRID, cap=args.cap)
    elapsed = time.perf_counter() - t0

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "report.json").write_text(report.to_json() + "\n")
    (args.out / "report.csv").write_text(report.to_csv())
    (args.out / "report.txt").write_text(report.to_text())
    print(report.to_text(), end="")
    print(f"{elapsed:.1f} s, written to {args.out}/")
    return 0 if report.consistent else 1


if __name__ == "__main__":
    raise SystemExit(main())
