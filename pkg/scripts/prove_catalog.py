"""Symbolic proof pass over the catalog at fixed index windows.

    python scripts/prove_catalog.py [--n-range 0:6] [--aux-range 0:4]
"""

import argparse
import time

from horadam.audit import GridConfig
from horadam.catalog import CATALOG
from horadam.cli import _range
from horadam.proof import prove_window


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-range", type=_range, default=(0, 6))
    ap.add_argument("--aux-range", type=_range, default=(0, 4))
    ap.add_argument("--ids", default=None)
    args = ap.parse_args()

    window = GridConfig(n_range=args.n_range, aux_range=args.aux_range)
    ids = args.ids.split(",") if args.ids else None
    t0 = time.perf_counter()
    summary = prove_window(ids, window)
    elapsed = time.perf_counter() - t0

    mismatch = 0
    print(f"{'id':<30} {'status':<10} {'proven':>6} {'refuted':>7} {'skipped':>7}")
    for i, s in summary.items():
        status = CATALOG[i].status.value
        print(f"{i.value:<30} {status:<10} {s.proven:>6} {s.refuted:>7} {s.skipped:>7}")
        if (status == "DISPUTED") != (s.refuted > 0):
            mismatch += 1
    for i, s in summary.items():
        if s.first_refutation is not None:
            r = s.first_refutation
            print(f"witness {i.value} {r.indices}: {r.witness}")
    print(f"{elapsed:.1f} s; {mismatch} status mismatch(es)")
    return 1 if mismatch else 0


if __name__ == "__main__":
    raise SystemExit(main())
