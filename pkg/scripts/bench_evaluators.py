"""Wall time of the three evaluators over growing indices.

    python scripts/bench_evaluators.py --max-exp 6
"""

import argparse
import time

from horadam.sequences import EVALUATORS, Params, term

NAIVE_LIMIT = 10**5


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-a", type=int, default=0)
    ap.add_argument("-b", type=int, default=1)
    ap.add_argument("-p", type=int, default=1)
    ap.add_argument("-q", type=int, default=-1)
    ap.add_argument("--kind", default="h")
    ap.add_argument("--max-exp", type=int, default=6)
    args = ap.parse_args()
    params = Params(args.a, args.b, args.p, args.q)
    names = [e for e in EVALUATORS if e != "binet" or params.D != 0]

    print(f"{args.kind}_n for {params}")
    print(f"{'n':>9} " + " ".join(f"{e:>10}" for e in names))
    for k in range(1, args.max_exp + 1):
        n = 10**k
        cells, values = [], set()
        for e in names:
            if e == "naive" and n > NAIVE_LIMIT:
                cells.append(f"{'-':>10}")
                continue
            value, dt = timed(term, params, args.kind, n, e)
            values.add(value)
            cells.append(f"{dt:>9.4f}s")
        if len(values) != 1:
            print(f"evaluators disagree at n = {n}")
            return 4
        print(f"{n:>9} " + " ".join(cells))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
