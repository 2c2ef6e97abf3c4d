"""Count partitions of T_2n by every available method and time each one.

Usage:
    python scripts/count_table.py [--max-n 6] [--workers 1]
"""
import argparse
import time

from twisted_trees.enumeration import (
    count_closed_form,
    count_recursive,
    oracle_enumerate,
    structured_count,
    structured_enumerate,
)


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    value = fn(*args, **kw)
    return value, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--oracle-max", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>2} {'closed form':>14} {'recursive':>14} {'structured':>14} {'oracle':>10}  times")
    for n in range(1, args.max_n + 1):
        cf = count_closed_form(n)
        rec = count_recursive(n)
        if n <= 5:
            ps, ts = timed(structured_enumerate, n, workers=args.workers)
            st = len(ps)
        else:
            st, ts = timed(structured_count, n, workers=args.workers)
        if n <= args.oracle_max:
            ps, to = timed(oracle_enumerate, n, workers=args.workers)
            orc = str(len(ps))
        else:
            orc, to = "-", 0.0
        flag = "" if cf == rec == st and orc in ("-", str(cf)) else "  MISMATCH"
        print(f"{n:>2} {cf:>14} {rec:>14} {st:>14} {orc:>10}  "
              f"structured {ts:.2f}s oracle {to:.2f}s{flag}")


if __name__ == "__main__":
    main()
