"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--sizes 25 50 100 200] [--repeats 3] [--json out.json]

Times the naive and fast lattice counters and the sawtooth cross sum on
every available backend.  The naive counter is skipped once it would visit
more points than ``--naive-limit`` (pure Python gets a limit 25 times lower).
"""
import argparse
import json
import time

from sigsurf import kernels
from sigsurf.brieskorn import s_counts_fast, s_counts_naive


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def cross_sum_batch(m, backend):
    total = 0
    for a in range(m):
        total += kernels.sawtooth_cross_numerator(a, 6, m, backend=backend)
    return total


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--naive-limit", type=int, default=5 * 10 ** 7)
    parser.add_argument("--json", metavar="FILE")
    args = parser.parse_args(argv)

    rows = []
    for size in args.sizes:
        c = (size - 1, size, size + 1)
        work = (c[0] - 1) * (c[1] - 1) * (c[2] - 1)
        for backend in kernels.backends():
            limit = args.naive_limit if backend != "python" else args.naive_limit // 25
            for name, fn in (("fast", s_counts_fast), ("naive", s_counts_naive)):
                if name == "naive" and work > limit:
                    continue
                seconds, counts = best_of(lambda: fn(c, backend=backend), args.repeats)
                rows.append({"kernel": f"s_counts_{name}", "size": size, "backend": backend,
                             "seconds": seconds, "signature": counts.signature})
            seconds, _ = best_of(lambda: cross_sum_batch(size, backend), args.repeats)
            rows.append({"kernel": "cross_sum", "size": size, "backend": backend, "seconds": seconds})

    print(f"{'kernel':<16}{'size':>6}  {'backend':<8}{'seconds':>12}")
    for row in rows:
        print(f"{row['kernel']:<16}{row['size']:>6}  {row['backend']:<8}{row['seconds']:>12.6f}")
    by_key = {(r["kernel"], r["size"], r["backend"]): r["seconds"] for r in rows}
    if "cython" in kernels.backends():
        print()
        for kernel, size, backend in sorted(by_key):
            if backend == "cython" and (kernel, size, "python") in by_key:
                ratio = by_key[(kernel, size, "python")] / max(by_key[(kernel, size, "cython")], 1e-9)
                print(f"{kernel} size {size}: compiled is {ratio:.1f}x faster")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
