"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernel.py [--n 60 100] [--repeat 3]

The Python backend is only timed up to --python-max (default 100); beyond
that its time is extrapolated from the node count, which grows like γ.
"""

import argparse
import time

from smoothwords import _pykernel, kernel


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[40, 60, 100, 160, 256])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-max", type=int, default=100)
    args = ap.parse_args()

    compiled = kernel.BACKENDS.get("compiled")
    if compiled is None:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'n':>5} {'nodes':>12} {'compiled s':>11} {'python s':>11} {'speedup':>8}")
    base_rate = None
    for n in args.n:
        tc = float("nan")
        if compiled is not None:
            tc, res = best_of(lambda: compiled.walk(n), args.repeat)
        else:
            res = _pykernel.walk(n)
        nodes = sum(res[0])
        if n <= args.python_max:
            tp, pres = best_of(lambda: _pykernel.walk(n), 1)
            assert pres == res or compiled is None, f"backends disagree at n={n}"
            base_rate = tp / nodes
            mark = ""
        else:
            tp = base_rate * nodes if base_rate else float("nan")
            mark = "~"
        print(f"{n:>5} {nodes:>12} {tc:>11.4f} {mark + format(tp, '.3f'):>11} {tp / tc:>8.0f}x")

    if compiled is not None:
        tc, _ = best_of(lambda: compiled.kolakoski(10**6), args.repeat)
        tp, _ = best_of(lambda: _pykernel.kolakoski(10**6), 1)
        print(f"kolakoski(10^6): compiled {tc:.4f}s, python {tp:.4f}s, speedup {tp / tc:.0f}x")


if __name__ == "__main__":
    main()
