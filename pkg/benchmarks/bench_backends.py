"""Compare the compiled and pure-Python kernels on solve_full.

    python benchmarks/bench_backends.py --sizes 1e3,1e4,1e5 --seeds 3

Checks that both backends return identical solutions, then prints the
median time per size and the speedup of the compiled kernels.
"""

import argparse
import statistics
import time

from orthoguard import kernels
from orthoguard.bench import bench_spec
from orthoguard.generator import generate_random
from orthoguard.solver import solve_full


def timed(t, backend):
    t.__dict__.pop("classification", None)
    start = time.perf_counter()
    sol = solve_full(t, backend=backend)
    return time.perf_counter() - start, sol


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="1e3,1e4,1e5")
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")

    print(f"{'n':>8}  {'compiled_ms':>11}  {'pure_ms':>9}  {'speedup':>7}")
    for n in (int(float(s)) for s in args.sizes.split(",")):
        fast, slow = [], []
        for seed in range(args.seeds):
            t = generate_random(bench_spec(n, seed))
            tc, a = timed(t, "compiled")
            tp, b = timed(t, "pure")
            assert a.same_result(b) and a.visits == b.visits, f"backends disagree at n={n} seed={seed}"
            fast.append(tc)
            slow.append(tp)
        c, p = statistics.median(fast), statistics.median(slow)
        print(f"{n:>8}  {c * 1e3:>11.3f}  {p * 1e3:>9.3f}  {p / c:>7.1f}")


if __name__ == "__main__":
    main()
