"""Compare the compiled kernels against the numpy fallback.

Times the two hot paths at production shapes: syndrome encoding at the
prepare chunk size, and the GRU forward/backward pair at the training batch
shape. Run from the repository root:

    python3 benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import statistics
import time

import numpy as np

from synclass import backend, ldpc


def timeit(fn, repeats):
    samples = []
    for _ in range(repeats):
        tic = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - tic)
    return statistics.median(samples)


def bench_syndrome(kernels, repeats):
    h = ldpc.build_regular_ldpc(1024, 512, 3, 6, seed=7)
    rng = np.random.default_rng(0)
    bits = (rng.random((2048 * 8, 1024)) < 0.5).astype(np.uint8)
    return timeit(lambda: kernels.syndrome_batch(bits, h.rows), repeats)


def bench_gru(kernels, repeats):
    rng = np.random.default_rng(1)
    b, t, j = 64, 8, 12
    proj = rng.normal(size=(b, t, 3 * j))
    u_z, u_r, u_h = (rng.normal(size=(j, j)) * 0.3 for _ in range(3))
    h0 = np.zeros((b, j))
    d_h = rng.normal(size=(b, j))

    def step():
        z, r, htil, hprev, _ = kernels.gru_forward(proj, u_z, u_r, u_h, h0)
        kernels.gru_backward(d_h, z, r, htil, hprev, u_z, u_r, u_h)

    return timeit(step, repeats)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    names = []
    for choice in ("python", "cython"):
        try:
            names.append((choice, backend.select(choice)))
        except ImportError:
            print(f"{choice}: not built, skipping")

    rows = []
    for label, fn in (("syndrome_batch 16384x1024", bench_syndrome),
                      ("gru fwd+bwd B=64 T=8 J=12", bench_gru)):
        times = {name: fn(kernels, args.repeats) for name, kernels in names}
        rows.append((label, times))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  " + "".join(f"{n:>12}" for n, _ in names)
          + ("     speedup" if len(names) == 2 else ""))
    for label, times in rows:
        cells = "".join(f"{times[n] * 1e3:>10.2f}ms" for n, _ in names)
        if len(times) == 2:
            cells += f"{times['python'] / times['cython']:>11.1f}x"
        print(f"{label:<{width}}  {cells}")


if __name__ == "__main__":
    main()
