"""Throughput sweep across all parameter sets.

Times a keyed stream at every preset.  Per-bit cost is not comparable across
the two families (block sizes differ by two orders of magnitude), so the fit
is done on per-block cost against the work model of the packed engine: one
step XOR-reduces about k*n/2 table rows of n*(n-k) bits each, so block cost
should be affine in k*n^2*(n-k) with the intercept soaking up interpreter
overhead.  Large residuals mean the engine fell off its work model.

Run from the repository root:

    python3 scripts/bench_scaling.py --seconds 1.0
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from rankprng import core


def time_preset(p: core.ParamSet, seconds: float) -> tuple[int, float]:
    h = core.keygen(p, seed64=0xB0B)
    rng = np.random.default_rng(0xBE)
    seed = rng.integers(0, 2, p.seed_bits, dtype=np.uint8)
    iv = rng.integers(0, 2, p.iv_bits, dtype=np.uint8)
    state = core.prng_init(seed, iv, h)
    state.generate(4096)  # warm up
    chunk = 1 << 16
    total = 0
    t0 = time.perf_counter()
    while (elapsed := time.perf_counter() - t0) < seconds:
        state.generate(chunk)
        total += chunk
    return total, elapsed


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seconds", type=float, default=1.0, help="time per preset")
    args = ap.parse_args()

    rows = []
    print(f"{'label':<12} {'n':>4} {'block':>6} {'MiB/s':>8} {'ns/bit':>8} {'us/block':>9}")
    for label, p in core.presets():
        total, elapsed = time_preset(p, args.seconds)
        per_bit = 1e9 * elapsed / (8 * total)
        per_block = per_bit * p.block_out_bits / 1e3
        rate = total / elapsed / (1 << 20)
        work = p.k * p.n * p.n * (p.n - p.k) / 2
        rows.append((work, per_block))
        print(
            f"{label:<12} {p.n:>4} {p.block_out_bits:>6} {rate:>8.2f}"
            f" {per_bit:>8.2f} {per_block:>9.1f}"
        )

    work = np.array([r[0] for r in rows], dtype=float)
    cost = np.array([r[1] for r in rows], dtype=float)
    b, a = np.polyfit(work, cost, 1)
    worst = float(np.max(np.abs(cost - (a + b * work)) / cost))
    print(f"\naffine fit: block cost = {a:.1f} us + {1e6 * b:.1f} ps * k*n^2*(n-k)/2")
    print(f"worst relative deviation: {100 * worst:.1f}%")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
