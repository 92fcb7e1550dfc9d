"""Monobit and runs z-scores over many independently seeded streams.

One stream passing the battery says little; this draws a batch of seeds,
generates a stream for each, and looks at the z-score distribution.  For a
well-behaved generator the z-scores should look standard normal, so at the
2.576 gate roughly 1% of streams fail each test by chance.

    python3 scripts/stream_stats.py --preset fast-128 --streams 50 --kib 256
"""

from __future__ import annotations

import argparse

import numpy as np

from rankprng import core
from rankprng.stats import Z_CRITICAL, evaluate_stream


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="fast-128")
    ap.add_argument("--streams", type=int, default=50)
    ap.add_argument("--kib", type=int, default=256, help="KiB per stream")
    ap.add_argument("--seed", type=int, default=1, help="batch seed")
    args = ap.parse_args()

    p = core.preset(args.preset)
    h = core.keygen(p, seed64=args.seed)
    rng = np.random.default_rng(args.seed)

    mono, runs, fails = [], [], 0
    for i in range(args.streams):
        seed_bits = rng.integers(0, 2, p.seed_bits, dtype=np.uint8)
        iv_bits = rng.integers(0, 2, p.iv_bits, dtype=np.uint8)
        state = core.prng_init(seed_bits, iv_bits, h)
        rep = evaluate_stream(state.generate(args.kib << 10))
        mono.append(rep.monobit_z)
        runs.append(rep.runs_z)
        if not rep.ok:
            fails += 1
            print(f"stream {i}: monobit {rep.monobit_z:+.3f} runs {rep.runs_z:+.3f}")

    mono = np.array(mono)
    runs = np.array(runs)
    print(f"{args.streams} streams of {args.kib} KiB at {args.preset}")
    print(f"monobit z: mean {mono.mean():+.3f}  std {mono.std():.3f}  max|z| {np.abs(mono).max():.3f}")
    print(f"runs z:    mean {runs.mean():+.3f}  std {runs.std():.3f}  max|z| {np.abs(runs).max():.3f}")
    print(f"failures at |z| >= {Z_CRITICAL}: {fails} (expect about {0.02 * args.streams:.1f})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
