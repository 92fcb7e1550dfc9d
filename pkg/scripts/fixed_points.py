"""Rank trajectories for sparse seed material.

The state update only ever multiplies the current word by fixed matrices, so
a state whose unfolding has rank r can never climb above r.  Dense seeds sit
at the design rank w and stay there; very sparse seeds start low and can get
absorbed into tiny invariant sets (the all-zero state is the extreme case).
This prints the rank of the state word and the popcount of the emitted block
over the first steps for seeds of increasing Hamming weight.

    python3 scripts/fixed_points.py --preset compact-128 --steps 8
"""

from __future__ import annotations

import argparse

import numpy as np

from rankprng import core
from rankprng.ranklin import rank_weight


def trajectory(p: core.ParamSet, h, input_bits: np.ndarray, steps: int):
    seed, iv = input_bits[: p.seed_bits], input_bits[p.seed_bits :]
    state = core.prng_init(seed, iv, h)
    out = []
    for _ in range(steps):
        block = state.next_block()
        out.append((rank_weight(state.y), int(block.sum())))
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="compact-128")
    ap.add_argument("--steps", type=int, default=8)
    args = ap.parse_args()

    p = core.preset(args.preset)
    h = core.keygen(p, seed64=0xF1)
    nbits = p.expand_input_bits
    rng = np.random.default_rng(3)

    cases = [("weight 0 (fixed point)", np.zeros(nbits, dtype=np.uint8))]
    for wgt in (1, 2, 4, 16):
        bits = np.zeros(nbits, dtype=np.uint8)
        bits[rng.choice(nbits, size=wgt, replace=False)] = 1
        cases.append((f"weight {wgt}", bits))
    cases.append(("dense", rng.integers(0, 2, nbits, dtype=np.uint8)))

    print(f"{args.preset}: n={p.n} w={p.w}, {args.steps} steps")
    print("per step: state rank / ones in emitted block")
    for name, bits in cases:
        traj = trajectory(p, h, bits, args.steps)
        cells = "  ".join(f"{r:>2}/{ones:<4}" for r, ones in traj)
        print(f"{name:<24} {cells}")
    print(
        "\nweight-0 input expands to the zero word, which reproduces itself"
        " and emits zeros forever; callers that accept external seed material"
        " should reject it (the cli does)."
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
