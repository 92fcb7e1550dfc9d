"""Coordinate masks that carry Hamming-weight problems into the rank metric.

An embedding is a vector alpha in GF(2^m)^n applied coordinate-wise to a
binary word x, giving psi_alpha(x) = (alpha_1 x_1, ..., alpha_n x_n).  When
the alpha_i are linearly independent over GF(2), the rank weight of the
image equals the Hamming weight of x, so a syndrome decoder in the rank
metric solves the corresponding Hamming-metric instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ranklin import Word, rank_f2, word_to_matrix

__all__ = ["Embedding", "sample_independent_alpha", "psi_alpha"]


@dataclass(frozen=True)
class Embedding:
    """Mask vector alpha over GF(2^m), one coordinate per input bit."""

    alpha: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("field degree must be positive")
        for a in self.alpha:
            if not 0 <= a < (1 << self.m):
                raise ValueError("alpha coordinate out of field range")

    @property
    def n(self) -> int:
        return len(self.alpha)

    def is_independent(self) -> bool:
        """True when the coordinates are GF(2)-linearly independent."""
        return rank_f2(word_to_matrix(Word(self.alpha, self.m))) == self.n


def sample_independent_alpha(m: int, n: int, rng_seed: int) -> Embedding:
    """Rejection-sample an independent alpha; needs m >= n.

    A uniform draw is independent with probability prod_{j<n} (1 - 2^(j-m)),
    above 0.288 even at m = n, so the loop is short.
    """
    if m < n:
        raise ValueError("independence needs m >= n")
    rng = random.Random(rng_seed)
    top = 1 << m
    while True:
        emb = Embedding(tuple(rng.randrange(top) for _ in range(n)), m)
        if emb.is_independent():
            return emb


def psi_alpha(x_bits, emb: Embedding) -> Word:
    """Image of a binary word under the mask: coordinate i is alpha_i * x_i.

    x_i is 0 or 1, so no field multiplication is needed.  The map is
    GF(2)-linear in x.
    """
    x = tuple(int(b) for b in x_bits)
    if len(x) != emb.n:
        raise ValueError(f"input must have exactly {emb.n} bits")
    if any(b not in (0, 1) for b in x):
        raise ValueError("input coordinates must be bits")
    return Word(tuple(a if b else 0 for a, b in zip(emb.alpha, x)), emb.m)
