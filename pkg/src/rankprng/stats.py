"""Monobit and runs z-statistics for generator output.

Both statistics are standard normal under the null hypothesis of an ideal
source; a sample fails at significance 0.01 when |z| >= 2.576.  These are
smoke tests for gross bias, not a substitute for a full test battery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bits import bytes_to_bits

__all__ = ["Z_CRITICAL", "MIN_STREAM_BITS", "monobit", "runs", "StatReport", "evaluate_stream"]

Z_CRITICAL = 2.576  # two-sided normal quantile for alpha = 0.01
MIN_STREAM_BITS = 10_000


def monobit(bits: np.ndarray) -> float:
    """Balance of ones and zeros.

    Parameters
    ----------
    bits : array of 0/1
        The sample.

    Returns
    -------
    float
        z = (2*ones - n) / sqrt(n), standard normal under the null.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.size
    if n == 0:
        raise ValueError("empty sample")
    return (2.0 * int(bits.sum()) - n) / math.sqrt(n)


def runs(bits: np.ndarray) -> float:
    """Oscillation rate: the number of maximal runs against its expectation.

    With pi the fraction of ones and V the run count,
    z = (V - 2*n*pi*(1-pi)) / (2*sqrt(n)*pi*(1-pi)).  The normal
    approximation needs |pi - 1/2| < 2/sqrt(n); outside that the statistic
    is meaningless and nan is returned, which never counts as a pass.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.size
    if n == 0:
        raise ValueError("empty sample")
    pi = float(bits.mean())
    if abs(pi - 0.5) >= 2.0 / math.sqrt(n):
        return math.nan
    v = 1 + int(np.count_nonzero(bits[1:] != bits[:-1]))
    return (v - 2.0 * n * pi * (1.0 - pi)) / (2.0 * math.sqrt(n) * pi * (1.0 - pi))


@dataclass(frozen=True)
class StatReport:
    nbits: int
    monobit_z: float
    runs_z: float

    @property
    def monobit_ok(self) -> bool:
        return abs(self.monobit_z) < Z_CRITICAL

    @property
    def runs_ok(self) -> bool:
        return not math.isnan(self.runs_z) and abs(self.runs_z) < Z_CRITICAL

    @property
    def ok(self) -> bool:
        return self.monobit_ok and self.runs_ok


def evaluate_stream(data: bytes) -> StatReport:
    """Run both tests over a byte stream of at least MIN_STREAM_BITS bits."""
    nbits = 8 * len(data)
    if nbits < MIN_STREAM_BITS:
        raise ValueError(f"need at least {MIN_STREAM_BITS} bits, got {nbits}")
    bits = bytes_to_bits(data)
    return StatReport(nbits=nbits, monobit_z=monobit(bits), runs_z=runs(bits))
