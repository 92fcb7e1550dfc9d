"""Cost estimates for recovering the generator state from one output block.

The modeled attack is combinatorial rank syndrome decoding by support
enumeration: guess a candidate basis for the error support, then solve a
linear system.  Its cost is (n-k)^3 * m^3 * q^E field operations with
exponent E = (w-1) * ceil((k+1) * m / n) when m <= n, and
E = (w-1) * (k+1) when m > n.  A Grover-style search over the same space
halves the exponent.  Algebraic (Groebner-basis) attacks are not modeled
here; reports say so rather than pretending to a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ParamSet

__all__ = [
    "AttackCost",
    "attack_exponent",
    "classical_cost",
    "quantum_cost",
    "SecurityReport",
    "check_security",
]


def attack_exponent(n: int, k: int, w: int, m: int | None = None) -> int:
    """Enumeration exponent E, so the attack costs about q^E linear solves."""
    if m is None:
        m = n
    if m > n:
        return (w - 1) * (k + 1)
    return (w - 1) * (-(-(k + 1) * m // n))


@dataclass(frozen=True)
class AttackCost:
    """log2 attack costs; q = 2, so each exponent bit is one cost bit."""

    exponent_bits: int
    poly_log2: float

    @property
    def classical_log2(self) -> float:
        return self.poly_log2 + self.exponent_bits

    @property
    def quantum_log2(self) -> float:
        return self.poly_log2 + self.exponent_bits / 2


def classical_cost(p: ParamSet) -> AttackCost:
    """Support-enumeration cost against a full parameter set (m = n)."""
    poly = 3 * (math.log2(p.n - p.k) + math.log2(p.m))
    return AttackCost(attack_exponent(p.n, p.k, p.w, p.m), poly)


def quantum_cost(p: ParamSet) -> AttackCost:
    # same shape; the quantum number is the quantum_log2 view of it
    return classical_cost(p)


@dataclass(frozen=True)
class SecurityReport:
    params: ParamSet
    cost: AttackCost
    classical_ok: bool
    quantum_ok: bool
    note: str

    @property
    def classical_log2(self) -> float:
        return self.cost.classical_log2

    @property
    def quantum_log2(self) -> float:
        return self.cost.quantum_log2

    @property
    def ok(self) -> bool:
        return self.classical_ok and self.quantum_ok


def check_security(p: ParamSet) -> SecurityReport:
    """Judge a parameter set: classical cost >= lam, quantum cost >= lam/2."""
    cost = classical_cost(p)
    return SecurityReport(
        params=p,
        cost=cost,
        classical_ok=cost.classical_log2 >= p.lam,
        quantum_ok=cost.quantum_log2 >= p.lam / 2,
        note="algebraic attacks not modeled",
    )
