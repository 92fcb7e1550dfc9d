"""Arithmetic in binary extension fields GF(2^n).

Field elements are plain ints in ``[0, 2**n)``: bit i holds the coefficient
of x^i in the polynomial basis {1, x, ..., x^(n-1)}.  Addition is XOR.
Products are reduced modulo a canonical irreducible polynomial picked per
degree by :func:`find_irreducible`, so two parties who agree on n compute in
the same field without exchanging anything else.
"""

from __future__ import annotations

import functools

__all__ = [
    "poly_degree",
    "poly_mod",
    "poly_mul",
    "poly_gcd",
    "is_irreducible",
    "find_irreducible",
    "GF2n",
]


def poly_degree(p: int) -> int:
    """Degree of a GF(2)[x] polynomial stored as a bit vector (-1 for p = 0)."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    if m == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    dm = poly_degree(m)
    while poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p: int) -> bool:
    """Rabin's irreducibility test for a GF(2)[x] polynomial.

    p of degree n is irreducible iff x^(2^n) = x (mod p) and, for every
    prime r dividing n, gcd(x^(2^(n/r)) - x, p) = 1.
    """
    n = poly_degree(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = 0b10

    def frob_iter(count: int) -> int:
        # x^(2^count) mod p by repeated squaring of the residue
        t = x
        for _ in range(count):
            t = poly_mod(poly_mul(t, t), p)
        return t

    if frob_iter(n) != x:
        return False
    for r in _prime_divisors(n):
        if poly_gcd(frob_iter(n // r) ^ x, p) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def find_irreducible(n: int) -> int:
    """Canonical degree-n irreducible polynomial over GF(2).

    Scans candidates in increasing integer order and returns the first
    irreducible one, so the choice is deterministic across processes.  Only
    odd candidates are tried; a polynomial with zero constant term is
    divisible by x.
    """
    if n < 2:
        raise ValueError("field degree must be at least 2")
    p = (1 << n) | 1
    while not is_irreducible(p):
        p += 2
    return p


class GF2n:
    """GF(2^n) under the canonical modulus for its degree.

    Parameters
    ----------
    n : int
        Extension degree, at least 2.
    modulus : int, optional
        Override the canonical modulus.  Must be of degree exactly n; the
        caller is responsible for it being irreducible.
    """

    def __init__(self, n: int, modulus: int | None = None):
        if n < 2:
            raise ValueError("field degree must be at least 2")
        if modulus is None:
            modulus = find_irreducible(n)
        elif poly_degree(modulus) != n:
            raise ValueError("modulus degree does not match n")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ValueError(f"element {a:#x} is out of range for GF(2^{self.n})")

    def add(self, a: int, b: int) -> int:
        """Sum of two elements (coefficient-wise XOR)."""
        self._check(a)
        self._check(b)
        return a ^ b

    def mulx(self, a: int) -> int:
        """Product of an element with x, one shift-and-reduce step."""
        a <<= 1
        if a >> self.n & 1:
            a ^= self.modulus
        return a

    def mul(self, a: int, b: int) -> int:
        """Product of two elements, reduced on the fly."""
        self._check(a)
        self._check(b)
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a = self.mulx(a)
        return r

    def pow(self, a: int, e: int) -> int:
        """a raised to a non-negative integer power by square and multiply.

        Follows the usual convention pow(0, 0) = 1.
        """
        self._check(a)
        if e < 0:
            raise ValueError("negative exponents are not supported")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r
