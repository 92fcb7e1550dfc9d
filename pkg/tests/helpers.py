"""Independent oracles for the test suite.

Everything here is implemented from the definitions, without calling into
the package, so agreement between the two is meaningful.  These are written
for smallness and clarity, not speed.
"""

from __future__ import annotations

from itertools import combinations, product


# --- polynomial arithmetic over GF(2), schoolbook style ---------------------

def o_poly_mul(a: int, b: int) -> int:
    """Convolution of coefficient sequences."""
    out = 0
    i = 0
    while a >> i:
        if (a >> i) & 1:
            out ^= b << i
        i += 1
    return out


def o_poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Long division, returning (quotient, remainder)."""
    if b == 0:
        raise ZeroDivisionError
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = (a.bit_length() - 1) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def o_poly_mulmod(a: int, b: int, m: int) -> int:
    return o_poly_divmod(o_poly_mul(a, b), m)[1]


def o_poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, o_poly_divmod(a, b)[1]
    return a


def trial_division_irreducible(p: int) -> bool:
    """Check irreducibility by dividing by every lower-degree polynomial.

    Only usable for small degrees; this is the ground-truth oracle.
    """
    deg = p.bit_length() - 1
    if deg <= 0:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if o_poly_divmod(p, d)[1] == 0:
            return False
    return True


def rabin_irreducible_oracle(p: int) -> bool:
    """Independent Frobenius/gcd irreducibility check for larger degrees."""
    deg = p.bit_length() - 1
    if deg <= 0:
        return False

    def x_pow_2e(e: int) -> int:
        t = 0b10
        for _ in range(e):
            t = o_poly_mulmod(t, t, p)
        return t

    if x_pow_2e(deg) != 0b10:
        return False
    divs = [r for r in range(2, deg + 1) if deg % r == 0 and all(r % s for s in range(2, r))]
    for r in divs:
        if o_poly_gcd(x_pow_2e(deg // r) ^ 0b10, p) != 1:
            return False
    return True


def o_field_mul(a: int, b: int, modulus: int) -> int:
    """Field product: schoolbook multiply, then reduce by long division."""
    return o_poly_divmod(o_poly_mul(a, b), modulus)[1]


# --- GF(2) matrix facts by enumeration ---------------------------------------

def rank_by_span(rows: list[int]) -> int:
    """Rank as log2 of the row-span size, by enumerating all combinations."""
    span = {0}
    for r in rows:
        span |= {v ^ r for v in span}
    size = len(span)
    rank = size.bit_length() - 1
    assert 1 << rank == size
    return rank


def count_subspaces(m: int, r: int) -> int:
    """Number of r-dimensional subspaces of F_2^m, by brute enumeration."""
    if r == 0:
        return 1
    vectors = range(1, 1 << m)
    seen = set()
    for combo in combinations(vectors, r):
        span = {0}
        for v in combo:
            span |= {x ^ v for x in span}
        if len(span) == 1 << r:
            seen.add(frozenset(span))
    return len(seen)


def count_ball(m: int, n: int, t: int) -> int:
    """Number of m x n binary matrices with rank <= t, by full enumeration."""
    total = 0
    for rows in product(range(1 << n), repeat=m):
        if rank_by_span(list(rows)) <= t:
            total += 1
    return total


def matmul_f2(a_rows: list[int], b_rows: list[int]) -> list[int]:
    """Product of GF(2) matrices in int-row encoding (a is ? x len(b_rows))."""
    out = []
    for row in a_rows:
        acc = 0
        for j, brow in enumerate(b_rows):
            if (row >> j) & 1:
                acc ^= brow
        out.append(acc)
    return out


def random_invertible(rng, n: int) -> list[int]:
    """Uniform-ish invertible n x n GF(2) matrix by rejection."""
    while True:
        rows = [int(rng.integers(0, 1 << n)) for _ in range(n)]
        if rank_by_gauss(rows) == n:
            return rows


def rank_by_gauss(rows: list[int]) -> int:
    """A second rank routine (top-bit pivoting) for cross-checks."""
    rows = [r for r in rows]
    rank = 0
    while rows:
        r = rows.pop()
        if r == 0:
            continue
        rank += 1
        lead = 1 << (r.bit_length() - 1)
        rows = [x ^ r if x & lead else x for x in rows]
    return rank


# --- splitmix64 reference -----------------------------------------------------

def splitmix64_oracle(seed: int, count: int) -> list[int]:
    mask = (1 << 64) - 1
    out = []
    s = seed & mask
    for _ in range(count):
        s = (s + 0x9E3779B97F4A7C15) & mask
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out
