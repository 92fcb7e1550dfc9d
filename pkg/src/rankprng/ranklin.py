"""GF(2) linear algebra for the rank metric.

A length-n word over GF(2^m) unfolds into an m x n binary matrix whose
column i lists the coefficients of coordinate i; the rank weight of the word
is the GF(2) rank of that matrix.  The module also counts subspaces
(Gaussian binomials), sizes rank-metric balls exactly with big integers, and
computes Gilbert-Varshamov radii, which parameter validation uses as the
ceiling for the error rank.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BitMatrix",
    "Word",
    "word_to_matrix",
    "matrix_to_word",
    "rank_f2",
    "rank_weight",
    "gaussian_binomial",
    "rank_ball_size",
    "gv_distance_approx",
    "gv_distance_exact",
]


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over GF(2); ``rows[r]`` holds row r, bit c = entry (r, c)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.ncols):
                raise ValueError("row value exceeds column count")


@dataclass(frozen=True)
class Word:
    """Length-n vector over GF(2^m); each coordinate is an int coefficient vector."""

    elems: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("coordinate field degree must be positive")
        for e in self.elems:
            if not 0 <= e < (1 << self.m):
                raise ValueError("coordinate out of range for GF(2^m)")

    def __len__(self) -> int:
        return len(self.elems)

    @property
    def n(self) -> int:
        return len(self.elems)


def word_to_matrix(y: Word) -> BitMatrix:
    """Unfold a word into its m x n coefficient matrix (column i = coordinate i)."""
    rows = []
    for r in range(y.m):
        acc = 0
        for i, e in enumerate(y.elems):
            acc |= ((e >> r) & 1) << i
        rows.append(acc)
    return BitMatrix(y.m, y.n, tuple(rows))


def matrix_to_word(mat: BitMatrix) -> Word:
    """Refold an m x n coefficient matrix into a word over GF(2^m)."""
    elems = []
    for i in range(mat.ncols):
        e = 0
        for r in range(mat.nrows):
            e |= ((mat.rows[r] >> i) & 1) << r
        elems.append(e)
    return Word(tuple(elems), mat.nrows)


def rank_f2(mat: BitMatrix) -> int:
    """GF(2) rank by Gaussian elimination on int-encoded rows."""
    rows = [r for r in mat.rows if r]
    rank = 0
    while rows:
        pivot = min(rows, key=int.bit_length)
        rows.remove(pivot)
        rank += 1
        lead = 1 << (pivot.bit_length() - 1)
        rows = [r ^ pivot if r & lead else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def rank_weight(y: Word) -> int:
    """Rank of the word's unfolding; invariant under GF(2)-basis changes."""
    return rank_f2(word_to_matrix(y))


def gaussian_binomial(m: int, r: int, q: int = 2) -> int:
    """Number of r-dimensional subspaces of F_q^m, exactly.

    Returns 0 when r > m.  Computed as a quotient of big-integer products,
    which divides exactly.
    """
    if m < 0 or r < 0:
        raise ValueError("negative arguments")
    if q < 2:
        raise ValueError("q must be a prime power, at least 2")
    if r > m:
        return 0
    num = 1
    den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def rank_ball_size(m: int, n: int, t: int, q: int = 2) -> int:
    """Exact number of m x n matrices over F_q with rank at most t.

    The rank-i shell holds gaussian_binomial(n, i) column spaces times the
    number of injective maps onto an i-dimensional image, prod_{j<i} (q^m - q^j).
    """
    if not 0 <= t <= min(m, n):
        raise ValueError("t must lie in [0, min(m, n)]")
    total = 0
    for i in range(t + 1):
        shell = gaussian_binomial(n, i, q)
        for j in range(i):
            shell *= q**m - q**j
        total += shell
    return total


def gv_distance_approx(m: int, n: int, k: int) -> int:
    """Gilbert-Varshamov rank radius from the exponent-level approximation.

    Smallest integer t with t*(m + n - t) >= m*(n - k), i.e. the point where
    the ball exponent t(m + n - t) reaches the syndrome space exponent.
    Always at most min(m, n).
    """
    if not 0 <= k <= n:
        raise ValueError("k must lie in [0, n]")
    target = m * (n - k)
    t = 0
    while t * (m + n - t) < target:
        t += 1
    return t


def gv_distance_exact(m: int, n: int, k: int, q: int = 2) -> int:
    """Smallest t whose rank ball covers the syndrome space: |B_t| >= q^(m(n-k))."""
    if not 0 <= k <= n:
        raise ValueError("k must lie in [0, n]")
    target = q ** (m * (n - k))
    for t in range(min(m, n) + 1):
        if rank_ball_size(m, n, t, q) >= target:
            return t
    raise AssertionError("unreachable: the full space always covers the target")
