import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rankprng.ranklin import (
    BitMatrix,
    Word,
    gaussian_binomial,
    gv_distance_approx,
    gv_distance_exact,
    matrix_to_word,
    rank_ball_size,
    rank_f2,
    rank_weight,
    word_to_matrix,
)

import helpers


def test_unfolding_examples():
    zero = Word((0, 0, 0), 3)
    assert word_to_matrix(zero).rows == (0, 0, 0)
    basis = Word((1, 0, 0), 3)
    m = word_to_matrix(basis)
    assert m.nrows == 3 and m.ncols == 3
    assert m.rows == (0b001, 0, 0)  # single 1 in row 0, column 0


def test_unfolding_rectangular():
    # m = 5 coefficient rows, n = 3 coordinates
    y = Word((0b10001, 0b00010, 0b11111), 5)
    m = word_to_matrix(y)
    assert (m.nrows, m.ncols) == (5, 3)
    assert matrix_to_word(m) == y
    assert m.rows[0] == 0b101  # constant coefficients of the three coordinates


@given(
    st.integers(1, 8).flatmap(
        lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 2**m - 1), max_size=8))
    )
)
def test_unfolding_round_trips(mw):
    m, elems = mw
    y = Word(tuple(elems), m)
    assert matrix_to_word(word_to_matrix(y)) == y


def test_rank_examples():
    assert rank_f2(BitMatrix(2, 2, (0, 0))) == 0
    assert rank_f2(BitMatrix(3, 3, (0b001, 0b010, 0b100))) == 3
    assert rank_f2(BitMatrix(2, 2, (0b11, 0b11))) == 1


def test_rank_exhaustive_small():
    for rows in ((a, b) for a in range(4) for b in range(4)):
        assert rank_f2(BitMatrix(2, 2, rows)) == helpers.rank_by_span(list(rows))
    for a in range(8):
        for b in range(8):
            for c in range(8):
                got = rank_f2(BitMatrix(3, 3, (a, b, c)))
                assert got == helpers.rank_by_span([a, b, c])


def test_rank_random_4x4_against_both_oracles():
    rng = np.random.default_rng(11)
    for _ in range(500):
        rows = tuple(int(x) for x in rng.integers(0, 16, 4))
        got = rank_f2(BitMatrix(4, 4, rows))
        assert got == helpers.rank_by_span(list(rows))
        assert got == helpers.rank_by_gauss(list(rows))


def test_rank_weight_invariant_under_base_change():
    # re-expressing every coordinate in another basis multiplies the
    # unfolding by an invertible matrix on the left
    rng = np.random.default_rng(23)
    m = 8
    words = [
        Word(tuple(int(v) for v in rng.integers(0, 1 << m, 6)), m) for _ in range(100)
    ]
    changes = [helpers.random_invertible(rng, m) for _ in range(10)]
    for y in words:
        base = rank_weight(y)
        cols = word_to_matrix(y)
        for p_rows in changes:
            # apply P to each coordinate's coefficient column: rows become P * M
            new_rows = helpers.matmul_f2(p_rows, list(cols.rows))
            assert rank_f2(BitMatrix(m, y.n, tuple(new_rows))) == base


def test_gaussian_binomial_small_vs_enumeration():
    assert gaussian_binomial(2, 1) == helpers.count_subspaces(2, 1) == 3
    assert gaussian_binomial(3, 1) == helpers.count_subspaces(3, 1) == 7
    assert gaussian_binomial(4, 2) == helpers.count_subspaces(4, 2) == 35


def test_gaussian_binomial_edges():
    for m in range(6):
        assert gaussian_binomial(m, 0) == 1
        assert gaussian_binomial(m, m) == 1
        assert gaussian_binomial(m, m + 1) == 0
    for m in range(1, 7):
        for r in range(m + 1):
            assert gaussian_binomial(m, r) == gaussian_binomial(m, m - r)
    # (3^2 - 1)/(3 - 1) lines through the origin of F_3^2
    assert gaussian_binomial(2, 1, q=3) == 4
    with pytest.raises(ValueError):
        gaussian_binomial(-1, 0)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 1, q=1)


def test_ball_size_examples():
    assert rank_ball_size(5, 7, 0) == 1
    assert rank_ball_size(2, 2, 1) == helpers.count_ball(2, 2, 1) == 10
    assert rank_ball_size(3, 3, 1) == helpers.count_ball(3, 3, 1)
    assert rank_ball_size(2, 3, 1) == helpers.count_ball(2, 3, 1)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 3), (2, 3), (3, 2)])
def test_ball_of_max_radius_is_whole_space(m, n):
    assert rank_ball_size(m, n, min(m, n)) == 2 ** (m * n)


def test_ball_rejects_bad_radius():
    with pytest.raises(ValueError):
        rank_ball_size(3, 3, -1)
    with pytest.raises(ValueError):
        rank_ball_size(3, 3, 4)


def test_ball_log2_near_exponent_approximation():
    # |B_t| ~ 2^(t(m+n-t)); at (31, 31, 11) the log2 is 562.79
    val = math.log2(rank_ball_size(31, 31, 11))
    assert 561 <= val <= 561 + 31
    assert abs(val - 562.79) < 0.01


def test_gv_approx_pinned_values():
    assert gv_distance_approx(31, 31, 13) == 11
    assert gv_distance_approx(41, 41, 16) == 16
    assert gv_distance_approx(47, 47, 17) == 19
    assert gv_distance_approx(61, 61, 22) == 25


def test_gv_approx_is_the_threshold_point():
    for m, n, k in [(31, 31, 13), (8, 10, 3), (12, 7, 2), (6, 6, 0)]:
        t = gv_distance_approx(m, n, k)
        assert t * (m + n - t) >= m * (n - k)
        if t:
            assert (t - 1) * (m + n - t + 1) < m * (n - k)
        assert t <= min(m, n)


def test_gv_approx_edges():
    assert gv_distance_approx(31, 31, 31) == 0
    radii = [gv_distance_approx(31, 31, k) for k in range(32)]
    assert radii == sorted(radii, reverse=True)
    with pytest.raises(ValueError):
        gv_distance_approx(31, 31, 32)


def test_gv_exact_small_values():
    assert gv_distance_exact(2, 2, 1) == 1
    assert gv_distance_exact(3, 3, 0) == 3
    # cross-check the (3,3,0) case against raw enumeration
    target = 2 ** (3 * 3)
    assert helpers.count_ball(3, 3, 2) < target <= helpers.count_ball(3, 3, 3)


def test_gv_exact_close_to_approx():
    assert gv_distance_exact(31, 31, 13) == 11
    for m in range(2, 7):
        for n in range(2, 7):
            for k in range(n + 1):
                a = gv_distance_approx(m, n, k)
                e = gv_distance_exact(m, n, k)
                assert abs(a - e) <= 1, (m, n, k)


def test_bitmatrix_and_word_validation():
    with pytest.raises(ValueError):
        BitMatrix(2, 2, (0,))
    with pytest.raises(ValueError):
        BitMatrix(1, 2, (0b100,))
    with pytest.raises(ValueError):
        Word((4,), 2)
    with pytest.raises(ValueError):
        Word((0,), 0)
    assert len(Word((1, 2, 3), 2)) == 3
