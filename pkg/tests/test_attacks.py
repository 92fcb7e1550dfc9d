import math

from rankprng.attacks import (
    AttackCost,
    attack_exponent,
    check_security,
    classical_cost,
    quantum_cost,
)
from rankprng.core import ParamSet, presets


def test_exponent_hand_values():
    # m = n: ceil((k+1)m/n) collapses to k+1
    assert attack_exponent(31, 13, 10) == 9 * 14
    # m < n: (w-1) * ceil((k+1)m/n)
    assert attack_exponent(4, 1, 3, m=2) == 2 * 1
    assert attack_exponent(10, 3, 5, m=7) == 4 * 3  # ceil(28/10) = 3
    # m > n: (w-1) * (k+1)
    assert attack_exponent(4, 1, 3, m=8) == 2 * 2
    # both branches agree at m = n
    assert attack_exponent(9, 4, 3, m=9) == (3 - 1) * (4 + 1)


def test_compact128_pinned_costs():
    p = ParamSet(31, 13, 10, 128)
    cost = classical_cost(p)
    assert cost.exponent_bits == 126
    assert abs(cost.poly_log2 - 3 * math.log2(18 * 31)) < 1e-12
    assert abs(cost.classical_log2 - 153.4) < 0.05
    assert abs(cost.quantum_log2 - 90.4) < 0.05


def test_fast512_pinned_costs():
    cost = classical_cost(ParamSet(127, 12, 42, 512))
    assert cost.exponent_bits == 41 * 13
    assert abs(cost.classical_log2 - 574.5) < 0.05


def test_quantum_halves_only_the_exponent():
    for _, p in presets():
        c = classical_cost(p)
        q = quantum_cost(p)
        assert c.classical_log2 == c.poly_log2 + c.exponent_bits
        assert q.quantum_log2 == q.poly_log2 + q.exponent_bits / 2
        assert math.isclose(
            q.quantum_log2 - c.poly_log2, (c.classical_log2 - c.poly_log2) / 2
        )


def test_rank_one_error_leaves_only_the_polynomial_factor():
    p = ParamSet(31, 13, 1, 128)
    cost = classical_cost(p)
    assert cost.exponent_bits == 0
    assert cost.classical_log2 == cost.quantum_log2 == cost.poly_log2


def test_cost_is_monotone_in_w():
    prev = -1.0
    for w in range(1, 11):
        c = classical_cost(ParamSet(31, 13, w, 128)).classical_log2
        assert c > prev
        prev = c


def test_all_presets_meet_policy():
    for label, p in presets():
        rep = check_security(p)
        assert rep.classical_ok, label
        assert rep.quantum_ok, label
        assert rep.ok


def test_underweight_set_fails_policy():
    rep = check_security(ParamSet(31, 13, 2, 128))
    assert not rep.classical_ok
    assert not rep.quantum_ok
    assert not rep.ok


def test_report_carries_scope_note():
    rep = check_security(ParamSet(31, 13, 10, 128))
    assert "not modeled" in rep.note


def test_attackcost_views_are_consistent():
    c = AttackCost(exponent_bits=100, poly_log2=20.0)
    assert c.classical_log2 == 120.0
    assert c.quantum_log2 == 70.0
