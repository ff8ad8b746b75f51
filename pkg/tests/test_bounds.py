import math
from fractions import Fraction

from tourmat import bounds


def test_transitive_floor_values():
    assert bounds.transitive_floor_bound(3) == 1
    assert bounds.transitive_floor_bound(6) == 3
    assert bounds.transitive_floor_bound(30) == 19
    assert bounds.transitive_floor_bound(31) == 19


def test_simple_bounds():
    assert bounds.reversal_sum_bound(5) == 3
    assert bounds.constant_seq_bound(7) == 6
    assert bounds.finite_field_bound(5, 3) == Fraction(3, 2)
    assert bounds.finite_field_bound(6, 3) == 2


def test_ln_upper_is_certified_and_tight():
    for n in (1, 2, 3, 10, 50, 1000, 123456):
        ub = bounds.ln_upper(n)
        true = math.log(n)
        assert float(ub) >= true - 1e-12  # never below the real value
        assert float(ub) - true < 1e-9  # but tight


def test_sqrt_upper_is_certified_and_tight():
    for q in (Fraction(2), Fraction(1, 3), Fraction(195), Fraction(10**6)):
        ub = bounds.sqrt_upper(q)
        assert ub * ub >= q  # certified upper bound, exact arithmetic
        true = math.sqrt(q)
        assert float(ub) - true < 1e-9


def test_half_minus_tail_matches_float():
    for n in (2, 10, 50, 200, 5000):
        lb = bounds.half_minus_tail_bound(n)
        true = n / 2 - 21 * math.sqrt(n * math.log(n))
        assert float(lb) <= true + 1e-9  # lower bound side
        assert true - float(lb) < 1e-6  # tight


def test_half_minus_tail_floor_sound():
    for n in (10, 50, 500):
        lb = bounds.half_minus_tail_bound(n)
        fl = bounds.half_minus_tail_floor(n)
        assert fl <= lb < fl + 1


def test_vacuity_at_desk_scale():
    # the tail dominates until n is in the tens of thousands
    assert bounds.half_minus_tail_vacuous(50)
    assert bounds.half_minus_tail_vacuous(200)
    assert not bounds.half_minus_tail_vacuous(20000)


def test_vacuity_agrees_with_float_away_from_knife_edge():
    for n in (100, 1000, 17000, 17500, 18000, 10**6):
        float_val = n / 2 - 21 * math.sqrt(n * math.log(n))
        if abs(float_val) > 1:
            assert bounds.half_minus_tail_vacuous(n) == (float_val <= 0)
