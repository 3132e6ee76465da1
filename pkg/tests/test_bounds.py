from math import comb

import pytest

from lenstc.bounds import (
    condition_a,
    condition_b,
    fibration_upper_rules,
    odd_sphere_fiber_rule,
    sphere_base_rule,
    tc_report,
    tc_table,
    upper_bound,
)
from lenstc.cohomology import LensParams
from lenstc.padic import alpha_p, expand, is_prime


@pytest.mark.parametrize("m, n, u", [(3, 1, 6), (5, 0, 2), (8, 3, 14)])
def test_upper_bound_examples(m, n, u):
    value, cert = upper_bound(LensParams(m, n))
    assert value == u == cert.value
    assert cert.rule == "fibration"
    assert [c.value for c in cert.constants] == [2, 2 * n + 1]
    assert cert.superseded == (("dimension: 2*dim+1", 4 * n + 3),)


def test_fibration_rules():
    assert fibration_upper_rules(2, 7) == 14
    assert sphere_base_rule(5) == 15
    assert odd_sphere_fiber_rule(9) == 18
    assert fibration_upper_rules(1, 4) == 4
    with pytest.raises(ValueError):
        fibration_upper_rules(0, 3)
    with pytest.raises(ValueError):
        fibration_upper_rules(2, -1)


@pytest.mark.parametrize("m, n, exact", [(3, 4, 18), (5, 2, 10), (8, 5, 22), (12, 0, 2)])
def test_report_exact_examples(m, n, exact):
    r = tc_report(LensParams(m, n))
    assert r.lower == r.upper == r.exact == exact


def test_report_condition_c_for_eight():
    r = tc_report((8, 5))
    assert r.conditions.c and r.conditions.a and not r.conditions.b


def test_report_real_projective_gap():
    r = tc_report((2, 1))
    assert (r.lower, r.upper, r.exact) == (4, 6, None)
    assert any("TC(L_2^3) = TC(RP^3) = 4" in note for note in r.notes)


def test_report_rejects_bad_params():
    with pytest.raises(ValueError):
        tc_report((1, 3))
    with pytest.raises(ValueError):
        tc_report((3, -1))


def test_table_order_and_examples():
    rows = tc_table([3], range(1, 13))
    assert [r.params.n for r in rows] == list(range(1, 13))
    assert {r.params.n for r in rows if r.exact is not None} == {1, 3, 4, 9, 10, 12}
    rows = tc_table([5], range(1, 11))
    assert {r.params.n for r in rows if r.exact is not None} == {1, 2, 5, 6, 7, 10}
    rows = tc_table(range(3, 101), [1])
    assert all(r.exact == 6 for r in rows)
    rows = tc_table([4, 2], [0, 1])
    assert [(r.params.m, r.params.n) for r in rows] == [(4, 0), (4, 1), (2, 0), (2, 1)]
    with pytest.raises(ValueError):
        tc_table([], [1])
    with pytest.raises(ValueError):
        tc_table([3], [])


def test_lower_le_upper_and_conditions_consistent():
    for m in range(2, 65):
        for n in range(0, 33):
            r = tc_report(LensParams(m, n))
            assert 2 <= r.lower <= r.upper <= 2 * (2 * n + 1) + 1
            assert (r.exact is not None) == (r.lower == r.upper)
            if r.conditions.any():
                assert r.lower == 4 * n + 2


def test_circle_case_is_exact():
    for m in range(2, 40):
        assert tc_report((m, 0)).exact == 2


@pytest.mark.parametrize("p", [q for q in range(3, 14) if is_prime(q)])
def test_condition_b_equivalent_to_alpha_zero(p):
    for n in range(2001):
        digits_small = all(2 * d <= p - 1 for d in expand(p, n).digits)
        assert digits_small == (alpha_p(p, n) == 0) == condition_b(LensParams(p, n))


def test_condition_a_equivalent_to_central_binomial():
    for m in range(2, 65):
        for n in range(201):
            fired = bool(condition_a(LensParams(m, n)))
            assert fired == (comb(2 * n, n) % m != 0)


def test_exact_iff_not_dividing_central_binomial_small_grid():
    # beyond the sufficient conditions: exact values appear precisely when m does not divide C(2n, n)
    for m in range(2, 25):
        for n in range(0, 12):
            r = tc_report((m, n))
            assert (r.exact is not None) == (comb(2 * n, n) % m != 0)
