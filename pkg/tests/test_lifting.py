"""Tests for pair validation, the lifting formulas, and the law sweep."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordlift.arith import radical, valuation
from ordlift.errors import InvalidPairError, NotCoprimeError
from ordlift.lifting import (
    TwoAdicCase,
    admissible_bases,
    alpha_fast,
    alpha_prime_power,
    beta_fast,
    beta_prime_power,
    canonical_base,
    lift_alpha,
    lift_beta,
    lift_order,
    make_base_pair,
    order_fast,
    proj_order_fast,
    verify_claims,
)
from ordlift.orders import (
    alpha,
    alpha_oracle,
    beta,
    beta_oracle,
    mult_order,
    proj_order,
    remainder_gcd,
)


def test_make_base_pair_accepts():
    assert make_base_pair(9, 3).two_adic_case is TwoAdicCase.SMALL
    assert make_base_pair(24, 12).two_adic_case is TwoAdicCase.LARGE
    assert make_base_pair(24, 24).two_adic_case is TwoAdicCase.LARGE
    assert make_base_pair(30, 30).two_adic_case is TwoAdicCase.SMALL
    assert make_base_pair(1, 1).two_adic_case is TwoAdicCase.SMALL


def test_make_base_pair_rejections():
    with pytest.raises(InvalidPairError) as e:
        make_base_pair(9, 4)
    assert e.value.reason == InvalidPairError.REASON_NOT_DIVISOR
    with pytest.raises(InvalidPairError) as e:
        make_base_pair(10, 5)
    assert e.value.reason == InvalidPairError.REASON_RADICAL
    with pytest.raises(InvalidPairError) as e:
        make_base_pair(24, 6)
    assert e.value.reason == InvalidPairError.REASON_TWO_ADIC
    with pytest.raises(ValueError):
        make_base_pair(0, 1)


def test_valid_pairs_share_radical():
    for n1 in range(1, 400):
        for n2 in admissible_bases(n1):
            pair = make_base_pair(n1, n2)
            assert radical(pair.n1) == radical(pair.n2)
            expected = TwoAdicCase.SMALL if valuation(n1, 2) <= 1 else TwoAdicCase.LARGE
            assert pair.two_adic_case is expected


def test_canonical_base_known_values():
    assert canonical_base(9) == 3
    assert canonical_base(24) == 12
    assert canonical_base(30) == 30
    assert canonical_base(1) == 1
    assert canonical_base(16) == 4
    assert canonical_base(4) == 4


@given(st.integers(1, 5000))
@settings(max_examples=300)
def test_canonical_base_always_valid(n):
    make_base_pair(n, canonical_base(n))  # must not raise


def test_lift_order_known_values():
    assert lift_order(make_base_pair(9, 3), 2) == 6
    assert lift_order(make_base_pair(125, 5), 7) == 20
    for n in (7, 24, 45):
        for a in (1, 7, 11):
            if math.gcd(a, n) == 1:
                pair = make_base_pair(n, n)
                assert lift_order(pair, a) == mult_order(a, n).order


def test_lift_order_brute_force_spot():
    # order of 7 mod 125 by direct scan
    x, e = 7, 1
    while x != 1:
        x = x * 7 % 125
        e += 1
    assert e == 20
    assert lift_order(make_base_pair(125, 5), 7) == 20


def test_lift_alpha_known_values():
    assert lift_alpha(make_base_pair(9, 3), 2) == 2
    assert lift_alpha(make_base_pair(25, 5), 2) == 4
    assert alpha_oracle(2, 25) == 4
    pair = make_base_pair(45, 15)
    assert lift_alpha(pair, 2) == alpha(2, 45)


def test_lift_beta_known_values():
    assert lift_beta(make_base_pair(9, 3), 2) == 1
    assert lift_beta(make_base_pair(25, 5), 2) == 2
    assert beta_oracle(2, 25) == 2
    pair = make_base_pair(45, 45)
    assert lift_beta(pair, 2) == beta(2, 45)


def test_lift_rejects_noncoprime():
    pair = make_base_pair(9, 3)
    with pytest.raises(NotCoprimeError):
        lift_order(pair, 6)
    with pytest.raises(NotCoprimeError):
        lift_alpha(pair, 3)
    with pytest.raises(NotCoprimeError):
        lift_beta(pair, 12)


def test_lift_matches_direct_over_all_pairs():
    for n1 in range(1, 300):
        for n2 in admissible_bases(n1):
            pair = make_base_pair(n1, n2)
            for a in range(1, 15):
                if math.gcd(a, n1) != 1:
                    continue
                assert lift_order(pair, a) == mult_order(a, n1).order
                assert lift_alpha(pair, a) == alpha(a, n1)
                assert lift_beta(pair, a) == beta(a, n1)


def test_counterexample_pair_guard():
    # (24, 6) must be rejected: the raw formula evaluates to 4 there while
    # the true order of 7 mod 24 is 2
    with pytest.raises(InvalidPairError):
        make_base_pair(24, 6)
    assert mult_order(7, 24).order == 2
    raw = mult_order(7, 6).order * (24 // remainder_gcd(7, 6, 24))
    assert raw == 4


def test_alpha_fast_known_values():
    assert alpha_fast(2, 15) == 4
    assert alpha_fast(3, 20) == 1
    assert alpha_fast(5, 16) == 1
    assert alpha_fast(6, 10) == 0
    assert alpha_fast(2, 1) == 1


def test_beta_fast_known_values():
    assert beta_fast(2, 27) == 1
    assert beta_fast(2, 5) == 2
    assert beta_fast(6, 12) == 0


@given(st.integers(-100, 100), st.integers(1, 1500))
@settings(max_examples=500)
def test_fast_paths_match_direct(a, n):
    assert alpha_fast(a, n) == alpha(a, n)
    assert beta_fast(a, n) == beta(a, n)


def test_order_fast_matches_and_rejects():
    for n in range(1, 200):
        for a in range(1, 20):
            if math.gcd(a, n) == 1:
                assert order_fast(a, n) == mult_order(a, n).order
                assert proj_order_fast(a, n) == proj_order(a, n)
    with pytest.raises(NotCoprimeError):
        order_fast(4, 10)
    with pytest.raises(NotCoprimeError):
        proj_order_fast(4, 10)


def test_alpha_prime_power_known_values():
    assert alpha_prime_power(2, 3, 5) == 2
    assert alpha_oracle(2, 243) == 2
    for k in range(1, 7):
        for a in (1, 3, 5, 7, 9):
            assert alpha_prime_power(a, 2, k) == 1
    assert alpha_prime_power(3, 3, 2) == 0
    assert alpha_prime_power(10, 5, 2) == 0


def test_beta_prime_power_known_values():
    assert beta_prime_power(2, 3, 4) == 1
    # at p = 2 the function is 1 on odd a and 0 on even a, for every k
    for a in (1, 3, 5, 9):
        assert beta_prime_power(a, 2, 5) == 1
    assert beta_prime_power(2, 2, 5) == 0
    assert beta_prime_power(10, 5, 2) == 0


def test_prime_power_shortcuts_stable_in_k():
    for p in (2, 3, 5, 7, 11, 13):
        for a in range(1, 15):
            a_vals = {alpha_prime_power(a, p, k) for k in range(1, 7)}
            b_vals = {beta_prime_power(a, p, k) for k in range(1, 7)}
            assert len(a_vals) == 1 and len(b_vals) == 1
            for k in range(1, 7):
                assert alpha_prime_power(a, p, k) == alpha(a, p**k)
                assert beta_prime_power(a, p, k) == beta(a, p**k)


def test_prime_power_rejects_bad_arguments():
    with pytest.raises(ValueError):
        alpha_prime_power(2, 4, 1)
    with pytest.raises(ValueError):
        beta_prime_power(2, 3, 0)


def test_admissible_bases():
    assert admissible_bases(9) == [3, 9]
    assert admissible_bases(24) == [12, 24]
    assert admissible_bases(30) == [30]
    assert admissible_bases(1) == [1]
    assert admissible_bases(72) == [12, 24, 36, 72]


def test_verify_claims_small_sweep_passes():
    report = verify_claims(50, 10)
    assert report.ok
    assert report.total_failed == 0
    assert {law.law for law in report.laws} >= {
        "order-lift-exact",
        "alpha-lift-exact",
        "beta-lift-exact",
        "alpha-reduction-divides",
        "alpha-coprime-lcm",
        "alpha-beta-ratio-transfer",
        "prime-power-order-growth",
        "rejected-pair-guard",
    }
    by_name = {law.law: law for law in report.laws}
    assert by_name["rejected-pair-guard"].checked > 0
    assert by_name["order-lift-exact"].checked > 0


def test_verify_claims_vacuous():
    report = verify_claims(1, 1)
    assert report.ok


def test_verify_claims_rejects_bad_bounds():
    with pytest.raises(ValueError):
        verify_claims(0, 5)
    with pytest.raises(ValueError):
        verify_claims(5, 0)
    with pytest.raises(ValueError):
        verify_claims(5, 5, workers=0)


def test_verify_claims_parallel_matches_serial():
    serial = verify_claims(60, 6)
    parallel = verify_claims(60, 6, workers=2)
    assert serial == parallel
