import random

import pytest

from vandermerge import (
    check_char2_bound,
    check_divisor_bound,
    determinant,
    existence_threshold,
    field_spec,
    make_field,
    vandermonde,
    zero_sum_singular_selector,
    zero_sum_subset,
)
from vandermerge.errors import (
    NoZeroSumSubset,
    NotPowerOfTwo,
    NotPrimePower,
    TooFewRows,
)


def test_divisor_bound_f256_examples():
    v = check_divisor_bound(256, 86, 4)
    assert not v.feasible
    assert any(viol.params["m"] == 85 and viol.params["required_q"] == 341
               for viol in v.violations)
    v = check_divisor_bound(256, 52, 6)
    assert not v.feasible
    assert any(viol.params["m"] == 51 and viol.params["required_q"] == 307
               for viol in v.violations)


def test_divisor_bound_trivial_k1():
    assert check_divisor_bound(256, 1, 9).feasible


def test_divisor_bound_lists_all_violations():
    # q=7: divisors of 6 below k=5 are 1,2,3; m=2 needs 11, m=3 needs 16
    v = check_divisor_bound(7, 5, 5)
    ms = [viol.params["m"] for viol in v.violations]
    assert ms == [2, 3]


def test_divisor_bound_rejects_non_prime_power():
    with pytest.raises(NotPrimePower):
        check_divisor_bound(12, 3, 2)


def test_char2_bound_examples():
    assert not check_char2_bound(256, 10, 9).feasible
    assert check_char2_bound(256, 9, 9).feasible  # k > r fails
    assert not check_char2_bound(8, 5, 4).feasible
    with pytest.raises(NotPowerOfTwo):
        check_char2_bound(9, 3, 2)


def test_zero_sum_subset_examples(f4, f8):
    assert zero_sum_subset(f4, [0, 3]) == (1,)  # zero element is its own witness
    assert zero_sum_subset(f4, [1, 2, 3]) == (1, 2, 3)
    assert zero_sum_subset(f8, [1, 2]) is None
    assert zero_sum_subset(f8, [5, 5]) == (1, 2)


def test_zero_sum_subset_smallest_then_lex(f16):
    # two size-2 zero subsets: the lexicographically first wins
    assert zero_sum_subset(f16, [5, 5, 6, 6]) == (1, 2)
    # no size-2 subset vanishes here, so the size-3 one is reported
    assert zero_sum_subset(f16, [1, 2, 3, 6]) == (1, 2, 3)


def test_zero_sum_guaranteed_beyond_degree(f8):
    rng = random.Random(1)
    for _ in range(50):
        vals = rng.sample(range(1, 8), 4)  # 4 > w = 3
        assert zero_sum_subset(f8, vals) is not None


def test_zero_sum_requires_char2(f5):
    with pytest.raises(ValueError):
        zero_sum_subset(f5, [1, 2])


def test_singular_selector_f4_example(f4):
    sel = zero_sum_singular_selector(f4, (1, 2, 3), 4)
    assert sel.rows == (1, 2, 4) and sel.cols == (1, 2, 3)
    sub = vandermonde(f4, 4, (1, 2, 3)).submatrix(sel.rows, sel.cols)
    assert determinant(sub) == 0


def test_singular_selector_f8_basis_plus_sum(f8):
    xi = (1, 2, 4, 7, 3)  # 1 ^ 2 ^ 4 = 7, so a zero-sum subset exists
    sel = zero_sum_singular_selector(f8, xi, 5)
    sub = vandermonde(f8, 5, xi).submatrix(sel.rows, sel.cols)
    assert determinant(sub) == 0


def test_singular_selector_randomized_always_singular():
    rng = random.Random(77)
    for p, w in [(2, 3), (2, 4), (2, 5)]:
        ctx = make_field(field_spec(p, w))
        for _ in range(40):
            r = rng.randint(2, min(6, ctx.q - 1))
            xi = tuple(rng.sample(range(1, ctx.q), r))
            subset = zero_sum_subset(ctx, xi)
            if subset is None:
                continue
            k = len(subset) + 1 + rng.randint(0, 2)
            sel = zero_sum_singular_selector(ctx, xi, k)
            assert determinant(
                vandermonde(ctx, k, xi).submatrix(sel.rows, sel.cols)) == 0


def test_singular_selector_errors(f8):
    with pytest.raises(NoZeroSumSubset):
        zero_sum_singular_selector(f8, (1, 2), 5)
    with pytest.raises(TooFewRows):
        zero_sum_singular_selector(f8, (1, 2, 3), 2)


def test_existence_threshold_values():
    assert existence_threshold(4, 1) == 1
    assert existence_threshold(10, 1) == 1
    assert existence_threshold(4, 2) == 7
    assert existence_threshold(3, 2) == 4
    assert existence_threshold(5, 2) == 11
    assert existence_threshold(6, 2) == 16
    assert existence_threshold(4, 3) == 31


def test_existence_threshold_monotone():
    for k in range(1, 13):
        for r in range(1, 13):
            b = existence_threshold(k, r)
            assert existence_threshold(k + 1, r) >= b
            assert existence_threshold(k, r + 1) >= b


def test_existence_threshold_big_values_exact():
    # big-integer binomials must not overflow or round
    b = existence_threshold(100, 20)
    assert b == 1 + 4950 * sum(
        __import__("math").comb(20, l) * __import__("math").comb(98, l - 2)
        for l in range(2, 21))
