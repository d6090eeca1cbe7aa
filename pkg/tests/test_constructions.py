import random

import pytest

from vandermerge import (
    GUARANTEE_CHAR2,
    GUARANTEE_GENERAL,
    GUARANTEE_UNVERIFIED,
    ConstructionRecipe,
    build_parity,
    field_spec,
    is_super_regular,
    make_field,
    scalars_automorphism,
    scalars_consecutive_powers,
    scalars_coprime_exponent,
    trinomial_singularity_scan,
    vandermonde,
)
from vandermerge.constructions import (
    VARIANT_AUTOMORPHISM,
    VARIANT_CONSECUTIVE,
    VARIANT_COPRIME,
)
from vandermerge.errors import (
    BadExponent,
    CoprimalityViolation,
    FixedFieldTooLarge,
    PreconditionViolated,
    TooManyScalars,
    TrivialAutomorphism,
)

from oracles import singular_triple_exists


def test_consecutive_powers(f256, f4):
    assert scalars_consecutive_powers(f256, 1) == (1,)
    theta = f256.primitive()
    assert scalars_consecutive_powers(f256, 3) == (1, theta, f256.mul(theta, theta))
    with pytest.raises(TooManyScalars):
        scalars_consecutive_powers(f4, 4)


def test_coprime_exponent(f8, f16):
    theta = f8.primitive()
    assert scalars_coprime_exponent(f8, 2) == (1, theta, f8.pow(theta, 2))
    with pytest.raises(CoprimalityViolation) as exc:
        scalars_coprime_exponent(f16, 6)
    assert exc.value.which == "e"
    with pytest.raises(CoprimalityViolation) as exc:
        scalars_coprime_exponent(f16, 7)  # e-1 = 6 shares 3 with 15
    assert exc.value.which == "e-1"
    with pytest.raises(ValueError):
        scalars_coprime_exponent(f8, 1)


def test_coprime_exponent_no_singular_2x2(f8):
    xi = scalars_coprime_exponent(f8, 2)
    m = vandermonde(f8, 7, xi)
    from itertools import combinations
    from oracles import laplace_det, submatrix_rows
    for rows in combinations(range(1, 8), 2):
        for cols in combinations(range(1, 4), 2):
            assert laplace_det(f8, submatrix_rows(m, rows, cols)) != 0


def test_automorphism_scalars(f256):
    theta = f256.primitive()
    assert scalars_automorphism(f256, 1) == (1, theta, f256.mul(theta, theta))
    with pytest.raises(FixedFieldTooLarge):
        scalars_automorphism(f256, 2)  # gcd(2, 8) = 2 fixes GF(4)
    with pytest.raises(TrivialAutomorphism):
        scalars_automorphism(f256, 0)
    with pytest.raises(BadExponent):
        scalars_automorphism(f256, 8)


def test_automorphism_scalars_odd_characteristic():
    ctx = make_field(field_spec(3, 5))
    theta = ctx.primitive()
    assert scalars_automorphism(ctx, 1) == (1, theta, ctx.pow(theta, 3))


def test_build_parity_guarantees():
    f256 = field_spec(2, 8)
    built = build_parity(ConstructionRecipe(VARIANT_AUTOMORPHISM, f256, 255, 3, e=1))
    assert built.guarantee == GUARANTEE_CHAR2
    assert built.matrix.rows == 255 and built.matrix.cols == 3

    f243 = field_spec(3, 5)
    assert build_parity(
        ConstructionRecipe(VARIANT_AUTOMORPHISM, f243, 5, 3, e=1)
    ).guarantee == GUARANTEE_GENERAL
    assert build_parity(
        ConstructionRecipe(VARIANT_AUTOMORPHISM, f243, 6, 3, e=1)
    ).guarantee == GUARANTEE_UNVERIFIED
    assert build_parity(
        ConstructionRecipe(VARIANT_CONSECUTIVE, f256, 10, 4)
    ).guarantee == GUARANTEE_UNVERIFIED
    assert build_parity(
        ConstructionRecipe(VARIANT_COPRIME, field_spec(2, 3), 5, 3, e=2)
    ).guarantee == GUARANTEE_UNVERIFIED


def test_build_parity_prefix_for_small_r(f256):
    spec = field_spec(2, 8)
    full = build_parity(ConstructionRecipe(VARIANT_AUTOMORPHISM, spec, 6, 3, e=1))
    two = build_parity(ConstructionRecipe(VARIANT_AUTOMORPHISM, spec, 6, 2, e=1))
    assert two.scalars == full.scalars[:2]
    assert two.guarantee == GUARANTEE_CHAR2
    assert is_super_regular(two.matrix).super_regular


def test_build_parity_validation():
    spec = field_spec(2, 4)
    with pytest.raises(ValueError):
        build_parity(ConstructionRecipe("mystery", spec, 3, 3, e=1))
    with pytest.raises(ValueError):
        build_parity(ConstructionRecipe(VARIANT_AUTOMORPHISM, spec, 3, 3))
    with pytest.raises(TooManyScalars):
        build_parity(ConstructionRecipe(VARIANT_AUTOMORPHISM, spec, 3, 4, e=1))


def test_recipe_json_round_trip():
    recipe = ConstructionRecipe(VARIANT_AUTOMORPHISM, field_spec(2, 8), 200, 3, e=1)
    assert ConstructionRecipe.from_json(recipe.to_json()) == recipe


def test_trinomial_scan_char2_always_clear():
    # c1 = c2 = 1 forces f(1) = 1, so no witness can exist over GF(2^w).
    for w in (2, 3, 4, 5, 6):
        ctx = make_field(field_spec(2, w))
        theta = ctx.primitive()
        for e in range(1, w):
            if __import__("math").gcd(e, w) != 1:
                continue
            st = ctx.frobenius(theta, e)
            assert trinomial_singularity_scan(ctx, ctx.q - 1, theta, st) is None


def test_trinomial_scan_small_k_clear_f243():
    # degree of any witness trinomial would be below the minimal
    # polynomial degree of a generator
    ctx = make_field(field_spec(3, 5))
    theta = ctx.primitive()
    st = ctx.frobenius(theta, 1)
    for k in range(2, 6):
        assert trinomial_singularity_scan(ctx, k, theta, st) is None


def test_trinomial_scan_matches_brute_force_odd_p():
    hits = 0
    for p, w in [(3, 2), (5, 2), (3, 3)]:
        ctx = make_field(field_spec(p, w))
        theta = ctx.primitive()
        for e in range(1, w):
            if __import__("math").gcd(e, w) != 1:
                continue
            st = ctx.frobenius(theta, e)
            for k in range(3, ctx.q):
                witness = trinomial_singularity_scan(ctx, k, theta, st)
                brute = singular_triple_exists(vandermonde(ctx, k, (1, theta, st)))
                assert (witness is not None) == brute, (p, w, e, k)
                if witness is not None:
                    hits += 1
                    e1, e2, c1, c2 = witness
                    assert 1 <= e1 < e2 <= k - 1
                    # check the trinomial really vanishes on all three roots
                    for x in (1, theta, st):
                        val = ctx.add(ctx.add(c1, ctx.mul(c2, ctx.pow(x, e1))),
                                      ctx.pow(x, e2))
                        assert val == 0
    assert hits > 0  # the equivalence test must exercise both branches


def test_trinomial_scan_preconditions(f16):
    theta = f16.primitive()
    st = f16.frobenius(theta, 1)
    with pytest.raises(PreconditionViolated):
        trinomial_singularity_scan(f16, 16, theta, st)  # k >= q
    with pytest.raises(PreconditionViolated):
        trinomial_singularity_scan(f16, 5, f16.mul(theta, theta), st)
    with pytest.raises(PreconditionViolated):
        trinomial_singularity_scan(f16, 5, theta, f16.mul(theta, 3))


def test_random_primitive_elements_also_work(f256):
    # the guarantees hold for any generator, not just the canonical one;
    # spot-check a few random ones at moderate k
    rng = random.Random(13)
    gens = [a for a in range(2, 256) if f256.order(a) == 255]
    for theta in rng.sample(gens, 4):
        xi = (1, theta, f256.frobenius(theta, 1))
        assert is_super_regular(vandermonde(f256, 40, xi)).super_regular
