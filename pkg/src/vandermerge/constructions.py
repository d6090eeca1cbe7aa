"""Explicit scalar-vector constructions for super-regular Vandermonde
parity matrices at low field size.

The strongest recipes pick scalars (1, theta, sigma(theta)) where theta
generates the multiplicative group and sigma: x -> x^(p^e) is a field
automorphism whose fixed field is the prime field (gcd(e, w) = 1).  The
resulting k x 3 power matrix is provably super-regular for k <= w over
any prime power field, and for every k < q over characteristic 2.

Recipes outside those ranges still build, but carry an ``unverified``
guarantee so callers can fall back to a brute-force scan.
"""

import math
from dataclasses import dataclass

from .errors import (
    BadExponent,
    CoprimalityViolation,
    FixedFieldTooLarge,
    PreconditionViolated,
    TooManyScalars,
    TrivialAutomorphism,
)
from .galois import FieldCtx, FieldSpec, make_field
from .matrix import MatrixF, vandermonde

VARIANT_CONSECUTIVE = "consecutive-powers"
VARIANT_COPRIME = "coprime-exponent"
VARIANT_AUTOMORPHISM = "automorphism"

GUARANTEE_GENERAL = "proven-super-regular-general"  # any p, k <= w, r <= 3
GUARANTEE_CHAR2 = "proven-super-regular-char2"      # p = 2, k < q, r <= 3
GUARANTEE_UNVERIFIED = "unverified"

_VARIANTS = (VARIANT_CONSECUTIVE, VARIANT_COPRIME, VARIANT_AUTOMORPHISM)


@dataclass(frozen=True)
class ConstructionRecipe:
    variant: str
    field: FieldSpec
    k: int
    r: int
    e: int | None = None  # exponent for coprime/automorphism variants

    def to_json(self) -> dict:
        out = {"variant": self.variant, "k": self.k, "r": self.r}
        out.update(self.field.to_json())
        if self.e is not None:
            out["e"] = self.e
        return out

    @staticmethod
    def from_json(obj: dict) -> "ConstructionRecipe":
        return ConstructionRecipe(
            variant=str(obj["variant"]),
            field=FieldSpec.from_json(obj),
            k=int(obj["k"]),
            r=int(obj["r"]),
            e=int(obj["e"]) if "e" in obj and obj["e"] is not None else None,
        )


@dataclass(frozen=True)
class BuiltParity:
    matrix: MatrixF
    scalars: tuple[int, ...]
    guarantee: str
    recipe: ConstructionRecipe


def scalars_consecutive_powers(ctx: FieldCtx, r: int) -> tuple[int, ...]:
    """(1, theta, theta^2, ..., theta^(r-1)) for the canonical generator.

    Distinct for r < q but with no super-regularity guarantee at low
    field size.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if r >= ctx.q:
        raise TooManyScalars(f"only {ctx.q - 1} nonzero elements, need {r}")
    theta = ctx.primitive()
    out = [1]
    for _ in range(r - 1):
        out.append(ctx.mul(out[-1], theta))
    return tuple(out)


def scalars_coprime_exponent(ctx: FieldCtx, e: int) -> tuple[int, ...]:
    """(1, theta, theta^e) with e and e-1 both coprime to q-1.

    Both theta^e and theta^(e-1) are then generators, which rules out any
    singular 2 x 2 submatrix of the k x 3 power matrix for all k < q.
    """
    q1 = ctx.q - 1
    if not 2 <= e <= q1:
        raise ValueError(f"exponent must satisfy 2 <= e <= {q1}")
    if math.gcd(e, q1) != 1:
        raise CoprimalityViolation(
            f"gcd(e={e}, q-1={q1}) = {math.gcd(e, q1)}", which="e")
    if math.gcd(e - 1, q1) != 1:
        raise CoprimalityViolation(
            f"gcd(e-1={e - 1}, q-1={q1}) = {math.gcd(e - 1, q1)}", which="e-1")
    theta = ctx.primitive()
    return (1, theta, ctx.pow(theta, e))


def scalars_automorphism(ctx: FieldCtx, e: int) -> tuple[int, ...]:
    """(1, theta, theta^(p^e)) for the automorphism x -> x^(p^e).

    Requires gcd(e, w) = 1 so the automorphism fixes only the prime
    field; e = 0 (the identity) is rejected as trivial.
    """
    if e == 0:
        raise TrivialAutomorphism("e = 0 is the identity automorphism")
    if not 1 <= e < ctx.w:
        raise BadExponent(f"automorphism exponent {e} outside [1, {ctx.w})")
    if ctx.fixed_subfield_degree(e) != 1:
        raise FixedFieldTooLarge(
            f"x -> x^({ctx.p}^{e}) fixes a subfield of degree "
            f"{ctx.fixed_subfield_degree(e)} > 1")
    theta = ctx.primitive()
    return (1, theta, ctx.frobenius(theta, e))


def guarantee_for(recipe: ConstructionRecipe, k: int | None = None) -> str:
    """Guarantee tag for the recipe's scalars at row count k (defaults to
    the recipe's own k)."""
    k = recipe.k if k is None else k
    if recipe.variant != VARIANT_AUTOMORPHISM or recipe.r > 3:
        return GUARANTEE_UNVERIFIED
    spec = recipe.field
    e = recipe.e
    if e is None or not 1 <= e < spec.w or math.gcd(e, spec.w) != 1:
        return GUARANTEE_UNVERIFIED
    if spec.p == 2 and k < spec.q:
        return GUARANTEE_CHAR2
    if k <= spec.w:
        return GUARANTEE_GENERAL
    return GUARANTEE_UNVERIFIED


def build_parity(recipe: ConstructionRecipe) -> BuiltParity:
    """Materialize the recipe's k x r parity matrix with its guarantee.

    For r < 3 the automorphism and coprime-exponent variants use a prefix
    of their 3-scalar vector; any submatrix of a super-regular matrix is
    super-regular, so guarantees carry over.  Row counts beyond a
    variant's proven range downgrade the guarantee to ``unverified``
    instead of failing.
    """
    if recipe.variant not in _VARIANTS:
        raise ValueError(f"unknown variant {recipe.variant!r}")
    if recipe.k < 1 or recipe.r < 1:
        raise ValueError("k and r must be >= 1")
    ctx = make_field(recipe.field)
    if recipe.variant == VARIANT_CONSECUTIVE:
        xi = scalars_consecutive_powers(ctx, recipe.r)
    else:
        if recipe.e is None:
            raise ValueError(f"variant {recipe.variant!r} requires an exponent e")
        if recipe.r > 3:
            raise TooManyScalars(
                f"variant {recipe.variant!r} provides at most 3 scalars")
        if recipe.variant == VARIANT_COPRIME:
            xi = scalars_coprime_exponent(ctx, recipe.e)[:recipe.r]
        else:
            xi = scalars_automorphism(ctx, recipe.e)[:recipe.r]
    m = vandermonde(ctx, recipe.k, xi)
    return BuiltParity(m, xi, guarantee_for(recipe), recipe)


def trinomial_singularity_scan(ctx: FieldCtx, k: int, theta: int,
                               sigma_theta: int) -> tuple[int, int, int, int] | None:
    """Search for (e1, e2, c1, c2) with 1 <= e1 < e2 <= k-1 and c1, c2
    nonzero prime-field elements such that 1, theta and sigma_theta are
    all roots of f(x) = c1 + c2*x^e1 + x^e2.

    Such a witness exists iff the k x 3 power matrix on (1, theta,
    sigma_theta) has a singular 3 x 3 submatrix; None certifies there is
    none.  Witnesses are returned in lexicographic (e1, e2) order, which
    determines (c1, c2) uniquely.
    """
    ctx.check(theta)
    ctx.check(sigma_theta)
    if not 1 <= k < ctx.q:
        raise PreconditionViolated(f"k must satisfy 1 <= k < q, got {k}")
    if ctx.order(theta) != ctx.q - 1:
        raise PreconditionViolated("theta must generate the multiplicative group")
    if not any(math.gcd(e, ctx.w) == 1 and ctx.frobenius(theta, e) == sigma_theta
               for e in range(1, ctx.w)):
        raise PreconditionViolated(
            "sigma_theta must be the image of theta under an automorphism "
            "fixing only the prime field")
    mul, sub, add, inv = ctx.mul, ctx.sub, ctx.add, ctx.inv
    tpow = [1] * k
    spow = [1] * k
    for d in range(1, k):
        tpow[d] = mul(tpow[d - 1], theta)
        spow[d] = mul(spow[d - 1], sigma_theta)
    for e1 in range(1, k - 1):
        # theta^e1 != 1 because 0 < e1 < q-1, so c2 is determined.
        denom_inv = inv(sub(tpow[e1], 1))
        for e2 in range(e1 + 1, k):
            c2 = mul(sub(1, tpow[e2]), denom_inv)
            if c2 == 0 or ctx.frobenius(c2, 1) != c2:
                continue  # not in the prime field's nonzero part
            c1 = ctx.neg(add(1, c2))
            if c1 == 0:
                continue
            if add(add(c1, mul(c2, spow[e1])), spow[e2]) == 0:
                return (e1, e2, c1, c2)
    return None
