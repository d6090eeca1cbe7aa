"""Arithmetic in prime and prime-power finite fields GF(p^w).

Field elements are plain ints in [0, q) with q = p^w: the base-p digits
of the int are the coefficients of a polynomial of degree < w over GF(p),
so for p = 2 this is the familiar bit-packed encoding (0x53 reads as
x^6 + x^4 + x + 1).  A :class:`FieldCtx` owns the modulus polynomial and,
for q <= 2^16, exp/log tables keyed to the canonical primitive element,
making multiplication and inversion O(1) lookups at practical sizes;
larger fields fall back to polynomial reduction.

Contexts are immutable after construction and safe to share between
threads; every operation here is a pure function of its arguments.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadExponent,
    MixedFields,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
    ZeroInverse,
)

# Above this size exp/log tables are not built and arithmetic reduces
# polynomials directly.
TABLE_LIMIT = 1 << 16

# x^8 + x^4 + x^3 + x^2 + 1: the GF(256) default. Chosen over the
# lexicographically-first irreducible (0x11B) because x itself generates
# the multiplicative group under this modulus.
GF256_MODULUS = 0x11D


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q as p^w with p prime; None when q is not a prime power."""
    if q < 2:
        return None
    p = None
    f = 2
    while f * f <= q:
        if q % f == 0:
            p = f
            break
        f += 1 if f == 2 else 2
    if p is None:
        return q, 1
    n, w = q, 0
    while n % p == 0:
        n //= p
        w += 1
    return (p, w) if n == 1 else None


def prime_powers(q_max: int, q_min: int = 2) -> list[tuple[int, int]]:
    """All (p, w) with q_min <= p^w <= q_max, ordered by field size."""
    out = [(q, prime_power(q)) for q in range(max(2, q_min), q_max + 1)]
    return [pw for _, pw in sorted(out) if pw is not None]


def divisors(n: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


# -- polynomials over GF(p), as ascending digit lists ------------------------

def _digits(value: int, p: int) -> list[int]:
    if value == 0:
        return [0]
    out = []
    while value:
        value, d = divmod(value, p)
        out.append(d)
    return out


def _undigits(digits, p: int) -> int:
    v = 0
    for d in reversed(list(digits)):
        v = v * p + d
    return v


def _poly_rem(num, den, p: int) -> list[int]:
    """Remainder of num mod den over GF(p); den must be monic."""
    num = list(num)
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd]


def _find_poly_factor(mod_digits, p: int, w: int) -> tuple[int, ...] | None:
    """A monic divisor of degree in [1, w/2], or None when irreducible.

    Trial division over all monic candidates is enough: any reducible
    degree-w polynomial has an irreducible factor of degree <= w/2.
    """
    for d in range(1, w // 2 + 1):
        base = p ** d
        for v in range(base, 2 * base):
            cand = _digits(v, p)
            if not any(_poly_rem(mod_digits, cand, p)):
                return tuple(cand)
    return None


@lru_cache(maxsize=None)
def default_modulus(p: int, w: int) -> tuple[int, ...]:
    """Canonical modulus for GF(p^w): lexicographically smallest monic
    irreducible by integer coefficient encoding, except GF(256) which is
    pinned to 0x11D so that x is primitive."""
    if w == 1:
        return (0, 1)
    if (p, w) == (2, 8):
        return tuple(_digits(GF256_MODULUS, 2))
    for v in range(p ** w, 2 * p ** w):
        cand = _digits(v, p)
        if _find_poly_factor(cand, p, w) is None:
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- field specification ------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(p^w): characteristic, degree, modulus coefficients.

    ``modulus`` lists coefficients ascending by degree, length w + 1,
    monic; it is ignored for prime fields (w = 1).
    """

    p: int
    w: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.w

    def to_json(self) -> dict:
        return {"p": self.p, "w": self.w, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return field_spec(int(obj["p"]), int(obj["w"]), obj.get("modulus"))


def field_spec(p: int, w: int = 1, modulus=None) -> FieldSpec:
    """Build a FieldSpec, filling in the canonical modulus when omitted.

    ``modulus`` may be a coefficient sequence (ascending) or an int whose
    base-p digits are the coefficients (e.g. 0x11D for p = 2).
    """
    if w < 1:
        raise ValueError("extension degree w must be >= 1")
    if modulus is None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        mod = default_modulus(p, w)
    elif isinstance(modulus, int):
        mod = tuple(_digits(modulus, p))
    else:
        mod = tuple(int(c) for c in modulus)
    return FieldSpec(p, w, mod)


class FieldCtx:
    """Arithmetic context for one finite field.

    Do not instantiate directly; use :func:`make_field`, which validates
    the spec, builds tables, and caches contexts per spec.
    """

    __slots__ = ("spec", "p", "w", "q", "_mod_digits", "_mod_int",
                 "_exp", "_log", "_theta", "_q1_primes")

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.w = spec.w
        self.q = spec.p ** spec.w
        self._mod_digits = spec.modulus
        self._mod_int = _undigits(spec.modulus, spec.p)
        self._exp = None
        self._log = None
        self._theta = None
        self._q1_primes = None

    def __repr__(self):
        if self.p == 2 and self.w > 1:
            return f"FieldCtx(GF({self.q}), modulus={self._mod_int:#x})"
        return f"FieldCtx(GF({self.q}))"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    # -- element handling

    def check(self, a: int) -> int:
        """Validate an operand; out-of-range values signal a foreign field."""
        if not 0 <= a < self.q:
            raise MixedFields(f"element {a!r} is not in GF({self.q})")
        return a

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # -- raw (table-free) multiplication

    def _raw_mul(self, a: int, b: int) -> int:
        if self.w == 1:
            return a * b % self.p
        if self.p == 2:
            mod, top = self._mod_int, self.q
            r = 0
            while a and b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        p = self.p
        da, db = _digits(a, p), _digits(b, p)
        prod = [0] * (len(da) + len(db) - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        return _undigits(_poly_rem(prod, self._mod_digits, p), p)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    # -- field operations

    def add(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.p == 2:
            return a ^ b
        if self.w == 1:
            return (a + b) % self.p
        p, v, s = self.p, 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            v += (da + db) % p * s
            s *= p
        return v

    def sub(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.p == 2:
            return a ^ b
        if self.w == 1:
            return (a - b) % self.p
        p, v, s = self.p, 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            v += (da - db) % p * s
            s *= p
        return v

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._raw_pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """a^e; the exponent is reduced mod q-1 for nonzero bases, so
        negative exponents mean inverses."""
        self.check(a)
        if a == 0:
            if e < 0:
                raise ZeroInverse("0 has no negative powers")
            return 1 if e == 0 else 0
        e %= self.q - 1 if self.q > 2 else 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)] if self.q > 2 else 1
        return self._raw_pow(a, e)

    def order(self, a: int) -> int:
        """Multiplicative order: the least d >= 1 with a^d = 1."""
        self.check(a)
        if a == 0:
            raise ZeroElement("0 has no multiplicative order")
        if self._q1_primes is None:
            self._q1_primes = prime_factors(self.q - 1) if self.q > 2 else ()
        d = self.q - 1
        for f in self._q1_primes:
            while d % f == 0 and self.pow(a, d // f) == 1:
                d //= f
        return d

    def primitive(self) -> int:
        """The canonical primitive element: smallest encoding of order q-1."""
        if self._theta is None:
            q1 = self.q - 1
            self._theta = next(g for g in range(1, self.q) if self.order(g) == q1)
        return self._theta

    def frobenius(self, a: int, e: int) -> int:
        """The automorphism x -> x^(p^e); e = 0 is the identity."""
        if not 0 <= e < self.w:
            raise BadExponent(f"automorphism exponent {e} outside [0, {self.w})")
        return self.pow(a, self.p ** e)

    def fixed_subfield_degree(self, e: int) -> int:
        """Degree over GF(p) of the fixed field of x -> x^(p^e): gcd(e, w)."""
        if not 0 <= e < self.w:
            raise BadExponent(f"automorphism exponent {e} outside [0, {self.w})")
        return math.gcd(e, self.w) if e else self.w


def _build_tables(ctx: FieldCtx) -> None:
    # Scanning generator candidates in encoding order both finds the
    # canonical primitive element and fills the exp table in one pass.
    q1 = ctx.q - 1
    mul = ctx._raw_mul
    for g in range(1, ctx.q):
        exp = [1] * (2 * q1)
        x = 1
        primitive = True
        for i in range(1, q1):
            x = mul(x, g)
            if x == 1:
                primitive = False
                break
            exp[i] = x
        if primitive:
            log = [-1] * ctx.q
            for i in range(q1):
                log[exp[i]] = i
                exp[q1 + i] = exp[i]
            ctx._theta = g
            ctx._exp = exp
            ctx._log = log
            return
    raise AssertionError("no generator found")  # unreachable for a field


@lru_cache(maxsize=None)
def make_field(spec: FieldSpec) -> FieldCtx:
    """Validate a FieldSpec and return its (cached, shared) context.

    Raises NotPrime when p is composite and ReducibleModulus (with a
    factor as witness) when the modulus splits over GF(p).
    """
    if not is_prime(spec.p):
        raise NotPrime(f"{spec.p} is not prime")
    if spec.w < 1:
        raise ValueError("extension degree w must be >= 1")
    if spec.w > 1:
        mod = spec.modulus
        if len(mod) != spec.w + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {spec.w}")
        if any(not 0 <= c < spec.p for c in mod):
            raise ValueError("modulus coefficients must lie in [0, p)")
        factor = _find_poly_factor(list(mod), spec.p, spec.w)
        if factor is not None:
            raise ReducibleModulus(
                f"modulus is divisible by {list(factor)}", factor=factor)
    ctx = FieldCtx(spec)
    if ctx.q <= TABLE_LIMIT:
        _build_tables(ctx)
    return ctx


def find_primitive(ctx: FieldCtx) -> int:
    """Smallest-encoded generator of the multiplicative group."""
    return ctx.primitive()


def parse_element(value, p: int) -> int:
    """Parse an element from JSON input: int, decimal string, or (for
    characteristic 2) a 0x-prefixed hex string."""
    if isinstance(value, int):
        return value
    s = str(value).strip()
    if s.lower().startswith("0x"):
        if p != 2:
            raise ValueError("hex element encoding is only defined for p = 2")
        return int(s, 16)
    return int(s)
