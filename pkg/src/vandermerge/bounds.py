"""Field-size feasibility rules for k x r super-regular Vandermonde matrices.

Two necessary conditions (lower bounds on the field size) and one
sufficient threshold (an upper bound on the minimum field size):

* divisor rule: for every divisor m of q - 1 with m < k, the field must
  satisfy q >= r*m + 1, else the row of m-th powers repeats a value and
  an all-equal 2 x 2 block appears.
* characteristic-2 rule: over GF(2^w) with k > r, distinct nonzero
  scalars admit a zero-sum subset whenever q < 2^r, which produces an
  explicitly singular square submatrix (see
  :func:`zero_sum_singular_selector`).
* existence threshold: for q above B(k, r) = 1 + C(k,2) * sum_{l=2..r}
  C(r,l)*C(k-2,l-2), a super-regular choice of scalars exists.
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import NoZeroSumSubset, NotPowerOfTwo, NotPrimePower, TooFewRows
from .galois import FieldCtx, divisors, prime_power
from .matrix import SubmatrixSelector

RULE_DIVISOR = "divisor-order"
RULE_CHAR2 = "char2-zero-sum"


@dataclass(frozen=True)
class Violation:
    rule: str
    params: dict
    requires: str

    def to_json(self) -> dict:
        return {"rule": self.rule, "params": self.params, "requires": self.requires}


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    violations: tuple[Violation, ...] = ()
    witness: object = None

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "violations": [v.to_json() for v in self.violations],
        }


def check_divisor_bound(q: int, k: int, r: int) -> FeasibilityVerdict:
    """Divisor rule verdict; lists every divisor of q - 1 that fails."""
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    violations = []
    for m in divisors(q - 1):
        if m < k and q < r * m + 1:
            violations.append(Violation(
                RULE_DIVISOR,
                {"m": m, "q": q, "k": k, "r": r, "required_q": r * m + 1},
                f"q >= {r * m + 1} forced by divisor m={m} of q-1",
            ))
    return FeasibilityVerdict(not violations, tuple(violations))


def check_char2_bound(q: int, k: int, r: int) -> FeasibilityVerdict:
    """Characteristic-2 rule: with k > r, requires q >= 2^r."""
    pw = prime_power(q)
    if pw is None or pw[0] != 2:
        raise NotPowerOfTwo(f"{q} is not a power of 2")
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    if k > r and q < 2 ** r:
        v = Violation(
            RULE_CHAR2,
            {"q": q, "k": k, "r": r, "required_q": 2 ** r},
            f"q >= {2 ** r} forced by k > r over characteristic 2",
        )
        return FeasibilityVerdict(False, (v,))
    return FeasibilityVerdict(True)


def zero_sum_subset(ctx: FieldCtx, values: Sequence[int]) -> tuple[int, ...] | None:
    """Smallest (by size, then lexicographic) nonempty 1-based index subset
    of ``values`` summing to zero over a characteristic-2 field, or None.

    Whenever len(values) exceeds the extension degree w, such a subset
    must exist: more than w elements of GF(2^w) are linearly dependent
    over GF(2).
    """
    if ctx.p != 2:
        raise ValueError("zero-sum subsets are defined here for p = 2 only")
    vals = [ctx.check(v) for v in values]
    for size in range(1, len(vals) + 1):
        for idx in combinations(range(len(vals)), size):
            acc = 0
            for i in idx:
                acc ^= vals[i]
            if acc == 0:
                return tuple(i + 1 for i in idx)
    return None


def zero_sum_singular_selector(ctx: FieldCtx, xi: Sequence[int], k: int) -> SubmatrixSelector:
    """A provably singular square selector of the k x r power matrix of
    scalars ``xi`` over GF(2^w), derived from a zero-sum subset.

    With I the zero-sum index subset and l = |I|, the polynomial
    f(x) = prod_{i in I} (x - xi_i) has a vanishing coefficient at x^(l-1),
    so rows {1..l+1} minus {l}, columns I, are linearly dependent.
    Requires l + 1 <= k.
    """
    subset = zero_sum_subset(ctx, xi)
    if subset is None:
        raise NoZeroSumSubset("no nonempty subset of the scalars sums to zero")
    ell = len(subset)
    if ell + 1 > k:
        raise TooFewRows(f"need k >= {ell + 1} rows, have {k}")
    rows = tuple(i for i in range(1, ell + 2) if i != ell)
    return SubmatrixSelector(rows, subset)


def existence_threshold(k: int, r: int) -> int:
    """B(k, r): every prime power q > B(k, r) admits a k x r super-regular
    Vandermonde matrix.  Exact big-integer binomials; no overflow."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    if k < 2:
        return 1  # C(k, 2) = 0 annihilates the sum
    total = sum(math.comb(r, ell) * math.comb(k - 2, ell - 2)
                for ell in range(2, r + 1))
    return 1 + math.comb(k, 2) * total
