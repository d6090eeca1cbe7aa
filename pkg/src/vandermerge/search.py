"""Exhaustive and randomized search for super-regular Vandermonde scalar
sets, and empirical minimum-field-size frontiers.

Column permutations never change a super-regularity verdict, so the
search space is unordered scalar *sets* (sorted, distinct, nonzero)
rather than tuples, an r!-fold reduction.  Work is budgeted in
determinant evaluations, not wall time, so reports are reproducible
across machines.
"""

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .bounds import check_char2_bound, check_divisor_bound, existence_threshold
from .errors import BudgetExceeded
from .galois import FieldCtx, FieldSpec, field_spec, make_field, prime_powers
from .matrix import scan_vandermonde

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class SearchReport:
    field: FieldSpec
    k: int
    r: int
    exists: bool
    first_witness: tuple[int, ...] | None
    sets_examined: int
    determinants: int
    seed: int | None = None

    @property
    def q(self) -> int:
        return self.field.q


@dataclass(frozen=True)
class FrontierRow:
    field: FieldSpec
    k: int
    r: int
    exists: bool | None  # None: budget exhausted, unknown
    witness: tuple[int, ...] | None
    sets_examined: int

    @property
    def q(self) -> int:
        return self.field.q


def exhaustive_search(ctx: FieldCtx, k: int, r: int, *,
                      budget: int = DEFAULT_BUDGET) -> SearchReport:
    """Scan every distinct nonzero scalar set in lexicographic order.

    All C(q-1, r) sets are examined even after a witness is found, so the
    report doubles as a census; the witness is the lexicographically
    least passing set.  Raises BudgetExceeded when the determinant budget
    cannot cover the run.
    """
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    total = math.comb(ctx.q - 1, r)
    if total > budget:
        raise BudgetExceeded(
            f"{total} scalar sets exceed the budget of {budget} determinants")
    remaining = budget
    witness = None
    examined = 0
    dets = 0
    for xi in combinations(range(1, ctx.q), r):
        report = scan_vandermonde(ctx, k, xi, max_determinants=remaining)
        remaining -= report.determinants
        dets += report.determinants
        examined += 1
        if report.super_regular and witness is None:
            witness = xi
    return SearchReport(ctx.spec, k, r, witness is not None, witness,
                        examined, dets)


def random_search(ctx: FieldCtx, k: int, r: int, trials: int,
                  seed: int | None = None) -> SearchReport:
    """Sample distinct scalar sets uniformly, without replacement, up to
    ``trials`` draws; stops at the first passing set.  Deterministic for
    a fixed seed."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    total = math.comb(ctx.q - 1, r)
    rng = random.Random(seed)
    seen = set()
    dets = 0
    while len(seen) < min(trials, total):
        xi = tuple(sorted(rng.sample(range(1, ctx.q), r)))
        if xi in seen:
            continue
        seen.add(xi)
        report = scan_vandermonde(ctx, k, xi)
        dets += report.determinants
        if report.super_regular:
            return SearchReport(ctx.spec, k, r, True, xi, len(seen), dets, seed)
    return SearchReport(ctx.spec, k, r, False, None, len(seen), dets, seed)


def empirical_min_q(k: int, r: int, field_family: list[FieldSpec], *,
                    budget: int = DEFAULT_BUDGET) -> list[FrontierRow]:
    """Exhaustive existence frontier over a family of fields ordered by q.

    Rows whose exhaustive scan exceeds the budget are marked unknown
    (exists=None).  Every decided row is cross-checked against the
    feasibility rules: existence must be feasible under the divisor and
    characteristic-2 bounds, and non-existence must not land beyond the
    existence threshold B(k, r).
    """
    rows = []
    threshold = existence_threshold(k, r)
    for spec in field_family:
        ctx = make_field(spec)
        try:
            rep = exhaustive_search(ctx, k, r, budget=budget)
        except BudgetExceeded:
            rows.append(FrontierRow(spec, k, r, None, None, 0))
            continue
        if rep.exists:
            if not check_divisor_bound(ctx.q, k, r).feasible:
                raise AssertionError(
                    f"witness found at q={ctx.q} despite divisor-bound infeasibility")
            if ctx.p == 2 and k > r and not check_char2_bound(ctx.q, k, r).feasible:
                raise AssertionError(
                    f"witness found at q={ctx.q} despite char-2 infeasibility")
        elif ctx.q > threshold:
            raise AssertionError(
                f"no witness at q={ctx.q} beyond existence threshold {threshold}")
        rows.append(FrontierRow(spec, k, r, rep.exists, rep.first_witness,
                                rep.sets_examined))
    return rows


def prime_power_family(q_max: int, q_min: int = 2) -> list[FieldSpec]:
    """Canonical-modulus FieldSpecs for every prime power in [q_min, q_max]."""
    return [field_spec(p, w) for p, w in prime_powers(q_max, q_min)]
