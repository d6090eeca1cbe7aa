"""Merge-regime convertible code pairs and their conversion procedures.

A pair couples an initial [kI + r, kI] code with a final [kF + r, kF]
code, kF = lam * kI for lam >= 2, both systematic with power-form parity
matrices over the *same* scalar vector xi.  Because row i of block t of
the tall parity matrix equals xi^((t-1)*kI) times row i of the short one,
each final parity is a linear combination of the corresponding initial
parities:

    final_parity[j] = sum_t xi_j^((t-1)*kI) * initial_parity[t][j]

so merging lam codewords touches only the lam*r initial parity symbols
and writes r new ones; the data symbols stay in place unread.  The
default approach instead reads all lam*kI data symbols and re-encodes.

Every symbol access is recorded as a (codeword, symbol, op) tuple; the
final codeword is addressed as codeword index lam.  Stats are the
aggregation of that log, which makes the "no data reads" property
directly checkable.
"""

from dataclasses import dataclass
from typing import Sequence

from .constructions import (
    GUARANTEE_UNVERIFIED,
    ConstructionRecipe,
    build_parity,
    guarantee_for,
)
from .errors import BadLambda, InvalidInitialCodeword, LengthMismatch, NotSuperRegular
from .galois import FieldCtx
from .matrix import is_super_regular, vandermonde
from .codes import SystematicCode, systematic_code

READ = "read"
WRITE = "write"


@dataclass(frozen=True)
class AccessStats:
    symbols_read: int
    symbols_written: int
    log: tuple[tuple[int, int, str], ...] = ()

    @staticmethod
    def from_log(log: Sequence[tuple[int, int, str]]) -> "AccessStats":
        log = tuple(log)
        return AccessStats(
            symbols_read=sum(1 for e in log if e[2] == READ),
            symbols_written=sum(1 for e in log if e[2] == WRITE),
            log=log,
        )


@dataclass(frozen=True)
class ConvertiblePair:
    ctx: FieldCtx
    k_initial: int
    r: int
    lam: int
    xi: tuple[int, ...]
    initial_code: SystematicCode
    final_code: SystematicCode

    @property
    def k_final(self) -> int:
        return self.lam * self.k_initial

    @property
    def n_initial(self) -> int:
        return self.k_initial + self.r

    @property
    def n_final(self) -> int:
        return self.k_final + self.r

    def initial_partition(self) -> list[range]:
        """Consecutive blocks of kI message coordinates, one per codeword."""
        k = self.k_initial
        return [range(t * k, (t + 1) * k) for t in range(self.lam)]


def make_pair(ctx: FieldCtx, k_initial: int, r: int, lam: int,
              xi: Sequence[int] | None = None,
              recipe: ConstructionRecipe | None = None,
              require_mds: bool = True) -> ConvertiblePair:
    """Build the initial/final code pair over shared scalars.

    Scalars come either from ``xi`` directly or from a construction
    ``recipe`` (which also supplies a super-regularity guarantee; when it
    covers kF rows the brute-force check is skipped).  Unless
    ``require_mds`` is False, the tall parity matrix is verified
    super-regular and NotSuperRegular (with witness) is raised otherwise.
    """
    if lam < 2:
        raise BadLambda(f"merging requires lam >= 2, got {lam}")
    if k_initial < 1 or r < 1:
        raise ValueError("k_initial and r must be >= 1")
    if (xi is None) == (recipe is None):
        raise ValueError("provide exactly one of xi or recipe")
    k_final = lam * k_initial
    certified = False
    if recipe is not None:
        if recipe.r != r:
            raise ValueError(f"recipe is for r={recipe.r}, pair needs r={r}")
        built = build_parity(recipe)
        if built.matrix.ctx != ctx:
            raise ValueError("recipe field differs from the pair's field")
        xi = built.scalars
        certified = guarantee_for(recipe, k_final) != GUARANTEE_UNVERIFIED
    xi = tuple(xi)
    if len(xi) != r:
        raise LengthMismatch(f"need {r} scalars, got {len(xi)}")
    tall = vandermonde(ctx, k_final, xi)
    if require_mds and not certified:
        report = is_super_regular(tall)
        if not report.super_regular:
            raise NotSuperRegular(
                f"V_{k_final}{xi} has singular submatrix {report.witness}",
                witness=report.witness)
    return ConvertiblePair(
        ctx=ctx,
        k_initial=k_initial,
        r=r,
        lam=lam,
        xi=xi,
        initial_code=systematic_code(ctx, vandermonde(ctx, k_initial, xi)),
        final_code=systematic_code(ctx, tall),
    )


def _check_inputs(pair: ConvertiblePair, initial_codewords) -> list[list[int]]:
    if len(initial_codewords) != pair.lam:
        raise LengthMismatch(
            f"expected {pair.lam} initial codewords, got {len(initial_codewords)}")
    out = []
    for t, cw in enumerate(initial_codewords):
        if len(cw) != pair.n_initial:
            raise LengthMismatch(
                f"codeword {t} has {len(cw)} symbols, expected {pair.n_initial}")
        if any(v is None for v in cw):
            raise InvalidInitialCodeword(f"codeword {t} has erased symbols")
        out.append([pair.ctx.check(v) for v in cw])
    return out


def convert_merge(pair: ConvertiblePair, initial_codewords,
                  recheck_parities: bool = False) -> tuple[list[int], AccessStats]:
    """Merge lam initial codewords into the final codeword, touching only
    parity symbols: lam*r reads, r writes.

    ``recheck_parities`` re-encodes each input as a validation aid
    (raising InvalidInitialCodeword on mismatch); the recheck is outside
    the access-accounting model and leaves the log untouched.
    """
    ctx = pair.ctx
    cws = _check_inputs(pair, initial_codewords)
    if recheck_parities:
        for t, cw in enumerate(cws):
            if pair.initial_code.encode(cw[:pair.k_initial]) != cw:
                raise InvalidInitialCodeword(f"codeword {t} fails parity recheck")
    kI, r, lam = pair.k_initial, pair.r, pair.lam
    coeff = [[ctx.pow(x, t * kI) for x in pair.xi] for t in range(lam)]
    log = []
    data = []
    for cw in cws:
        data.extend(cw[:kI])  # retained in place, not accessed
    parities = []
    for j in range(r):
        acc = 0
        for t in range(lam):
            log.append((t, kI + j, READ))
            acc = ctx.add(acc, ctx.mul(coeff[t][j], cws[t][kI + j]))
        parities.append(acc)
        log.append((lam, lam * kI + j, WRITE))
    return data + parities, AccessStats.from_log(log)


def default_convert(pair: ConvertiblePair,
                    initial_codewords) -> tuple[list[int], AccessStats]:
    """Re-encode from scratch: reads all lam*kI data symbols, writes r."""
    cws = _check_inputs(pair, initial_codewords)
    kI, lam = pair.k_initial, pair.lam
    log = []
    message = []
    for t, cw in enumerate(cws):
        for i in range(kI):
            log.append((t, i, READ))
        message.extend(cw[:kI])
    final = pair.final_code.encode(message)
    for j in range(pair.r):
        log.append((lam, lam * kI + j, WRITE))
    return final, AccessStats.from_log(log)


def verify_conversion_correctness(pair: ConvertiblePair,
                                  message: Sequence[int]) -> bool:
    """Encode a kF-symbol message blockwise, merge, and compare against
    the direct final-code encoding."""
    message = [pair.ctx.check(v) for v in message]
    if len(message) != pair.k_final:
        raise LengthMismatch(f"message must have {pair.k_final} symbols")
    initial = [pair.initial_code.encode(message[block.start:block.stop])
               for block in pair.initial_partition()]
    merged, _ = convert_merge(pair, initial)
    return merged == pair.final_code.encode(message)
