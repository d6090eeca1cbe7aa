"""Systematic linear [n, k] erasure codes over a finite field.

A code is given by its k x (n-k) parity matrix P; the generator is
[I_k | P], so the first k codeword symbols are the message verbatim and
parity j is the inner product of the message with column j of P.  The
code tolerates every pattern of n-k erasures exactly when P is
super-regular.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LengthMismatch, SingularSubsystem, TooFewSymbols
from .galois import FieldCtx
from .matrix import MatrixF, is_super_regular


@dataclass(frozen=True)
class SystematicCode:
    ctx: FieldCtx
    k: int
    parity: MatrixF

    @property
    def r(self) -> int:
        return self.parity.cols

    @property
    def n(self) -> int:
        return self.k + self.parity.cols

    def encode(self, message: Sequence[int]) -> list[int]:
        """Message of k symbols -> codeword of n symbols."""
        ctx = self.ctx
        message = [ctx.check(v) for v in message]
        if len(message) != self.k:
            raise LengthMismatch(f"message must have {self.k} symbols")
        out = list(message)
        for j in range(self.r):
            acc = 0
            for i, m in enumerate(message):
                if m:
                    acc = ctx.add(acc, ctx.mul(m, self.parity.at(i, j)))
            out.append(acc)
        return out

    def decode(self, received: Sequence[Optional[int]]) -> list[int]:
        """Recover the message from a codeword with erasures (None).

        Deterministically uses the first k surviving symbols.  Present
        systematic symbols are taken as-is; the erased message positions
        are solved from the earliest surviving parity columns.  A
        singular subsystem (possible only for non-super-regular parity)
        raises SingularSubsystem.
        """
        ctx = self.ctx
        if len(received) != self.n:
            raise LengthMismatch(f"codeword must have {self.n} symbols")
        survivors = [i for i, v in enumerate(received) if v is not None]
        if len(survivors) < self.k:
            raise TooFewSymbols(
                f"{len(survivors)} symbols present, need at least {self.k}")
        window = survivors[:self.k]
        message: list[Optional[int]] = [None] * self.k
        for i in window:
            if i < self.k:
                message[i] = ctx.check(received[i])
        unknown = [i for i in range(self.k) if message[i] is None]
        if not unknown:
            return [v for v in message if v is not None]
        pcols = [i - self.k for i in window if i >= self.k]
        assert len(pcols) == len(unknown)
        # One equation per chosen parity column:
        #   sum_{i unknown} m_i P[i][j] = c_{k+j} - sum_{i known} m_i P[i][j]
        a = []
        b = []
        for j in pcols:
            a.append([self.parity.at(i, j) for i in unknown])
            acc = ctx.check(received[self.k + j])
            for i in range(self.k):
                if message[i]:
                    acc = ctx.sub(acc, ctx.mul(message[i], self.parity.at(i, j)))
            b.append(acc)
        solved = _solve(ctx, a, b)
        for i, v in zip(unknown, solved):
            message[i] = v
        return [v for v in message if v is not None]

    def is_mds(self) -> bool:
        return is_super_regular(self.parity).super_regular


def systematic_code(ctx: FieldCtx, parity: MatrixF) -> SystematicCode:
    if parity.ctx != ctx:
        raise ValueError("parity matrix belongs to a different field")
    return SystematicCode(ctx, parity.rows, parity)


def _solve(ctx: FieldCtx, a: list[list[int]], b: list[int]) -> list[int]:
    # Gauss-Jordan on the square system a x = b; consumes its arguments.
    n = len(a)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise SingularSubsystem(
                "survivor set spans a singular subsystem; code is not MDS")
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            b[c], b[piv] = b[piv], b[c]
        pinv = ctx.inv(a[c][c])
        a[c] = [ctx.mul(v, pinv) for v in a[c]]
        b[c] = ctx.mul(b[c], pinv)
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [ctx.sub(v, ctx.mul(f, w)) for v, w in zip(a[r], a[c])]
                b[r] = ctx.sub(b[r], ctx.mul(f, b[c]))
    return b


def symbols_to_bytes(ctx: FieldCtx, symbols: Sequence[int]) -> bytes:
    """One byte per symbol; requires p = 2 and w <= 8."""
    if ctx.p != 2 or ctx.w > 8:
        raise ValueError("byte serialization requires p = 2 and w <= 8")
    return bytes(ctx.check(v) for v in symbols)


def symbols_from_bytes(ctx: FieldCtx, data: bytes) -> list[int]:
    if ctx.p != 2 or ctx.w > 8:
        raise ValueError("byte serialization requires p = 2 and w <= 8")
    return [ctx.check(b) for b in data]
