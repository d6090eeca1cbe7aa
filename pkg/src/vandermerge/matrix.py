"""Dense matrices over a finite field and super-regularity testing.

A matrix is super-regular when every square submatrix, of every size, is
non-singular.  For geometric-progression (Vandermonde-form) matrices with
nonzero column scalars the test space shrinks dramatically: a submatrix
on rows I is singular exactly when the companion submatrix on the
down-shifted row set I' (anchored so that min I' = 1) is singular, since
the two differ by nonzero column scalings.  :func:`is_super_regular`
exploits this whenever the row-shift reduction is requested and the
matrix has the required structure.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import BudgetExceeded, NotSquare, ZeroScalar
from .galois import FieldCtx


class SubmatrixSelector(NamedTuple):
    """1-indexed, ascending row and column index sets."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]


@dataclass(frozen=True)
class SuperRegularityReport:
    super_regular: bool
    witness: SubmatrixSelector | None
    determinants: int


class MatrixF:
    """Row-major dense matrix with entries from one field context."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, entries: Sequence[int]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for v in entries:
            ctx.check(v)
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def at(self, i: int, j: int) -> int:
        """Entry at 0-based (i, j)."""
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixF":
        """Submatrix on 1-indexed row and column sets."""
        sel = []
        for i in rows:
            for j in cols:
                if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                    raise IndexError(f"selector ({i}, {j}) outside matrix bounds")
                sel.append(self.at(i - 1, j - 1))
        return MatrixF(self.ctx, len(rows), len(cols), sel)

    def __eq__(self, other):
        return (isinstance(other, MatrixF)
                and self.ctx == other.ctx
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ctx, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatrixF({self.rows}x{self.cols} over GF({self.ctx.q}))"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(self.row(i)) for i in range(self.rows)],
        }

    @staticmethod
    def from_json(ctx: FieldCtx, obj: dict) -> "MatrixF":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        flat = [int(v) for r in obj["entries"] for v in r]
        return MatrixF(ctx, rows, cols, flat)


def identity(ctx: FieldCtx, n: int) -> MatrixF:
    return MatrixF(ctx, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])


def matmul(a: MatrixF, b: MatrixF) -> MatrixF:
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not match")
    ctx = a.ctx
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = 0
            for t in range(a.cols):
                acc = ctx.add(acc, ctx.mul(a.at(i, t), b.at(t, j)))
            out.append(acc)
    return MatrixF(ctx, a.rows, b.cols, out)


def vandermonde(ctx: FieldCtx, k: int, xi: Sequence[int]) -> MatrixF:
    """k x r matrix of scalar powers: entry (i, j) = xi_j^(i-1), 1-indexed.

    The first row is all ones; scalars must be nonzero.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    xi = tuple(ctx.check(x) for x in xi)
    if not xi:
        raise ValueError("at least one scalar required")
    if any(x == 0 for x in xi):
        raise ZeroScalar("scalars must be nonzero")
    entries = []
    row = (1,) * len(xi)
    for i in range(k):
        if i:
            row = tuple(ctx.mul(v, x) for v, x in zip(row, xi))
        entries.extend(row)
    return MatrixF(ctx, k, len(xi), entries)


def _det_rows(ctx: FieldCtx, a: list[list[int]]) -> int:
    # Gaussian elimination; consumes the row lists.
    n = len(a)
    mul, sub, inv = ctx.mul, ctx.sub, ctx.inv
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = ctx.neg(det)
        pval = a[c][c]
        det = mul(det, pval)
        pinv = inv(pval)
        crow = a[c]
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = mul(f, pinv)
                arow = a[r]
                for j in range(c + 1, n):
                    arow[j] = sub(arow[j], mul(f, crow[j]))
                arow[c] = 0
    return det


def determinant(m: MatrixF) -> int:
    """Determinant via Gaussian elimination over the field."""
    if m.rows != m.cols:
        raise NotSquare(f"matrix is {m.rows}x{m.cols}")
    return _det_rows(m.ctx, [list(m.row(i)) for i in range(m.rows)])


def shift_selector(rows: Sequence[int]) -> tuple[int, ...]:
    """Shift a row set down so its least index becomes 1.

    For Vandermonde-form matrices with nonzero scalars, the submatrix on
    the shifted rows is singular iff the original one is.
    """
    rows = tuple(rows)
    if not rows:
        raise ValueError("row set must be nonempty")
    if list(rows) != sorted(set(rows)) or rows[0] < 1:
        raise ValueError("row set must be ascending positive indices")
    return tuple(a - (rows[0] - 1) for a in rows)


def _vandermonde_scalars(m: MatrixF) -> tuple[int, ...] | None:
    # Structural sniff: row 1 all ones, later rows successive powers of a
    # nonzero scalar per column. Returns the scalars, or None.
    if any(v != 1 for v in m.row(0)):
        return None
    if m.rows == 1:
        return (1,) * m.cols
    xi = m.row(1)
    if any(x == 0 for x in xi):
        return None
    mul = m.ctx.mul
    cur = xi
    for i in range(2, m.rows):
        cur = tuple(mul(v, x) for v, x in zip(cur, xi))
        if cur != m.row(i):
            return None
    return xi


def scan_vandermonde(ctx: FieldCtx, k: int, scalars: Sequence[int], *,
                     max_determinants: int | None = None) -> SuperRegularityReport:
    """Super-regularity of the k x r power matrix of ``scalars``, testing
    only row sets anchored at row 1 (sound for nonzero scalars).

    Selectors are enumerated by size, then lexicographically by (rows,
    cols); the first singular selector found is the witness.  Each
    selector costs one determinant evaluation against the optional
    budget; exceeding it raises BudgetExceeded.
    """
    scalars = tuple(ctx.check(s) for s in scalars)
    if not scalars:
        raise ValueError("at least one scalar required")
    if any(s == 0 for s in scalars):
        raise ZeroScalar("scalars must be nonzero")
    if k < 1:
        raise ValueError("k must be >= 1")
    r = len(scalars)
    budget = float("inf") if max_determinants is None else max_determinants
    mul = ctx.mul
    prow = []
    for s in scalars:
        row = [1] * k
        x = 1
        for d in range(1, k):
            x = mul(x, s)
            row[d] = x
        prow.append(row)
    lmax = min(k, r)
    dets = r  # size-1 anchored selectors: entries in the all-ones row
    if dets > budget:
        raise BudgetExceeded(f"determinant budget {max_determinants} exhausted")
    if lmax >= 2:
        pairs = list(combinations(range(r), 2))
        for d in range(1, k):
            for a, b in pairs:
                dets += 1
                if dets > budget:
                    raise BudgetExceeded(
                        f"determinant budget {max_determinants} exhausted")
                if prow[a][d] == prow[b][d]:
                    return SuperRegularityReport(
                        False, SubmatrixSelector((1, d + 1), (a + 1, b + 1)), dets)
    if lmax >= 3:
        triples = list(combinations(range(r), 3))
        if ctx.p == 2 and ctx._exp is not None:
            # Characteristic 2 with tables: all powers are nonzero, so the
            # 3x3 expansion collapses to six exp-table lookups xor-ed.
            exp, log = ctx._exp, ctx._log
            lrow = [[log[v] for v in row] for row in prow]
            for d1 in range(1, k - 1):
                for d2 in range(d1 + 1, k):
                    for u, v, w in triples:
                        dets += 1
                        if dets > budget:
                            raise BudgetExceeded(
                                f"determinant budget {max_determinants} exhausted")
                        lu, lv, lw = lrow[u], lrow[v], lrow[w]
                        if (exp[lv[d1] + lw[d2]] ^ exp[lw[d1] + lv[d2]]
                                ^ exp[lu[d1] + lw[d2]] ^ exp[lw[d1] + lu[d2]]
                                ^ exp[lu[d1] + lv[d2]] ^ exp[lv[d1] + lu[d2]]) == 0:
                            return SuperRegularityReport(
                                False,
                                SubmatrixSelector((1, d1 + 1, d2 + 1),
                                                  (u + 1, v + 1, w + 1)),
                                dets)
        else:
            add, sub = ctx.add, ctx.sub
            for d1 in range(1, k - 1):
                for d2 in range(d1 + 1, k):
                    for u, v, w in triples:
                        dets += 1
                        if dets > budget:
                            raise BudgetExceeded(
                                f"determinant budget {max_determinants} exhausted")
                        a1, a2, a3 = prow[u][d1], prow[v][d1], prow[w][d1]
                        b1, b2, b3 = prow[u][d2], prow[v][d2], prow[w][d2]
                        det = sub(mul(a2, b3), mul(a3, b2))
                        det = sub(det, sub(mul(a1, b3), mul(a3, b1)))
                        det = add(det, sub(mul(a1, b2), mul(a2, b1)))
                        if det == 0:
                            return SuperRegularityReport(
                                False,
                                SubmatrixSelector((1, d1 + 1, d2 + 1),
                                                  (u + 1, v + 1, w + 1)),
                                dets)
    for size in range(4, lmax + 1):
        for rest in combinations(range(2, k + 1), size - 1):
            drows = (0,) + tuple(a - 1 for a in rest)
            for cols in combinations(range(r), size):
                dets += 1
                if dets > budget:
                    raise BudgetExceeded(
                        f"determinant budget {max_determinants} exhausted")
                block = [[prow[j][d] for j in cols] for d in drows]
                if _det_rows(ctx, block) == 0:
                    return SuperRegularityReport(
                        False,
                        SubmatrixSelector((1,) + rest, tuple(j + 1 for j in cols)),
                        dets)
    return SuperRegularityReport(True, None, dets)


def _scan_dense(m: MatrixF, max_determinants: int | None) -> SuperRegularityReport:
    ctx = m.ctx
    budget = float("inf") if max_determinants is None else max_determinants
    dets = 0
    for size in range(1, min(m.rows, m.cols) + 1):
        for rows in combinations(range(1, m.rows + 1), size):
            for cols in combinations(range(1, m.cols + 1), size):
                dets += 1
                if dets > budget:
                    raise BudgetExceeded(
                        f"determinant budget {max_determinants} exhausted")
                if size == 1:
                    singular = m.at(rows[0] - 1, cols[0] - 1) == 0
                else:
                    block = [[m.at(i - 1, j - 1) for j in cols] for i in rows]
                    singular = _det_rows(ctx, block) == 0
                if singular:
                    return SuperRegularityReport(
                        False, SubmatrixSelector(rows, cols), dets)
    return SuperRegularityReport(True, None, dets)


def is_super_regular(m: MatrixF, use_vandermonde_reduction: bool = True, *,
                     max_determinants: int | None = None) -> SuperRegularityReport:
    """Test whether every square submatrix of m is non-singular.

    With ``use_vandermonde_reduction`` set and a matrix in Vandermonde
    form with nonzero scalars, only row sets containing row 1 are
    enumerated; otherwise all selectors are tested.  On failure the
    report carries the first singular selector in (size, rows, cols)
    order as witness.
    """
    if use_vandermonde_reduction:
        scalars = _vandermonde_scalars(m)
        if scalars is not None:
            return scan_vandermonde(m.ctx, m.rows, scalars,
                                    max_determinants=max_determinants)
    return _scan_dense(m, max_determinants)
