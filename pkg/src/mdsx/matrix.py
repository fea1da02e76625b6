"""Dense exact linear algebra over a finite field.

Plain Gaussian elimination throughout; matrices are immutable values.
"""

from __future__ import annotations

from itertools import combinations

from .errors import (
    BadDims,
    BadK,
    ContextMismatch,
    DuplicateNode,
    InconsistentSystem,
    NotSquare,
    ZeroMultiplier,
)
from .field import FieldCtx, FieldElement


class Matrix:
    __slots__ = ("ctx", "_rows", "_cols")

    def __init__(self, ctx: FieldCtx, rows, cols: int | None = None):
        self.ctx = ctx
        self._rows = tuple(tuple(ctx.elem(e) for e in row) for row in rows)
        if self._rows:
            w = len(self._rows[0])
            if any(len(r) != w for r in self._rows):
                raise BadDims("ragged rows")
            if cols is not None and cols != w:
                raise BadDims("cols does not match row width")
            self._cols = w
        else:
            # row-free matrices keep an explicit width (e.g. the parity
            # check of the full space)
            self._cols = 0 if cols is None else cols

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, ctx, n):
        return cls(ctx, [[1 if i == j else 0 for j in range(n)]
                         for i in range(n)])

    @classmethod
    def zeros(cls, ctx, r, c):
        return cls(ctx, [[0] * c for _ in range(r)], cols=c)

    # -- shape / access --------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._cols

    def row(self, i) -> tuple:
        return self._rows[i]

    def entry(self, i, j) -> FieldElement:
        return self._rows[i][j]

    def row_list(self):
        return [list(r) for r in self._rows]

    def to_int_rows(self) -> list[list[int]]:
        return [[e.value for e in r] for r in self._rows]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.ctx is self.ctx
                and other._rows == self._rows)

    def __hash__(self):
        return hash((id(self.ctx), self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(e.value) for e in r)
                         for r in self._rows)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- algebra ---------------------------------------------------------------

    def _check_ctx(self, other):
        if other.ctx is not self.ctx:
            raise ContextMismatch("matrices over different fields")

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx,
                      [[self._rows[i][j] for i in range(self.rows)]
                       for j in range(self.cols)],
                      cols=self.rows)

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_ctx(other)
        if self.cols != other.rows:
            raise BadDims(f"{self.rows}x{self.cols} times "
                          f"{other.rows}x{other.cols}")
        zero = self.ctx.zero
        ot = other.transpose()
        out = []
        for r in self._rows:
            out.append([sum((a * b for a, b in zip(r, c)), zero)
                        for c in ot._rows])
        return Matrix(self.ctx, out, cols=other.cols)

    def mat_vec(self, v) -> tuple:
        v = [self.ctx.elem(x) for x in v]
        if len(v) != self.cols:
            raise BadDims("vector length does not match column count")
        zero = self.ctx.zero
        return tuple(sum((a * b for a, b in zip(r, v)), zero)
                     for r in self._rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_ctx(other)
        if self.rows != other.rows:
            raise BadDims("row counts differ")
        return Matrix(self.ctx,
                      [list(a) + list(b)
                       for a, b in zip(self._rows, other._rows)],
                      cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_ctx(other)
        if self.rows and other.rows and self.cols != other.cols:
            raise BadDims("column counts differ")
        return Matrix(self.ctx, list(self._rows) + list(other._rows),
                      cols=self.cols if self.rows else other.cols)

    def with_row(self, v) -> "Matrix":
        v = [self.ctx.elem(x) for x in v]
        if self.rows and len(v) != self.cols:
            raise BadDims("row length does not match")
        return Matrix(self.ctx, list(self._rows) + [v])

    def with_col(self, v) -> "Matrix":
        v = [self.ctx.elem(x) for x in v]
        if len(v) != self.rows:
            raise BadDims("column length does not match")
        return Matrix(self.ctx,
                      [list(r) + [e] for r, e in zip(self._rows, v)],
                      cols=self.cols + 1)

    def select_cols(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix(self.ctx, [[r[j] for j in idx] for r in self._rows],
                      cols=len(idx))

    # -- elimination -------------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (zero rows kept)."""
        rows = [list(r) for r in self._rows]
        nr, nc = self.rows, self.cols
        pivots = []
        pr = 0
        for pc in range(nc):
            pivot = None
            for i in range(pr, nr):
                if rows[i][pc].value:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            inv = rows[pr][pc].inv()
            rows[pr] = [e * inv for e in rows[pr]]
            for i in range(nr):
                if i != pr and rows[i][pc].value:
                    f = rows[i][pc]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == nr:
                break
        return Matrix(self.ctx, rows, cols=nc), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> FieldElement:
        if self.rows != self.cols:
            raise NotSquare(f"{self.rows}x{self.cols} matrix")
        rows = [list(r) for r in self._rows]
        n = self.rows
        det = self.ctx.one
        for c in range(n):
            pivot = None
            for i in range(c, n):
                if rows[i][c].value:
                    pivot = i
                    break
            if pivot is None:
                return self.ctx.zero
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inv()
            for i in range(c + 1, n):
                if rows[i][c].value:
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    def nullspace(self) -> "Matrix":
        """Rows form a basis of the right kernel {x : M x^T = 0}, in RREF."""
        red, pivots = self.rref()
        nc = self.cols
        free = [j for j in range(nc) if j not in pivots]
        basis = []
        for f in free:
            v = [self.ctx.zero] * nc
            v[f] = self.ctx.one
            for r, pc in enumerate(pivots):
                v[pc] = -red.entry(r, f)
            basis.append(v)
        return Matrix(self.ctx, basis, cols=nc).rref()[0] if basis \
            else Matrix(self.ctx, [], cols=nc)

    def solve(self, b) -> tuple:
        """One solution of M x^T = b (free variables set to zero)."""
        b = [self.ctx.elem(x) for x in b]
        if len(b) != self.rows:
            raise BadDims("rhs length does not match row count")
        aug = Matrix(self.ctx,
                     [list(r) + [e] for r, e in zip(self._rows, b)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            raise InconsistentSystem("no solution")
        x = [self.ctx.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.entry(r, self.cols)
        return tuple(x)


# ---------------------------------------------------------------------------
# Column-subset tests and Vandermonde-style builders
# ---------------------------------------------------------------------------

def first_dependent_columns(m: Matrix, k: int):
    """Lexicographically first k-subset of columns with rank < k, if any."""
    if k < 0 or k > m.rows or k > m.cols:
        raise BadK(f"k = {k} out of range for {m.rows}x{m.cols}")
    if k == 0:
        return None
    for idx in combinations(range(m.cols), k):
        if m.select_cols(idx).rank() < k:
            return idx
    return None


def all_k_columns_independent(m: Matrix, k: int) -> bool:
    """True iff every choice of k columns has rank k."""
    return first_dependent_columns(m, k) is None


def _normalize_nodes_multipliers(a, v):
    a = list(a)
    if not a:
        raise BadDims("empty node vector")
    ctx = a[0].ctx
    a = [ctx.elem(x) for x in a]
    if len({x.value for x in a}) != len(a):
        raise DuplicateNode("evaluation nodes must be pairwise distinct")
    n = len(a)
    if isinstance(v, (int, FieldElement)):
        v = [v] * n
    v = [ctx.elem(x) for x in v]
    if len(v) != n:
        raise BadDims("multiplier vector length does not match nodes")
    if any(x.value == 0 for x in v):
        raise ZeroMultiplier("column multipliers must be nonzero")
    return ctx, a, v


def grs_generator(a, v, k: int) -> Matrix:
    """k x n matrix with entry (i, j) = v_j * a_j^i for i = 0..k-1."""
    ctx, a, v = _normalize_nodes_multipliers(a, v)
    n = len(a)
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n, got k = {k}, n = {n}")
    rows = []
    cur = list(v)
    for _ in range(k):
        rows.append(list(cur))
        cur = [c * x for c, x in zip(cur, a)]
    return Matrix(ctx, rows)


def egrs_generator(a, v, k: int) -> Matrix:
    """The k x n evaluation matrix with an appended (0,...,0,1)^T column."""
    g = grs_generator(a, v, k)
    inf_col = [0] * (k - 1) + [1]
    return g.with_col(inf_col)
