"""Linear codes: canonical generators, duality, distance, and extensions.

A code's identity is the reduced row echelon form of its generator, so
codeword-set equality is plain matrix equality.  The only mutable state is
the lazily computed distance / parity / covering caches, whose fills are
idempotent.
"""

from __future__ import annotations

from itertools import combinations, product

from . import kernels
from .errors import (
    BadDims,
    BudgetExceeded,
    ContextMismatch,
    LengthMismatch,
    RankDeficient,
    ZeroMatrix,
)
from .field import FieldCtx
from .kernels import DEFAULT_BUDGET
from .matrix import Matrix


class LinearCode:
    __slots__ = ("ctx", "n", "k", "generator", "_parity", "_d", "_covering")

    def __init__(self, ctx: FieldCtx, generator: Matrix, parity=None):
        # generator must already be in RREF with no zero rows
        self.ctx = ctx
        self.generator = generator
        self.n = generator.cols
        self.k = generator.rows
        self._parity = parity
        self._d = None
        self._covering = None

    # -- structure -------------------------------------------------------------

    @property
    def parity(self) -> Matrix:
        if self._parity is None:
            self._parity = self.generator.nullspace()
        return self._parity

    def dual(self) -> "LinearCode":
        return LinearCode(self.ctx, self.parity, parity=self.generator)

    def same_code(self, other: "LinearCode") -> bool:
        if not isinstance(other, LinearCode):
            raise TypeError("expected a LinearCode")
        if other.ctx is not self.ctx:
            raise ContextMismatch("codes over different fields")
        if other.n != self.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n} differ")
        return self.generator == other.generator

    def contains(self, v) -> bool:
        v = self._vec(v)
        return all(e.value == 0 for e in self.parity.mat_vec(v))

    def codewords(self):
        """All codewords (desk scale only)."""
        rows = self.generator.row_list()
        zero = tuple([self.ctx.zero] * self.n)
        for coeffs in product(range(self.ctx.q), repeat=self.k):
            w = list(zero)
            for c, row in zip(coeffs, rows):
                if c:
                    ce = self.ctx.elem(c)
                    for j, g in enumerate(row):
                        w[j] = w[j] + ce * g
            yield tuple(w)

    def _vec(self, v) -> tuple:
        v = tuple(self.ctx.elem(x) for x in v)
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        return v

    # -- parameters ----------------------------------------------------------

    def min_distance(self, budget=DEFAULT_BUDGET) -> int:
        if self._d is not None:
            return self._d
        if self.k == 0:
            raise BadDims("zero-dimensional code has no minimum distance")
        if self.k == self.n:
            self._d = 1
            return 1
        if self.ctx.q ** self.k <= budget:
            d = kernels.min_weight_nonzero(self.generator.to_int_rows(),
                                           self.ctx, budget)
        else:
            d = self._min_distance_by_supports()
        self._d = d
        return d

    def _min_distance_by_supports(self) -> int:
        # smallest d such that some d columns of the parity check are
        # dependent; exact, no codeword enumeration
        h = self.parity
        for d in range(1, self.n - self.k + 2):
            for cols in combinations(range(self.n), d):
                if h.select_cols(cols).rank() < d:
                    return d
        raise BudgetExceeded("distance exceeds Singleton range")  # unreachable

    def weight_enumerator(self, budget=DEFAULT_BUDGET) -> list[int]:
        if self.k == 0:
            return [1] + [0] * self.n
        return kernels.weight_counts(self.generator.to_int_rows(),
                                     self.ctx, budget)

    def is_mds(self, budget=DEFAULT_BUDGET) -> bool:
        if self.k == 0:
            return False
        return self.min_distance(budget) == self.n - self.k + 1

    # -- extensions ------------------------------------------------------------

    def extend_u(self, u) -> "LinearCode":
        """Append the inner product <u, c> as coordinate n+1."""
        u = self._vec(u)
        col = self.generator.mat_vec(u)
        return code_from_generator(self.generator.with_col(col),
                                   allow_zero=self.k == 0)

    def extend_g(self, g) -> "LinearCode":
        return extend_g(self.generator, g)

    def __repr__(self):
        d = f",{self._d}" if self._d is not None else ""
        return f"LinearCode[{self.n},{self.k}{d}]({self.ctx!r})"


# ---------------------------------------------------------------------------
# Constructors and free functions
# ---------------------------------------------------------------------------

def code_from_generator(g: Matrix, allow_zero: bool = False) -> LinearCode:
    """Code spanned by the rows of g; rows are reduced to a canonical basis."""
    red, pivots = g.rref()
    if not pivots and not allow_zero:
        raise ZeroMatrix("generator spans nothing")
    canon = Matrix(g.ctx, [red.row(i) for i in range(len(pivots))],
                   cols=g.cols)
    return LinearCode(g.ctx, canon)


def zero_code(ctx: FieldCtx, n: int) -> LinearCode:
    return LinearCode(ctx, Matrix(ctx, [], cols=n),
                      parity=Matrix.identity(ctx, n))


def full_code(ctx: FieldCtx, n: int) -> LinearCode:
    return LinearCode(ctx, Matrix.identity(ctx, n),
                      parity=Matrix(ctx, [], cols=n))


def dual(c: LinearCode) -> LinearCode:
    return c.dual()


def extend_u(c: LinearCode, u) -> LinearCode:
    return c.extend_u(u)


def extend_g(g: Matrix, vec) -> LinearCode:
    """Code generated by g with the column vec appended."""
    if g.rank() < g.rows:
        raise RankDeficient("generator rows are dependent")
    vec = [g.ctx.elem(x) for x in vec]
    if len(vec) != g.rows:
        raise BadDims(f"expected length {g.rows}, got {len(vec)}")
    return code_from_generator(g.with_col(vec))


def extension_parity_check(h: Matrix, u) -> Matrix:
    """Parity check of the inner-product extension: h bordered by a zero
    column, with bottom row (u | -1)."""
    u = [h.ctx.elem(x) for x in u]
    if len(u) != h.cols:
        raise LengthMismatch(f"expected length {h.cols}, got {len(u)}")
    bordered = h.with_col([0] * h.rows)
    return bordered.with_row(list(u) + [-h.ctx.one])


def same_code(c1: LinearCode, c2: LinearCode) -> bool:
    return c1.same_code(c2)


def min_distance(c: LinearCode, budget=DEFAULT_BUDGET) -> int:
    return c.min_distance(budget)


def weight_enumerator(c: LinearCode, budget=DEFAULT_BUDGET) -> list[int]:
    return c.weight_enumerator(budget)


def is_mds(c: LinearCode, budget=DEFAULT_BUDGET) -> bool:
    return c.is_mds(budget)
