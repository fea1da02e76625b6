"""Covering radius, coset leaders, and deep-hole criteria.

The covering radius comes from a weight-layered syndrome sweep: error
vectors are enumerated by increasing weight and each syndrome records the
first weight that reaches it.  Deep-hole checks then reduce to a leader
weight lookup.  Two further, independent characterizations (the minor test
on a stacked generator and the parity-column-span test) are implemented
side by side so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import (
    BadDims,
    BadRho,
    CoveringRadiusDeficient,
    InvariantViolation,
    LengthMismatch,
    NotMds,
)
from .code import LinearCode
from .kernels import DEFAULT_BUDGET
from .matrix import Matrix, all_k_columns_independent


class CoveringReport:
    """Coset-leader weights of a code, indexed by packed syndrome."""

    __slots__ = ("code", "rho", "_leader", "_H_int", "_reps")

    def __init__(self, code: LinearCode, rho: int, leader, H_int):
        self.code = code
        self.rho = rho
        self._leader = leader
        self._H_int = H_int
        self._reps = None

    def leader_weight(self, v) -> int:
        """Coset-leader weight of the coset of v (= distance from v to the
        code)."""
        v = [self.code.ctx.elem(x) for x in v]
        if len(v) != self.code.n:
            raise LengthMismatch(f"expected length {self.code.n}")
        packed = kernels.syndrome_pack_of(
            self._H_int, [e.value for e in v], self.code.ctx)
        return int(self._leader[packed])

    @property
    def deep_hole_syndromes(self):
        """Packed syndromes whose leader weight attains rho (ascending)."""
        return np.flatnonzero(self._leader == self.rho)

    @property
    def num_deep_hole_cosets(self) -> int:
        return int((self._leader == self.rho).sum())

    def coset_leader_weight_counts(self) -> list[int]:
        """Number of cosets per leader weight, 0..rho."""
        counts = np.bincount(self._leader, minlength=self.rho + 1)
        return [int(c) for c in counts[: self.rho + 1]]

    def representatives(self, limit=None) -> list[tuple]:
        """Canonical deep-hole representatives: per deep-hole coset, the
        lexicographically first minimum-weight vector (desk scale)."""
        if self._reps is None:
            targets = [int(s) for s in self.deep_hole_syndromes]
            if limit is not None:
                targets = targets[:limit]
            found = _lex_first_weight_vectors(
                self._H_int, self.code.n, self.code.ctx, self.rho,
                set(targets))
            ctx = self.code.ctx
            reps = [tuple(ctx.elem(x) for x in found[t]) for t in targets]
            if limit is None:
                self._reps = reps
            return reps
        return self._reps if limit is None else self._reps[:limit]

    def to_dict(self, include_representatives=False, limit=None) -> dict:
        d = {
            "n": self.code.n,
            "k": self.code.k,
            "rho": self.rho,
            "num_deep_hole_cosets": self.num_deep_hole_cosets,
            "coset_leader_weight_counts": self.coset_leader_weight_counts(),
        }
        if include_representatives:
            d["representatives"] = [[e.value for e in r]
                                    for r in self.representatives(limit)]
        return d


def covering_radius(code: LinearCode, budget=DEFAULT_BUDGET) -> CoveringReport:
    """Exact covering radius via the coset-leader sweep (cached per code)."""
    if code._covering is not None:
        return code._covering
    H_int = code.parity.to_int_rows()
    leader, rho = kernels.coset_leader_weights(H_int, code.n, code.ctx,
                                               budget)
    report = CoveringReport(code, rho, leader, H_int)
    code._covering = report
    return report


def distance_to_code(code: LinearCode, v, budget=DEFAULT_BUDGET) -> int:
    """Exact Hamming distance from v to the nearest codeword."""
    v = [code.ctx.elem(x) for x in v]
    if len(v) != code.n:
        raise LengthMismatch(f"expected length {code.n}, got {len(v)}")
    if code._covering is not None:
        return code._covering.leader_weight(v)
    q = code.ctx.q
    if code.k > 0 and q ** code.k <= min(budget, q ** (code.n - code.k)):
        return kernels.min_distance_to_vector(
            code.generator.to_int_rows(), [e.value for e in v],
            code.ctx, budget)
    return covering_radius(code, budget).leader_weight(v)


def is_deep_hole(code: LinearCode, v, budget=DEFAULT_BUDGET) -> bool:
    """True iff v attains the covering radius."""
    report = covering_radius(code, budget)
    return report.leader_weight(v) == report.rho


def is_deep_hole_via_mds(code: LinearCode, u, budget=DEFAULT_BUDGET) -> bool:
    """Minor-based deep-hole test: u is a deep hole of a full-radius MDS
    code iff stacking u under the generator again generates an MDS code."""
    if not code.is_mds(budget):
        raise NotMds("the minor criterion requires an MDS code")
    if code.k >= code.n:
        raise BadDims("stacked matrix cannot generate a longer-than-full "
                      "rank code")
    report = covering_radius(code, budget)
    if report.rho != code.n - code.k:
        raise CoveringRadiusDeficient(
            f"covering radius {report.rho} < n-k = {code.n - code.k}")
    u = [code.ctx.elem(x) for x in u]
    if len(u) != code.n:
        raise LengthMismatch(f"expected length {code.n}")
    stacked = code.generator.with_row(u)
    return all_k_columns_independent(stacked, code.k + 1)


def syndrome_criterion(h: Matrix, u, rho: int) -> bool:
    """True iff h*u^T is outside the span of every (rho-1)-subset of the
    columns of h."""
    if not isinstance(rho, int) or rho < 0 or rho > h.cols:
        raise BadRho(f"rho = {rho} out of range")
    u = [h.ctx.elem(x) for x in u]
    if len(u) != h.cols:
        raise LengthMismatch(f"expected length {h.cols}, got {len(u)}")
    s = list(h.mat_vec(u))
    if rho == 0:
        return all(e.value == 0 for e in s)
    for cols in combinations(range(h.cols), rho - 1):
        sub = h.select_cols(cols)
        if sub.rank() == sub.with_col(s).rank():
            return False
    return True


def full_radius_witness(code: LinearCode, budget=DEFAULT_BUDGET):
    """A vector whose stacking under the generator stays MDS, if the
    covering radius is full (n-k); None when it is n-k-1."""
    if not code.is_mds(budget):
        raise NotMds("witness search requires an MDS code")
    if code.k == code.n:
        return None
    report = covering_radius(code, budget)
    if report.rho != code.n - code.k:
        return None
    targets = {int(s) for s in report.deep_hole_syndromes}
    found = _lex_first_weight_vectors(
        report._H_int, code.n, code.ctx, report.rho, targets,
        stop_after_first=True)
    packed, vec = next(iter(found.items()))
    witness = tuple(code.ctx.elem(x) for x in vec)
    stacked = code.generator.with_row(witness)
    if not all_k_columns_independent(stacked, code.k + 1):
        raise InvariantViolation("deep-hole witness failed the minor check")
    return witness


@dataclass(frozen=True)
class Theorem6Check:
    extended_mds: bool
    rho_dual_is_k: bool
    u_deep_hole_dual: bool

    @property
    def consistent(self) -> bool:
        return self.extended_mds == (self.rho_dual_is_k
                                     and self.u_deep_hole_dual)


def verify_theorem6(code: LinearCode, u, budget=DEFAULT_BUDGET) -> Theorem6Check:
    """Evaluate, independently, whether the inner-product extension by u is
    MDS, whether the dual has full covering radius k, and whether u is a
    deep hole of the dual; the first must equal the conjunction of the
    other two."""
    if not code.is_mds(budget):
        raise NotMds("the biconditional is about MDS codes")
    ext = code.extend_u(u)
    extended_mds = ext.is_mds(budget)
    d = code.dual()
    report = covering_radius(d, budget)
    rho_is_k = report.rho == code.k
    u_dh = report.leader_weight(u) == report.rho
    check = Theorem6Check(extended_mds, rho_is_k, u_dh)
    if not check.consistent:
        raise InvariantViolation(
            f"extension-MDS biconditional failed: {check} for u = "
            f"{[int(code.ctx.elem(x)) for x in u]}")
    return check


# ---------------------------------------------------------------------------
# Lexicographically-first fixed-weight coset leaders
# ---------------------------------------------------------------------------

def _lex_first_weight_vectors(H_int, n, ctx, weight, targets,
                              stop_after_first=False):
    """First weight-`weight` vector, in global lexicographic order, whose
    packed syndrome lies in `targets`; one entry per target unless
    stop_after_first."""
    q = ctx.q
    r = len(H_int)
    contrib = [[kernels.pack_syndrome(
        [ctx.mul_i(c, H_int[i][j]) for i in range(r)], q)
        for c in range(q)] for j in range(n)]

    if ctx.p == 2:
        def padd(a, b):
            return a ^ b
    else:
        def padd(a, b):
            out = 0
            mult = 1
            for _ in range(r):
                out += ctx.add_i(a % q, b % q) * mult
                a //= q
                b //= q
                mult *= q
            return out

    remaining = set(targets)
    found = {}

    def rec(pos, acc, left, prefix):
        if not remaining:
            return
        if left == 0:
            if acc in remaining:
                found[acc] = tuple(prefix + [0] * (n - pos))
                if stop_after_first:
                    remaining.clear()
                else:
                    remaining.discard(acc)
            return
        if n - pos < left:
            return
        if n - pos - 1 >= left:
            rec(pos + 1, acc, left, prefix + [0])
            if not remaining:
                return
        for c in range(1, q):
            rec(pos + 1, padd(acc, contrib[pos][c]), left - 1, prefix + [c])
            if not remaining:
                return

    rec(0, 0, weight, [])
    if remaining:
        raise InvariantViolation("no fixed-weight vector reaches some "
                                 "target syndrome")
    return found
